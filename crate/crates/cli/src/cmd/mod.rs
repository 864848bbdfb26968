pub mod compare;
pub mod geom;
pub mod network;
pub mod pattern;
pub mod snp;
