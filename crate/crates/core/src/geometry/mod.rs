//! Antipodal Vivaldi taper curves, element outlines and dual-pol array layout.
//!
//! All lengths are millimetres.

mod element;
mod export;
mod layout;
mod polygon;
mod taper;

pub use element::{
    build_element, build_element_with_resolution, build_leaf_outline, ElementDims, ElementOutline, FeedSegment,
};
pub use export::{export_outline, import_csv_points, Drawing, ExportFormat, LabeledPolygon};
pub use layout::{build_array_layout, ArrayLayout, Edge, ElementPlacement, PcbSide, Slot};
pub use polygon::{Point, Polygon};
pub use taper::{CurveSign, TaperParams};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("curve evaluated at negative y = {0} mm")]
    NegativeY(f64),
    #[error("parameter `{name}` must be strictly positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("resolution {0} is below the minimum of 16 vertices per curve")]
    Resolution(usize),
    #[error("invalid overlap: w_ol = {w_ol} mm must be smaller than w_a = {w_a} mm")]
    InvalidOverlap { w_ol: f64, w_a: f64 },
    #[error("invalid element dimensions: {0}")]
    InvalidDims(String),
    #[error("rows and cols must be at least 1 (got {rows} x {cols})")]
    EmptyArray { rows: usize, cols: usize },
    #[error("x-pol pitch {x} mm and y-pol pitch {y} mm differ; concentric interleaving needs equal pitch")]
    PitchMismatch { x: f64, y: f64 },
    #[error("taper curves do not form a leaf inside the clip box: {0}")]
    NoIntersection(String),
    #[error("unknown export format `{0}` (expected svg, csv or dxf)")]
    UnknownFormat(String),
    #[error("malformed point CSV at line {line}: {msg}")]
    Csv { line: usize, msg: String },
}

/// Polarization plane of an element (the E-field direction at boresight).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarization {
    X,
    Y,
}

impl Polarization {
    pub fn other(self) -> Self {
        match self {
            Polarization::X => Polarization::Y,
            Polarization::Y => Polarization::X,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Polarization::X => "x",
            Polarization::Y => "y",
        }
    }
}

impl fmt::Display for Polarization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Polarization {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "x" | "x-pol" | "xpol" => Ok(Polarization::X),
            "y" | "y-pol" | "ypol" => Ok(Polarization::Y),
            other => Err(format!("unknown polarization `{other}` (expected x or y)")),
        }
    }
}
