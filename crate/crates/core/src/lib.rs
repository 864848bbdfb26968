//! Geometry generation and S-parameter post-processing for dual-polarized,
//! tightly-coupled antipodal Vivaldi arrays.
//!
//! The crate is split along the data flow of a typical design study:
//!
//! - [`geometry`]: taper curves, leaf and element outlines, the dual-pol
//!   egg-crate array layout, and SVG / CSV / DXF export.
//! - [`touchstone`]: the [`NPortNetwork`](touchstone::NPortNetwork) type and
//!   Touchstone v1.0 reading and writing.
//! - [`analysis`]: TARC, active reflection, band edges, coupling summaries
//!   and mismatch conversions.
//! - [`pattern`]: wavelength arithmetic, uniform linear array patterns,
//!   grating lobes and array-factor gain normalization.

pub mod analysis;
pub mod format;
pub mod geometry;
pub mod pattern;
pub mod touchstone;

/// Speed of light in vacuum (m/s).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Linear magnitudes below this are reported at [`DB_FLOOR`].
pub const LINEAR_FLOOR: f64 = 1e-12;

/// dB value reported in place of -inf.
pub const DB_FLOOR: f64 = -240.0;

/// `20*log10(mag)` with magnitudes below [`LINEAR_FLOOR`] clamped to [`DB_FLOOR`].
pub fn amplitude_db(mag: f64) -> f64 {
    if mag < LINEAR_FLOOR {
        DB_FLOOR
    } else {
        20.0 * mag.log10()
    }
}

/// `10*log10(p)` with the same floor as [`amplitude_db`] (in power terms).
pub fn power_db(p: f64) -> f64 {
    if p < LINEAR_FLOOR * LINEAR_FLOOR {
        DB_FLOOR
    } else {
        10.0 * p.log10()
    }
}
