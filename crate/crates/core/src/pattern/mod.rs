//! Spacing arithmetic, uniform linear-array patterns and array-factor gain
//! normalization.

mod af;
mod cut;

pub use af::{
    array_factor, broadside_af, grating_lobe_angles, grating_lobe_onset, grating_lobes_in_pattern, scaled_gain,
    spacing_in_wavelengths, wavelength, AfValue, ArraySpec, Lobe, GRATING_LOBE_TOLERANCE_DB,
};
pub use cut::{uniform_array_pattern, uniform_array_pattern_with_step, PatternCut, DEFAULT_STEP_DEG};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PatternError {
    #[error("`{name}` must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("array needs at least one element")]
    NoElements,
    #[error("angle grid has {0} points; at least 181 are required")]
    CoarseGrid(usize),
    #[error("element pattern grid does not match the array pattern grid")]
    GridMismatch,
}

pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64, PatternError> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(PatternError::NonPositive { name, value })
    }
}
