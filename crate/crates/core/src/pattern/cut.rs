use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::Serialize;

use super::af::{af_unchecked, ArraySpec};
use super::{positive, PatternError};
use crate::format::g6;
use crate::{amplitude_db, DB_FLOOR};

/// Default angular resolution (degrees).
pub const DEFAULT_STEP_DEG: f64 = 0.25;

/// Pattern over a uniform angle grid on [−90°, 90°], peak-normalized to 0 dB.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatternCut {
    pub plane: String,
    pub angles_deg: Vec<f64>,
    pub values_db: Vec<f64>,
}

impl PatternCut {
    pub fn peak(&self) -> Option<(f64, f64)> {
        self.angles_deg.iter().copied().zip(self.values_db.iter().copied()).fold(None, |best, (a, v)| match best {
            Some((_, bv)) if bv >= v => best,
            _ => Some((a, v)),
        })
    }

    /// Local maxima on the grid (ends included), as `(angle, value)`.
    pub fn local_maxima(&self) -> Vec<(f64, f64)> {
        let v = &self.values_db;
        let n = v.len();
        (0..n)
            .filter(|&i| {
                let l = if i > 0 { v[i - 1] } else { f64::NEG_INFINITY };
                let r = if i + 1 < n { v[i + 1] } else { f64::NEG_INFINITY };
                (v[i] >= l && v[i] > r) || (v[i] > l && v[i] >= r)
            })
            .map(|i| (self.angles_deg[i], v[i]))
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("theta_deg,value_db\n");
        for (a, v) in self.angles_deg.iter().zip(&self.values_db) {
            let _ = writeln!(s, "{},{}", g6(*a), g6(*v));
        }
        s
    }
}

fn grid(step_deg: f64) -> Result<Vec<f64>, PatternError> {
    positive("angle step", step_deg)?;
    let count = (180.0 / step_deg).round() as usize + 1;
    if count < 181 {
        return Err(PatternError::CoarseGrid(count));
    }
    let last = count - 1;
    Ok((0..count).map(|i| -90.0 + 180.0 * i as f64 / last as f64).collect())
}

/// Uniform-array pattern on the default 0.25° grid.
pub fn uniform_array_pattern(
    spec: &ArraySpec,
    f: f64,
    element_pattern: Option<&PatternCut>,
) -> Result<PatternCut, PatternError> {
    uniform_array_pattern_with_step(spec, f, DEFAULT_STEP_DEG, element_pattern)
}

/// Array factor in dB, optionally plus an element pattern on the same grid
/// (pattern multiplication), then shifted so the peak is exactly 0 dB.
pub fn uniform_array_pattern_with_step(
    spec: &ArraySpec,
    f: f64,
    step_deg: f64,
    element_pattern: Option<&PatternCut>,
) -> Result<PatternCut, PatternError> {
    let angles = grid(step_deg)?;
    if let Some(e) = element_pattern {
        if e.angles_deg != angles || e.values_db.len() != angles.len() {
            return Err(PatternError::GridMismatch);
        }
    }
    // Validates spec and frequency.
    super::array_factor(spec, f, 0.0)?;
    let k = 2.0 * PI / super::wavelength(f)?;
    let mut values: Vec<f64> = angles.iter().map(|a| amplitude_db(af_unchecked(spec, k, a.to_radians()))).collect();
    if let Some(e) = element_pattern {
        for (v, ev) in values.iter_mut().zip(&e.values_db) {
            *v += ev;
        }
    }
    let peak = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    for v in &mut values {
        *v = (*v - peak).max(DB_FLOOR);
    }
    let plane = element_pattern.map_or_else(|| "E-plane".to_string(), |e| e.plane.clone());
    Ok(PatternCut { plane, angles_deg: angles, values_db: values })
}
