use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::{positive, PatternError};
use crate::SPEED_OF_LIGHT;

/// Free-space wavelength (m) at `f` (Hz).
pub fn wavelength(f: f64) -> Result<f64, PatternError> {
    Ok(SPEED_OF_LIGHT / positive("frequency", f)?)
}

/// `d / λ₀`.
pub fn spacing_in_wavelengths(d: f64, f: f64) -> Result<f64, PatternError> {
    Ok(positive("spacing", d)? / wavelength(f)?)
}

/// Uniform linear array.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ArraySpec {
    pub elements: usize,
    /// Element separation (m).
    pub spacing: f64,
    /// Progressive phase per element (rad); 0 is broadside.
    pub steering: f64,
}

impl ArraySpec {
    pub fn new(elements: usize, spacing: f64, steering: f64) -> Result<Self, PatternError> {
        if elements == 0 {
            return Err(PatternError::NoElements);
        }
        positive("spacing", spacing)?;
        if !steering.is_finite() {
            return Err(PatternError::NonPositive { name: "steering", value: steering });
        }
        Ok(ArraySpec { elements, spacing, steering })
    }

    pub fn broadside(elements: usize, spacing: f64) -> Result<Self, PatternError> {
        Self::new(elements, spacing, 0.0)
    }

    fn validate(&self) -> Result<(), PatternError> {
        Self::new(self.elements, self.spacing, self.steering).map(|_| ())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AfValue {
    pub linear: f64,
    pub db: f64,
}

/// Broadside array-factor gain `2·N·d/λ`, in linear and `10·log10` form.
/// Values below one are kept (negative dB).
pub fn broadside_af(spec: &ArraySpec, f: f64) -> Result<AfValue, PatternError> {
    spec.validate()?;
    let linear = 2.0 * spec.elements as f64 * spec.spacing / wavelength(f)?;
    Ok(AfValue { linear, db: 10.0 * linear.log10() })
}

/// Realized gain normalized by the broadside array factor (dB).
pub fn scaled_gain(realized_gain_db: f64, spec: &ArraySpec, f: f64) -> Result<f64, PatternError> {
    Ok(realized_gain_db - broadside_af(spec, f)?.db)
}

/// Unnormalized `|Σ exp(j·n·(k·d·sinθ + steering))|`; `theta` in radians.
pub fn array_factor(spec: &ArraySpec, f: f64, theta: f64) -> Result<f64, PatternError> {
    spec.validate()?;
    let k = 2.0 * PI / wavelength(f)?;
    Ok(af_unchecked(spec, k, theta))
}

pub(crate) fn af_unchecked(spec: &ArraySpec, k: f64, theta: f64) -> f64 {
    let psi = k * spec.spacing * theta.sin() + spec.steering;
    (0..spec.elements).map(|n| Complex64::from_polar(1.0, n as f64 * psi)).sum::<Complex64>().norm()
}

/// Lowest frequency with a real-angle grating lobe for a broadside array,
/// `f = c₀/d` (the spacing equals one wavelength).
pub fn grating_lobe_onset(d: f64) -> Result<f64, PatternError> {
    Ok(SPEED_OF_LIGHT / positive("spacing", d)?)
}

/// Closed-form grating-lobe directions (degrees): `sinθ = (2πm − steering)/(k·d)`
/// for every `m ≠ 0` with `|sinθ| ≤ 1`, in increasing angle.
pub fn grating_lobe_angles(spec: &ArraySpec, f: f64) -> Result<Vec<f64>, PatternError> {
    spec.validate()?;
    let kd = 2.0 * PI / wavelength(f)? * spec.spacing;
    let m_max = (kd / (2.0 * PI)).ceil() as i64 + 1;
    let mut out: Vec<f64> = (-m_max..=m_max)
        .filter(|&m| m != 0)
        .map(|m| (2.0 * PI * m as f64 - spec.steering) / kd)
        .filter(|s| s.abs() <= 1.0)
        .map(|s| s.asin().to_degrees())
        .collect();
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// Secondary lobes at (near) the main-lobe level count as grating lobes.
pub const GRATING_LOBE_TOLERANCE_DB: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lobe {
    pub angle_deg: f64,
    /// Level relative to the array factor maximum `N` (dB).
    pub level_db: f64,
}

/// Grating lobes found by searching the pattern itself rather than the
/// closed form: local maxima of `|AF(θ)|` on a `step_deg` grid over
/// [−90°, 90°], refined by golden-section search, that reach within
/// [`GRATING_LOBE_TOLERANCE_DB`] of `N`. The main beam is excluded.
pub fn grating_lobes_in_pattern(spec: &ArraySpec, f: f64, step_deg: f64) -> Result<Vec<Lobe>, PatternError> {
    spec.validate()?;
    positive("angle step", step_deg)?;
    let k = 2.0 * PI / wavelength(f)?;
    let n = spec.elements as f64;
    let count = (180.0 / step_deg).round() as usize + 1;
    let angle = |i: usize| (-90.0 + 180.0 * i as f64 / (count - 1) as f64).to_radians();
    let level = |theta: f64| af_unchecked(spec, k, theta);
    let values: Vec<f64> = (0..count).map(|i| level(angle(i))).collect();

    let main_sin = -spec.steering / (k * spec.spacing);
    let main_deg = (main_sin.abs() <= 1.0).then(|| main_sin.asin().to_degrees());

    let mut lobes = Vec::new();
    for i in 0..count {
        let left = if i > 0 { values[i - 1] } else { f64::NEG_INFINITY };
        let right = if i + 1 < count { values[i + 1] } else { f64::NEG_INFINITY };
        if !(values[i] >= left && values[i] > right || values[i] > left && values[i] >= right) {
            continue;
        }
        let lo = angle(i.saturating_sub(1));
        let hi = angle((i + 1).min(count - 1));
        let theta = golden_max(&level, lo, hi);
        let peak = level(theta).max(values[i]);
        let theta = if level(theta) >= values[i] { theta } else { angle(i) };
        let deg = theta.to_degrees();
        if main_deg.is_some_and(|m| (deg - m).abs() <= step_deg) {
            continue;
        }
        let level_db = 20.0 * (peak / n).log10();
        if level_db >= -GRATING_LOBE_TOLERANCE_DB {
            lobes.push(Lobe { angle_deg: deg, level_db });
        }
    }
    Ok(lobes)
}

fn golden_max(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    for _ in 0..80 {
        if f(c) > f(d) {
            b = d;
        } else {
            a = c;
        }
        c = b - ratio * (b - a);
        d = a + ratio * (b - a);
    }
    0.5 * (a + b)
}
