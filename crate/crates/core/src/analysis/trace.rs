use std::fmt::Write as _;

use serde::Serialize;

use super::bands::Band;
use super::AnalysisError;
use crate::format::g6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TraceScale {
    Db,
    Linear,
}

/// Scalar value per frequency, frequencies strictly increasing (Hz).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrequencyTrace {
    frequencies: Vec<f64>,
    values: Vec<f64>,
    scale: TraceScale,
}

impl FrequencyTrace {
    pub fn new(frequencies: Vec<f64>, values: Vec<f64>, scale: TraceScale) -> Result<Self, AnalysisError> {
        if frequencies.len() != values.len() {
            return Err(AnalysisError::InvalidTrace(format!(
                "{} frequencies but {} values",
                frequencies.len(),
                values.len()
            )));
        }
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(AnalysisError::InvalidTrace(format!("non-finite value at index {k}")));
        }
        if frequencies.iter().any(|f| !(f.is_finite() && *f > 0.0)) {
            return Err(AnalysisError::InvalidTrace("frequencies must be positive and finite".into()));
        }
        if frequencies.windows(2).any(|w| w[1] <= w[0]) {
            return Err(AnalysisError::InvalidTrace("frequencies must be strictly increasing".into()));
        }
        Ok(FrequencyTrace { frequencies, values, scale })
    }

    pub fn db(frequencies: Vec<f64>, values: Vec<f64>) -> Result<Self, AnalysisError> {
        Self::new(frequencies, values, TraceScale::Db)
    }

    pub fn frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn scale(&self) -> TraceScale {
        self.scale
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.frequencies.iter().copied().zip(self.values.iter().copied())
    }

    /// Linear interpolation at `f` inside the span.
    pub fn value_at(&self, f: f64) -> Option<f64> {
        let k = self.frequencies.partition_point(|&x| x < f);
        if k == self.len() {
            return None;
        }
        if self.frequencies[k] == f {
            return Some(self.values[k]);
        }
        if k == 0 {
            return None;
        }
        let (f1, f2) = (self.frequencies[k - 1], self.frequencies[k]);
        let (v1, v2) = (self.values[k - 1], self.values[k]);
        Some(v1 + (f - f1) * (v2 - v1) / (f2 - f1))
    }

    /// Restriction to `[f_low, f_high]`, with interpolated end points.
    pub fn clip(&self, f_low: f64, f_high: f64) -> Result<FrequencyTrace, AnalysisError> {
        self.clip_with(f_low, f_high, None)
    }

    /// Restriction to a band found at `threshold`; interior end points carry
    /// the threshold value exactly, so re-extracting returns the same band.
    pub fn clip_to_band(&self, band: &Band, threshold: f64) -> Result<FrequencyTrace, AnalysisError> {
        self.clip_with(band.f_low, band.f_high, Some(threshold))
    }

    fn clip_with(&self, lo: f64, hi: f64, pin: Option<f64>) -> Result<FrequencyTrace, AnalysisError> {
        let (Some(&first), Some(&last)) = (self.frequencies.first(), self.frequencies.last()) else {
            return Err(AnalysisError::ShortTrace(0));
        };
        let (lo, hi) = (lo.max(first), hi.min(last));
        if lo > hi {
            return Err(AnalysisError::InvalidTrace(format!("clip range [{lo}, {hi}] outside the trace")));
        }
        let end_value = |f: f64| -> f64 {
            let on_grid = self.frequencies.binary_search_by(|x| x.total_cmp(&f)).ok();
            match (on_grid, pin) {
                (Some(k), Some(t)) => self.values[k].min(t),
                (Some(k), None) => self.values[k],
                (None, Some(t)) => t,
                (None, None) => self.value_at(f).expect("inside span"),
            }
        };
        let mut freqs = vec![lo];
        let mut values = vec![end_value(lo)];
        for (f, v) in self.iter().filter(|(f, _)| *f > lo && *f < hi) {
            freqs.push(f);
            values.push(v);
        }
        if hi > lo {
            freqs.push(hi);
            values.push(end_value(hi));
        }
        FrequencyTrace::new(freqs, values, self.scale)
    }

    /// `f_hz,value_db` CSV with `%.6g` numbers.
    pub fn to_csv(&self) -> String {
        let header = match self.scale {
            TraceScale::Db => "f_hz,value_db",
            TraceScale::Linear => "f_hz,value",
        };
        let mut s = format!("{header}\n");
        for (f, v) in self.iter() {
            let _ = writeln!(s, "{},{}", g6(f), g6(v));
        }
        s
    }

    /// Reads a two-column `f_hz,value` CSV (header optional, dB assumed).
    pub fn from_csv(text: &str) -> Result<FrequencyTrace, AnalysisError> {
        let mut freqs = Vec::new();
        let mut values = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let err = |msg: &str| AnalysisError::Parse { line, msg: msg.to_string() };
            let mut it = body.split(',').map(str::trim);
            let (Some(f), Some(v)) = (it.next(), it.next()) else {
                return Err(err("expected `f_hz,value`"));
            };
            match (f.parse::<f64>(), v.parse::<f64>()) {
                (Ok(f), Ok(v)) => {
                    freqs.push(f);
                    values.push(v);
                }
                _ if freqs.is_empty() && line == 1 => continue,
                _ => return Err(err("non-numeric field")),
            }
        }
        FrequencyTrace::db(freqs, values)
    }
}
