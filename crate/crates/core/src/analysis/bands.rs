use serde::Serialize;

use super::trace::FrequencyTrace;
use super::AnalysisError;

/// Closed frequency interval (Hz).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Band {
    pub f_low: f64,
    pub f_high: f64,
}

impl Band {
    pub fn width(&self) -> f64 {
        self.f_high - self.f_low
    }
}

/// Frequency where the segment `(f1, v1)–(f2, v2)` crosses `t`, linear in
/// (f, value). End points exactly at the threshold are returned as is.
fn crossing(f1: f64, v1: f64, f2: f64, v2: f64, t: f64) -> f64 {
    if v1 == t {
        f1
    } else if v2 == t {
        f2
    } else {
        (f1 + (t - v1) * (f2 - f1) / (v2 - v1)).clamp(f1, f2)
    }
}

/// Maximal intervals where `trace ≤ threshold`.
///
/// Crossings are located by linear interpolation between samples; intervals
/// touching either end of the trace are clipped to the trace span.
pub fn band_edges(trace: &FrequencyTrace, threshold: f64) -> Result<Vec<Band>, AnalysisError> {
    if trace.len() < 2 {
        return Err(AnalysisError::ShortTrace(trace.len()));
    }
    let f = trace.frequencies();
    let v = trace.values();
    let inside = |k: usize| v[k] <= threshold;
    let mut bands = Vec::new();
    let mut open = inside(0).then_some(f[0]);
    for k in 1..f.len() {
        match (inside(k - 1), inside(k)) {
            (false, true) => open = Some(crossing(f[k - 1], v[k - 1], f[k], v[k], threshold)),
            (true, false) => {
                let start = open.take().expect("band open");
                bands.push(Band { f_low: start, f_high: crossing(f[k - 1], v[k - 1], f[k], v[k], threshold) });
            }
            _ => {}
        }
    }
    if let Some(start) = open {
        bands.push(Band { f_low: start, f_high: f[f.len() - 1] });
    }
    Ok(bands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ghz(t: &[(f64, f64)]) -> FrequencyTrace {
        FrequencyTrace::db(t.iter().map(|p| p.0 * 1e9).collect(), t.iter().map(|p| p.1).collect()).unwrap()
    }

    #[test]
    fn single_dip() {
        let t = ghz(&[(2.0, -3.0), (4.0, -9.0), (6.0, -3.0)]);
        let b = band_edges(&t, -6.0).unwrap();
        assert_eq!(b, vec![Band { f_low: 3e9, f_high: 5e9 }]);
    }

    #[test]
    fn fully_inside() {
        let t = ghz(&[(2.0, -13.0), (4.0, -9.0), (6.0, -30.0)]);
        assert_eq!(band_edges(&t, -6.0).unwrap(), vec![Band { f_low: 2e9, f_high: 6e9 }]);
    }

    #[test]
    fn fully_outside_and_short() {
        let t = ghz(&[(2.0, 0.0), (4.0, -1.0)]);
        assert!(band_edges(&t, -6.0).unwrap().is_empty());
        let one = ghz(&[(2.0, 0.0)]);
        assert_eq!(band_edges(&one, -6.0), Err(AnalysisError::ShortTrace(1)));
    }

    #[test]
    fn two_bands_with_open_ends() {
        let t = ghz(&[(1.0, -8.0), (2.0, -4.0), (3.0, -4.0), (4.0, -8.0)]);
        let b = band_edges(&t, -6.0).unwrap();
        assert_eq!(b, vec![Band { f_low: 1e9, f_high: 1.5e9 }, Band { f_low: 3.5e9, f_high: 4e9 }]);
    }

    #[test]
    fn touching_threshold_counts_as_inside() {
        let t = ghz(&[(1.0, -3.0), (2.0, -6.0), (3.0, -3.0)]);
        assert_eq!(band_edges(&t, -6.0).unwrap(), vec![Band { f_low: 2e9, f_high: 2e9 }]);
    }

    proptest! {
        #[test]
        fn clipped_trace_is_idempotent(values in prop::collection::vec(-20.0f64..0.0, 2..60), thr in -15.0f64..-3.0) {
            let freqs: Vec<f64> = (0..values.len()).map(|k| 1e9 + k as f64 * 1e8).collect();
            let t = FrequencyTrace::db(freqs, values).unwrap();
            for band in band_edges(&t, thr).unwrap() {
                let clipped = t.clip_to_band(&band, thr).unwrap();
                if clipped.len() < 2 {
                    continue;
                }
                prop_assert_eq!(band_edges(&clipped, thr).unwrap(), vec![band]);
            }
        }
    }
}
