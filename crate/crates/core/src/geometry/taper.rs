use serde::{Deserialize, Serialize};

use super::GeometryError;

/// Which branch of the `±` taper curves to evaluate.
///
/// `Plus` is the leaf that flares towards +x, `Minus` its antipodal mirror.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveSign {
    Plus,
    Minus,
}

impl CurveSign {
    fn factor(self) -> f64 {
        match self {
            CurveSign::Plus => 1.0,
            CurveSign::Minus => -1.0,
        }
    }
}

/// Coefficients of the exponential taper curves plus the feed-line geometry.
///
/// Inner (slot-side) edge: `x = ±(c_i·exp(k_i·y) − c_a)`.
/// Outer edge: `x = ±(c_o·exp(k_o·y²) + c_b)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TaperParams {
    pub c_i: f64,
    pub k_i: f64,
    pub c_a: f64,
    pub c_o: f64,
    pub k_o: f64,
    pub c_b: f64,
    /// Feed-line width.
    pub w_f: f64,
    /// Feed-line length.
    pub l_f: f64,
}

impl TaperParams {
    /// Prototype design values.
    pub const PROTOTYPE: TaperParams = TaperParams {
        c_i: 0.03069,
        k_i: 0.12585,
        c_a: 0.48535,
        c_o: 0.01024,
        k_o: 0.01058,
        c_b: 0.44442,
        w_f: 0.909,
        l_f: 4.000,
    };

    pub fn validate(&self) -> Result<(), GeometryError> {
        let fields = [
            ("c_i", self.c_i),
            ("k_i", self.k_i),
            ("c_a", self.c_a),
            ("c_o", self.c_o),
            ("k_o", self.k_o),
            ("c_b", self.c_b),
            ("w_f", self.w_f),
            ("l_f", self.l_f),
        ];
        for (name, value) in fields {
            if !(value > 0.0 && value.is_finite()) {
                return Err(GeometryError::NonPositive { name, value });
            }
        }
        Ok(())
    }

    pub fn inner(&self, y: f64, sign: CurveSign) -> Result<f64, GeometryError> {
        check_y(y)?;
        Ok(sign.factor() * (self.c_i * (self.k_i * y).exp() - self.c_a))
    }

    pub fn outer(&self, y: f64, sign: CurveSign) -> Result<f64, GeometryError> {
        check_y(y)?;
        Ok(sign.factor() * (self.c_o * (self.k_o * y * y).exp() + self.c_b))
    }

    /// `y` at which the `+` inner curve reaches `x`, if it ever does for `y ≥ 0`.
    pub fn inner_y_at(&self, x: f64) -> Option<f64> {
        let arg = (x + self.c_a) / self.c_i;
        if arg < 1.0 {
            return None;
        }
        Some(arg.ln() / self.k_i)
    }

    /// `y` at which the `+` outer curve reaches `x`, if it ever does for `y ≥ 0`.
    pub fn outer_y_at(&self, x: f64) -> Option<f64> {
        let arg = (x - self.c_b) / self.c_o;
        if arg < 1.0 {
            return None;
        }
        Some((arg.ln() / self.k_o).sqrt())
    }

    /// Signed gap between the two curve origins at `y = 0`:
    /// `(c_a − c_i) − (c_o + c_b)`. Zero when both curves start at the same |x|.
    pub fn origin_mismatch(&self) -> f64 {
        (self.c_a - self.c_i) - (self.c_o + self.c_b)
    }

    /// `(c_a − c_i) − w_f/2`: how far the inner curve starts from the feed-line edge.
    pub fn feed_edge_mismatch(&self) -> f64 {
        (self.c_a - self.c_i) - self.w_f / 2.0
    }
}

impl Default for TaperParams {
    fn default() -> Self {
        Self::PROTOTYPE
    }
}

fn check_y(y: f64) -> Result<(), GeometryError> {
    if y < 0.0 || y.is_nan() {
        Err(GeometryError::NegativeY(y))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const P: TaperParams = TaperParams::PROTOTYPE;

    /// Bisection on a monotone function, independent of the closed-form inverses.
    fn bisect(f: impl Fn(f64) -> f64, target: f64, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn curve_origins() {
        let xi = P.inner(0.0, CurveSign::Plus).unwrap();
        let xo = P.outer(0.0, CurveSign::Plus).unwrap();
        assert!((xi + 0.45466).abs() < 1e-12);
        assert!((xo - 0.45466).abs() < 1e-12);
        assert!((xi.abs() - xo.abs()).abs() < 1e-5);
        assert!(P.origin_mismatch().abs() < 0.02);
        assert!(P.feed_edge_mismatch().abs() < 0.02);
    }

    #[test]
    fn sign_symmetry_at_origin() {
        let p = P.inner(0.0, CurveSign::Plus).unwrap();
        let m = P.inner(0.0, CurveSign::Minus).unwrap();
        assert_eq!(p, -m);
        let p = P.outer(3.0, CurveSign::Plus).unwrap();
        let m = P.outer(3.0, CurveSign::Minus).unwrap();
        assert_eq!(p, -m);
    }

    #[test]
    fn clip_heights_match_bisection() {
        let half = 28.03 / 2.0;
        let yi = bisect(|y| P.inner(y, CurveSign::Plus).unwrap(), half, 0.0, 100.0);
        let yo = bisect(|y| P.outer(y, CurveSign::Plus).unwrap(), half, 0.0, 100.0);
        // Frozen from the bisection oracle.
        assert!((yi - 48.93).abs() < 0.005, "{yi}");
        assert!((yo - 26.07).abs() < 0.005, "{yo}");
        assert!((P.inner_y_at(half).unwrap() - yi).abs() < 1e-9);
        assert!((P.outer_y_at(half).unwrap() - yo).abs() < 1e-9);
        assert!((P.inner(yi, CurveSign::Plus).unwrap() - half).abs() < 1e-9);
    }

    #[test]
    fn negative_y_is_a_domain_error() {
        assert_eq!(P.inner(-1.0, CurveSign::Plus), Err(GeometryError::NegativeY(-1.0)));
        assert!(P.outer(-1e-9, CurveSign::Minus).is_err());
    }

    #[test]
    fn validate_rejects_non_positive() {
        let mut p = P;
        p.k_o = 0.0;
        assert!(matches!(p.validate(), Err(GeometryError::NonPositive { name: "k_o", .. })));
        assert!(P.validate().is_ok());
    }

    proptest! {
        #[test]
        fn curves_increase_in_y(y1 in 0.0f64..60.0, dy in 1e-6f64..10.0) {
            let y2 = y1 + dy;
            prop_assert!(P.inner(y2, CurveSign::Plus).unwrap() > P.inner(y1, CurveSign::Plus).unwrap());
            prop_assert!(P.outer(y2, CurveSign::Plus).unwrap() > P.outer(y1, CurveSign::Plus).unwrap());
        }
    }
}
