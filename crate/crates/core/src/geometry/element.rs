use serde::{Deserialize, Serialize};

use super::polygon::{bounding_box, Point, Polygon};
use super::taper::{CurveSign, TaperParams};
use super::{GeometryError, Polarization};

/// Element and board dimensions for one polarization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ElementDims {
    /// Element width.
    pub w_a: f64,
    /// Flare height.
    pub h: f64,
    /// Total element height.
    pub h_b: f64,
    /// Antenna-PCB width. Carried as metadata, not used for outlines.
    pub w: f64,
    /// Board width.
    pub w_b: f64,
    /// Leaf overlap between neighbouring elements.
    pub w_ol: f64,
    /// Extra slot clearance.
    pub w_sp: f64,
    /// Substrate thickness.
    pub h_s: f64,
    pub polarization: Polarization,
}

impl ElementDims {
    /// Prototype dimensions for the given polarization.
    pub fn prototype(polarization: Polarization) -> Self {
        let (w_ol, w_a, w_sp) = match polarization {
            Polarization::X => (3.90, 28.03, 0.00),
            Polarization::Y => (4.00, 28.13, 0.10),
        };
        ElementDims { w_a, h: 48.60, h_b: 56.56, w: 76.39, w_b: 120.00, w_ol, w_sp, h_s: 0.254, polarization }
    }

    /// Element-to-element spacing `w_a − w_ol`.
    pub fn pitch(&self) -> f64 {
        self.w_a - self.w_ol
    }

    /// Height of the feed zone below the flare, `h_b − h`.
    pub fn feed_zone(&self) -> f64 {
        self.h_b - self.h
    }

    pub fn validate(&self) -> Result<(), GeometryError> {
        let positive = [
            ("w_a", self.w_a),
            ("h", self.h),
            ("h_b", self.h_b),
            ("w", self.w),
            ("w_b", self.w_b),
            ("w_ol", self.w_ol),
            ("h_s", self.h_s),
        ];
        for (name, value) in positive {
            if !(value > 0.0 && value.is_finite()) {
                return Err(GeometryError::NonPositive { name, value });
            }
        }
        if !(self.w_sp >= 0.0 && self.w_sp.is_finite()) {
            return Err(GeometryError::InvalidDims(format!("w_sp = {} must be >= 0", self.w_sp)));
        }
        if self.w_ol >= self.w_a {
            return Err(GeometryError::InvalidOverlap { w_ol: self.w_ol, w_a: self.w_a });
        }
        if self.h >= self.h_b {
            return Err(GeometryError::InvalidDims(format!(
                "flare height h = {} must be below total height h_b = {}",
                self.h, self.h_b
            )));
        }
        Ok(())
    }
}

/// Feed-line rectangle `w_f × l_f` directly below the taper origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeedSegment {
    pub min: Point,
    pub max: Point,
}

impl FeedSegment {
    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn length(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn polygon(&self) -> Polygon {
        Polygon::rectangle(self.min.x, self.min.y, self.max.x, self.max.y)
    }
}

/// Outline of one antipodal element in its board plane.
///
/// `x = 0` is the element centreline, `y = 0` the feed edge of the board and
/// `y = h_b` the aperture edge. `leaves[0]` is the top-copper leaf (flaring to
/// +x), `leaves[1]` its bottom-copper mirror.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementOutline {
    pub leaves: [Polygon; 2],
    pub feed_segments: [FeedSegment; 2],
    pub taper: TaperParams,
    pub dims: ElementDims,
    pub resolution: usize,
}

impl ElementOutline {
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        bounding_box(self.leaves.iter().flat_map(|l| l.vertices().iter()))
    }

    /// Rightmost extent of the top leaf across the flare's top row `y = h_b`,
    /// and the slot-side edge there: `(inner, outer)`.
    pub fn aperture_edges(&self) -> (f64, f64) {
        let top = self.dims.h_b;
        let xs = self.leaves[0].open_vertices().iter().filter(|p| p.y == top).map(|p| p.x);
        xs.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)))
    }
}

/// Samples `count` points uniformly on `[0, top]` (both ends included).
fn uniform(top: f64, count: usize) -> impl Iterator<Item = f64> {
    let last = count - 1;
    (0..count).map(move |i| if i == last { top } else { top * i as f64 / last as f64 })
}

/// Builds the top-copper (`+`) leaf polygon.
///
/// The outline runs from the feed stub up the inner curve, across the
/// aperture, down the element edge and back along the outer curve. Both
/// curves are clipped at `x = w_a/2`; above the outer curve's clip point the
/// leaf follows the element edge. `resolution` is the number of samples per
/// curve.
pub fn build_leaf_outline(p: &TaperParams, d: &ElementDims, resolution: usize) -> Result<Polygon, GeometryError> {
    if resolution < 16 {
        return Err(GeometryError::Resolution(resolution));
    }
    p.validate()?;
    d.validate()?;
    let half = d.w_a / 2.0;
    let base = d.feed_zone();
    if p.l_f > base {
        return Err(GeometryError::InvalidDims(format!(
            "feed line l_f = {} does not fit the feed zone h_b - h = {}",
            p.l_f, base
        )));
    }
    if p.w_f / 2.0 >= half {
        return Err(GeometryError::InvalidDims(format!(
            "feed line w_f = {} is wider than the element w_a = {}",
            p.w_f, d.w_a
        )));
    }

    let plus = CurveSign::Plus;
    let inner0 = p.inner(0.0, plus)?;
    let outer0 = p.outer(0.0, plus)?;
    if outer0 >= half {
        return Err(GeometryError::NoIntersection(format!(
            "outer curve starts at x = {outer0} mm, outside the element half-width {half} mm"
        )));
    }
    if inner0 >= outer0 {
        return Err(GeometryError::NoIntersection(format!(
            "inner curve origin {inner0} mm is not left of the outer curve origin {outer0} mm"
        )));
    }

    let inner_top = p.inner_y_at(half).map_or(d.h, |y| y.min(d.h));
    let outer_top = p.outer_y_at(half).map_or(d.h, |y| y.min(d.h));
    let pinched = inner_top < d.h;
    // Curve height -> board height; the flare top lands exactly on h_b.
    let board_y = |y: f64| if y == d.h { d.h_b } else { base + y };

    let sample = |top: f64, clipped: bool, curve: &dyn Fn(f64) -> Result<f64, GeometryError>| {
        uniform(top, resolution)
            .map(|y| {
                let x = if clipped && y == top { half } else { curve(y)?.min(half) };
                Ok(Point::new(x, board_y(y)))
            })
            .collect::<Result<Vec<Point>, GeometryError>>()
    };
    let inner_pts = sample(inner_top, pinched, &|y| p.inner(y, plus))?;
    let outer_pts = sample(outer_top, outer_top < d.h, &|y| p.outer(y, plus))?;

    // The right boundary at height y is min(outer(y), w_a/2); the inner edge
    // must stay strictly left of it, touching only at a pinched-off tip.
    for (q, y) in inner_pts.iter().zip(uniform(inner_top, resolution)).skip(1) {
        let right = if y >= outer_top { half } else { p.outer(y, plus)?.min(half) };
        let tip = pinched && y == inner_top;
        if q.x > right || (q.x == right && !tip) {
            return Err(GeometryError::NoIntersection(format!("inner and outer curves cross near y = {y:.4} mm")));
        }
    }

    let mut pts = Vec::with_capacity(2 * resolution + 8);
    pts.push(Point::new(p.w_f / 2.0, 0.0));
    pts.push(Point::new(-p.w_f / 2.0, 0.0));
    pts.push(Point::new(-p.w_f / 2.0, base));
    pts.extend(inner_pts.iter().copied());
    if !pinched {
        let right_top = if outer_top < d.h { half } else { p.outer(d.h, plus)?.min(half) };
        pts.push(Point::new(right_top, d.h_b));
    }
    if outer_top < d.h {
        pts.push(Point::new(half, board_y(outer_top)));
    }
    pts.extend(outer_pts.iter().rev().copied());
    pts.push(Point::new(p.w_f / 2.0, base));
    Ok(Polygon::new(pts))
}

/// Builds both leaves of an antipodal element and their feed segments.
pub fn build_element(p: &TaperParams, d: &ElementDims) -> Result<ElementOutline, GeometryError> {
    build_element_with_resolution(p, d, ElementOutline::DEFAULT_RESOLUTION)
}

impl ElementOutline {
    pub const DEFAULT_RESOLUTION: usize = 256;
}

pub fn build_element_with_resolution(
    p: &TaperParams,
    d: &ElementDims,
    resolution: usize,
) -> Result<ElementOutline, GeometryError> {
    let top = build_leaf_outline(p, d, resolution)?;
    let bottom = top.mirrored_x();
    let base = d.feed_zone();
    let feed = FeedSegment { min: Point::new(-p.w_f / 2.0, base - p.l_f), max: Point::new(p.w_f / 2.0, base) };
    Ok(ElementOutline { leaves: [top, bottom], feed_segments: [feed, feed], taper: *p, dims: *d, resolution })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proto(pol: Polarization) -> (TaperParams, ElementDims) {
        (TaperParams::PROTOTYPE, ElementDims::prototype(pol))
    }

    #[test]
    fn prototype_pitch() {
        for pol in [Polarization::X, Polarization::Y] {
            let d = ElementDims::prototype(pol);
            assert!((d.pitch() - 24.13).abs() < 1e-9);
            assert!((d.pitch() - 24.1).abs() < 0.05);
            assert!((d.feed_zone() - 7.96).abs() < 1e-9);
        }
    }

    #[test]
    fn leaf_is_closed_and_simple() {
        let (p, d) = proto(Polarization::X);
        let leaf = build_leaf_outline(&p, &d, 256).unwrap();
        assert!(leaf.is_closed());
        assert!(leaf.is_simple());
        let (lo, hi) = leaf.bounding_box().unwrap();
        let inner0 = p.inner(0.0, CurveSign::Plus).unwrap();
        assert_eq!(lo.x, inner0.min(-p.w_f / 2.0));
        assert_eq!(hi.x, d.w_a / 2.0);
        assert_eq!((lo.y, hi.y), (0.0, d.h_b));
        // 2 curves x 256 samples plus feed and edge corners.
        let n = leaf.open_vertices().len();
        assert!((2 * 256..=2 * 256 + 8).contains(&n), "{n}");
    }

    #[test]
    fn minimum_resolution_still_closes() {
        let (p, d) = proto(Polarization::Y);
        let leaf = build_leaf_outline(&p, &d, 16).unwrap();
        assert!(leaf.is_closed());
        assert!(leaf.is_simple());
        assert_eq!(build_leaf_outline(&p, &d, 15), Err(GeometryError::Resolution(15)));
    }

    #[test]
    fn area_converges_with_resolution() {
        let (p, d) = proto(Polarization::X);
        let area = |r| build_leaf_outline(&p, &d, r).unwrap().area();
        let coarse = area(16);
        let fine = area(1024);
        assert!(((coarse - fine) / fine).abs() < 0.005, "{coarse} vs {fine}");
        let a512 = area(512);
        assert!(((a512 - fine) / fine).abs() < 0.005);
        let mut prev_delta = f64::INFINITY;
        for r in [16, 32, 64, 128, 256, 512] {
            let delta = (area(2 * r) - area(r)).abs();
            assert!(delta < prev_delta, "not converging at {r}");
            prev_delta = delta;
        }
    }

    #[test]
    fn element_leaves_mirror() {
        let (p, d) = proto(Polarization::Y);
        let e = build_element(&p, &d).unwrap();
        let mirrored = e.leaves[0].mirrored_x();
        for (a, b) in mirrored.vertices().iter().zip(e.leaves[1].vertices()) {
            assert!((a.x - b.x).abs() < 1e-9 && (a.y - b.y).abs() < 1e-9);
        }
        assert!(e.leaves[1].is_simple());
    }

    #[test]
    fn element_extents() {
        let (p, d) = proto(Polarization::X);
        let e = build_element(&p, &d).unwrap();
        let (lo, hi) = e.bounding_box().unwrap();
        assert!((hi.x - lo.x - 28.03).abs() < 1e-9);
        assert!((hi.y - lo.y - 56.56).abs() < 1e-9);
        for leaf in &e.leaves {
            for v in leaf.vertices() {
                assert!(v.x.abs() <= d.w_a / 2.0 && (0.0..=d.h_b).contains(&v.y));
            }
        }
    }

    #[test]
    fn aperture_row() {
        let (p, d) = proto(Polarization::Y);
        let e = build_element(&p, &d).unwrap();
        let (inner, outer) = e.aperture_edges();
        let expect_inner = p.inner(d.h, CurveSign::Plus).unwrap().min(d.w_a / 2.0);
        assert_eq!(inner, expect_inner);
        assert_eq!(outer, 14.065);
        let (_, dx) = build_element(&p, &ElementDims::prototype(Polarization::X)).unwrap().aperture_edges();
        assert_eq!(dx, 14.015);
    }

    #[test]
    fn feed_segments_overlap() {
        let (p, d) = proto(Polarization::X);
        let e = build_element(&p, &d).unwrap();
        let [a, b] = e.feed_segments;
        assert_eq!(a, b);
        assert!((a.width() - p.w_f).abs() < 1e-12);
        assert!((a.length() - p.l_f).abs() < 1e-12);
        assert!((a.max.y - d.feed_zone()).abs() < 1e-12);
    }

    #[test]
    fn outer_curve_outside_box_is_rejected() {
        let (mut p, d) = proto(Polarization::X);
        p.c_b = 20.0;
        assert!(matches!(build_leaf_outline(&p, &d, 64), Err(GeometryError::NoIntersection(_))));
    }

    #[test]
    fn crossing_curves_are_rejected() {
        let (mut p, d) = proto(Polarization::X);
        // Inner curve now grows much faster than the outer one.
        p.k_i = 1.5;
        p.k_o = 0.0001;
        assert!(matches!(build_leaf_outline(&p, &d, 64), Err(GeometryError::NoIntersection(_))));
    }

    #[test]
    fn overlap_must_be_below_width() {
        let (p, mut d) = proto(Polarization::X);
        d.w_ol = d.w_a;
        assert!(matches!(build_element(&p, &d), Err(GeometryError::InvalidOverlap { .. })));
    }
}
