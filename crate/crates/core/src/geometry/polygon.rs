use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
}

/// Closed polygon: the first vertex is repeated as the last.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    /// Builds a closed polygon from an open or closed vertex list.
    ///
    /// Consecutive duplicate vertices are dropped.
    pub fn new(points: impl IntoIterator<Item = Point>) -> Self {
        let mut vertices: Vec<Point> = Vec::new();
        for p in points {
            if vertices.last() != Some(&p) {
                vertices.push(p);
            }
        }
        if let Some(&first) = vertices.first() {
            if vertices.len() > 1 && vertices.last() == Some(&first) {
                vertices.pop();
            }
            vertices.push(first);
        }
        Polygon { vertices }
    }

    pub fn rectangle(x0: f64, y0: f64, x1: f64, y1: f64) -> Self {
        Polygon::new([Point::new(x0, y0), Point::new(x1, y0), Point::new(x1, y1), Point::new(x0, y1)])
    }

    /// Vertices including the closing repeat of the first one.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Vertices without the closing repeat.
    pub fn open_vertices(&self) -> &[Point] {
        match self.vertices.len() {
            0 => &[],
            n => &self.vertices[..n - 1],
        }
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.len() >= 4 && self.vertices.first() == self.vertices.last()
    }

    /// Shoelace area; positive for counter-clockwise winding.
    pub fn signed_area(&self) -> f64 {
        self.vertices.windows(2).map(|w| w[0].x * w[1].y - w[1].x * w[0].y).sum::<f64>() / 2.0
    }

    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    /// `(min, max)` corners, or `None` for an empty polygon.
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        bounding_box(self.vertices.iter())
    }

    pub fn mirrored_x(&self) -> Polygon {
        Polygon { vertices: self.vertices.iter().map(|p| Point::new(-p.x, p.y)).collect() }
    }

    pub fn translated(&self, dx: f64, dy: f64) -> Polygon {
        Polygon { vertices: self.vertices.iter().map(|p| Point::new(p.x + dx, p.y + dy)).collect() }
    }

    /// True when no two non-adjacent edges touch or cross.
    ///
    /// Brute-force O(n²) edge test; fine for outline sizes.
    pub fn is_simple(&self) -> bool {
        if !self.is_closed() {
            return false;
        }
        let edges: Vec<(Point, Point)> = self.vertices.windows(2).map(|w| (w[0], w[1])).collect();
        let n = edges.len();
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if adjacent {
                    // Shared endpoint is fine; collinear overlap is not.
                    if collinear_overlap(a, b, c, d) {
                        return false;
                    }
                } else if segments_touch(a, b, c, d) {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn bounding_box<'a>(points: impl Iterator<Item = &'a Point>) -> Option<(Point, Point)> {
    points.fold(None, |acc, p| match acc {
        None => Some((*p, *p)),
        Some((lo, hi)) => Some((Point::new(lo.x.min(p.x), lo.y.min(p.y)), Point::new(hi.x.max(p.x), hi.y.max(p.y)))),
    })
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

fn segments_touch(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if ((o1 > 0.0 && o2 < 0.0) || (o1 < 0.0 && o2 > 0.0)) && ((o3 > 0.0 && o4 < 0.0) || (o3 < 0.0 && o4 > 0.0)) {
        return true;
    }
    (o1 == 0.0 && on_segment(a, b, c))
        || (o2 == 0.0 && on_segment(a, b, d))
        || (o3 == 0.0 && on_segment(c, d, a))
        || (o4 == 0.0 && on_segment(c, d, b))
}

/// Adjacent edges `a→b`, `c→d` with `b == c` (or `d == a`) overlap when they
/// are collinear and fold back onto each other.
fn collinear_overlap(a: Point, b: Point, c: Point, d: Point) -> bool {
    if orient(a, b, c) != 0.0 || orient(a, b, d) != 0.0 {
        return false;
    }
    let (shared, p, q) = if b == c {
        (b, a, d)
    } else if d == a {
        (a, b, c)
    } else {
        return true;
    };
    let dot = (p.x - shared.x) * (q.x - shared.x) + (p.y - shared.y) * (q.y - shared.y);
    dot > 0.0
}
