use std::fmt::Write as _;
use std::str::FromStr;

use super::element::ElementOutline;
use super::polygon::{bounding_box, Point, Polygon};
use super::GeometryError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Svg,
    Csv,
    Dxf,
}

impl ExportFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ExportFormat::Svg => "svg",
            ExportFormat::Csv => "csv",
            ExportFormat::Dxf => "dxf",
        }
    }
}

impl FromStr for ExportFormat {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "svg" => Ok(ExportFormat::Svg),
            "csv" | "csv-points" => Ok(ExportFormat::Csv),
            "dxf" | "dxf-lite" => Ok(ExportFormat::Dxf),
            other => Err(GeometryError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledPolygon {
    pub label: String,
    pub polygon: Polygon,
}

/// A flat list of labelled polygons ready for export.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Drawing {
    pub polygons: Vec<LabeledPolygon>,
}

impl Drawing {
    pub fn push(&mut self, label: impl Into<String>, polygon: Polygon) {
        self.polygons.push(LabeledPolygon { label: label.into(), polygon });
    }

    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        bounding_box(self.polygons.iter().flat_map(|p| p.polygon.vertices().iter()))
    }
}

impl From<&ElementOutline> for Drawing {
    fn from(o: &ElementOutline) -> Self {
        let mut d = Drawing::default();
        d.push("leaf_top", o.leaves[0].clone());
        d.push("leaf_bottom", o.leaves[1].clone());
        d
    }
}

/// Serializes a drawing. Coordinates are written with the shortest
/// representation that parses back to the same `f64`.
pub fn export_outline(drawing: &Drawing, format: ExportFormat) -> Vec<u8> {
    let text = match format {
        ExportFormat::Svg => to_svg(drawing),
        ExportFormat::Csv => to_csv(drawing),
        ExportFormat::Dxf => to_dxf(drawing),
    };
    text.into_bytes()
}

/// SVG 1.1 in millimetre user units; the y axis is flipped so the aperture
/// points up on screen.
fn to_svg(d: &Drawing) -> String {
    let (min_x, max_y, w, h) = match d.bounding_box() {
        Some((lo, hi)) => (lo.x, hi.y, hi.x - lo.x, hi.y - lo.y),
        None => (0.0, 0.0, 0.0, 0.0),
    };
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}mm\" height=\"{h}mm\" viewBox=\"{min_x} {} {w} {h}\">",
        0.0 - max_y
    );
    for lp in &d.polygons {
        let mut path = String::new();
        for (i, p) in lp.polygon.open_vertices().iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            let _ = write!(path, "{cmd}{},{} ", p.x, 0.0 - p.y);
        }
        path.push('Z');
        let _ = writeln!(
            s,
            "  <path id=\"{}\" d=\"{path}\" fill=\"none\" stroke=\"black\" stroke-width=\"0.05\"/>",
            xml_escape(&lp.label)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn to_csv(d: &Drawing) -> String {
    let mut s = String::from("x_mm,y_mm,polygon_id\n");
    for (id, lp) in d.polygons.iter().enumerate() {
        for p in lp.polygon.vertices() {
            let _ = writeln!(s, "{},{},{id}", p.x, p.y);
        }
    }
    s
}

/// Minimal DXF: a header declaring millimetres and one closed LWPOLYLINE per
/// polygon, layer named after the polygon label.
fn to_dxf(d: &Drawing) -> String {
    let mut s = String::new();
    s.push_str("0\nSECTION\n2\nHEADER\n9\n$INSUNITS\n70\n4\n0\nENDSEC\n");
    s.push_str("0\nSECTION\n2\nENTITIES\n");
    for lp in &d.polygons {
        let verts = lp.polygon.open_vertices();
        let layer: String =
            lp.label.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' }).collect();
        let _ = write!(s, "0\nLWPOLYLINE\n8\n{layer}\n90\n{}\n70\n1\n", verts.len());
        for p in verts {
            let _ = write!(s, "10\n{}\n20\n{}\n", p.x, p.y);
        }
    }
    s.push_str("0\nENDSEC\n0\nEOF\n");
    s
}

/// Reads the `x_mm,y_mm,polygon_id` CSV written by [`export_outline`].
///
/// Polygons are returned in order of first appearance of their id.
pub fn import_csv_points(text: &str) -> Result<Vec<Polygon>, GeometryError> {
    let mut groups: Vec<(String, Vec<Point>)> = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || (n == 0 && line.starts_with("x_mm")) {
            continue;
        }
        let err = |msg: &str| GeometryError::Csv { line: n + 1, msg: msg.to_string() };
        let mut fields = line.split(',');
        let (Some(x), Some(y), Some(id), None) = (fields.next(), fields.next(), fields.next(), fields.next()) else {
            return Err(err("expected 3 fields"));
        };
        let x: f64 = x.trim().parse().map_err(|_| err("bad x"))?;
        let y: f64 = y.trim().parse().map_err(|_| err("bad y"))?;
        let id = id.trim();
        match groups.iter_mut().find(|(g, _)| g == id) {
            Some((_, pts)) => pts.push(Point::new(x, y)),
            None => groups.push((id.to_string(), vec![Point::new(x, y)])),
        }
    }
    Ok(groups.into_iter().map(|(_, pts)| Polygon::new(pts)).collect())
}
