//! Prototype geometry checks and export round trips on full array drawings.

use std::time::Instant;

use tcva_core::geometry::{
    build_array_layout, build_element, export_outline, import_csv_points, CurveSign, Drawing, ElementDims,
    ExportFormat, Polarization, TaperParams,
};

#[test]
fn curve_origins_and_pitch() {
    let start = Instant::now();
    let p = TaperParams::PROTOTYPE;
    let inner = p.inner(0.0, CurveSign::Plus).unwrap();
    let outer = p.outer(0.0, CurveSign::Plus).unwrap();
    assert!((inner.abs() - 0.45466).abs() < 1e-12, "{inner}");
    assert!((outer.abs() - 0.45466).abs() < 1e-12, "{outer}");
    assert!(p.origin_mismatch().abs() < 1e-12);
    assert!(p.feed_edge_mismatch().abs() < 0.02);
    for pol in [Polarization::X, Polarization::Y] {
        let pitch = ElementDims::prototype(pol).pitch();
        assert!((pitch - 24.13).abs() < 1e-9);
        assert!((pitch - 24.1).abs() < 0.05);
    }
    let x = build_element(&p, &ElementDims::prototype(Polarization::X)).unwrap();
    let y = build_element(&p, &ElementDims::prototype(Polarization::Y)).unwrap();
    build_array_layout(&x.dims, &y.dims, 3, 3).unwrap();
    assert!(start.elapsed().as_secs_f64() < 1.0);
}

#[test]
fn leaves_are_simple_and_antipodal() {
    let p = TaperParams::PROTOTYPE;
    for pol in [Polarization::X, Polarization::Y] {
        let e = build_element(&p, &ElementDims::prototype(pol)).unwrap();
        let [a, b] = &e.leaves;
        assert!(a.is_simple() && b.is_simple());
        assert!((a.area() - b.area()).abs() < 1e-9);
        assert_eq!(&a.mirrored_x(), b);
    }
}

fn array_drawing(rows: usize, cols: usize) -> Drawing {
    let p = TaperParams::PROTOTYPE;
    let x = build_element(&p, &ElementDims::prototype(Polarization::X)).unwrap();
    let y = build_element(&p, &ElementDims::prototype(Polarization::Y)).unwrap();
    build_array_layout(&x.dims, &y.dims, rows, cols).unwrap().drawing(&x, &y)
}

#[test]
fn csv_export_round_trips_bit_exact() {
    let d = array_drawing(3, 3);
    let text = String::from_utf8(export_outline(&d, ExportFormat::Csv)).unwrap();
    let back = import_csv_points(&text).unwrap();
    assert_eq!(back.len(), d.polygons.len());
    for (lp, poly) in d.polygons.iter().zip(&back) {
        assert_eq!(lp.polygon.vertices(), poly.vertices());
    }
}

#[test]
fn svg_and_dxf_are_well_formed() {
    let d = array_drawing(2, 3);
    let svg = String::from_utf8(export_outline(&d, ExportFormat::Svg)).unwrap();
    assert!(svg.starts_with("<?xml") || svg.starts_with("<svg"));
    assert_eq!(svg.matches("<path ").count(), d.polygons.len());
    assert!(svg.trim_end().ends_with("</svg>"));
    assert!(svg.contains("mm\""));

    let dxf = String::from_utf8(export_outline(&d, ExportFormat::Dxf)).unwrap();
    assert_eq!(dxf.matches("LWPOLYLINE").count(), d.polygons.len());
    assert!(dxf.contains("$INSUNITS"));
    assert!(dxf.trim_end().ends_with("EOF"));
    // Vertex count group code 90 must match the emitted coordinate pairs.
    let lines: Vec<&str> = dxf.lines().map(str::trim).collect();
    assert_eq!(lines.len() % 2, 0);
    let groups: Vec<(&str, &str)> = lines.chunks(2).map(|c| (c[0], c[1])).collect();
    let declared: usize = groups.iter().filter(|g| g.0 == "90").map(|g| g.1.parse::<usize>().unwrap()).sum();
    let pairs = groups.iter().filter(|g| g.0 == "10").count();
    assert_eq!(pairs, groups.iter().filter(|g| g.0 == "20").count());
    assert_eq!(declared, pairs);
}

#[test]
fn exports_are_deterministic() {
    for fmt in [ExportFormat::Svg, ExportFormat::Csv, ExportFormat::Dxf] {
        assert_eq!(export_outline(&array_drawing(3, 3), fmt), export_outline(&array_drawing(3, 3), fmt));
    }
}
