use serde::Serialize;
use tcva_core::geometry::{
    build_array_layout, build_element_with_resolution, export_outline, CurveSign, Drawing, ElementOutline, Polarization,
};

use crate::config::ProjectConfig;
use crate::error::Result;
use crate::output::OutDir;
use crate::Common;

#[derive(Serialize)]
struct CurveOrigin {
    inner_mm: f64,
    outer_mm: f64,
    origin_mismatch_mm: f64,
    feed_edge_mismatch_mm: f64,
}

#[derive(Serialize)]
struct PolReport {
    polarization: Polarization,
    pitch_mm: f64,
    curve_origin: CurveOrigin,
    aperture_inner_edge_mm: f64,
    aperture_outer_edge_mm: f64,
    leaf_area_mm2: f64,
    bbox_mm: [f64; 4],
    boards: usize,
    slot_width_mm: Option<f64>,
    slot_length_mm: Option<f64>,
}

#[derive(Serialize)]
struct GeomReport {
    rows: usize,
    cols: usize,
    pitch_mm: f64,
    resolution: usize,
    slots: usize,
    polarizations: Vec<PolReport>,
    files: Vec<String>,
}

pub fn run(cfg: &ProjectConfig, common: &Common) -> Result<()> {
    let build = |pol: Polarization| -> Result<ElementOutline> {
        let g = cfg.geometry(pol);
        Ok(build_element_with_resolution(&g.taper, &g.dims, cfg.resolution)?)
    };
    let ex = build(Polarization::X)?;
    let ey = build(Polarization::Y)?;
    let layout = build_array_layout(&ex.dims, &ey.dims, cfg.rows, cfg.cols)?;
    let pols: Vec<Polarization> = match common.pol {
        Some(p) => vec![p],
        None => vec![Polarization::X, Polarization::Y],
    };

    let mut out = OutDir::create(&cfg.out_dir)?;
    for fmt in &cfg.formats {
        for &pol in &pols {
            let e = if pol == Polarization::X { &ex } else { &ey };
            let name = format!("element_{pol}.{}", fmt.extension());
            out.write(&name, &export_outline(&Drawing::from(e), *fmt))?;
        }
        if cfg.rows * cfg.cols > 1 {
            let name = format!("array.{}", fmt.extension());
            out.write(&name, &export_outline(&layout.drawing(&ex, &ey), *fmt))?;
        }
    }

    let mut reports = Vec::new();
    for &pol in &pols {
        let e = if pol == Polarization::X { &ex } else { &ey };
        let t = &e.taper;
        let (inner, outer) = e.aperture_edges();
        let (lo, hi) = e.bounding_box().expect("non-empty outline");
        let slot = layout.slots.iter().find(|s| s.polarization == pol);
        reports.push(PolReport {
            polarization: pol,
            pitch_mm: e.dims.pitch(),
            curve_origin: CurveOrigin {
                inner_mm: t.inner(0.0, CurveSign::Plus)?,
                outer_mm: t.outer(0.0, CurveSign::Plus)?,
                origin_mismatch_mm: t.origin_mismatch(),
                feed_edge_mismatch_mm: t.feed_edge_mismatch(),
            },
            aperture_inner_edge_mm: inner,
            aperture_outer_edge_mm: outer,
            leaf_area_mm2: e.leaves[0].area(),
            bbox_mm: [lo.x, lo.y, hi.x, hi.y],
            boards: layout.board_count(pol),
            slot_width_mm: slot.map(|s| s.width),
            slot_length_mm: slot.map(|s| s.length),
        });
    }
    let mut files = out.written().to_vec();
    files.push("geometry.json".into());
    let report = GeomReport {
        rows: cfg.rows,
        cols: cfg.cols,
        pitch_mm: layout.pitch,
        resolution: cfg.resolution,
        slots: layout.slots.len(),
        polarizations: reports,
        files,
    };
    out.write_json("geometry.json", &report)?;
    for r in &report.polarizations {
        println!(
            "{}-pol: pitch {} mm, curve origin ±{} mm",
            r.polarization,
            tcva_core::format::g6(r.pitch_mm),
            tcva_core::format::g6(r.curve_origin.outer_mm.abs()),
        );
    }
    println!("{} files in {}", report.files.len(), cfg.out_dir.display());
    Ok(())
}
