use std::path::Path;

use serde::Serialize;
use tcva_core::format::g6;
use tcva_core::pattern::{
    broadside_af, grating_lobe_angles, grating_lobe_onset, grating_lobes_in_pattern, spacing_in_wavelengths,
    uniform_array_pattern_with_step, ArraySpec, Lobe, PatternCut,
};

use crate::config::ProjectConfig;
use crate::error::{CliError, Result};
use crate::output::{file_name, OutDir};

#[derive(Serialize)]
struct FrequencyRow {
    frequency_hz: f64,
    file: String,
    spacing_wavelengths: f64,
    af_linear: f64,
    af_db: f64,
    grating_lobes: bool,
    grating_lobes_found: Vec<Lobe>,
    grating_angles_closed_form_deg: Vec<f64>,
}

#[derive(Serialize)]
struct Summary {
    elements: usize,
    spacing_mm: f64,
    steering_deg: f64,
    step_deg: f64,
    element_pattern: Option<String>,
    grating_lobe_onset_hz: f64,
    frequencies: Vec<FrequencyRow>,
}

/// Reads a `theta_deg,value_db` cut (header optional).
fn read_cut(path: &Path) -> Result<PatternCut> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let mut cut = PatternCut { plane: file_name(path), angles_deg: Vec::new(), values_db: Vec::new() };
    for (k, line) in text.lines().enumerate() {
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let parsed = body
            .split_once(',')
            .and_then(|(a, v)| Some((a.trim().parse::<f64>().ok()?, v.trim().parse::<f64>().ok()?)));
        match parsed {
            Some((a, v)) => {
                cut.angles_deg.push(a);
                cut.values_db.push(v);
            }
            None if cut.angles_deg.is_empty() => continue,
            None => {
                return Err(CliError::Domain(format!(
                    "{} line {}: expected `theta_deg,value_db`",
                    path.display(),
                    k + 1
                )))
            }
        }
    }
    Ok(cut)
}

pub fn run(cfg: &ProjectConfig) -> Result<()> {
    let spacing_mm = cfg.pattern_spacing_mm.unwrap_or_else(|| cfg.x.dims.pitch());
    let spec = ArraySpec::new(cfg.pattern_elements, spacing_mm * 1e-3, cfg.pattern_steering_deg.to_radians())?;
    let element = cfg.element_pattern.as_deref().map(read_cut).transpose()?;
    let mut out = OutDir::create(&cfg.out_dir)?;
    let mut rows = Vec::new();
    for &f_ghz in &cfg.pattern_frequencies_ghz {
        let f = f_ghz * 1e9;
        let cut = uniform_array_pattern_with_step(&spec, f, cfg.pattern_step_deg, element.as_ref())?;
        let file = format!("pattern_{}GHz.csv", g6(f_ghz));
        out.write(&file, cut.to_csv().as_bytes())?;
        let af = broadside_af(&spec, f)?;
        let found = grating_lobes_in_pattern(&spec, f, cfg.pattern_step_deg)?;
        println!(
            "{} GHz: d = {} lambda, AF {} dB, grating lobes: {}",
            g6(f_ghz),
            g6(spacing_in_wavelengths(spec.spacing, f)?),
            g6(af.db),
            if found.is_empty() { "none".to_string() } else { found.len().to_string() }
        );
        rows.push(FrequencyRow {
            frequency_hz: f,
            file,
            spacing_wavelengths: spacing_in_wavelengths(spec.spacing, f)?,
            af_linear: af.linear,
            af_db: af.db,
            grating_lobes: !found.is_empty(),
            grating_lobes_found: found,
            grating_angles_closed_form_deg: grating_lobe_angles(&spec, f)?,
        });
    }
    let summary = Summary {
        elements: spec.elements,
        spacing_mm,
        steering_deg: cfg.pattern_steering_deg,
        step_deg: cfg.pattern_step_deg,
        element_pattern: cfg.element_pattern.as_deref().map(file_name),
        grating_lobe_onset_hz: grating_lobe_onset(spec.spacing)?,
        frequencies: rows,
    };
    out.write_json("pattern_summary.json", &summary)?;
    Ok(())
}
