use std::fmt::Write as _;

use serde::Serialize;
use tcva_core::analysis::{mismatch_loss_db, vswr_to_gamma};
use tcva_core::format::g6;
use tcva_core::pattern::{broadside_af, scaled_gain, spacing_in_wavelengths, ArraySpec};

use crate::config::{CompareEntry, ProjectConfig};
use crate::error::{CliError, Result};
use crate::output::OutDir;

#[derive(Serialize)]
struct Row {
    name: String,
    elements: usize,
    spacing_mm: f64,
    frequency_hz: f64,
    spacing_wavelengths: f64,
    af_db: f64,
    gamma: Option<f64>,
    mismatch_loss_db: f64,
    realized_gain_dbi: f64,
    scaled_gain_dbi: f64,
}

fn row(e: &CompareEntry) -> Result<Row> {
    let gamma = match (e.gamma, e.vswr) {
        (Some(_), Some(_)) => {
            return Err(CliError::Domain(format!(
                "compare entry `{}`: give either `gamma` or `vswr`, not both",
                e.name
            )))
        }
        (Some(g), None) => Some(g),
        (None, Some(v)) => Some(vswr_to_gamma(v)?),
        (None, None) => None,
    };
    let loss = gamma.map(mismatch_loss_db).transpose()?.unwrap_or(0.0);
    let spec = ArraySpec::broadside(e.elements, e.spacing_mm * 1e-3)?;
    let f = e.frequency_ghz * 1e9;
    let realized = e.gain_dbi + loss;
    Ok(Row {
        name: e.name.clone(),
        elements: e.elements,
        spacing_mm: e.spacing_mm,
        frequency_hz: f,
        spacing_wavelengths: spacing_in_wavelengths(spec.spacing, f)?,
        af_db: broadside_af(&spec, f)?.db,
        gamma,
        mismatch_loss_db: loss,
        realized_gain_dbi: realized,
        scaled_gain_dbi: scaled_gain(realized, &spec, f)?,
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn run(cfg: &ProjectConfig) -> Result<()> {
    let rows = cfg.compare.iter().map(row).collect::<Result<Vec<_>>>()?;
    let mut csv = String::from(
        "name,elements,spacing_mm,frequency_ghz,spacing_wavelengths,af_db,gamma,mismatch_loss_db,realized_gain_dbi,scaled_gain_dbi\n",
    );
    for r in &rows {
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{},{},{},{},{}",
            csv_field(&r.name),
            r.elements,
            g6(r.spacing_mm),
            g6(r.frequency_hz / 1e9),
            g6(r.spacing_wavelengths),
            g6(r.af_db),
            r.gamma.map(g6).unwrap_or_default(),
            g6(r.mismatch_loss_db),
            g6(r.realized_gain_dbi),
            g6(r.scaled_gain_dbi),
        );
        println!("{}: scaled gain {} dBi", r.name, g6(r.scaled_gain_dbi));
    }
    let mut out = OutDir::create(&cfg.out_dir)?;
    out.write("compare.csv", csv.as_bytes())?;
    out.write_json("compare.json", &rows)?;
    Ok(())
}
