use std::path::Path;

use serde::Serialize;
use tcva_core::touchstone::{read_touchstone, write_touchstone, DataFormat};

use crate::config::ProjectConfig;
use crate::error::{CliError, Result};
use crate::output::{file_name, to_json};

#[derive(Serialize)]
struct Summary {
    file: String,
    ports: usize,
    points: usize,
    f_min_hz: Option<f64>,
    f_max_hz: Option<f64>,
    z0_ohm: f64,
    max_abs_s: f64,
    non_passive_entries: usize,
}

pub fn inspect(cfg: &ProjectConfig, file: Option<&Path>) -> Result<()> {
    let path = file.or(cfg.touchstone.as_deref()).ok_or_else(|| {
        CliError::Usage("snp inspect needs a Touchstone file argument or `[network] touchstone`".into())
    })?;
    let n = read_touchstone(path).map_err(|e| CliError::from(e).in_file(path))?;
    let max_abs_s = n.matrices().iter().flat_map(|m| m.entries().iter().map(|z| z.norm())).fold(0.0, f64::max);
    let summary = Summary {
        file: file_name(path),
        ports: n.ports(),
        points: n.frequencies().len(),
        f_min_hz: n.frequencies().first().copied(),
        f_max_hz: n.frequencies().last().copied(),
        z0_ohm: n.z0(),
        max_abs_s,
        non_passive_entries: n.non_passive_entries(1e-6).len(),
    };
    print!("{}", to_json(&summary)?);
    Ok(())
}

pub fn convert(input: &Path, output: &Path, to: DataFormat) -> Result<()> {
    let n = read_touchstone(input).map_err(|e| CliError::from(e).in_file(input))?;
    if let Some(dir) = output.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    std::fs::write(output, write_touchstone(&n, to)).map_err(|e| CliError::io(output, e))?;
    Ok(())
}
