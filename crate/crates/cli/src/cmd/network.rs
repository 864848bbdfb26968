use std::path::Path;

use serde::Serialize;
use tcva_core::analysis::{
    band_edges, coupling_report, tarc as tarc_trace, CouplingCategory, ExcitationVector, FrequencyTrace,
};
use tcva_core::format::g6;
use tcva_core::geometry::Polarization;
use tcva_core::touchstone::{parse_port_map, read_touchstone, NPortNetwork, PortLabel};

use crate::config::ProjectConfig;
use crate::error::{CliError, Result};
use crate::output::{file_name, OutDir};

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn load_network(cfg: &ProjectConfig, what: &str, need_portmap: bool) -> Result<NPortNetwork> {
    let path = cfg
        .touchstone
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("{what} needs `[network] touchstone` in the project file")))?;
    let n = read_touchstone(path).map_err(|e| CliError::from(e).in_file(path))?;
    match cfg.portmap.as_deref() {
        Some(pm) => {
            let labels = parse_port_map(&read_text(pm)?, n.ports()).map_err(|e| CliError::from(e).in_file(pm))?;
            Ok(n.with_port_labels(labels)?)
        }
        None if need_portmap => {
            Err(CliError::Usage(format!("{what} needs `[network] portmap` (port_index,row,col,polarization)")))
        }
        None => Ok(n),
    }
}

struct Drive {
    name: String,
    description: String,
    excitation: ExcitationVector,
}

fn drives(cfg: &ProjectConfig, n: &NPortNetwork) -> Result<Vec<Drive>> {
    if let Some(path) = cfg.excitation.as_deref() {
        let e =
            ExcitationVector::from_csv(&read_text(path)?, n.ports()).map_err(|e| CliError::from(e).in_file(path))?;
        return Ok(vec![Drive {
            name: "custom".into(),
            description: format!("file {}", file_name(path)),
            excitation: e,
        }]);
    }
    if n.ports() == 1 {
        let e = ExcitationVector::uniform(1)?;
        return Ok(vec![Drive { name: "s11".into(), description: "single port".into(), excitation: e }]);
    }
    let labels = n.port_labels();
    if labels.iter().any(|l| matches!(l, PortLabel::Name(_))) {
        return Err(CliError::Usage(
            "TARC of a multi-port network needs `[network] excitation` or `[network] portmap`".into(),
        ));
    }
    let pols = match &cfg.polarizations {
        Some(p) => p.clone(),
        None => {
            let mut present: Vec<Polarization> = labels
                .iter()
                .filter_map(|l| match l {
                    PortLabel::Element { polarization, .. } => Some(*polarization),
                    PortLabel::Name(_) => None,
                })
                .collect();
            present.sort();
            present.dedup();
            present
        }
    };
    pols.into_iter()
        .map(|pol| {
            Ok(Drive {
                name: pol.to_string(),
                description: format!("centre-row equi-phase, {pol}-pol"),
                excitation: ExcitationVector::centre_row_equiphase(labels, pol)?,
            })
        })
        .collect()
}

#[derive(Serialize)]
struct Interval {
    f_low_hz: f64,
    f_high_hz: f64,
}

#[derive(Serialize)]
struct ThresholdBands {
    threshold_db: f64,
    bands: Vec<Interval>,
}

#[derive(Serialize)]
struct TraceSummary {
    name: String,
    excitation: String,
    driven_ports: Vec<usize>,
    file: Option<String>,
    min_db: f64,
    min_at_hz: f64,
    thresholds: Vec<ThresholdBands>,
}

#[derive(Serialize)]
struct Summary {
    source: String,
    traces: Vec<TraceSummary>,
}

fn thresholds(cfg: &ProjectConfig) -> Result<&[f64]> {
    if cfg.thresholds_db.is_empty() {
        return Err(CliError::Usage("band analysis needs at least one threshold (`--threshold <dB>`)".into()));
    }
    Ok(&cfg.thresholds_db)
}

fn summarize(
    name: &str,
    description: String,
    driven_ports: Vec<usize>,
    file: Option<String>,
    trace: &FrequencyTrace,
    levels: &[f64],
) -> Result<TraceSummary> {
    let (min_at_hz, min_db) = trace.iter().fold((f64::NAN, f64::INFINITY), |b, p| if p.1 < b.1 { p } else { b });
    let mut out = Vec::new();
    for &t in levels {
        let bands = band_edges(trace, t)?;
        for b in &bands {
            println!("{name} {} dB: {} - {} GHz", g6(t), g6(b.f_low / 1e9), g6(b.f_high / 1e9));
        }
        if bands.is_empty() {
            println!("{name} {} dB: no band", g6(t));
        }
        out.push(ThresholdBands {
            threshold_db: t,
            bands: bands.iter().map(|b| Interval { f_low_hz: b.f_low, f_high_hz: b.f_high }).collect(),
        });
    }
    Ok(TraceSummary {
        name: name.into(),
        excitation: description,
        driven_ports,
        file,
        min_db,
        min_at_hz,
        thresholds: out,
    })
}

fn driven(e: &ExcitationVector) -> Vec<usize> {
    e.amplitudes().iter().enumerate().filter(|(_, a)| a.norm_sqr() > 0.0).map(|(k, _)| k + 1).collect()
}

fn tarc_traces(cfg: &ProjectConfig, what: &str) -> Result<(NPortNetwork, Vec<(Drive, FrequencyTrace)>)> {
    let n = load_network(cfg, what, false)?;
    let mut out = Vec::new();
    for d in drives(cfg, &n)? {
        let t = tarc_trace(&n, &d.excitation)?;
        out.push((d, t));
    }
    Ok((n, out))
}

pub fn tarc(cfg: &ProjectConfig) -> Result<()> {
    let levels = thresholds(cfg)?.to_vec();
    let (_, traces) = tarc_traces(cfg, "tarc")?;
    let mut out = OutDir::create(&cfg.out_dir)?;
    let mut summaries = Vec::new();
    for (d, t) in &traces {
        let file = format!("tarc_{}.csv", d.name);
        out.write(&file, t.to_csv().as_bytes())?;
        summaries.push(summarize(&d.name, d.description.clone(), driven(&d.excitation), Some(file), t, &levels)?);
    }
    let source = cfg.touchstone.as_deref().map(file_name).unwrap_or_default();
    out.write_json("tarc_summary.json", &Summary { source, traces: summaries })?;
    Ok(())
}

pub fn bands(cfg: &ProjectConfig, trace: Option<&Path>) -> Result<()> {
    let levels = thresholds(cfg)?.to_vec();
    let mut summaries = Vec::new();
    let source = match trace {
        Some(path) => {
            let t = FrequencyTrace::from_csv(&read_text(path)?).map_err(|e| CliError::from(e).in_file(path))?;
            let name = path.file_stem().map_or("trace".into(), |s| s.to_string_lossy().into_owned());
            summaries.push(summarize(&name, format!("file {}", file_name(path)), Vec::new(), None, &t, &levels)?);
            file_name(path)
        }
        None => {
            let (_, traces) = tarc_traces(cfg, "bands")?;
            for (d, t) in &traces {
                summaries.push(summarize(&d.name, d.description.clone(), driven(&d.excitation), None, t, &levels)?);
            }
            cfg.touchstone.as_deref().map(file_name).unwrap_or_default()
        }
    };
    let mut out = OutDir::create(&cfg.out_dir)?;
    out.write_json("bands.json", &Summary { source, traces: summaries })?;
    Ok(())
}

#[derive(Serialize)]
struct CategoryRow {
    category: CouplingCategory,
    max_db: Option<f64>,
    frequency_hz: Option<f64>,
    /// 1-based receiving port.
    port_i: Option<usize>,
    /// 1-based driven port.
    port_j: Option<usize>,
}

#[derive(Serialize)]
struct CouplingSummary {
    source: String,
    categories: Vec<CategoryRow>,
}

pub fn coupling(cfg: &ProjectConfig) -> Result<()> {
    let n = load_network(cfg, "coupling", true)?;
    let report = coupling_report(&n)?;
    let categories = [CouplingCategory::AdjacentCoPol, CouplingCategory::NonAdjacentCoPol, CouplingCategory::CrossPol]
        .into_iter()
        .map(|c| {
            let m = report.get(c);
            if let Some(m) = m {
                println!("{c:?}: {} dB at {} GHz (S{},{})", g6(m.db), g6(m.frequency_hz / 1e9), m.i + 1, m.j + 1);
            }
            CategoryRow {
                category: c,
                max_db: m.map(|m| m.db),
                frequency_hz: m.map(|m| m.frequency_hz),
                port_i: m.map(|m| m.i + 1),
                port_j: m.map(|m| m.j + 1),
            }
        })
        .collect();
    let mut out = OutDir::create(&cfg.out_dir)?;
    let source = cfg.touchstone.as_deref().map(file_name).unwrap_or_default();
    out.write_json("coupling.json", &CouplingSummary { source, categories })?;
    Ok(())
}
