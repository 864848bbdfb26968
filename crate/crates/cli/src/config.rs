//! Project file: a TOML document with one section per module. Every key is
//! optional; geometry defaults are the prototype dimensions.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use tcva_core::geometry::{ElementDims, ExportFormat, Polarization, TaperParams};

use crate::error::{CliError, Result};

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    geometry: RawGeometry,
    #[serde(default)]
    network: RawNetwork,
    #[serde(default)]
    pattern: RawPattern,
    #[serde(default)]
    compare: RawCompare,
    #[serde(default)]
    output: RawOutput,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGeometry {
    rows: Option<usize>,
    cols: Option<usize>,
    resolution: Option<usize>,
    #[serde(default)]
    x: RawPol,
    #[serde(default)]
    y: RawPol,
}

/// Taper and board dimensions for one polarization, in mm (`k_i` in 1/mm,
/// `k_o` in 1/mm²).
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPol {
    c_i: Option<f64>,
    k_i: Option<f64>,
    c_a: Option<f64>,
    c_o: Option<f64>,
    k_o: Option<f64>,
    c_b: Option<f64>,
    w_f: Option<f64>,
    l_f: Option<f64>,
    w_a: Option<f64>,
    h: Option<f64>,
    h_b: Option<f64>,
    w: Option<f64>,
    w_b: Option<f64>,
    w_ol: Option<f64>,
    w_sp: Option<f64>,
    h_s: Option<f64>,
}

impl RawPol {
    fn resolve(&self, pol: Polarization) -> (TaperParams, ElementDims) {
        let mut t = TaperParams::PROTOTYPE;
        let mut d = ElementDims::prototype(pol);
        let set = |dst: &mut f64, src: Option<f64>| {
            if let Some(v) = src {
                *dst = v;
            }
        };
        set(&mut t.c_i, self.c_i);
        set(&mut t.k_i, self.k_i);
        set(&mut t.c_a, self.c_a);
        set(&mut t.c_o, self.c_o);
        set(&mut t.k_o, self.k_o);
        set(&mut t.c_b, self.c_b);
        set(&mut t.w_f, self.w_f);
        set(&mut t.l_f, self.l_f);
        set(&mut d.w_a, self.w_a);
        set(&mut d.h, self.h);
        set(&mut d.h_b, self.h_b);
        set(&mut d.w, self.w);
        set(&mut d.w_b, self.w_b);
        set(&mut d.w_ol, self.w_ol);
        set(&mut d.w_sp, self.w_sp);
        set(&mut d.h_s, self.h_s);
        (t, d)
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNetwork {
    touchstone: Option<PathBuf>,
    portmap: Option<PathBuf>,
    excitation: Option<PathBuf>,
    thresholds_db: Option<Vec<f64>>,
    polarizations: Option<Vec<Polarization>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPattern {
    elements: Option<usize>,
    spacing_mm: Option<f64>,
    frequencies_ghz: Option<Vec<f64>>,
    step_deg: Option<f64>,
    steering_deg: Option<f64>,
    element_pattern: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCompare {
    #[serde(default)]
    entries: Vec<CompareEntry>,
}

/// One row of the comparison table. `gain_dbi` is taken as realized gain
/// unless `vswr` or `gamma` is given, in which case the mismatch loss is
/// applied to it first.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompareEntry {
    pub name: String,
    pub elements: usize,
    pub spacing_mm: f64,
    pub frequency_ghz: f64,
    pub gain_dbi: f64,
    pub vswr: Option<f64>,
    pub gamma: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    dir: Option<PathBuf>,
    formats: Option<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct PolGeometry {
    pub taper: TaperParams,
    pub dims: ElementDims,
}

#[derive(Debug, Clone)]
pub struct ProjectConfig {
    pub rows: usize,
    pub cols: usize,
    pub resolution: usize,
    pub x: PolGeometry,
    pub y: PolGeometry,
    pub touchstone: Option<PathBuf>,
    pub portmap: Option<PathBuf>,
    pub excitation: Option<PathBuf>,
    pub thresholds_db: Vec<f64>,
    pub polarizations: Option<Vec<Polarization>>,
    pub pattern_elements: usize,
    pub pattern_spacing_mm: Option<f64>,
    pub pattern_frequencies_ghz: Vec<f64>,
    pub pattern_step_deg: f64,
    pub pattern_steering_deg: f64,
    pub element_pattern: Option<PathBuf>,
    pub compare: Vec<CompareEntry>,
    pub out_dir: PathBuf,
    pub formats: Vec<ExportFormat>,
}

pub const DEFAULT_THRESHOLDS_DB: [f64; 2] = [-6.0, -10.0];
pub const DEFAULT_PATTERN_FREQUENCIES_GHZ: [f64; 4] = [3.0, 6.2, 12.42, 20.0];

impl ProjectConfig {
    /// Loads `path`, or the defaults when no file is given. Relative paths in
    /// the file resolve against the file's directory.
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let (raw, base) = match path {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| CliError::io(p, e))?;
                let raw: RawConfig =
                    toml::from_str(&text).map_err(|e| CliError::Domain(format!("{}: {e}", p.display())))?;
                (raw, p.parent().map(Path::to_path_buf).unwrap_or_default())
            }
            None => (RawConfig::default(), PathBuf::new()),
        };
        let rel = |p: Option<PathBuf>| p.map(|p| if p.is_absolute() { p } else { base.join(p) });
        let (tx, dx) = raw.geometry.x.resolve(Polarization::X);
        let (ty, dy) = raw.geometry.y.resolve(Polarization::Y);
        let formats = match raw.output.formats {
            Some(list) => list.iter().map(|f| f.parse::<ExportFormat>()).collect::<std::result::Result<Vec<_>, _>>()?,
            None => vec![ExportFormat::Svg, ExportFormat::Csv, ExportFormat::Dxf],
        };
        Ok(ProjectConfig {
            rows: raw.geometry.rows.unwrap_or(3),
            cols: raw.geometry.cols.unwrap_or(3),
            resolution: raw.geometry.resolution.unwrap_or(tcva_core::geometry::ElementOutline::DEFAULT_RESOLUTION),
            x: PolGeometry { taper: tx, dims: dx },
            y: PolGeometry { taper: ty, dims: dy },
            touchstone: rel(raw.network.touchstone),
            portmap: rel(raw.network.portmap),
            excitation: rel(raw.network.excitation),
            thresholds_db: raw.network.thresholds_db.unwrap_or_else(|| DEFAULT_THRESHOLDS_DB.to_vec()),
            polarizations: raw.network.polarizations,
            pattern_elements: raw.pattern.elements.unwrap_or(3),
            pattern_spacing_mm: raw.pattern.spacing_mm,
            pattern_frequencies_ghz: raw
                .pattern
                .frequencies_ghz
                .unwrap_or_else(|| DEFAULT_PATTERN_FREQUENCIES_GHZ.to_vec()),
            pattern_step_deg: raw.pattern.step_deg.unwrap_or(tcva_core::pattern::DEFAULT_STEP_DEG),
            pattern_steering_deg: raw.pattern.steering_deg.unwrap_or(0.0),
            element_pattern: rel(raw.pattern.element_pattern),
            compare: raw.compare.entries,
            out_dir: rel(raw.output.dir).unwrap_or_else(|| base.join("tcva-out")),
            formats,
        })
    }

    pub fn geometry(&self, pol: Polarization) -> &PolGeometry {
        match pol {
            Polarization::X => &self.x,
            Polarization::Y => &self.y,
        }
    }
}
