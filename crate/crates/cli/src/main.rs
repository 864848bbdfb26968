//! `tcva`: geometry export and S-parameter post-processing for dual-polarized
//! tightly-coupled antipodal Vivaldi arrays.

mod cmd;
mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tcva_core::geometry::Polarization;
use tcva_core::touchstone::DataFormat;

use crate::config::ProjectConfig;
use crate::error::Result;

/// Log verbosity (env_logger syntax, e.g. `TCVA_LOG=info`).
const LOG_ENV: &str = "TCVA_LOG";

#[derive(Debug, Parser)]
#[command(name = "tcva", version, about = "Vivaldi array geometry and S-parameter analysis")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Project file (TOML).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output directory (overrides `[output] dir`).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Restrict to one polarization.
    #[arg(long, global = true)]
    pub pol: Option<Polarization>,
    /// Band threshold in dB; repeatable (overrides `[network] thresholds_db`).
    #[arg(long = "threshold", global = true, allow_negative_numbers = true)]
    pub thresholds: Vec<f64>,
    /// Geometry export format: svg, csv or dxf (overrides `[output] formats`).
    #[arg(long, global = true)]
    pub format: Option<tcva_core::geometry::ExportFormat>,
    #[arg(long, global = true)]
    pub rows: Option<usize>,
    #[arg(long, global = true)]
    pub cols: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Element and array outlines plus a dimensions report.
    Geom,
    /// Inspect or convert Touchstone files.
    Snp {
        #[command(subcommand)]
        action: SnpAction,
    },
    /// TARC traces and band edges.
    Tarc,
    /// Band edges of a `f_hz,value_db` trace, or of the TARC traces.
    Bands {
        /// Trace CSV; TARC of the configured network when omitted.
        trace: Option<PathBuf>,
    },
    /// Worst-case coupling per category.
    Coupling,
    /// Uniform-array pattern cuts and grating-lobe summary.
    Pattern,
    /// Array-factor scaled gain table.
    Compare,
}

#[derive(Debug, Subcommand)]
enum SnpAction {
    /// Print a JSON summary of a Touchstone file.
    Inspect { file: Option<PathBuf> },
    /// Rewrite a Touchstone file in another data format.
    Convert {
        input: PathBuf,
        output: PathBuf,
        /// ri, ma or db.
        #[arg(long, default_value = "ma")]
        to: DataFormat,
    },
}

fn run(cli: Cli) -> Result<()> {
    let mut cfg = ProjectConfig::load(cli.common.config.as_deref())?;
    apply_overrides(&mut cfg, &cli.common);
    match cli.command {
        Command::Geom => cmd::geom::run(&cfg, &cli.common),
        Command::Snp { action: SnpAction::Inspect { file } } => cmd::snp::inspect(&cfg, file.as_deref()),
        Command::Snp { action: SnpAction::Convert { input, output, to } } => cmd::snp::convert(&input, &output, to),
        Command::Tarc => cmd::network::tarc(&cfg),
        Command::Bands { trace } => cmd::network::bands(&cfg, trace.as_deref()),
        Command::Coupling => cmd::network::coupling(&cfg),
        Command::Pattern => cmd::pattern::run(&cfg),
        Command::Compare => cmd::compare::run(&cfg),
    }
}

fn apply_overrides(cfg: &mut ProjectConfig, c: &Common) {
    if let Some(out) = &c.out {
        cfg.out_dir = out.clone();
    }
    if !c.thresholds.is_empty() {
        cfg.thresholds_db = c.thresholds.clone();
    }
    if let Some(f) = c.format {
        cfg.formats = vec![f];
    }
    if let Some(r) = c.rows {
        cfg.rows = r;
    }
    if let Some(k) = c.cols {
        cfg.cols = k;
    }
    if let Some(p) = c.pol {
        cfg.polarizations = Some(vec![p]);
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or(LOG_ENV, "warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
