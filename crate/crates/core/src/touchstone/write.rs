use std::fmt::Write as _;
use std::str::FromStr;

use num_complex::Complex64;

use super::network::NPortNetwork;

/// Complex number representation of a Touchstone data line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DataFormat {
    /// Real / imaginary.
    Ri,
    /// Linear magnitude / angle in degrees.
    Ma,
    /// Magnitude in dB / angle in degrees.
    Db,
}

impl DataFormat {
    pub fn keyword(self) -> &'static str {
        match self {
            DataFormat::Ri => "RI",
            DataFormat::Ma => "MA",
            DataFormat::Db => "DB",
        }
    }
}

impl FromStr for DataFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "RI" => Ok(DataFormat::Ri),
            "MA" => Ok(DataFormat::Ma),
            "DB" => Ok(DataFormat::Db),
            other => Err(format!("unknown data format `{other}` (expected RI, MA or DB)")),
        }
    }
}

/// Magnitude written for an exact zero in DB format.
const ZERO_DB: f64 = -400.0;

/// At least ten significant digits: fixed point for |v| ≥ 1, scientific below.
fn fmt_value(v: f64) -> String {
    if v == 0.0 {
        "0.000000000".to_string()
    } else if v.abs() >= 1.0 {
        format!("{v:.9}")
    } else {
        format!("{v:.9e}")
    }
}

fn pair(format: DataFormat, z: Complex64) -> (f64, f64) {
    let mag = z.norm();
    // Signed zeros would otherwise give ±180°.
    let angle = if mag == 0.0 { 0.0 } else { z.arg().to_degrees() };
    match format {
        DataFormat::Ri => (z.re + 0.0, z.im + 0.0),
        DataFormat::Ma => (mag, angle),
        DataFormat::Db => (if mag == 0.0 { ZERO_DB } else { 20.0 * mag.log10() }, angle),
    }
}

/// Serializes a network as Touchstone v1.0 with frequencies in Hz.
///
/// Rows of networks with more than two ports start on a new line and wrap
/// after four value pairs.
pub fn write_touchstone(n: &NPortNetwork, format: DataFormat) -> Vec<u8> {
    let ports = n.ports();
    let mut s = String::new();
    let _ = writeln!(s, "! {ports}-port S-parameters");
    let _ = writeln!(s, "# Hz S {} R {}", format.keyword(), n.z0());
    for (f, m) in n.frequencies().iter().zip(n.matrices()) {
        let _ = write!(s, "{f}");
        if ports <= 2 {
            // v1.0 two-port order: S11 S21 S12 S22.
            let order: &[(usize, usize)] = if ports == 1 { &[(0, 0)] } else { &[(0, 0), (1, 0), (0, 1), (1, 1)] };
            for &(i, j) in order {
                let (a, b) = pair(format, m[(i, j)]);
                let _ = write!(s, " {} {}", fmt_value(a), fmt_value(b));
            }
            s.push('\n');
            continue;
        }
        for i in 0..ports {
            for (j, z) in m.row(i).iter().enumerate() {
                if j > 0 && j % 4 == 0 {
                    s.push('\n');
                }
                let (a, b) = pair(format, *z);
                let _ = write!(s, " {} {}", fmt_value(a), fmt_value(b));
            }
            s.push('\n');
        }
    }
    s.into_bytes()
}
