use std::path::Path;

use log::warn;
use num_complex::Complex64;

use super::network::{NPortNetwork, SMatrix};
use super::write::DataFormat;
use super::TouchstoneError;

/// Frequency unit of the option line, as a power of ten.
fn unit_exponent(token: &str) -> Option<i32> {
    match token {
        "HZ" => Some(0),
        "KHZ" => Some(3),
        "MHZ" => Some(6),
        "GHZ" => Some(9),
        _ => None,
    }
}

struct Options {
    unit_exp: i32,
    format: DataFormat,
    z0: f64,
}

fn parse_option_line(body: &str, line: usize) -> Result<Options, TouchstoneError> {
    let mut opts = Options { unit_exp: 9, format: DataFormat::Ma, z0: 50.0 };
    let upper = body.to_ascii_uppercase();
    let mut tokens = upper.split_whitespace();
    let malformed = |msg: String| TouchstoneError::OptionLine { line, msg };
    while let Some(tok) = tokens.next() {
        if let Some(e) = unit_exponent(tok) {
            opts.unit_exp = e;
            continue;
        }
        match tok {
            "S" => {}
            "Y" | "Z" | "H" | "G" => return Err(TouchstoneError::Unsupported { line, param: tok.to_string() }),
            "RI" => opts.format = DataFormat::Ri,
            "MA" => opts.format = DataFormat::Ma,
            "DB" => opts.format = DataFormat::Db,
            "R" => {
                let v = tokens.next().ok_or_else(|| malformed("`R` without impedance".into()))?;
                opts.z0 = v
                    .parse::<f64>()
                    .ok()
                    .filter(|z| *z > 0.0 && z.is_finite())
                    .ok_or_else(|| malformed(format!("bad reference impedance `{v}`")))?;
            }
            other => return Err(malformed(format!("unexpected token `{other}`"))),
        }
    }
    Ok(opts)
}

/// Parses a decimal frequency token scaled by `10^exp` without a lossy
/// multiplication: `3.5` in GHz parses exactly like `3500000000` in Hz.
fn parse_scaled(token: &str, exp: i32) -> Option<f64> {
    let (mantissa, e) = match token.find(['e', 'E']) {
        Some(pos) => (&token[..pos], token[pos + 1..].parse::<i32>().ok()?),
        None => (token, 0),
    };
    mantissa.parse::<f64>().ok()?;
    format!("{mantissa}e{}", e + exp).parse().ok()
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    first_on_line: bool,
}

/// Parses Touchstone v1.0 S-parameter data for a `ports`-port network.
///
/// Values are converted to rectangular form; frequencies to Hz. Two-port
/// records use the v1.0 order `S11 S21 S12 S22`, larger networks row-major.
/// A noise-parameter block after two-port data is skipped with a warning.
pub fn parse_touchstone(bytes: &[u8], ports: usize) -> Result<NPortNetwork, TouchstoneError> {
    if ports == 0 {
        return Err(TouchstoneError::Invalid("port count must be at least 1".into()));
    }
    let text = std::str::from_utf8(bytes).map_err(|_| TouchstoneError::Encoding)?;
    let mut opts: Option<Options> = None;
    let mut tokens: Vec<Token> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('!').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix('#') {
            if !tokens.is_empty() {
                return Err(TouchstoneError::OptionLine {
                    line,
                    msg: "option line after the start of the data".into(),
                });
            }
            if opts.is_some() {
                warn!("line {line}: ignoring repeated option line");
                continue;
            }
            opts = Some(parse_option_line(rest, line)?);
            continue;
        }
        if body.starts_with('[') {
            return Err(TouchstoneError::Unsupported { line, param: "Touchstone 2.0 keyword".into() });
        }
        for (k, text) in body.split_whitespace().enumerate() {
            tokens.push(Token { text, line, first_on_line: k == 0 });
        }
    }
    let opts = opts.unwrap_or(Options { unit_exp: 9, format: DataFormat::Ma, z0: 50.0 });

    let record = 1 + 2 * ports * ports;
    let mut frequencies = Vec::new();
    let mut matrices = Vec::new();
    let mut pos = 0;
    while pos < tokens.len() {
        let start = &tokens[pos];
        let freq = parse_scaled(start.text, opts.unit_exp)
            .filter(|f| f.is_finite())
            .ok_or_else(|| TouchstoneError::BadNumber { line: start.line, token: start.text.to_string() })?;
        if let Some(&prev) = frequencies.last() {
            if freq <= prev {
                if ports == 2 && start.first_on_line {
                    warn!("line {}: skipping noise-parameter data", start.line);
                    break;
                }
                return Err(TouchstoneError::NonMonotonic { line: start.line, freq, prev });
            }
        }
        if freq <= 0.0 {
            return Err(TouchstoneError::Invalid(format!("line {}: frequency must be positive", start.line)));
        }
        let end = pos + record;
        let found = if ports <= 2 {
            // One- and two-port records occupy exactly one line.
            1 + tokens[pos + 1..].iter().take_while(|t| !t.first_on_line).count()
        } else if end > tokens.len() {
            tokens.len() - pos
        } else {
            // Longer records wrap, but the next record must start a new line.
            record + tokens[end..].iter().take_while(|t| !t.first_on_line).count()
        };
        if found != record {
            return Err(TouchstoneError::TokenCount { line: start.line, found, expected: record, ports });
        }

        let mut values = Vec::with_capacity(2 * ports * ports);
        for t in &tokens[pos + 1..end] {
            let v: f64 = t
                .text
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite())
                .ok_or_else(|| TouchstoneError::BadNumber { line: t.line, token: t.text.to_string() })?;
            values.push(v);
        }
        let mut m = SMatrix::zeros(ports);
        for (k, pair) in values.chunks_exact(2).enumerate() {
            let z = to_complex(opts.format, pair[0], pair[1]);
            let (i, j) = if ports == 2 { (k % 2, k / 2) } else { (k / ports, k % ports) };
            m[(i, j)] = z;
        }
        frequencies.push(freq);
        matrices.push(m);
        pos = end;
    }

    let network = NPortNetwork::new(frequencies, matrices, opts.z0)?;
    let flagged = network.non_passive_entries(1e-6);
    if let Some(&(k, i, j, mag)) = flagged.first() {
        warn!(
            "{} S-parameter entries exceed unit magnitude (first: |S{}{}| = {mag} at {} Hz)",
            flagged.len(),
            i + 1,
            j + 1,
            network.frequencies()[k]
        );
    }
    Ok(network)
}

fn to_complex(format: DataFormat, a: f64, b: f64) -> Complex64 {
    match format {
        DataFormat::Ri => Complex64::new(a, b),
        DataFormat::Ma => Complex64::from_polar(a, b.to_radians()),
        DataFormat::Db => Complex64::from_polar(10f64.powf(a / 20.0), b.to_radians()),
    }
}

/// Port count from a `.sNp` extension (case-insensitive).
pub fn ports_from_path(path: &Path) -> Option<usize> {
    let ext = path.extension()?.to_str()?.to_ascii_lowercase();
    let digits = ext.strip_prefix('s')?.strip_suffix('p')?;
    digits.parse().ok().filter(|n| *n > 0)
}

/// Reads a Touchstone file, taking the port count from its extension.
pub fn read_touchstone(path: &Path) -> Result<NPortNetwork, TouchstoneError> {
    let ports = ports_from_path(path).ok_or_else(|| TouchstoneError::PortCount(path.display().to_string()))?;
    let bytes =
        std::fs::read(path).map_err(|source| TouchstoneError::Io { path: path.display().to_string(), source })?;
    parse_touchstone(&bytes, ports)
}
