use std::fmt::Write as _;

use super::network::PortLabel;
use super::TouchstoneError;
use crate::geometry::Polarization;

/// Parses a `port_index,row,col,polarization` sidecar.
///
/// Port indices are 1-based like Touchstone's `S11`; every port `1..=ports`
/// must appear exactly once. A header line is optional.
pub fn parse_port_map(text: &str, ports: usize) -> Result<Vec<PortLabel>, TouchstoneError> {
    let mut labels: Vec<Option<PortLabel>> = vec![None; ports];
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let err = |msg: String| TouchstoneError::PortMap { line, msg };
        let fields: Vec<&str> = body.split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(err(format!("expected 4 fields, found {}", fields.len())));
        }
        let Ok(port) = fields[0].parse::<usize>() else {
            if line == 1 || labels.iter().all(Option::is_none) {
                continue; // header
            }
            return Err(err(format!("bad port index `{}`", fields[0])));
        };
        if port == 0 || port > ports {
            return Err(err(format!("port {port} outside 1..={ports}")));
        }
        let row = fields[1].parse().map_err(|_| err(format!("bad row `{}`", fields[1])))?;
        let col = fields[2].parse().map_err(|_| err(format!("bad col `{}`", fields[2])))?;
        let polarization: Polarization = fields[3].parse().map_err(err)?;
        let slot = &mut labels[port - 1];
        if slot.is_some() {
            return Err(err(format!("port {port} listed twice")));
        }
        *slot = Some(PortLabel::Element { row, col, polarization });
    }
    labels
        .into_iter()
        .enumerate()
        .map(|(k, l)| l.ok_or_else(|| TouchstoneError::PortMap { line: 0, msg: format!("port {} missing", k + 1) }))
        .collect()
}

/// Writes labels in the sidecar format. Opaque labels are skipped.
pub fn write_port_map(labels: &[PortLabel]) -> String {
    let mut s = String::from("port_index,row,col,polarization\n");
    for (k, l) in labels.iter().enumerate() {
        if let PortLabel::Element { row, col, polarization } = l {
            let _ = writeln!(s, "{},{row},{col},{polarization}", k + 1);
        }
    }
    s
}
