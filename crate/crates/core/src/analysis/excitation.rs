use num_complex::Complex64;

use super::AnalysisError;
use crate::geometry::Polarization;
use crate::touchstone::PortLabel;

/// Incident-wave amplitudes `a_i`, one per port.
#[derive(Debug, Clone, PartialEq)]
pub struct ExcitationVector {
    amplitudes: Vec<Complex64>,
}

impl ExcitationVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self, AnalysisError> {
        if let Some(k) = amplitudes.iter().position(|a| !(a.re.is_finite() && a.im.is_finite())) {
            return Err(AnalysisError::NonFiniteExcitation(k));
        }
        if amplitudes.iter().all(|a| a.norm_sqr() == 0.0) {
            return Err(AnalysisError::ZeroExcitation);
        }
        Ok(ExcitationVector { amplitudes })
    }

    /// Equal amplitude and phase on every port, unit total power.
    pub fn uniform(ports: usize) -> Result<Self, AnalysisError> {
        let a = 1.0 / (ports as f64).sqrt();
        Self::new(vec![Complex64::new(a, 0.0); ports])
    }

    /// Unit-power equi-phase drive of the centre row of one polarization;
    /// every other port is terminated (`a = 0`).
    pub fn centre_row_equiphase(labels: &[PortLabel], pol: Polarization) -> Result<Self, AnalysisError> {
        let rows: Vec<usize> = labels
            .iter()
            .filter_map(|l| match l {
                PortLabel::Element { row, polarization, .. } if *polarization == pol => Some(*row),
                _ => None,
            })
            .collect();
        if labels.iter().any(|l| matches!(l, PortLabel::Name(_))) {
            return Err(AnalysisError::PortMap("centre-row excitation needs a row/col port map".into()));
        }
        let (Some(&lo), Some(&hi)) = (rows.iter().min(), rows.iter().max()) else {
            return Err(AnalysisError::PortMap(format!("no {pol}-pol ports in the port map")));
        };
        if (lo + hi) % 2 != 0 {
            return Err(AnalysisError::PortMap(format!("{pol}-pol rows {lo}..={hi} have no single centre row")));
        }
        let centre = (lo + hi) / 2;
        let driven = |l: &PortLabel| matches!(l, PortLabel::Element { row, polarization, .. } if *row == centre && *polarization == pol);
        let count = labels.iter().filter(|l| driven(l)).count();
        let a = 1.0 / (count as f64).sqrt();
        Self::new(
            labels.iter().map(|l| if driven(l) { Complex64::new(a, 0.0) } else { Complex64::new(0.0, 0.0) }).collect(),
        )
    }

    /// Parses `port,real,imag` rows (1-based ports, header optional).
    /// Ports not listed are terminated.
    pub fn from_csv(text: &str, ports: usize) -> Result<Self, AnalysisError> {
        let mut amps = vec![Complex64::new(0.0, 0.0); ports];
        let mut seen = vec![false; ports];
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let err = |msg: String| AnalysisError::Parse { line, msg };
            let fields: Vec<&str> = body.split(',').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(err(format!("expected `port,real,imag`, found {} fields", fields.len())));
            }
            let Ok(port) = fields[0].parse::<usize>() else {
                if line == 1 {
                    continue;
                }
                return Err(err(format!("bad port `{}`", fields[0])));
            };
            if port == 0 || port > ports {
                return Err(err(format!("port {port} outside 1..={ports}")));
            }
            if std::mem::replace(&mut seen[port - 1], true) {
                return Err(err(format!("port {port} listed twice")));
            }
            let re = fields[1].parse().map_err(|_| err(format!("bad real part `{}`", fields[1])))?;
            let im = fields[2].parse().map_err(|_| err(format!("bad imaginary part `{}`", fields[2])))?;
            amps[port - 1] = Complex64::new(re, im);
        }
        Self::new(amps)
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn power(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalized(&self) -> Self {
        let scale = 1.0 / self.power().sqrt();
        ExcitationVector { amplitudes: self.amplitudes.iter().map(|a| a * scale).collect() }
    }
}
