use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::TouchstoneError;
use crate::geometry::Polarization;

/// Dense row-major `N × N` complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl SMatrix {
    pub fn zeros(n: usize) -> Self {
        SMatrix { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = SMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds from row-major entries; `None` if the length is not a square.
    pub fn from_row_major(n: usize, data: Vec<Complex64>) -> Option<Self> {
        (data.len() == n * n).then_some(SMatrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn mul_vec(&self, a: &[Complex64]) -> Vec<Complex64> {
        (0..self.n).map(|i| self.row(i).iter().zip(a).map(|(s, x)| s * x).sum()).collect()
    }
}

impl Index<(usize, usize)> for SMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for SMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

/// What a port is connected to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PortLabel {
    Element { row: usize, col: usize, polarization: Polarization },
    Name(String),
}

impl fmt::Display for PortLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PortLabel::Element { row, col, polarization } => write!(f, "{polarization}[{row},{col}]"),
            PortLabel::Name(s) => f.write_str(s),
        }
    }
}

/// Frequency sweep of S-matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct NPortNetwork {
    frequencies: Vec<f64>,
    matrices: Vec<SMatrix>,
    z0: f64,
    labels: Vec<PortLabel>,
}

impl NPortNetwork {
    /// Default reference impedance (Ω).
    pub const DEFAULT_Z0: f64 = 50.0;

    /// Validates and builds a network. Ports are labelled `P1..PN`.
    pub fn new(frequencies: Vec<f64>, matrices: Vec<SMatrix>, z0: f64) -> Result<Self, TouchstoneError> {
        let invalid = |m: String| Err(TouchstoneError::Invalid(m));
        if frequencies.len() != matrices.len() {
            return invalid(format!("{} frequencies but {} matrices", frequencies.len(), matrices.len()));
        }
        let ports = matrices.first().map_or(0, SMatrix::dim);
        if ports == 0 && !matrices.is_empty() {
            return invalid("zero-port matrix".into());
        }
        if !(z0 > 0.0 && z0.is_finite()) {
            return invalid(format!("reference impedance {z0} must be positive"));
        }
        for (k, (f, m)) in frequencies.iter().zip(&matrices).enumerate() {
            if !(*f > 0.0 && f.is_finite()) {
                return invalid(format!("frequency {f} Hz must be positive and finite"));
            }
            if k > 0 && *f <= frequencies[k - 1] {
                return invalid(format!("frequencies not strictly increasing at index {k}"));
            }
            if m.dim() != ports {
                return invalid(format!("matrix {k} is {}x{}, expected {ports}x{ports}", m.dim(), m.dim()));
            }
            if m.entries().iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return invalid(format!("non-finite S-parameter at {f} Hz"));
            }
        }
        let labels = (1..=ports).map(|p| PortLabel::Name(format!("P{p}"))).collect();
        Ok(NPortNetwork { frequencies, matrices, z0, labels })
    }

    pub fn ports(&self) -> usize {
        self.labels.len()
    }

    pub fn frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    pub fn matrices(&self) -> &[SMatrix] {
        &self.matrices
    }

    pub fn z0(&self) -> f64 {
        self.z0
    }

    pub fn port_labels(&self) -> &[PortLabel] {
        &self.labels
    }

    pub fn with_port_labels(mut self, labels: Vec<PortLabel>) -> Result<Self, TouchstoneError> {
        if labels.len() != self.ports() {
            return Err(TouchstoneError::Invalid(format!(
                "{} port labels for a {}-port network",
                labels.len(),
                self.ports()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Entries with `|S_ij| > 1 + tol`, as `(frequency index, i, j, |S_ij|)`.
    pub fn non_passive_entries(&self, tol: f64) -> Vec<(usize, usize, usize, f64)> {
        let n = self.ports();
        let mut out = Vec::new();
        for (k, m) in self.matrices.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    let mag = m[(i, j)].norm();
                    if mag > 1.0 + tol {
                        out.push((k, i, j, mag));
                    }
                }
            }
        }
        out
    }

    /// Restricts the network to the given (0-based) ports, in the given order.
    pub fn select_ports(&self, subset: &[usize]) -> Result<NPortNetwork, TouchstoneError> {
        let n = self.ports();
        for (k, &p) in subset.iter().enumerate() {
            if p >= n {
                return Err(TouchstoneError::Invalid(format!("port index {p} out of range for {n} ports")));
            }
            if subset[..k].contains(&p) {
                return Err(TouchstoneError::Invalid(format!("duplicate port index {p}")));
            }
        }
        if subset.is_empty() {
            return Err(TouchstoneError::Invalid("empty port subset".into()));
        }
        let matrices =
            self.matrices.iter().map(|m| SMatrix::from_fn(subset.len(), |i, j| m[(subset[i], subset[j])])).collect();
        Ok(NPortNetwork {
            frequencies: self.frequencies.clone(),
            matrices,
            z0: self.z0,
            labels: subset.iter().map(|&p| self.labels[p].clone()).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_network(ports: usize, nf: usize, seed: u64) -> NPortNetwork {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let freqs = (1..=nf).map(|k| k as f64 * 1e8).collect();
        let mats = (0..nf)
            .map(|_| SMatrix::from_fn(ports, |_, _| c(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5))))
            .collect();
        NPortNetwork::new(freqs, mats, 50.0).unwrap()
    }

    #[test]
    fn identity_subset() {
        let n = random_network(4, 5, 1);
        assert_eq!(n.select_ports(&[0, 1, 2, 3]).unwrap(), n);
    }

    #[test]
    fn diagonal_subset_stays_diagonal() {
        let d = SMatrix::from_fn(5, |i, j| if i == j { c(0.1 * i as f64, 0.0) } else { c(0.0, 0.0) });
        let n = NPortNetwork::new(vec![1e9], vec![d], 50.0).unwrap();
        let s = n.select_ports(&[4, 2]).unwrap();
        let m = &s.matrices()[0];
        assert_eq!(m[(0, 0)], c(0.4, 0.0));
        assert_eq!(m[(1, 1)], c(0.2, 0.0));
        assert_eq!(m[(0, 1)], c(0.0, 0.0));
        assert_eq!(m[(1, 0)], c(0.0, 0.0));
    }

    #[test]
    fn subset_entries_match_original() {
        let n = random_network(6, 7, 2);
        let keep = [1, 3, 5];
        let s = n.select_ports(&keep).unwrap();
        assert_eq!(s.frequencies(), n.frequencies());
        for (a, b) in s.matrices().iter().zip(n.matrices()) {
            for (i, &pi) in keep.iter().enumerate() {
                for (j, &pj) in keep.iter().enumerate() {
                    assert_eq!(a[(i, j)], b[(pi, pj)]);
                }
            }
        }
        assert_eq!(s.port_labels()[0], PortLabel::Name("P2".into()));
    }

    #[test]
    fn subset_errors() {
        let n = random_network(3, 2, 3);
        assert!(n.select_ports(&[0, 3]).is_err());
        assert!(n.select_ports(&[1, 1]).is_err());
        assert!(n.select_ports(&[]).is_err());
    }

    #[test]
    fn construction_checks() {
        let m = SMatrix::zeros(2);
        assert!(NPortNetwork::new(vec![2e9, 1e9], vec![m.clone(), m.clone()], 50.0).is_err());
        assert!(NPortNetwork::new(vec![0.0], vec![m.clone()], 50.0).is_err());
        assert!(NPortNetwork::new(vec![1e9], vec![SMatrix::zeros(2), SMatrix::zeros(3)][..1].to_vec(), 0.0).is_err());
        assert!(NPortNetwork::new(vec![1e9, 2e9], vec![SMatrix::zeros(2), SMatrix::zeros(3)], 50.0).is_err());
        let mut bad = SMatrix::zeros(1);
        bad[(0, 0)] = c(f64::NAN, 0.0);
        assert!(NPortNetwork::new(vec![1e9], vec![bad], 50.0).is_err());
    }

    #[test]
    fn flags_active_entries() {
        let mut m = SMatrix::zeros(2);
        m[(1, 0)] = c(1.1, 0.0);
        let n = NPortNetwork::new(vec![1e9], vec![m], 50.0).unwrap();
        assert_eq!(n.non_passive_entries(1e-6), vec![(0, 1, 0, 1.1)]);
    }
}
