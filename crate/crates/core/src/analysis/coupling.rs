use serde::Serialize;

use super::trace::FrequencyTrace;
use super::AnalysisError;
use crate::amplitude_db;
use crate::touchstone::{NPortNetwork, PortLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CouplingCategory {
    /// Same polarization, one grid step apart in row or column.
    AdjacentCoPol,
    NonAdjacentCoPol,
    CrossPol,
}

/// Category of the ordered pair `(i, j)`; `None` for `i == j`.
pub fn classify_pair(labels: &[PortLabel], i: usize, j: usize) -> Result<Option<CouplingCategory>, AnalysisError> {
    if i == j {
        return Ok(None);
    }
    let get = |k: usize| match labels.get(k) {
        Some(PortLabel::Element { row, col, polarization }) => Ok((*row, *col, *polarization)),
        Some(PortLabel::Name(n)) => {
            Err(AnalysisError::PortMap(format!("port {} (`{n}`) has no row/col/polarization", k + 1)))
        }
        None => Err(AnalysisError::PortOutOfRange(k)),
    };
    let (ri, ci, pi) = get(i)?;
    let (rj, cj, pj) = get(j)?;
    Ok(Some(if pi != pj {
        CouplingCategory::CrossPol
    } else if ri.abs_diff(rj) + ci.abs_diff(cj) == 1 {
        CouplingCategory::AdjacentCoPol
    } else {
        CouplingCategory::NonAdjacentCoPol
    }))
}

/// Worst-case coupling in one category.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CouplingMax {
    pub db: f64,
    pub frequency_hz: f64,
    /// Receiving port (0-based), the row index of `S_ij`.
    pub i: usize,
    /// Driven port (0-based).
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairTrace {
    pub i: usize,
    pub j: usize,
    pub category: CouplingCategory,
    pub trace: FrequencyTrace,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CouplingReport {
    pub adjacent_co_pol: Option<CouplingMax>,
    pub non_adjacent_co_pol: Option<CouplingMax>,
    pub cross_pol: Option<CouplingMax>,
    #[serde(skip)]
    pub pairs: Vec<PairTrace>,
}

impl CouplingReport {
    pub fn get(&self, category: CouplingCategory) -> Option<&CouplingMax> {
        match category {
            CouplingCategory::AdjacentCoPol => self.adjacent_co_pol.as_ref(),
            CouplingCategory::NonAdjacentCoPol => self.non_adjacent_co_pol.as_ref(),
            CouplingCategory::CrossPol => self.cross_pol.as_ref(),
        }
    }
}

/// Maximum `20·log10|S_ij|` over frequency and ordered pairs `i ≠ j`, per
/// category. Ties keep the first pair in row-major order and the lowest
/// frequency. Categories without any pair are `None`.
pub fn coupling_report(n: &NPortNetwork) -> Result<CouplingReport, AnalysisError> {
    let labels = n.port_labels();
    let ports = n.ports();
    let mut report =
        CouplingReport { adjacent_co_pol: None, non_adjacent_co_pol: None, cross_pol: None, pairs: Vec::new() };
    for i in 0..ports {
        for j in 0..ports {
            let Some(category) = classify_pair(labels, i, j)? else { continue };
            let values: Vec<f64> = n.matrices().iter().map(|m| amplitude_db(m[(i, j)].norm())).collect();
            let slot = match category {
                CouplingCategory::AdjacentCoPol => &mut report.adjacent_co_pol,
                CouplingCategory::NonAdjacentCoPol => &mut report.non_adjacent_co_pol,
                CouplingCategory::CrossPol => &mut report.cross_pol,
            };
            for (&f, &db) in n.frequencies().iter().zip(&values) {
                if slot.is_none_or(|m| db > m.db) {
                    *slot = Some(CouplingMax { db, frequency_hz: f, i, j });
                }
            }
            let trace = FrequencyTrace::db(n.frequencies().to_vec(), values)?;
            report.pairs.push(PairTrace { i, j, category, trace });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Polarization;
    use crate::touchstone::SMatrix;
    use crate::DB_FLOOR;
    use num_complex::Complex64;

    fn el(row: usize, col: usize, polarization: Polarization) -> PortLabel {
        PortLabel::Element { row, col, polarization }
    }

    #[test]
    fn diagonal_network_reports_floor() {
        let m = SMatrix::from_fn(3, |i, j| if i == j { Complex64::new(0.3, 0.0) } else { Complex64::new(0.0, 0.0) });
        let n = NPortNetwork::new(vec![1e9, 2e9], vec![m.clone(), m], 50.0)
            .unwrap()
            .with_port_labels(vec![el(0, 0, Polarization::X), el(0, 1, Polarization::X), el(0, 0, Polarization::Y)])
            .unwrap();
        let r = coupling_report(&n).unwrap();
        assert_eq!(r.adjacent_co_pol.unwrap().db, DB_FLOOR);
        assert_eq!(r.cross_pol.unwrap().db, DB_FLOOR);
        assert!(r.non_adjacent_co_pol.is_none());
        assert_eq!(r.pairs.len(), 6);
    }

    #[test]
    fn flat_adjacent_coupling() {
        let m = SMatrix::from_fn(2, |i, j| if i == j { Complex64::new(0.1, 0.0) } else { Complex64::new(0.0, 0.398) });
        let n = NPortNetwork::new(vec![1e9], vec![m], 50.0)
            .unwrap()
            .with_port_labels(vec![el(1, 0, Polarization::X), el(1, 1, Polarization::X)])
            .unwrap();
        let adj = coupling_report(&n).unwrap().adjacent_co_pol.unwrap();
        assert!((adj.db - 20.0 * 0.398f64.log10()).abs() < 1e-12);
        assert!((adj.db + 8.0).abs() < 0.01);
    }

    #[test]
    fn classification() {
        let labels = [
            el(0, 0, Polarization::X),
            el(1, 1, Polarization::X),
            el(0, 1, Polarization::X),
            el(0, 0, Polarization::Y),
        ];
        assert_eq!(classify_pair(&labels, 0, 0).unwrap(), None);
        assert_eq!(classify_pair(&labels, 0, 1).unwrap(), Some(CouplingCategory::NonAdjacentCoPol));
        assert_eq!(classify_pair(&labels, 0, 2).unwrap(), Some(CouplingCategory::AdjacentCoPol));
        assert_eq!(classify_pair(&labels, 3, 0).unwrap(), Some(CouplingCategory::CrossPol));
        assert!(classify_pair(&[PortLabel::Name("a".into()), el(0, 0, Polarization::X)], 0, 1).is_err());
    }
}
