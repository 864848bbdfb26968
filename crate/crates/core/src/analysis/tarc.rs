use num_complex::Complex64;

use super::excitation::ExcitationVector;
use super::trace::FrequencyTrace;
use super::AnalysisError;
use crate::amplitude_db;
use crate::touchstone::NPortNetwork;

fn check_dims(n: &NPortNetwork, e: &ExcitationVector) -> Result<(), AnalysisError> {
    if n.ports() != e.len() {
        return Err(AnalysisError::DimensionMismatch { ports: n.ports(), found: e.len() });
    }
    Ok(())
}

/// Linear TARC per frequency: `sqrt(‖S·a‖² / ‖a‖²)`. A one-port network
/// returns `|S11|` directly so the reduction is exact.
pub fn tarc_linear(n: &NPortNetwork, e: &ExcitationVector) -> Result<Vec<f64>, AnalysisError> {
    check_dims(n, e)?;
    if n.ports() == 1 {
        return Ok(n.matrices().iter().map(|s| s[(0, 0)].norm()).collect());
    }
    let a = e.amplitudes();
    let incident = e.power();
    Ok(n.matrices()
        .iter()
        .map(|s| {
            let reflected: f64 = s.mul_vec(a).iter().map(Complex64::norm_sqr).sum();
            (reflected / incident).sqrt()
        })
        .collect())
}

/// TARC in dB, floored at [`crate::DB_FLOOR`].
pub fn tarc(n: &NPortNetwork, e: &ExcitationVector) -> Result<FrequencyTrace, AnalysisError> {
    let values = tarc_linear(n, e)?.into_iter().map(amplitude_db).collect();
    FrequencyTrace::db(n.frequencies().to_vec(), values)
}

/// Active reflection coefficient at `port` (0-based) in dB:
/// `|Σ_j S_pj·a_j / a_p|`.
pub fn active_reflection(n: &NPortNetwork, e: &ExcitationVector, port: usize) -> Result<FrequencyTrace, AnalysisError> {
    check_dims(n, e)?;
    if port >= n.ports() {
        return Err(AnalysisError::PortOutOfRange(port));
    }
    let a = e.amplitudes();
    if a[port].norm_sqr() == 0.0 {
        return Err(AnalysisError::UndrivenPort(port));
    }
    let values = n
        .matrices()
        .iter()
        .map(|s| {
            let b: Complex64 = s.row(port).iter().zip(a).map(|(sij, aj)| sij * aj).sum();
            amplitude_db((b / a[port]).norm())
        })
        .collect();
    FrequencyTrace::db(n.frequencies().to_vec(), values)
}
