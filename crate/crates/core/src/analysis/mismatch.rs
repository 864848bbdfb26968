use super::AnalysisError;

/// `|Γ| = (VSWR − 1)/(VSWR + 1)`.
pub fn vswr_to_gamma(vswr: f64) -> Result<f64, AnalysisError> {
    if vswr.is_nan() || vswr < 1.0 || vswr.is_infinite() {
        return Err(AnalysisError::Vswr(vswr));
    }
    Ok((vswr - 1.0) / (vswr + 1.0))
}

/// `VSWR = (1 + |Γ|)/(1 − |Γ|)`.
pub fn gamma_to_vswr(gamma: f64) -> Result<f64, AnalysisError> {
    check_gamma(gamma)?;
    Ok((1.0 + gamma) / (1.0 - gamma))
}

/// `10·log10(1 − |Γ|²)`, zero or negative.
pub fn mismatch_loss_db(gamma: f64) -> Result<f64, AnalysisError> {
    check_gamma(gamma)?;
    Ok(10.0 * (1.0 - gamma * gamma).log10())
}

/// Gain minus mismatch loss: `G + 10·log10(1 − |Γ|²)`.
pub fn realized_gain(gain_db: f64, gamma: f64) -> Result<f64, AnalysisError> {
    Ok(gain_db + mismatch_loss_db(gamma)?)
}

fn check_gamma(gamma: f64) -> Result<(), AnalysisError> {
    if (0.0..1.0).contains(&gamma) {
        Ok(())
    } else {
        Err(AnalysisError::Gamma(gamma))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn perfect_match() {
        assert_eq!(vswr_to_gamma(1.0).unwrap(), 0.0);
        assert_eq!(mismatch_loss_db(0.0).unwrap(), 0.0);
    }

    #[test]
    fn vswr_two() {
        let g = vswr_to_gamma(2.0).unwrap();
        assert!((g - 1.0 / 3.0).abs() < 1e-15);
        let ml = mismatch_loss_db(g).unwrap();
        assert!((ml - 10.0 * (8.0f64 / 9.0).log10()).abs() < 1e-12);
        assert!((ml + 0.5115).abs() < 1e-4);
        assert!((realized_gain(7.0, g).unwrap() - (7.0 + ml)).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert_eq!(vswr_to_gamma(0.9), Err(AnalysisError::Vswr(0.9)));
        assert!(vswr_to_gamma(f64::NAN).is_err());
        assert_eq!(gamma_to_vswr(1.0), Err(AnalysisError::Gamma(1.0)));
        assert!(mismatch_loss_db(-0.1).is_err());
    }

    proptest! {
        #[test]
        fn inverse_pair(x in 1.0f64..100.0) {
            let back = gamma_to_vswr(vswr_to_gamma(x).unwrap()).unwrap();
            prop_assert!((back - x).abs() <= 1e-12 * x);
        }
    }
}
