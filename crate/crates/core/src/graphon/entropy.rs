use crate::error::SimError;

pub(crate) fn check_p(p: f64) -> Result<(), SimError> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(SimError::BadProbability(p))
    }
}

/// Relative entropy of Bernoulli(x) with respect to Bernoulli(p):
/// `x log(x/p) + (1−x) log((1−x)/(1−p))`, with `0 log 0 = 0`.
pub fn ip(x: f64, p: f64) -> Result<f64, SimError> {
    check_p(p)?;
    if !(0.0..=1.0).contains(&x) {
        return Err(SimError::BadDensity(x));
    }
    Ok(ip_unchecked(x, p))
}

#[inline]
pub(crate) fn ip_unchecked(x: f64, p: f64) -> f64 {
    let head = if x > 0.0 { x * (x / p).ln() } else { 0.0 };
    let tail = if x < 1.0 { (1.0 - x) * ((1.0 - x) / (1.0 - p)).ln() } else { 0.0 };
    head + tail
}

/// `d/dx ip(x, p)`, with `x` pulled into `[1e-12, 1 − 1e-12]` so the
/// boundary values stay finite.
#[inline]
pub(crate) fn ip_derivative(x: f64, p: f64) -> f64 {
    let x = x.clamp(1e-12, 1.0 - 1e-12);
    (x / p).ln() - ((1.0 - x) / (1.0 - p)).ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(ip(0.3, 0.3).unwrap(), 0.0);
        assert!((ip(1.0, 0.25).unwrap() - 4f64.ln()).abs() < 1e-15);
        assert!((ip(0.0, 0.25).unwrap() - (4.0f64 / 3.0).ln()).abs() < 1e-15);
        let expected = 0.5 * 2f64.ln() + 0.5 * (2.0f64 / 3.0).ln();
        assert!((ip(0.5, 0.25).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert_eq!(ip(0.5, 0.0), Err(SimError::BadProbability(0.0)));
        assert_eq!(ip(0.5, 1.0), Err(SimError::BadProbability(1.0)));
        assert_eq!(ip(1.5, 0.5), Err(SimError::BadDensity(1.5)));
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        for &(x, p) in &[(0.2, 0.5), (0.7, 0.1), (0.01, 0.3)] {
            let h = 1e-6;
            let fd = (ip_unchecked(x + h, p) - ip_unchecked(x - h, p)) / (2.0 * h);
            assert!((fd - ip_derivative(x, p)).abs() < 1e-6);
        }
    }
}
