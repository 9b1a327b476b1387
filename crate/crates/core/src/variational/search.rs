//! Golden-section line search on a closed interval.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Relative slack within which an interval end beats an interior point.
const ENDPOINT_SLACK: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct LineMin {
    pub arg: f64,
    pub value: f64,
    /// Relative objective spread over the final bracket.
    pub spread: f64,
}

/// Minimizes `f` on `[lo, hi]` down to a bracket of width `xtol`.
///
/// Both ends are evaluated, and win ties up to a relative `1e-13`, so a
/// minimum sitting on the boundary is returned exactly.
pub(crate) fn golden_min(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, xtol: f64) -> LineMin {
    let f_lo = f(lo);
    let f_hi = f(hi);
    let mut best = if f_hi < f_lo { (hi, f_hi) } else { (lo, f_lo) };
    let mut spread = 0.0;
    if hi - lo > xtol {
        let (mut a, mut b) = (lo, hi);
        let mut c = b - INV_PHI * (b - a);
        let mut d = a + INV_PHI * (b - a);
        let (mut fc, mut fd) = (f(c), f(d));
        while b - a > xtol {
            if fc <= fd {
                b = d;
                d = c;
                fd = fc;
                c = b - INV_PHI * (b - a);
                fc = f(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + INV_PHI * (b - a);
                fd = f(d);
            }
        }
        let inner = if fc <= fd { (c, fc) } else { (d, fd) };
        if inner.1.is_finite() {
            spread = (fc.max(fd) - inner.1) / inner.1.abs().max(1.0);
        }
        if inner.1 < best.1 - ENDPOINT_SLACK * best.1.abs() {
            best = inner;
        }
    }
    LineMin { arg: best.0, value: best.1, spread }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interior_quadratic() {
        let m = golden_min(|x| (x - 0.3) * (x - 0.3) + 1.0, 0.0, 1.0, 1e-10);
        assert!((m.arg - 0.3).abs() < 1e-7);
        assert!((m.value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn boundary_minimum_is_exact() {
        let m = golden_min(|x| 2.0 - x, 0.0, 1.0, 1e-10);
        assert_eq!(m.arg, 1.0);
        assert_eq!(m.value, 1.0);
        let m = golden_min(|x| 1.0 + x, 0.25, 0.5, 1e-10);
        assert_eq!(m.arg, 0.25);
    }

    #[test]
    fn infinite_region_is_avoided() {
        let m = golden_min(|x| if x < 0.5 { f64::INFINITY } else { x }, 0.0, 1.0, 1e-9);
        assert!((m.arg - 0.5).abs() < 1e-8);
    }
}
