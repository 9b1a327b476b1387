//! Inverting the level equation `P = target` along a ray in `x`.
//!
//! With `y` and the ratio `t` fixed, every tail polynomial collapses to a
//! univariate polynomial `Σ c_d X^d` with `c_0 = 1` and `c_d ≥ 0`: convex and
//! increasing on `X ≥ 0`, so the level has a unique root.

use crate::error::SolveError;
use crate::poly::TailPolynomial;

/// Relative residual accepted by [`solve_level_x`].
pub const DEFAULT_LEVEL_TOL: f64 = 1e-12;

/// Value and derivative of `Σ c[d] x^d`.
#[inline]
pub(crate) fn horner(c: &[f64], x: f64) -> (f64, f64) {
    let mut v = 0.0;
    let mut dv = 0.0;
    for &ci in c.iter().rev() {
        dv = dv * x + v;
        v = v * x + ci;
    }
    (v, dv)
}

/// Root of `Σ c[d] x^d = target` by Newton iteration started to the right of
/// the root, where convexity makes the iterates decrease monotonically.
///
/// `hint` seeds the start; it is doubled until it overshoots. Returns `None`
/// when no coefficient above degree 0 is positive.
pub(crate) fn newton_level(c: &[f64], target: f64, hint: f64) -> Option<f64> {
    if !c.iter().skip(1).any(|&v| v > 0.0) {
        return None;
    }
    let mut x = if hint.is_finite() && hint > 0.0 { hint } else { 1.0 };
    while horner(c, x).0 < target {
        x *= 2.0;
        if !x.is_finite() {
            return None;
        }
    }
    for _ in 0..200 {
        let (v, dv) = horner(c, x);
        let excess = v - target;
        if excess <= 0.0 {
            break;
        }
        let next = x - excess / dv;
        // Rounding can stall the iteration just right of the root.
        if !(next < x) {
            break;
        }
        let step = x - next;
        x = next.max(0.0);
        // Quadratic convergence: the next correction would be below 1e-15.
        if step <= 1e-8 * x {
            break;
        }
    }
    Some(x)
}

/// Unique `x ≥ 0` with `P(x, x, y1, y2) = target`, by bisection on a bracket
/// `[0, hi]` whose right end doubles from 1.
pub fn solve_level_x(p: &TailPolynomial, y1: f64, y2: f64, target: f64) -> Result<f64, SolveError> {
    solve_level_x_with(p, y1, y2, target, DEFAULT_LEVEL_TOL)
}

/// [`solve_level_x`] with an explicit relative residual tolerance.
pub fn solve_level_x_with(
    p: &TailPolynomial,
    y1: f64,
    y2: f64,
    target: f64,
    level_tol: f64,
) -> Result<f64, SolveError> {
    for (name, value) in [("y1", y1), ("y2", y2)] {
        if value < 0.0 || value.is_nan() {
            return Err(SolveError::NegativeInput { name, value });
        }
    }
    if !(target > 1.0) {
        return Err(SolveError::TargetTooSmall(target));
    }
    let value = |x: f64| p.eval(x, x, y1, y2);
    let nonconstant = p
        .terms()
        .iter()
        .any(|t| t.x_degree() > 0 && t.exps[3..].iter().zip([y1, y2, y1.min(y2)]).all(|(&e, y)| e == 0 || y > 0.0));
    if !nonconstant {
        return Err(SolveError::InfeasibleSlice);
    }
    let mut hi = 1.0;
    while value(hi) < target {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = value(mid);
        if (v - target).abs() <= level_tol * target {
            return Ok(mid);
        }
        if v < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(if target - value(lo) < value(hi) - target { lo } else { hi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::Analysis;
    use crate::families;

    #[test]
    fn horner_value_and_slope() {
        // 1 + 2x + 3x² at x = 2.
        assert_eq!(horner(&[1.0, 2.0, 3.0], 2.0), (17.0, 14.0));
    }

    #[test]
    fn newton_matches_closed_forms() {
        let x = newton_level(&[1.0, 3.0], 1.0 + 0.75, 1.0).unwrap();
        assert!((x - 0.25).abs() < 1e-15);
        // (1 + x)³ = 9 → x = 9^{1/3} − 1.
        let x = newton_level(&[1.0, 3.0, 3.0, 1.0], 9.0, 100.0).unwrap();
        assert!((x - (9f64.cbrt() - 1.0)).abs() < 1e-14);
        assert_eq!(newton_level(&[1.0, 0.0, 0.0], 2.0, 1.0), None);
    }

    #[test]
    fn triangle_g_level() {
        let a = Analysis::new(&families::transitive_triangle()).unwrap();
        for delta in [0.5, 1.0, 8.0] {
            let x = solve_level_x(&a.g, 1.0, 1.0, 1.0 + delta).unwrap();
            assert!((x - delta / 3.0).abs() < 1e-12 * (1.0 + delta));
        }
    }

    #[test]
    fn star_g_level() {
        let a = Analysis::new(&families::out_star(3)).unwrap();
        let x = solve_level_x(&a.g, 1.0, 1.0, 6.0).unwrap();
        assert!((x - 5.0).abs() < 1e-10);
    }

    #[test]
    fn shared_sink_level_agrees_with_bisection_oracle() {
        let a = Analysis::new(&families::shared_sink_construction(3)).unwrap();
        let y1 = 0.691;
        let x = solve_level_x(&a.g, y1, 1.0, 101.0).unwrap();
        let reduced = 1.0 + y1 * ((1.0 + x).powi(3) - 1.0);
        assert!((reduced - 101.0).abs() < 1e-10);
        let closed = (100.0 / y1 + 1.0f64).cbrt() - 1.0;
        assert!((x - closed).abs() < 1e-12 * closed);
    }

    #[test]
    fn level_errors() {
        let a = Analysis::new(&families::out_star(3)).unwrap();
        assert_eq!(solve_level_x(&a.g, 0.0, 1.0, 2.0), Err(SolveError::InfeasibleSlice));
        assert_eq!(solve_level_x(&a.g, 1.0, 1.0, 1.0), Err(SolveError::TargetTooSmall(1.0)));
    }
}
