//! Sparse tail polynomials in `x1, x2, x1∧x2, y1, y2, y1∧y2`.
//!
//! Each independent set `S` of H* contributes one monomial
//! `x1^{v⁺} x2^{v⁻} (x1∧x2)^{v±} y1^{q1} y2^{q2} (y1∧y2)^{q3}`; the three
//! polynomials differ only in the `y` exponents:
//!
//! | polynomial | `q1` | `q2` | `q3` |
//! |---|---|---|---|
//! | `f_H` | `A_S` | `B_S` | 0 |
//! | `g_H` | `a_S` | `b_S` | 0 |
//! | `f̄_H` | `n^{+,0}` | `n^{-,0}` | `n^±` |

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::SolveError;
use crate::profile::SetProfile;

/// Exponents `[p1, p2, p3, q1, q2, q3]` on `x1, x2, x1∧x2, y1, y2, y1∧y2`.
pub type Exponents = [u32; 6];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: u64,
    pub exps: Exponents,
}

impl Term {
    pub fn x_degree(&self) -> u32 {
        self.exps[0] + self.exps[1] + self.exps[2]
    }
}

/// Merged terms sorted by exponent vector; the zero vector comes first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailPolynomial {
    terms: Vec<Term>,
}

impl TailPolynomial {
    pub fn from_exponents(exps: impl IntoIterator<Item = Exponents>) -> Self {
        let mut merged: BTreeMap<Exponents, u64> = BTreeMap::new();
        for e in exps {
            *merged.entry(e).or_default() += 1;
        }
        Self { terms: merged.into_iter().map(|(exps, coeff)| Term { coeff, exps }).collect() }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Sum of coefficients, i.e. the number of independent sets that built it.
    pub fn multiplicity(&self) -> u64 {
        self.terms.iter().map(|t| t.coeff).sum()
    }

    /// Evaluates with `0⁰ = 1`. All inputs must be non-negative.
    pub fn evaluate(&self, x1: f64, x2: f64, y1: f64, y2: f64) -> Result<f64, SolveError> {
        for (name, value) in [("x1", x1), ("x2", x2), ("y1", y1), ("y2", y2)] {
            if value < 0.0 || value.is_nan() {
                return Err(SolveError::NegativeInput { name, value });
            }
        }
        Ok(self.eval(x1, x2, y1, y2))
    }

    pub(crate) fn eval(&self, x1: f64, x2: f64, y1: f64, y2: f64) -> f64 {
        let vars = [x1, x2, x1.min(x2), y1, y2, y1.min(y2)];
        self.terms
            .iter()
            .map(|t| t.exps.iter().zip(vars).fold(t.coeff as f64, |acc, (&e, v)| acc * v.powi(e as i32)))
            .sum()
    }

    /// Substitutes `y2 = 1` (`pin_y2`) or `y1 = 1` and returns the remaining
    /// polynomial as exponents on `(x1, x2, x1∧x2, y)`.
    pub fn pinned(&self, pin_y2: bool) -> BTreeMap<[u32; 4], u64> {
        let mut out = BTreeMap::new();
        for t in &self.terms {
            let [p1, p2, p3, q1, q2, q3] = t.exps;
            let q = if pin_y2 { q1 + q3 } else { q2 + q3 };
            *out.entry([p1, p2, p3, q]).or_default() += t.coeff;
        }
        out
    }
}

fn exps_with(p: &SetProfile, q: [u32; 3]) -> Exponents {
    [p.v_plus, p.v_minus, p.v_pm, q[0], q[1], q[2]]
}

/// `f_H`: `y` exponents are the neighbourhood sizes `A_S`, `B_S`.
pub fn build_f(profiles: &[SetProfile]) -> TailPolynomial {
    TailPolynomial::from_exponents(profiles.iter().map(|p| exps_with(p, [p.big_a, p.big_b, 0])))
}

/// `g_H`: `y` exponents are the matching weights `a_S`, `b_S`.
///
/// Panics if a profile has not had its matching weights filled in.
pub fn build_g(profiles: &[SetProfile]) -> TailPolynomial {
    TailPolynomial::from_exponents(profiles.iter().map(|p| {
        let a = p.a.expect("matching weight a_S computed");
        let b = p.b.expect("matching weight b_S computed");
        exps_with(p, [a, b, 0])
    }))
}

/// `f̄_H`: pure out-, pure in- and mixed neighbours get separate exponents.
pub fn build_fbar(profiles: &[SetProfile]) -> TailPolynomial {
    TailPolynomial::from_exponents(profiles.iter().map(|p| exps_with(p, [p.n_plus0, p.n_minus0, p.n_pm])))
}

const SYMBOLS: [&str; 6] = ["x1", "x2", "x1∧x2", "y1", "y2", "y1∧y2"];

/// Renders as e.g. `1 + (x1^1)(y1^2) + 2(x1∧x2^1)(y1^1)(y2^1)`.
impl fmt::Display for TailPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let factors: Vec<String> =
                t.exps.iter().zip(SYMBOLS).filter(|(&e, _)| e > 0).map(|(e, s)| format!("({s}^{e})")).collect();
            match (t.coeff, factors.is_empty()) {
                (c, true) => write!(f, "{c}")?,
                (1, false) => f.write_str(&factors.concat())?,
                (c, false) => write!(f, "{c}{}", factors.concat())?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::Analysis;
    use crate::families;

    fn polys(d: &crate::Digraph) -> Analysis {
        Analysis::new(d).unwrap()
    }

    #[test]
    fn triangle_polynomials() {
        let a = polys(&families::transitive_triangle());
        assert_eq!(a.f.to_string(), "1 + (x1∧x2^1)(y1^1)(y2^1) + (x2^1)(y2^2) + (x1^1)(y1^2)");
        assert_eq!(a.g.to_string(), "1 + (x1∧x2^1)(y1^1)(y2^1) + (x2^1)(y2^1) + (x1^1)(y1^1)");
        assert_eq!(a.fbar.to_string(), "1 + (x1∧x2^1)(y1^1)(y2^1) + (x2^1)(y2^2) + (x1^1)(y1^2)");
        assert_eq!(a.f.multiplicity(), 4);
    }

    #[test]
    fn star_polynomials() {
        let a = polys(&families::out_star(3));
        assert_eq!(a.f.to_string(), "1 + (x1^1)(y1^3)");
        assert_eq!(a.g.to_string(), "1 + (x1^1)(y1^1)");
    }

    #[test]
    fn two_cycle_merges_terms() {
        let a = polys(&families::two_cycle());
        assert_eq!(a.f.to_string(), "1 + 2(x1∧x2^1)(y1^1)(y2^1)");
        assert_eq!(a.fbar.to_string(), "1 + 2(x1∧x2^1)(y1∧y2^1)");
    }

    #[test]
    fn gap_slice_matches_closed_form() {
        let k = 3;
        let a = polys(&families::gap_construction(k));
        for &(x1, x2, y1) in &[(0.3, 0.7, 0.4), (2.0, 1.5, 0.9), (0.0, 1.0, 1.0), (1.2, 1.2, 0.05)] {
            let m: f64 = f64::min(x1, x2);
            let lead = 1.0 + ((1.0 + m).powi(k as i32) - 1.0) * y1;
            let f = lead * (1.0 + m * y1 * y1);
            let g = lead * (1.0 + m * y1);
            assert!((a.f.evaluate(x1, x2, y1, 1.0).unwrap() - f).abs() < 1e-12 * f);
            assert!((a.g.evaluate(x1, x2, y1, 1.0).unwrap() - g).abs() < 1e-12 * g);
        }
    }

    #[test]
    fn shared_sink_g_slice() {
        let a = polys(&families::shared_sink_construction(3));
        for &(x, y1) in &[(0.5, 0.3), (2.0, 0.691), (4.0, 1.0)] {
            let expected = 1.0 + y1 * ((1.0f64 + x).powi(3) - 1.0);
            assert!((a.g.evaluate(x, x, y1, 1.0).unwrap() - expected).abs() < 1e-12 * expected);
        }
    }

    #[test]
    fn evaluate_basics() {
        let a = polys(&families::transitive_triangle());
        let delta = 0.75;
        let v = a.g.evaluate(delta / 3.0, delta / 3.0, 1.0, 1.0).unwrap();
        assert!((v - (1.0 + delta)).abs() < 1e-15);
        assert_eq!(a.f.evaluate(0.0, 0.0, 0.3, 0.9).unwrap(), 1.0);
        assert_eq!(a.fbar.evaluate(0.0, 0.0, 1.0, 1.0).unwrap(), 1.0);
        assert!(matches!(a.f.evaluate(-1.0, 0.0, 0.0, 0.0), Err(SolveError::NegativeInput { name: "x1", .. })));
    }

    #[test]
    fn fbar_agrees_on_pinned_slices() {
        for d in [families::gap_construction(2), families::two_cycle(), families::mixed_star(2, 2)] {
            let a = polys(&d);
            assert_eq!(a.fbar.pinned(true), a.f.pinned(true));
            assert_eq!(a.fbar.pinned(false), a.f.pinned(false));
        }
    }
}
