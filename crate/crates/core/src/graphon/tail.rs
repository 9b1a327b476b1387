//! Upper-tail probabilities: Monte Carlo with Wilson intervals, and the exact
//! binomial tail for the 2-cycle.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::matrix::{check_map_cap, sample_with, HomCounter};
use crate::digraph::Digraph;
use crate::error::SimError;

/// Two-sided 95% normal quantile.
const Z95: f64 = 1.959_963_984_540_054;

/// Estimate of `−log P(t(H, G) ≥ (1+δ) p^{e(H)})`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TailEstimate {
    /// Point estimate of `−log P`; with no hits, the value at the upper
    /// Wilson end, i.e. a lower bound.
    pub neg_log_p: f64,
    /// Half-width of the Wilson interval mapped through `−log`.
    pub half_width: f64,
    pub samples: u64,
    pub hits: u64,
    /// Wilson 95% interval for the probability.
    pub ci: (f64, f64),
    /// Known without sampling (threshold ≤ 0).
    pub exact: bool,
    /// No hits: only a one-sided bound is available.
    pub one_sided: bool,
}

/// Wilson score interval at 95%.
pub fn wilson_interval(hits: u64, samples: u64) -> (f64, f64) {
    let n = samples as f64;
    let phat = hits as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let centre = (phat + z2 / (2.0 * n)) / denom;
    let half = Z95 / denom * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt();
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

/// Whether a homomorphism count meets the threshold `(1+δ) p^{e} n^{v}`,
/// allowing for rounding in the threshold itself.
pub fn meets_threshold(hom: f64, threshold: f64) -> bool {
    hom >= threshold - 1e-9 * threshold.abs().max(1.0)
}

pub fn mc_upper_tail(
    h: &Digraph,
    n: usize,
    p: f64,
    delta: f64,
    samples: u64,
    seed: u64,
) -> Result<TailEstimate, SimError> {
    if samples == 0 {
        return Err(SimError::NoSamples);
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(SimError::BadProbability(p));
    }
    check_map_cap(h, n)?;
    let threshold = (1.0 + delta) * p.powi(h.edge_count() as i32) * (n as f64).powi(h.vertex_count() as i32);
    if threshold <= 0.0 {
        return Ok(TailEstimate {
            neg_log_p: 0.0,
            half_width: 0.0,
            samples,
            hits: samples,
            ci: (1.0, 1.0),
            exact: true,
            one_sided: false,
        });
    }
    let counter = HomCounter::new(h);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0;
    for _ in 0..samples {
        let g = sample_with(n, p, &mut rng);
        if meets_threshold(counter.count(&g), threshold) {
            hits += 1;
        }
    }
    let ci = wilson_interval(hits, samples);
    let one_sided = hits == 0;
    let neg_log_p = if one_sided { -ci.1.ln() } else { -(hits as f64 / samples as f64).ln() };
    let half_width = if one_sided { 0.0 } else { 0.5 * (ci.1.ln() - ci.0.ln()) };
    Ok(TailEstimate { neg_log_p, half_width, samples, hits, ci, exact: false, one_sided })
}

/// `ln C(m, k)` as a sum of logarithms.
fn ln_choose(m: u64, k: u64) -> f64 {
    let k = k.min(m - k);
    (1..=k).map(|i| ((m - k + i) as f64 / i as f64).ln()).sum()
}

/// `−ln P(Bin(m, q) ≥ k)`, summing the pmf from `k` upward in log space.
pub fn binomial_neg_log_tail(m: u64, q: f64, k: u64) -> f64 {
    if k == 0 {
        return 0.0;
    }
    if k > m || q <= 0.0 {
        return f64::INFINITY;
    }
    if q >= 1.0 {
        return 0.0;
    }
    let ln_first = ln_choose(m, k) + k as f64 * q.ln() + (m - k) as f64 * (-q).ln_1p();
    let odds = q / (1.0 - q);
    let (mut sum, mut term) = (1.0f64, 1.0f64);
    for j in k..m {
        term *= (m - j) as f64 / (j + 1) as f64 * odds;
        sum += term;
        if term < 1e-17 * sum && (j as f64) > m as f64 * q {
            break;
        }
    }
    -(ln_first + sum.ln())
}

/// Exact tail of the 2-cycle count, paired with its asymptotic formula.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoCycleTail {
    /// Unordered pairs `n(n−1)/2`.
    pub pairs: u64,
    /// Threshold on bidirectional pairs, `⌈(1+δ) m p²⌉`.
    pub threshold: u64,
    /// `−ln P(Bin(m, p²) ≥ threshold)`.
    pub exact: f64,
    /// `½ n² p² [(1+δ) ln(1+δ) − δ]`.
    pub formula: f64,
}

impl TwoCycleTail {
    pub fn ratio(&self) -> f64 {
        self.exact / self.formula
    }
}

/// The 2-cycle count is twice the number of bidirectional pairs, a
/// `Bin(n(n−1)/2, p²)` variable.
pub fn binomial_tail_c2(n: u64, p: f64, delta: f64) -> TwoCycleTail {
    let pairs = n * n.saturating_sub(1) / 2;
    let q = p * p;
    let mean_target = (1.0 + delta) * pairs as f64 * q;
    // `p*p` carries rounding; a target one ulp above an integer still means that integer.
    let threshold = (mean_target - 1e-9 * mean_target).ceil().max(0.0) as u64;
    let formula = 0.5 * (n as f64).powi(2) * q * ((1.0 + delta) * (1.0 + delta).ln() - delta);
    TwoCycleTail { pairs, threshold, exact: binomial_neg_log_tail(pairs, q, threshold), formula }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn wilson_contains_estimate() {
        let (lo, hi) = wilson_interval(30, 100);
        assert!(lo < 0.3 && 0.3 < hi);
        let (lo, hi) = wilson_interval(0, 50);
        assert_eq!(lo, 0.0);
        assert!(hi > 0.0 && hi < 0.1);
    }

    #[test]
    fn ln_choose_small() {
        assert!((ln_choose(10, 3) - 120f64.ln()).abs() < 1e-13);
        assert_eq!(ln_choose(5, 0), 0.0);
        assert!((ln_choose(5, 5)).abs() < 1e-15);
    }

    #[test]
    fn binomial_tail_small_exact() {
        // P(Bin(4, 1/2) ≥ 3) = 5/16.
        assert!((binomial_neg_log_tail(4, 0.5, 3) - (16.0f64 / 5.0).ln()).abs() < 1e-14);
        assert_eq!(binomial_neg_log_tail(4, 0.5, 0), 0.0);
        assert_eq!(binomial_neg_log_tail(4, 0.5, 5), f64::INFINITY);
    }

    #[test]
    fn threshold_zero_is_exact() {
        let est = mc_upper_tail(&families::cyclic_triangle(), 5, 0.3, -1.0, 10, 0).unwrap();
        assert!(est.exact);
        assert_eq!(est.neg_log_p, 0.0);
        assert_eq!(est.half_width, 0.0);
        assert_eq!(mc_upper_tail(&families::cyclic_triangle(), 5, 0.3, 0.0, 0, 0), Err(SimError::NoSamples));
    }

    #[test]
    fn unreachable_threshold_is_one_sided() {
        let est = mc_upper_tail(&families::single_edge(), 4, 0.01, 50.0, 200, 1).unwrap();
        assert!(est.one_sided);
        assert_eq!(est.hits, 0);
        assert!(est.neg_log_p > 0.0);
    }

    #[test]
    fn median_tail_near_log_two() {
        let t = binomial_tail_c2(400, 0.1, 0.0);
        assert_eq!(t.formula, 0.0);
        assert!((t.exact - 2f64.ln()).abs() < 0.05);
    }
}
