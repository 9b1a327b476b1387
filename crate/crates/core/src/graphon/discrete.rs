//! Upper bound on the finite-n problem
//! `Φ_{n,p}(H, δ) = inf { I_p(Q) : Q ∈ [0,1]^{n×n}, t(H, Q) ≥ (1+δ) p^{e(H)} }`
//! by projected gradient on a quadratic penalty.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::entropy::{check_p, ip_derivative, ip_unchecked};
use super::matrix::{hom_density, WeightedDigraphMatrix};
use super::step::clique_side;
use crate::analysis::Analysis;
use crate::digraph::Digraph;
use crate::error::SimError;
use crate::variational::{solve_f, SolverConfig};

pub const DISCRETE_N_CAP: usize = 8;
pub const DISCRETE_V_CAP: usize = 4;

const ROUNDS: usize = 5;
const STEPS_PER_ROUND: usize = 400;

/// The pattern together with all maps `V(H) → [n]`, for exact densities and
/// gradients over the off-diagonal entries.
#[derive(Debug, Clone)]
pub struct DensityModel {
    n: usize,
    /// Per map, the off-diagonal index of each edge image, or `None` when
    /// the edge lands on the diagonal.
    maps: Vec<Vec<Option<usize>>>,
    norm: f64,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    i * (n - 1) + if j > i { j - 1 } else { j }
}

impl DensityModel {
    pub fn new(h: &Digraph, n: usize) -> Self {
        let v = h.vertex_count();
        let edges: Vec<(usize, usize)> = h.edges().collect();
        let total = n.pow(v as u32);
        let maps = (0..total)
            .map(|code| {
                let image: Vec<usize> = (0..v).map(|i| (code / n.pow(i as u32)) % n).collect();
                edges.iter().map(|&(a, b)| (image[a] != image[b]).then(|| pair_index(n, image[a], image[b]))).collect()
            })
            .collect();
        Self { n, maps, norm: (n as f64).powi(v as i32) }
    }

    pub fn dimension(&self) -> usize {
        self.n * (self.n - 1)
    }

    /// `t(H, Q)` for off-diagonal entries `q`.
    pub fn density(&self, q: &[f64]) -> f64 {
        let hom: f64 = self.maps.iter().map(|m| m.iter().map(|e| e.map_or(0.0, |k| q[k])).product::<f64>()).sum();
        hom / self.norm
    }

    /// `t(H, Q)` and its gradient, using products of all other edge factors.
    pub fn density_and_gradient(&self, q: &[f64], grad: &mut [f64]) -> f64 {
        grad.fill(0.0);
        let mut hom = 0.0;
        let mut factors = Vec::new();
        for m in &self.maps {
            if m.iter().any(|e| e.is_none()) {
                continue;
            }
            factors.clear();
            factors.extend(m.iter().map(|e| q[e.expect("checked")]));
            hom += factors.iter().product::<f64>();
            for (i, e) in m.iter().enumerate() {
                let others: f64 = factors.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, f)| f).product();
                grad[e.expect("checked")] += others;
            }
        }
        for g in grad.iter_mut() {
            *g /= self.norm;
        }
        hom / self.norm
    }
}

/// `I_p(Q) + μ · max(0, target − t(H, Q))²`.
pub fn penalty_objective(model: &DensityModel, q: &[f64], p: f64, target: f64, mu: f64) -> f64 {
    let entropy: f64 = q.iter().map(|&x| ip_unchecked(x, p)).sum();
    let gap = (target - model.density(q)).max(0.0);
    entropy + mu * gap * gap
}

/// Gradient of [`penalty_objective`] in the off-diagonal entries.
pub fn penalty_gradient(model: &DensityModel, q: &[f64], p: f64, target: f64, mu: f64) -> Vec<f64> {
    let mut dt = vec![0.0; q.len()];
    let t = model.density_and_gradient(q, &mut dt);
    let gap = (target - t).max(0.0);
    q.iter().zip(&dt).map(|(&x, &d)| ip_derivative(x, p) - 2.0 * mu * gap * d).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StartOutcome {
    pub label: String,
    /// `I_p` of the start after feasibility repair, before optimizing.
    pub repaired_start: Option<f64>,
    /// `I_p` after optimizing and repairing.
    pub optimized: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhiUpper {
    /// Best feasible `I_p(Q)` found.
    pub value: f64,
    pub best_start: String,
    pub starts: Vec<StartOutcome>,
    /// Off-diagonal entries of the best matrix, row-major.
    pub best_entries: Vec<f64>,
}

/// Upper bound on `Φ_{n,p}(H, δ)` from constant, planted-hub and
/// planted-clique starts plus `restarts` random ones.
pub fn discrete_phi_upper(
    h: &Digraph,
    n: usize,
    p: f64,
    delta: f64,
    restarts: usize,
    seed: u64,
) -> Result<PhiUpper, SimError> {
    check_p(p)?;
    if !(2..=DISCRETE_N_CAP).contains(&n) {
        return Err(SimError::CapExceeded {
            what: "n for the discrete optimizer",
            value: n as f64,
            cap: DISCRETE_N_CAP as f64,
        });
    }
    if h.vertex_count() > DISCRETE_V_CAP {
        return Err(SimError::CapExceeded {
            what: "v(H) for the discrete optimizer",
            value: h.vertex_count() as f64,
            cap: DISCRETE_V_CAP as f64,
        });
    }
    let model = DensityModel::new(h, n);
    let target = (1.0 + delta) * p.powi(h.edge_count() as i32);

    let mut starts = vec![
        ("constant".to_string(), vec![p; model.dimension()]),
        ("planted hub".to_string(), planted_hub(h, n, p, delta)?.off_diagonal()),
        ("planted clique".to_string(), planted_clique(h, n, p, delta).off_diagonal()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for r in 0..restarts {
        let q = (0..model.dimension()).map(|_| rng.gen_range(p..=1.0)).collect();
        starts.push((format!("random {r}"), q));
    }

    let mut outcomes = Vec::new();
    let mut best: Option<(f64, String, Vec<f64>)> = None;
    for (label, q0) in starts {
        let repaired_start = repair(&model, &q0, target).map(|q| entropy(&q, p));
        let optimized = repair(&model, &optimize(&model, q0, p, target), target);
        let value = optimized.as_ref().map(|q| entropy(q, p));
        if let (Some(v), Some(q)) = (value, optimized) {
            if best.as_ref().is_none_or(|b| v < b.0) {
                best = Some((v, label.clone(), q));
            }
        }
        outcomes.push(StartOutcome { label, repaired_start, optimized: value });
    }
    let (value, best_start, best_entries) = best.ok_or(SimError::NoFeasiblePoint)?;
    Ok(PhiUpper { value, best_start, starts: outcomes, best_entries })
}

fn entropy(q: &[f64], p: f64) -> f64 {
    q.iter().map(|&x| ip_unchecked(x, p)).sum()
}

fn optimize(model: &DensityModel, mut q: Vec<f64>, p: f64, target: f64) -> Vec<f64> {
    let mut mu = 10.0 / (target * target);
    for _ in 0..ROUNDS {
        let mut step = 1e-2;
        let mut value = penalty_objective(model, &q, p, target, mu);
        for _ in 0..STEPS_PER_ROUND {
            let grad = penalty_gradient(model, &q, p, target, mu);
            let mut accepted = false;
            while step > 1e-14 {
                let trial: Vec<f64> = q.iter().zip(&grad).map(|(x, g)| (x - step * g).clamp(0.0, 1.0)).collect();
                let decrease: f64 = grad.iter().zip(q.iter().zip(&trial)).map(|(g, (a, b))| g * (a - b)).sum();
                let trial_value = penalty_objective(model, &trial, p, target, mu);
                if trial_value <= value - 1e-4 * decrease {
                    let done = value - trial_value <= 1e-13 * value.abs().max(1.0);
                    q = trial;
                    value = trial_value;
                    accepted = !done;
                    step *= 2.0;
                    break;
                }
                step *= 0.5;
            }
            if !accepted {
                break;
            }
        }
        mu *= 10.0;
    }
    q
}

/// Smallest `λ` (to bisection precision) with `t(H, Q + λ(J − Q)) ≥ target`,
/// where `J` is the complete digraph. `None` if even `J` falls short.
fn repair(model: &DensityModel, q: &[f64], target: f64) -> Option<Vec<f64>> {
    let mix = |lambda: f64| -> Vec<f64> { q.iter().map(|&x| x + lambda * (1.0 - x)).collect() };
    if model.density(q) >= target {
        return Some(q.to_vec());
    }
    if model.density(&mix(1.0)) < target {
        return None;
    }
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if model.density(&mix(mid)) >= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(mix(hi))
}

/// Hub rows and columns sized from the `F` argmin: `round(x_i p^Δ n)` hub
/// vertices with edges into (or from) the first `round(y_i n)` vertices.
fn planted_hub(h: &Digraph, n: usize, p: f64, delta: f64) -> Result<WeightedDigraphMatrix, SimError> {
    let mut q = WeightedDigraphMatrix::constant(n, p);
    let point = Analysis::new(h)
        .ok()
        .filter(|_| delta > 0.0)
        .and_then(|a| {
            let cfg = SolverConfig { grid: 129, ..SolverConfig::default() };
            solve_f(&a.f, delta, &cfg).ok()
        })
        .map(|r| r.argmin);
    let Some(pt) = point else {
        return Ok(q);
    };
    let scale = p.powi(h.max_degree() as i32) * n as f64;
    let size = |v: f64| (v.round() as usize).min(n);
    let (mut a1, a2) = (size(pt.x1 * scale), size(pt.x2 * scale));
    if a1 == 0 && a2 == 0 {
        a1 = 1;
    }
    let (b1, b2) = (size(pt.y1 * n as f64).max(1), size(pt.y2 * n as f64));
    for i in 0..a1 {
        for j in (0..b1).filter(|&j| j != i) {
            q.set(i, j, 1.0);
        }
    }
    for j in 0..a2 {
        for i in (0..b2).filter(|&i| i != j) {
            q.set(i, j, 1.0);
        }
    }
    Ok(q)
}

/// Complete bidirectional clique on the first `max(2, round(c n))` vertices,
/// `c` the clique-branch side.
fn planted_clique(h: &Digraph, n: usize, p: f64, delta: f64) -> WeightedDigraphMatrix {
    let c = clique_side(delta, p, h.vertex_count(), h.max_degree());
    let s = ((c * n as f64).round() as usize).clamp(2, n);
    let mut q = WeightedDigraphMatrix::constant(n, p);
    for i in 0..s {
        for j in (0..s).filter(|&j| j != i) {
            q.set(i, j, 1.0);
        }
    }
    q
}

/// `t(H, Q)` through the dense model, for cross-checks against [`hom_density`].
pub fn model_density(h: &Digraph, q: &WeightedDigraphMatrix) -> Result<(f64, f64), SimError> {
    let model = DensityModel::new(h, q.n());
    Ok((model.density(&q.off_diagonal()), hom_density(h, q)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graphon::sample_digraph;

    #[test]
    fn model_agrees_with_backtracking() {
        let g = sample_digraph(5, 0.6, 7);
        for h in [families::transitive_triangle(), families::out_star(3), families::two_cycle()] {
            let (a, b) = model_density(&h, &g).unwrap();
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn gradient_matches_differences() {
        let h = families::cyclic_triangle();
        let model = DensityModel::new(&h, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let q: Vec<f64> = (0..model.dimension()).map(|_| rng.gen_range(0.1..0.9)).collect();
        let (p, target, mu) = (0.3, 0.5, 50.0);
        let grad = penalty_gradient(&model, &q, p, target, mu);
        for k in 0..q.len() {
            let eps = 1e-6;
            let mut up = q.clone();
            let mut dn = q.clone();
            up[k] += eps;
            dn[k] -= eps;
            let fd = (penalty_objective(&model, &up, p, target, mu) - penalty_objective(&model, &dn, p, target, mu))
                / (2.0 * eps);
            assert!((fd - grad[k]).abs() <= 1e-5 * grad[k].abs().max(1.0));
        }
    }

    #[test]
    fn triangle_bound_beats_planted_starts() {
        let h = families::transitive_triangle();
        let out = discrete_phi_upper(&h, 6, 0.5, 0.2, 1, 11).unwrap();
        for s in &out.starts {
            if let Some(v) = s.optimized {
                assert!(out.value <= v);
            }
        }
        let planted: Vec<f64> =
            out.starts.iter().filter(|s| s.label.starts_with("planted")).filter_map(|s| s.repaired_start).collect();
        assert!(out.value <= planted.iter().cloned().fold(f64::INFINITY, f64::min));
        assert!(out.value > 0.0);
    }

    #[test]
    fn caps() {
        let h = families::directed_cycle(5);
        assert!(matches!(discrete_phi_upper(&h, 4, 0.5, 0.1, 0, 0), Err(SimError::CapExceeded { .. })));
        let h = families::single_edge();
        assert!(matches!(discrete_phi_upper(&h, 9, 0.5, 0.1, 0, 0), Err(SimError::CapExceeded { .. })));
    }
}
