//! Block-constant directed graphons and the planted hub and clique candidates.

use serde::{Deserialize, Serialize};

use super::entropy::{check_p, ip_unchecked};
use crate::digraph::Digraph;
use crate::error::SimError;

/// Cap on `v(H)` for [`t_step`].
pub const STEP_VERTEX_CAP: usize = 10;
/// Cap on the block count for [`t_step`].
pub const STEP_BLOCK_CAP: usize = 12;

/// `W(x, y) = values[i][j]` for `x` in block `i`, `y` in block `j`. Not
/// required to be symmetric.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepGraphon {
    measures: Vec<f64>,
    values: Vec<Vec<f64>>,
}

impl StepGraphon {
    pub fn new(measures: Vec<f64>, values: Vec<Vec<f64>>) -> Result<Self, SimError> {
        let k = measures.len();
        if k == 0 {
            return Err(SimError::InvalidGraphon("no blocks".into()));
        }
        if let Some((block, &measure)) = measures.iter().enumerate().find(|(_, m)| !(**m >= 0.0)) {
            return Err(SimError::InfeasibleMeasures { block, measure });
        }
        let total: f64 = measures.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(SimError::InvalidGraphon(format!("measures sum to {total}")));
        }
        if values.len() != k || values.iter().any(|r| r.len() != k) {
            return Err(SimError::InvalidGraphon(format!("value matrix is not {k}×{k}")));
        }
        if values.iter().flatten().any(|v| !(0.0..=1.0).contains(v)) {
            return Err(SimError::InvalidGraphon("value outside [0, 1]".into()));
        }
        Ok(Self { measures, values })
    }

    /// `W ≡ c` on a single block.
    pub fn constant(c: f64) -> Result<Self, SimError> {
        Self::new(vec![1.0], vec![vec![c]])
    }

    pub fn block_count(&self) -> usize {
        self.measures.len()
    }

    pub fn measures(&self) -> &[f64] {
        &self.measures
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }
}

/// Vertex order in which every vertex after the first of its component has
/// an already placed neighbour, so partial products prune early.
pub(crate) fn search_order(h: &Digraph) -> Vec<usize> {
    let n = h.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in h.out_neighbors(u).iter().chain(h.in_neighbors(u)) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// For each position in `order`, the edges to earlier positions as
/// `(earlier position, current is tail)`.
pub(crate) fn back_edges(h: &Digraph, order: &[usize]) -> Vec<Vec<(usize, bool)>> {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut list: Vec<(usize, bool)> =
                h.out_neighbors(v).iter().filter(|&&w| pos[w] < i).map(|&w| (pos[w], true)).collect();
            list.extend(h.in_neighbors(v).iter().filter(|&&w| pos[w] < i).map(|&w| (pos[w], false)));
            list
        })
        .collect()
}

/// `t(H, W)`: exact sum over block assignments of vertex measures times edge
/// values.
pub fn t_step(h: &Digraph, w: &StepGraphon) -> Result<f64, SimError> {
    if h.vertex_count() > STEP_VERTEX_CAP {
        return Err(SimError::CapExceeded {
            what: "v(H) for step-graphon density",
            value: h.vertex_count() as f64,
            cap: STEP_VERTEX_CAP as f64,
        });
    }
    if w.block_count() > STEP_BLOCK_CAP {
        return Err(SimError::CapExceeded {
            what: "block count",
            value: w.block_count() as f64,
            cap: STEP_BLOCK_CAP as f64,
        });
    }
    let order = search_order(h);
    let back = back_edges(h, &order);
    let mut blocks = vec![0usize; order.len()];
    Ok(t_rec(w, &back, 0, 1.0, &mut blocks))
}

fn t_rec(w: &StepGraphon, back: &[Vec<(usize, bool)>], i: usize, acc: f64, blocks: &mut [usize]) -> f64 {
    if i == back.len() {
        return acc;
    }
    let mut total = 0.0;
    for b in 0..w.block_count() {
        let mut weight = acc * w.measures[b];
        for &(j, is_tail) in &back[i] {
            if weight == 0.0 {
                break;
            }
            weight *= if is_tail { w.values[b][blocks[j]] } else { w.values[blocks[j]][b] };
        }
        if weight == 0.0 {
            continue;
        }
        blocks[i] = b;
        total += t_rec(w, back, i + 1, weight, blocks);
    }
    total
}

/// `E[I_p(W)] = Σ_{i,j} μ_i μ_j I_p(W_ij)`.
pub fn ip_mass(w: &StepGraphon, p: f64) -> Result<f64, SimError> {
    check_p(p)?;
    let mut total = 0.0;
    for (i, row) in w.values.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            total += w.measures[i] * w.measures[j] * ip_unchecked(v, p);
        }
    }
    Ok(total)
}

/// Block roles of [`hub_graphon`], in block order.
pub const HUB_BLOCKS: [&str; 7] = ["A1∩A2", "A1\\A2", "A2\\A1", "(B1∩B2)\\(A1∪A2)", "B1\\B2", "B2\\B1", "rest"];

/// Directed hub: `|A_i| = x_i p^Δ`, `|A1∩A2| = (x1∧x2) p^Δ`, `|B_i| = y_i`,
/// `|B1∩B2| = y1∧y2`, with `A1 ∪ A2 ⊆ B1 ∩ B2`. `W = 1` on `A1 × B1` and on
/// `B2 × A2`, `p` elsewhere.
///
/// When one hub is empty the other only has to sit inside its own `B`; the
/// overflow from `B1∩B2` is then taken from `B1\B2` (or `B2\B1`), which is
/// indistinguishable from it in that case.
pub fn hub_graphon(x1: f64, x2: f64, y1: f64, y2: f64, p: f64, max_degree: usize) -> Result<StepGraphon, SimError> {
    check_p(p)?;
    for v in [x1, x2, y1, y2] {
        if !(v >= 0.0) {
            return Err(SimError::BadDensity(v));
        }
    }
    let scale = p.powi(max_degree as i32);
    let (a1, a2, a12) = (x1 * scale, x2 * scale, x1.min(x2) * scale);
    let (b1, b2, b12) = (y1, y2, y1.min(y2));
    let mut m = [a12, a1 - a12, a2 - a12, b12 - (a1 + a2 - a12), b1 - b12, b2 - b12, 1.0 - (b1 + b2 - b12)];
    if m[3] < 0.0 {
        let deficit = -m[3];
        if a2 == 0.0 {
            m[4] -= deficit;
            m[3] = 0.0;
        } else if a1 == 0.0 {
            m[5] -= deficit;
            m[3] = 0.0;
        }
    }
    for (block, &measure) in m.iter().enumerate() {
        // Tiny negatives are rounding in the differences above.
        if measure < -1e-15 {
            return Err(SimError::InfeasibleMeasures { block, measure });
        }
    }
    let m = m.map(|v| v.max(0.0));
    // Membership per block: (in A1, in A2, in B1, in B2).
    let member = [
        (true, true, true, true),
        (true, false, true, true),
        (false, true, true, true),
        (false, false, true, true),
        (false, false, true, false),
        (false, false, false, true),
        (false, false, false, false),
    ];
    let values = member
        .iter()
        .map(|&(ra1, _, _, rb2)| {
            member.iter().map(|&(_, ca2, cb1, _)| if (ra1 && cb1) || (rb2 && ca2) { 1.0 } else { p }).collect()
        })
        .collect();
    let total: f64 = m.iter().sum();
    let mut measures = m.to_vec();
    measures[6] += 1.0 - total;
    StepGraphon::new(measures, values)
}

/// Bidirectional clique of side `c = δ^{1/v(H)} p^{Δ/2}`: `W = 1` on the
/// `c × c` block, `p` elsewhere.
pub fn clique_graphon(delta: f64, p: f64, vertex_count: usize, max_degree: usize) -> Result<StepGraphon, SimError> {
    check_p(p)?;
    let c = clique_side(delta, p, vertex_count, max_degree);
    if c > 1.0 {
        return Err(SimError::CliqueTooLarge(c));
    }
    StepGraphon::new(vec![c, 1.0 - c], vec![vec![1.0, p], vec![p, p]])
}

pub fn clique_side(delta: f64, p: f64, vertex_count: usize, max_degree: usize) -> f64 {
    delta.max(0.0).powf(1.0 / vertex_count as f64) * p.powf(max_degree as f64 / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn brute_t(h: &Digraph, w: &StepGraphon) -> f64 {
        let v = h.vertex_count();
        let k = w.block_count();
        let mut total = 0.0;
        for code in 0..k.pow(v as u32) {
            let blocks: Vec<usize> = (0..v).map(|i| (code / k.pow(i as u32)) % k).collect();
            let mut term: f64 = blocks.iter().map(|&b| w.measures()[b]).product();
            for (a, b) in h.edges() {
                term *= w.values()[blocks[a]][blocks[b]];
            }
            total += term;
        }
        total
    }

    #[test]
    fn constant_graphon_density() {
        let w = StepGraphon::constant(0.3).unwrap();
        for h in [families::transitive_triangle(), families::out_star(3), families::gap_construction(2)] {
            let expected = 0.3f64.powi(h.edge_count() as i32);
            assert!((t_step(&h, &w).unwrap() - expected).abs() < 1e-12 * expected);
        }
        assert_eq!(t_step(&families::two_cycle(), &StepGraphon::constant(1.0).unwrap()).unwrap(), 1.0);
    }

    #[test]
    fn clique_triangle_matches_enumeration() {
        let w = clique_graphon(8.0, 0.1, 3, 2).unwrap();
        let h = families::transitive_triangle();
        let t = t_step(&h, &w).unwrap();
        assert!((t - brute_t(&h, &w)).abs() < 1e-15);
        let c = w.measures()[0];
        assert!(t > c.powi(3));
    }

    #[test]
    fn asymmetric_values_respected() {
        let w = StepGraphon::new(vec![0.5, 0.5], vec![vec![0.2, 1.0], vec![0.0, 0.6]]).unwrap();
        let h = families::single_edge();
        let expected = 0.25 * (0.2 + 1.0 + 0.0 + 0.6);
        assert!((t_step(&h, &w).unwrap() - expected).abs() < 1e-15);
        let h = families::directed_cycle(4);
        assert!((t_step(&h, &w).unwrap() - brute_t(&h, &w)).abs() < 1e-15);
    }

    #[test]
    fn ip_mass_of_clique() {
        let p = 0.01;
        let w = clique_graphon(8.0, p, 3, 2).unwrap();
        let c = w.measures()[0];
        assert!((ip_mass(&w, p).unwrap() - c * c * (1.0 / p).ln()).abs() < 1e-15);
        assert_eq!(ip_mass(&StepGraphon::constant(p).unwrap(), p).unwrap(), 0.0);
    }

    #[test]
    fn row_hub_is_two_blocks() {
        let p = 0.1;
        let w = hub_graphon(2.0, 0.0, 1.0, 0.0, p, 3).unwrap();
        let nonzero: Vec<usize> = (0..7).filter(|&b| w.measures()[b] > 0.0).collect();
        assert_eq!(nonzero, vec![1, 4]);
        assert!((w.measures()[1] - 2e-3).abs() < 1e-15);
        assert_eq!(w.values()[1][4], 1.0);
        assert_eq!(w.values()[4][1], p);
    }

    #[test]
    fn symmetric_hub_is_transpose_symmetric() {
        let w = hub_graphon(0.5, 0.5, 0.8, 0.8, 0.2, 2).unwrap();
        // Swapping hub roles exchanges blocks 1↔2 and 4↔5.
        let swap = [0, 2, 1, 3, 5, 4, 6];
        for i in 0..7 {
            assert_eq!(w.measures()[i], w.measures()[swap[i]]);
            for j in 0..7 {
                assert_eq!(w.values()[i][j], w.values()[swap[j]][swap[i]]);
            }
        }
    }

    #[test]
    fn infeasible_hub_and_clique() {
        assert!(matches!(hub_graphon(5.0, 5.0, 0.1, 0.1, 0.5, 1), Err(SimError::InfeasibleMeasures { block: 3, .. })));
        assert!(matches!(clique_graphon(1e6, 0.5, 2, 1), Err(SimError::CliqueTooLarge(_))));
        let w = clique_graphon(0.0, 0.3, 3, 2).unwrap();
        assert_eq!(ip_mass(&w, 0.3).unwrap(), 0.0);
    }

    #[test]
    fn validation() {
        assert!(StepGraphon::new(vec![0.5, 0.4], vec![vec![0.0; 2]; 2]).is_err());
        assert!(StepGraphon::new(vec![1.0], vec![vec![1.5]]).is_err());
        assert!(StepGraphon::new(vec![1.0, 0.0], vec![vec![0.0]]).is_err());
    }
}
