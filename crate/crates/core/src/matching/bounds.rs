//! Fractional matchings on a witness and the directional weights `a_S`, `b_S`.

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::simplex::{maximize, LpError, Relation, Row, Q};
use super::witness::{ArcDir, BipartiteWitness};
use crate::error::GraphError;

/// Cap on the arc count accepted by [`brute_force_directional_bounds`].
pub const BRUTE_FORCE_ARC_CAP: usize = 24;

/// Non-negative rational weight per arc, indexed like `BipartiteWitness::arcs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalMatching {
    pub weights: Vec<Rational64>,
}

impl FractionalMatching {
    pub fn value(&self) -> Rational64 {
        self.weights.iter().fold(Q::zero(), |a, b| a + b)
    }

    /// Total weight on arcs of one direction.
    pub fn directional(&self, w: &BipartiteWitness, dir: ArcDir) -> Rational64 {
        w.arcs.iter().zip(&self.weights).filter(|(a, _)| a.dir == dir).fold(Q::zero(), |acc, (_, &x)| acc + x)
    }

    /// Incident weight sums for `(s_side, t_side)`, by position.
    pub fn loads(&self, w: &BipartiteWitness) -> (Vec<Rational64>, Vec<Rational64>) {
        let mut s_load = vec![Q::zero(); w.s_side.len()];
        let mut t_load = vec![Q::zero(); w.t_side.len()];
        for (arc, &x) in w.arcs.iter().zip(&self.weights) {
            s_load[w.s_index(arc.s)] += x;
            t_load[w.t_index(arc.t)] += x;
        }
        (s_load, t_load)
    }

    /// Weights in `[0, 1]` and every vertex load at most 1.
    pub fn is_valid(&self, w: &BipartiteWitness) -> bool {
        let in_range = self.weights.iter().all(|x| *x >= Q::zero() && *x <= Q::one());
        let (s_load, t_load) = self.loads(w);
        in_range && s_load.iter().chain(&t_load).all(|l| *l <= Q::one())
    }
}

/// `a_S` and `b_S` with the fractional matchings attaining them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionalBounds {
    pub a: Rational64,
    pub b: Rational64,
    pub a_matching: FractionalMatching,
    pub b_matching: FractionalMatching,
}

/// Integer view, for serialization in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectionalCounts {
    pub a: i64,
    pub b: i64,
}

impl DirectionalBounds {
    pub fn counts(&self) -> Option<DirectionalCounts> {
        (self.a.is_integer() && self.b.is_integer())
            .then(|| DirectionalCounts { a: self.a.to_integer(), b: self.b.to_integer() })
    }
}

fn vertex_rows(w: &BipartiteWitness, s_rel: Relation) -> Vec<Row> {
    let n = w.arcs.len();
    let mut rows = Vec::with_capacity(w.s_side.len() + w.t_side.len());
    for &s in &w.s_side {
        rows.push(Row {
            coeffs: w.arcs.iter().map(|a| if a.s == s { Q::one() } else { Q::zero() }).collect(),
            rel: s_rel,
            rhs: Q::one(),
        });
    }
    for &t in &w.t_side {
        rows.push(Row {
            coeffs: w.arcs.iter().map(|a| if a.t == t { Q::one() } else { Q::zero() }).collect(),
            rel: Relation::Le,
            rhs: Q::one(),
        });
    }
    debug_assert!(rows.iter().all(|r| r.coeffs.len() == n));
    rows
}

/// Maximum total weight of a fractional matching, by exact LP.
pub fn max_fractional_matching_value(w: &BipartiteWitness) -> Rational64 {
    let objective = vec![Q::one(); w.arcs.len()];
    maximize(&objective, &vertex_rows(w, Relation::Le))
        .expect("the zero matching is feasible and weights are bounded")
        .value
}

fn directional_lp(w: &BipartiteWitness, dir: ArcDir) -> Result<FractionalMatching, GraphError> {
    let objective: Vec<Q> = w.arcs.iter().map(|a| if a.dir == dir { Q::one() } else { Q::zero() }).collect();
    match maximize(&objective, &vertex_rows(w, Relation::Eq)) {
        Ok(sol) => Ok(FractionalMatching { weights: sol.x }),
        Err(LpError::Infeasible) => Err(GraphError::NotSaturable),
        Err(LpError::Unbounded) => unreachable!("weights are bounded by the vertex rows"),
    }
}

/// `a_S` and `b_S`: the largest `S → T` (resp. `T → S`) weight over maximum
/// fractional matchings.
///
/// Every maximum fractional matching saturates `S` when `τ(F) = |S|`, so the
/// two-stage definition is solved as one LP with equality rows on `S`.
pub fn directional_bounds(w: &BipartiteWitness) -> Result<DirectionalBounds, GraphError> {
    let a_matching = directional_lp(w, ArcDir::Out)?;
    let b_matching = directional_lp(w, ArcDir::In)?;
    Ok(DirectionalBounds {
        a: a_matching.directional(w, ArcDir::Out),
        b: b_matching.directional(w, ArcDir::In),
        a_matching,
        b_matching,
    })
}

/// Exhaustive oracle for [`directional_bounds`]: enumerates the integral
/// matchings saturating `S` and counts arcs per direction. Returns `(a, b)`.
pub fn brute_force_directional_bounds(w: &BipartiteWitness) -> Result<(i64, i64), GraphError> {
    if w.arcs.len() > BRUTE_FORCE_ARC_CAP {
        return Err(GraphError::TooManyArcs { arcs: w.arcs.len(), cap: BRUTE_FORCE_ARC_CAP });
    }
    let mut by_s: Vec<Vec<(usize, bool)>> = vec![Vec::new(); w.s_side.len()];
    for arc in &w.arcs {
        by_s[w.s_index(arc.s)].push((w.t_index(arc.t), arc.dir == ArcDir::Out));
    }
    let mut used = vec![false; w.t_side.len()];
    let mut best: Option<(i64, i64)> = None;
    search(&by_s, 0, &mut used, 0, 0, &mut best);
    best.ok_or(GraphError::NotSaturable)
}

fn search(
    by_s: &[Vec<(usize, bool)>],
    s: usize,
    used: &mut [bool],
    outs: i64,
    ins: i64,
    best: &mut Option<(i64, i64)>,
) {
    if s == by_s.len() {
        *best = Some(match *best {
            None => (outs, ins),
            Some((a, b)) => (a.max(outs), b.max(ins)),
        });
        return;
    }
    for &(t, is_out) in &by_s[s] {
        if used[t] {
            continue;
        }
        used[t] = true;
        let (o, i) = if is_out { (outs + 1, ins) } else { (outs, ins + 1) };
        search(by_s, s + 1, used, o, i, best);
        used[t] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_sets::max_degree_core;
    use crate::families;
    use crate::matching::witness::induced_bipartite;
    use crate::matching::{max_matching, min_vertex_cover, Arc};

    fn witness(d: &crate::Digraph, set: &[usize]) -> BipartiteWitness {
        induced_bipartite(d, &max_degree_core(d), set).unwrap()
    }

    fn ab(w: &BipartiteWitness) -> (i64, i64) {
        let c = directional_bounds(w).unwrap().counts().unwrap();
        (c.a, c.b)
    }

    #[test]
    fn star_bounds() {
        let w = witness(&families::out_star(3), &[0]);
        assert_eq!(ab(&w), (1, 0));
        assert_eq!(brute_force_directional_bounds(&w).unwrap(), (1, 0));
        assert_eq!(max_fractional_matching_value(&w), Q::one());
    }

    #[test]
    fn triangle_bounds() {
        let w = witness(&families::transitive_triangle(), &[2]);
        assert_eq!(ab(&w), (1, 1));
        assert_eq!(brute_force_directional_bounds(&w).unwrap(), (1, 1));
        assert_eq!(max_matching(&w), 1);
        assert_eq!(max_fractional_matching_value(&w), Q::one());
    }

    #[test]
    fn shared_sink_bounds() {
        let d = families::shared_sink_construction(3);
        let w = witness(&d, &[0, 1, 2]);
        assert_eq!(ab(&w), (1, 3));
        assert_eq!(brute_force_directional_bounds(&w).unwrap(), (1, 3));
    }

    #[test]
    fn all_out_perfect_matching() {
        let arcs = (0..3).map(|i| Arc { s: i, t: 10 + i, dir: ArcDir::Out }).collect();
        let w = BipartiteWitness::new(vec![0, 1, 2], vec![10, 11, 12], arcs).unwrap();
        assert_eq!(ab(&w), (3, 0));
        assert_eq!(brute_force_directional_bounds(&w).unwrap(), (3, 0));
    }

    #[test]
    fn no_out_arcs_gives_zero_a() {
        let w = BipartiteWitness::new(vec![0], vec![1], vec![Arc { s: 0, t: 1, dir: ArcDir::In }]).unwrap();
        assert_eq!(ab(&w), (0, 1));
        assert_eq!(brute_force_directional_bounds(&w).unwrap(), (0, 1));
    }

    #[test]
    fn unsaturable_is_an_error() {
        let arcs = vec![Arc { s: 0, t: 5, dir: ArcDir::Out }, Arc { s: 1, t: 5, dir: ArcDir::Out }];
        let w = BipartiteWitness::new(vec![0, 1], vec![5], arcs).unwrap();
        assert_eq!(directional_bounds(&w), Err(GraphError::NotSaturable));
        assert_eq!(brute_force_directional_bounds(&w), Err(GraphError::NotSaturable));
    }

    #[test]
    fn two_disjoint_arcs_fractional_value() {
        let arcs = vec![Arc { s: 0, t: 5, dir: ArcDir::Out }, Arc { s: 1, t: 6, dir: ArcDir::In }];
        let w = BipartiteWitness::new(vec![0, 1], vec![5, 6], arcs).unwrap();
        assert_eq!(max_fractional_matching_value(&w), Q::from_integer(2));
    }

    #[test]
    fn optimal_matchings_saturate_s() {
        let d = families::gap_construction(3);
        let w = witness(&d, &[0, 1, 2, 3]);
        let bounds = directional_bounds(&w).unwrap();
        for m in [&bounds.a_matching, &bounds.b_matching] {
            assert!(m.is_valid(&w));
            let (s_load, _) = m.loads(&w);
            assert!(s_load.iter().all(|l| *l == Q::one()));
        }
        assert_eq!(ab(&w), (2, 4));
        assert_eq!(min_vertex_cover(&w).size(), 4);
    }

    #[test]
    fn brute_force_cap() {
        let d = families::gap_construction(5);
        let w = witness(&d, &[0, 1, 2, 3, 4, 5]);
        assert!(matches!(brute_force_directional_bounds(&w), Err(GraphError::TooManyArcs { .. })));
    }
}
