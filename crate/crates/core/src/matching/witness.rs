use serde::{Deserialize, Serialize};

use crate::core_sets::{check_independent, MaxDegreeCore};
use crate::digraph::Digraph;
use crate::error::GraphError;
use crate::profile::neighborhood_profile;

/// Direction of an arc relative to the cover side `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ArcDir {
    /// `S → T`.
    Out,
    /// `T → S`.
    In,
}

/// One arc of a witness, stored by its `S` and `T` endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub s: usize,
    pub t: usize,
    pub dir: ArcDir,
}

/// Bipartite digraph on `S ∪ T` carrying the arcs of H incident to `S`.
///
/// Opposite arcs between the same pair are kept as two entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteWitness {
    pub s_side: Vec<usize>,
    pub t_side: Vec<usize>,
    pub arcs: Vec<Arc>,
}

impl BipartiteWitness {
    /// Builds a witness from explicit sides and arcs, checking bipartiteness.
    pub fn new(mut s_side: Vec<usize>, mut t_side: Vec<usize>, mut arcs: Vec<Arc>) -> Result<Self, GraphError> {
        s_side.sort_unstable();
        s_side.dedup();
        t_side.sort_unstable();
        t_side.dedup();
        for arc in &arcs {
            let s_ok = s_side.binary_search(&arc.s).is_ok();
            let t_ok = t_side.binary_search(&arc.t).is_ok();
            if !s_ok || !t_ok || arc.s == arc.t {
                return Err(GraphError::ArcNotBipartite(arc.s, arc.t));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();
        Ok(Self { s_side, t_side, arcs })
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// The sub-witness keeping only arcs in one direction.
    pub fn restricted(&self, dir: ArcDir) -> Self {
        Self {
            s_side: self.s_side.clone(),
            t_side: self.t_side.clone(),
            arcs: self.arcs.iter().copied().filter(|a| a.dir == dir).collect(),
        }
    }

    /// Position of `v` in `s_side`.
    pub(crate) fn s_index(&self, v: usize) -> usize {
        self.s_side.binary_search(&v).expect("arc endpoint in S")
    }

    /// Position of `v` in `t_side`.
    pub(crate) fn t_index(&self, v: usize) -> usize {
        self.t_side.binary_search(&v).expect("arc endpoint in T")
    }
}

/// The witness for a non-empty independent set `S` of H*: `T = N(S)` and every
/// edge of H with an endpoint in `S`, direction preserved.
pub fn induced_bipartite(d: &Digraph, core: &MaxDegreeCore, set: &[usize]) -> Result<BipartiteWitness, GraphError> {
    if set.is_empty() {
        return Err(GraphError::EmptySet);
    }
    check_independent(d, core, set)?;
    let nb = neighborhood_profile(d, set);
    let mut arcs = Vec::new();
    for &s in set {
        arcs.extend(d.out_neighbors(s).iter().map(|&t| Arc { s, t, dir: ArcDir::Out }));
        arcs.extend(d.in_neighbors(s).iter().map(|&t| Arc { s, t, dir: ArcDir::In }));
    }
    BipartiteWitness::new(set.to_vec(), nb.n_all.into_iter().collect(), arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_sets::max_degree_core;
    use crate::families;

    #[test]
    fn triangle_witness() {
        let d = families::transitive_triangle();
        let core = max_degree_core(&d);
        let w = induced_bipartite(&d, &core, &[2]).unwrap();
        assert_eq!(w.t_side, vec![0, 1]);
        assert_eq!(w.arcs, vec![Arc { s: 2, t: 0, dir: ArcDir::Out }, Arc { s: 2, t: 1, dir: ArcDir::In },]);
    }

    #[test]
    fn star_witness_is_all_out() {
        let d = families::out_star(4);
        let w = induced_bipartite(&d, &max_degree_core(&d), &[0]).unwrap();
        assert_eq!(w.arc_count(), 4);
        assert!(w.arcs.iter().all(|a| a.dir == ArcDir::Out));
    }

    #[test]
    fn gap_witness_arcs() {
        let d = families::gap_construction(3);
        let w = induced_bipartite(&d, &max_degree_core(&d), &[0, 1, 2, 3]).unwrap();
        let outs: Vec<_> = w.arcs.iter().filter(|a| a.dir == ArcDir::Out).collect();
        assert_eq!(outs.len(), 5);
        assert_eq!(outs.iter().filter(|a| a.t == 4).count(), 3);
        assert_eq!(outs.iter().filter(|a| a.s == 3).count(), 2);
        assert_eq!(w.arc_count(), 20);
    }

    #[test]
    fn two_cycle_keeps_both_arcs() {
        let d = families::two_cycle();
        let w = induced_bipartite(&d, &max_degree_core(&d), &[0]).unwrap();
        assert_eq!(w.arc_count(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        let d = families::directed_cycle(4);
        let core = max_degree_core(&d);
        assert_eq!(induced_bipartite(&d, &core, &[]), Err(GraphError::EmptySet));
        assert_eq!(induced_bipartite(&d, &core, &[1, 2]), Err(GraphError::NotIndependent(1, 2)));
        let bad = BipartiteWitness::new(vec![0], vec![1], vec![Arc { s: 0, t: 2, dir: ArcDir::Out }]);
        assert_eq!(bad, Err(GraphError::ArcNotBipartite(0, 2)));
    }
}
