//! Neighbourhoods of a vertex set and the exponent data each independent set
//! contributes to the tail polynomials.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;

/// Out-, in- and mixed neighbourhoods of a set `S`, all disjoint from `S`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NeighborhoodProfile {
    /// Vertices outside `S` receiving an edge from `S`.
    pub n_plus: BTreeSet<usize>,
    /// Vertices outside `S` sending an edge into `S`.
    pub n_minus: BTreeSet<usize>,
    pub n_all: BTreeSet<usize>,
    pub n_pm: BTreeSet<usize>,
    pub n_plus0: BTreeSet<usize>,
    pub n_minus0: BTreeSet<usize>,
}

pub fn neighborhood_profile(d: &Digraph, set: &[usize]) -> NeighborhoodProfile {
    let members: BTreeSet<usize> = set.iter().copied().collect();
    let n_plus: BTreeSet<usize> =
        set.iter().flat_map(|&u| d.out_neighbors(u).iter().copied()).filter(|v| !members.contains(v)).collect();
    let n_minus: BTreeSet<usize> =
        set.iter().flat_map(|&u| d.in_neighbors(u).iter().copied()).filter(|v| !members.contains(v)).collect();
    NeighborhoodProfile {
        n_all: n_plus.union(&n_minus).copied().collect(),
        n_pm: n_plus.intersection(&n_minus).copied().collect(),
        n_plus0: n_plus.difference(&n_minus).copied().collect(),
        n_minus0: n_minus.difference(&n_plus).copied().collect(),
        n_plus,
        n_minus,
    }
}

/// Per-set exponent data. `a` and `b` stay `None` until the matching bounds
/// are computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetProfile {
    pub set: Vec<usize>,
    /// Members with no in-edges in H.
    pub v_plus: u32,
    /// Members with no out-edges in H.
    pub v_minus: u32,
    /// Members with both.
    pub v_pm: u32,
    /// |N⁺(S)|.
    pub big_a: u32,
    /// |N⁻(S)|.
    pub big_b: u32,
    pub n_plus0: u32,
    pub n_minus0: u32,
    pub n_pm: u32,
    pub a: Option<u32>,
    pub b: Option<u32>,
}

impl SetProfile {
    pub fn size(&self) -> u32 {
        self.set.len() as u32
    }
}

pub fn set_profile(d: &Digraph, set: &[usize]) -> SetProfile {
    let (mut v_plus, mut v_minus, mut v_pm) = (0, 0, 0);
    for &v in set {
        let deg = d.degree(v);
        if deg.in_deg == 0 {
            v_plus += 1;
        } else if deg.out_deg == 0 {
            v_minus += 1;
        } else {
            v_pm += 1;
        }
    }
    let nb = neighborhood_profile(d, set);
    SetProfile {
        set: set.to_vec(),
        v_plus,
        v_minus,
        v_pm,
        big_a: nb.n_plus.len() as u32,
        big_b: nb.n_minus.len() as u32,
        n_plus0: nb.n_plus0.len() as u32,
        n_minus0: nb.n_minus0.len() as u32,
        n_pm: nb.n_pm.len() as u32,
        a: None,
        b: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    // Vertex labels of the transitive triangle: A = 0, B = 1, C = 2 with B→A, B→C, C→A.
    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;

    #[test]
    fn triangle_neighborhoods() {
        let d = families::transitive_triangle();
        let nb = neighborhood_profile(&d, &[B]);
        assert_eq!(nb.n_plus, BTreeSet::from([A, C]));
        assert!(nb.n_minus.is_empty());

        let nc = neighborhood_profile(&d, &[C]);
        assert_eq!(nc.n_plus, BTreeSet::from([A]));
        assert_eq!(nc.n_minus, BTreeSet::from([B]));
        assert_eq!(nc.n_plus0.len() + nc.n_pm.len(), 1);
    }

    #[test]
    fn empty_set_has_empty_neighborhoods() {
        let d = families::gap_construction(3);
        assert_eq!(neighborhood_profile(&d, &[]), NeighborhoodProfile::default());
    }

    #[test]
    fn triangle_profiles() {
        let d = families::transitive_triangle();
        let pb = set_profile(&d, &[B]);
        assert_eq!((pb.v_plus, pb.v_minus, pb.v_pm, pb.big_a, pb.big_b), (1, 0, 0, 2, 0));
        let pc = set_profile(&d, &[C]);
        assert_eq!((pc.v_plus, pc.v_minus, pc.v_pm, pc.big_a, pc.big_b), (0, 0, 1, 1, 1));
        assert_eq!((pc.n_plus0, pc.n_minus0, pc.n_pm), (1, 1, 0));
    }

    #[test]
    fn mixed_star_center() {
        let d = families::mixed_star(2, 1);
        let p = set_profile(&d, &[0]);
        assert_eq!((p.v_pm, p.big_a, p.big_b), (1, 2, 1));
    }

    #[test]
    fn two_cycle_has_mixed_neighbor() {
        let d = families::two_cycle();
        let p = set_profile(&d, &[0]);
        assert_eq!((p.big_a, p.big_b, p.n_pm, p.n_plus0, p.n_minus0), (1, 1, 1, 0, 0));
    }
}
