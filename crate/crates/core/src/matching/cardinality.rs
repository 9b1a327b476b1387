//! Cardinality matching and minimum vertex cover on the underlying simple
//! bipartite graph of a witness.

use super::witness::BipartiteWitness;

/// A minimum vertex cover, split by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCover {
    pub s_part: Vec<usize>,
    pub t_part: Vec<usize>,
}

impl VertexCover {
    pub fn size(&self) -> usize {
        self.s_part.len() + self.t_part.len()
    }

    pub fn covers(&self, w: &BipartiteWitness) -> bool {
        w.arcs.iter().all(|a| self.s_part.contains(&a.s) || self.t_part.contains(&a.t))
    }
}

// Adjacency by position, with opposite arcs collapsed.
fn simple_adjacency(w: &BipartiteWitness) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); w.s_side.len()];
    for arc in &w.arcs {
        adj[w.s_index(arc.s)].push(w.t_index(arc.t));
    }
    for list in adj.iter_mut() {
        list.sort_unstable();
        list.dedup();
    }
    adj
}

fn augment(adj: &[Vec<usize>], s: usize, seen: &mut [bool], mate_t: &mut [Option<usize>]) -> bool {
    for &t in &adj[s] {
        if seen[t] {
            continue;
        }
        seen[t] = true;
        if mate_t[t].is_none_or(|s2| augment(adj, s2, seen, mate_t)) {
            mate_t[t] = Some(s);
            return true;
        }
    }
    false
}

/// Maximum matching as `mate_t[t] = Some(s)` by positions.
fn matching(w: &BipartiteWitness, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut mate_t = vec![None; w.t_side.len()];
    for s in 0..w.s_side.len() {
        let mut seen = vec![false; w.t_side.len()];
        augment(adj, s, &mut seen, &mut mate_t);
    }
    mate_t
}

/// Size of a maximum matching; arc direction is ignored.
pub fn max_matching(w: &BipartiteWitness) -> usize {
    let adj = simple_adjacency(w);
    matching(w, &adj).iter().filter(|m| m.is_some()).count()
}

/// Minimum vertex cover from a maximum matching via alternating reachability.
pub fn min_vertex_cover(w: &BipartiteWitness) -> VertexCover {
    let adj = simple_adjacency(w);
    let mate_t = matching(w, &adj);
    let mut mate_s = vec![None; w.s_side.len()];
    for (t, m) in mate_t.iter().enumerate() {
        if let Some(s) = *m {
            mate_s[s] = Some(t);
        }
    }
    let mut reach_s = vec![false; w.s_side.len()];
    let mut reach_t = vec![false; w.t_side.len()];
    let mut stack: Vec<usize> = (0..w.s_side.len()).filter(|&s| mate_s[s].is_none()).collect();
    for &s in &stack {
        reach_s[s] = true;
    }
    while let Some(s) = stack.pop() {
        for &t in &adj[s] {
            if mate_s[s] == Some(t) || reach_t[t] {
                continue;
            }
            reach_t[t] = true;
            if let Some(s2) = mate_t[t] {
                if !reach_s[s2] {
                    reach_s[s2] = true;
                    stack.push(s2);
                }
            }
        }
    }
    VertexCover {
        s_part: (0..w.s_side.len()).filter(|&s| !reach_s[s]).map(|s| w.s_side[s]).collect(),
        t_part: (0..w.t_side.len()).filter(|&t| reach_t[t]).map(|t| w.t_side[t]).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::witness::{Arc, ArcDir};

    fn arc(s: usize, t: usize) -> Arc {
        Arc { s, t, dir: ArcDir::Out }
    }

    #[test]
    fn empty_and_single() {
        let empty = BipartiteWitness::new(vec![0], vec![1], vec![]).unwrap();
        assert_eq!(max_matching(&empty), 0);
        assert_eq!(min_vertex_cover(&empty).size(), 0);
        let one = BipartiteWitness::new(vec![0], vec![1], vec![arc(0, 1)]).unwrap();
        assert_eq!(max_matching(&one), 1);
        let cover = min_vertex_cover(&one);
        assert_eq!(cover.size(), 1);
        assert!(cover.covers(&one));
    }

    #[test]
    fn disjoint_arcs_match_fully() {
        let w = BipartiteWitness::new(vec![0, 1, 2], vec![3, 4, 5], vec![arc(0, 3), arc(1, 4), arc(2, 5)]).unwrap();
        assert_eq!(max_matching(&w), 3);
    }

    #[test]
    fn shared_center_matches_once() {
        let w = BipartiteWitness::new(vec![0], vec![1, 2, 3], vec![arc(0, 1), arc(0, 2), arc(0, 3)]).unwrap();
        assert_eq!(max_matching(&w), 1);
    }

    #[test]
    fn opposite_arcs_collapse() {
        let w = BipartiteWitness::new(vec![0], vec![1], vec![arc(0, 1), Arc { s: 0, t: 1, dir: ArcDir::In }]).unwrap();
        assert_eq!(max_matching(&w), 1);
        assert_eq!(min_vertex_cover(&w).size(), 1);
    }

    #[test]
    fn konig_on_a_path() {
        // s0 - t0 - s1 - t1 - s2 as a bipartite path: ν = τ = 2.
        let w =
            BipartiteWitness::new(vec![0, 1, 2], vec![10, 11], vec![arc(0, 10), arc(1, 10), arc(1, 11), arc(2, 11)])
                .unwrap();
        assert_eq!(max_matching(&w), 2);
        let cover = min_vertex_cover(&w);
        assert_eq!(cover.size(), 2);
        assert!(cover.covers(&w));
    }
}
