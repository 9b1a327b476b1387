//! The max-degree core H* and its independent sets.

use crate::digraph::Digraph;
use crate::error::GraphError;

/// Default cap on |H*| for independent-set enumeration.
pub const DEFAULT_CORE_CAP: usize = 26;

/// Vertices of maximum total degree with the undirected adjacency induced from H.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxDegreeCore {
    /// Sorted vertex ids of H.
    pub vertices: Vec<usize>,
    /// `adjacency[i][j]` for positions `i, j` into `vertices`.
    pub adjacency: Vec<Vec<bool>>,
    pub max_degree: usize,
}

impl MaxDegreeCore {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

pub fn max_degree_core(d: &Digraph) -> MaxDegreeCore {
    let max_degree = d.max_degree();
    let vertices: Vec<usize> = (0..d.vertex_count()).filter(|&v| d.degree(v).deg == max_degree).collect();
    let adjacency = vertices.iter().map(|&u| vertices.iter().map(|&v| d.adjacent(u, v)).collect()).collect();
    MaxDegreeCore { vertices, adjacency, max_degree }
}

/// All independent sets of the core, ∅ first, in lexicographic order of
/// their sorted member lists.
pub fn enumerate_independent_sets(core: &MaxDegreeCore, cap: usize) -> Result<Vec<Vec<usize>>, GraphError> {
    if core.len() > cap {
        return Err(GraphError::CoreTooLarge { size: core.len(), cap });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend(core, 0, &mut current, &mut out);
    Ok(out)
}

// Pre-order DFS over positions; `current` holds positions, emitted as vertex ids.
fn extend(core: &MaxDegreeCore, from: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    out.push(current.iter().map(|&i| core.vertices[i]).collect());
    for next in from..core.len() {
        if current.iter().all(|&i| !core.adjacency[i][next]) {
            current.push(next);
            extend(core, next + 1, current, out);
            current.pop();
        }
    }
}

/// Checks that `set` is a subset of the core with no two members adjacent in H.
pub fn check_independent(d: &Digraph, core: &MaxDegreeCore, set: &[usize]) -> Result<(), GraphError> {
    for &v in set {
        if v >= d.vertex_count() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: d.vertex_count() });
        }
        if !core.contains(v) {
            return Err(GraphError::NotInCore(v));
        }
    }
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if d.adjacent(u, v) {
                return Err(GraphError::NotIndependent(u, v));
            }
        }
    }
    Ok(())
}
