//! Built-in digraphs with known answers: stars, triangles, directed cycles and
//! the two bipartite hub constructions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;

fn build(n: usize, edges: Vec<(usize, usize)>) -> Digraph {
    Digraph::new(n, edges).expect("family generators emit simple digraphs")
}

/// A single directed edge `0 → 1`.
pub fn single_edge() -> Digraph {
    build(2, vec![(0, 1)])
}

/// Triangle with a source and a sink: `1 → 0`, `1 → 2`, `2 → 0`.
pub fn transitive_triangle() -> Digraph {
    build(3, vec![(1, 0), (1, 2), (2, 0)])
}

/// The directed 3-cycle.
pub fn cyclic_triangle() -> Digraph {
    directed_cycle(3)
}

/// Two vertices joined in both directions.
pub fn two_cycle() -> Digraph {
    build(2, vec![(0, 1), (1, 0)])
}

/// `0 → 1 → … → k-1 → 0`.
pub fn directed_cycle(k: usize) -> Digraph {
    assert!(k >= 2, "a directed cycle needs at least two vertices");
    build(k, (0..k).map(|i| (i, (i + 1) % k)).collect())
}

/// Centre 0 with edges to `degree` leaves.
pub fn out_star(degree: usize) -> Digraph {
    build(degree + 1, (1..=degree).map(|v| (0, v)).collect())
}

/// Centre 0 with edges from `degree` leaves.
pub fn in_star(degree: usize) -> Digraph {
    build(degree + 1, (1..=degree).map(|v| (v, 0)).collect())
}

/// Centre 0 with `outs` out-leaves followed by `ins` in-leaves.
pub fn mixed_star(outs: usize, ins: usize) -> Digraph {
    let mut edges: Vec<(usize, usize)> = (1..=outs).map(|v| (0, v)).collect();
    edges.extend((outs + 1..=outs + ins).map(|v| (v, 0)));
    build(outs + ins + 1, edges)
}

/// Bipartite construction with a single shared out-neighbour.
///
/// Left vertices `0..k` form H*. Right vertex `k` receives an edge from every
/// left vertex; right vertices `k+1..=2k` send an edge to every left vertex.
/// Every set S ⊆ H* then has `A_S = a_S = 1` and `b_S = |S|`.
pub fn shared_sink_construction(k: usize) -> Digraph {
    assert!(k >= 1);
    let sink = k;
    let mut edges: Vec<(usize, usize)> = (0..k).map(|v| (v, sink)).collect();
    for u in k + 1..=2 * k {
        edges.extend((0..k).map(|v| (u, v)));
    }
    build(2 * k + 1, edges)
}

/// Bipartite construction whose hub bounds disagree.
///
/// Left vertices `0..=k` form H*, right vertices are `k+1..=2k+2`. Left
/// vertices `0..k` each send one edge to `k+1`; left vertex `k` sends edges to
/// `k+2` and `k+3`. Every other left/right pair carries an edge from the right
/// vertex to the left one, so all left vertices have degree `k+2`.
pub fn gap_construction(k: usize) -> Digraph {
    assert!(k >= 1);
    let left: Vec<usize> = (0..=k).collect();
    let right: Vec<usize> = (k + 1..=2 * k + 2).collect();
    let mut solid: Vec<(usize, usize)> = (0..k).map(|v| (v, k + 1)).collect();
    solid.push((k, k + 2));
    solid.push((k, k + 3));
    let mut edges = solid.clone();
    for &v in &left {
        for &u in &right {
            if !solid.contains(&(v, u)) {
                edges.push((u, v));
            }
        }
    }
    build(2 * k + 3, edges)
}

/// One random simple digraph on `vertices` vertices: each ordered pair is an
/// edge independently with probability `density`.
pub fn random_digraph(vertices: usize, density: f64, rng: &mut impl Rng) -> Digraph {
    let edges = (0..vertices)
        .flat_map(|u| (0..vertices).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(density))
        .collect();
    build(vertices, edges)
}

/// `count` weakly connected digraphs with 3 to `max_vertices` vertices and
/// `Δ ≥ 2`, reproducible from `seed`. Edge densities vary per graph.
pub fn random_corpus(count: usize, max_vertices: usize, seed: u64) -> Vec<Digraph> {
    assert!(max_vertices >= 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v = rng.gen_range(3..=max_vertices);
        let density = rng.gen_range(0.15..0.6);
        let d = random_digraph(v, density, &mut rng);
        if d.classify().connected && d.max_degree() >= 2 {
            out.push(d);
        }
    }
    out
}

/// Named built-in graphs, as used by the command-line tools.
pub fn builtin(name: &str) -> Option<Digraph> {
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, a.parse::<usize>().ok()),
        None => (name, None),
    };
    Some(match (head, arg) {
        ("edge", None) => single_edge(),
        ("transitive-triangle", None) => transitive_triangle(),
        ("cyclic-triangle", None) => cyclic_triangle(),
        ("two-cycle", None) => two_cycle(),
        ("cycle", Some(k)) if k >= 2 => directed_cycle(k),
        ("out-star", Some(d)) if d >= 1 => out_star(d),
        ("in-star", Some(d)) if d >= 1 => in_star(d),
        ("mixed-star", Some(d)) if d >= 2 => mixed_star(d - 1, 1),
        ("shared-sink", Some(k)) if k >= 1 => shared_sink_construction(k),
        ("gap", Some(k)) if k >= 1 => gap_construction(k),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_construction_degrees() {
        for k in 1..=6 {
            let d = gap_construction(k);
            assert_eq!(d.max_degree(), k + 2);
            assert!((0..=k).all(|v| d.degree(v).deg == k + 2));
            assert!((k + 1..=2 * k + 2).all(|u| d.degree(u).deg == k + 1));
            assert!(d.classify().oriented && d.classify().bipartite);
        }
    }

    #[test]
    fn shared_sink_degrees() {
        let d = shared_sink_construction(3);
        assert_eq!(d.max_degree(), 4);
        assert!((0..3).all(|v| d.degree(v).deg == 4));
        assert_eq!(d.degree(3).in_deg, 3);
    }

    #[test]
    fn corpus_is_reproducible_and_connected() {
        let a = random_corpus(30, 7, 5);
        assert_eq!(a, random_corpus(30, 7, 5));
        assert!(a.iter().all(|d| d.classify().connected && d.max_degree() >= 2 && d.vertex_count() <= 7));
    }

    #[test]
    fn builtin_names() {
        assert_eq!(builtin("cycle:5").unwrap(), directed_cycle(5));
        assert_eq!(builtin("mixed-star:3").unwrap(), mixed_star(2, 1));
        assert!(builtin("cycle:1").is_none());
        assert!(builtin("nonsense").is_none());
    }
}
