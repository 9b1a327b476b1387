//! Finite weighted digraphs `Q ∈ [0,1]^{n×n}` with zero diagonal, sampling and
//! homomorphism counts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::step::{back_edges, search_order};
use crate::digraph::Digraph;
use crate::error::SimError;

/// Brute-force cap on the number of maps `V(H) → [n]`.
pub const HOM_MAP_CAP: f64 = 1e8;

/// Name of the generator behind [`sample_digraph`], for reports.
pub const GENERATOR: &str = "ChaCha8 (rand_chacha 0.3, seed_from_u64)";

/// Row-major `n × n` weights in `[0, 1]` with a zero diagonal. A 0/1 matrix
/// is an adjacency matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDigraphMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl WeightedDigraphMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![0.0; n * n] }
    }

    /// Every off-diagonal entry equal to `c`.
    pub fn constant(n: usize, c: f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    m.entries[i * n + j] = c;
                }
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, SimError> {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(SimError::DimensionMismatch { expected: n, got: row.len() });
            }
            for (j, v) in row.into_iter().enumerate() {
                if !(0.0..=1.0).contains(&v) {
                    return Err(SimError::BadDensity(v));
                }
                if i == j && v != 0.0 {
                    return Err(SimError::InvalidGraphon(format!("nonzero diagonal entry at {i}")));
                }
                m.entries[i * n + j] = v;
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// Sets an off-diagonal entry, clamped into `[0, 1]`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        assert_ne!(i, j, "diagonal stays zero");
        self.entries[i * self.n + j] = v.clamp(0.0, 1.0);
    }

    /// Off-diagonal entries in row-major order.
    pub fn off_diagonal(&self) -> Vec<f64> {
        let n = self.n;
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| self.get(i, j)).collect()
    }

    /// Inverse of [`off_diagonal`](Self::off_diagonal).
    pub fn from_off_diagonal(n: usize, values: &[f64]) -> Result<Self, SimError> {
        if values.len() != n * n.saturating_sub(1) {
            return Err(SimError::DimensionMismatch { expected: n * n.saturating_sub(1), got: values.len() });
        }
        let mut m = Self::zeros(n);
        let mut it = values.iter();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    m.set(i, j, *it.next().expect("length checked"));
                }
            }
        }
        Ok(m)
    }

    /// Sum of all entries; the edge count for an adjacency matrix.
    pub fn total_weight(&self) -> f64 {
        self.entries.iter().sum()
    }

    /// `I_p(Q) = Σ_{i≠j} I_p(Q(i, j))`.
    pub fn entropy(&self, p: f64) -> Result<f64, SimError> {
        super::entropy::check_p(p)?;
        Ok(self.off_diagonal().into_iter().map(|x| super::entropy::ip_unchecked(x, p)).sum())
    }
}

/// Directed Erdős–Rényi sample: each off-diagonal entry is 1 independently
/// with probability `p`, drawn row-major from ChaCha8 seeded with `seed`.
pub fn sample_digraph(n: usize, p: f64, seed: u64) -> WeightedDigraphMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_with(n, p, &mut rng)
}

pub(crate) fn sample_with(n: usize, p: f64, rng: &mut impl Rng) -> WeightedDigraphMatrix {
    assert!((0.0..=1.0).contains(&p), "edge probability outside [0, 1]");
    let mut m = WeightedDigraphMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(p) {
                m.entries[i * n + j] = 1.0;
            }
        }
    }
    m
}

pub(crate) fn check_map_cap(h: &Digraph, n: usize) -> Result<(), SimError> {
    let maps = (n as f64).powi(h.vertex_count() as i32);
    if maps > HOM_MAP_CAP {
        return Err(SimError::CapExceeded { what: "n^v(H) maps", value: maps, cap: HOM_MAP_CAP });
    }
    Ok(())
}

/// `hom(H, Q) = Σ_{φ: V(H) → [n]} Π_{(u,v) ∈ E(H)} Q(φ(u), φ(v))`, by
/// backtracking with zero pruning.
pub fn hom_count(h: &Digraph, q: &WeightedDigraphMatrix) -> Result<f64, SimError> {
    check_map_cap(h, q.n)?;
    Ok(HomCounter::new(h).count(q))
}

/// `t(H, Q) = hom(H, Q) / n^{v(H)}`.
pub fn hom_density(h: &Digraph, q: &WeightedDigraphMatrix) -> Result<f64, SimError> {
    Ok(hom_count(h, q)? / (q.n as f64).powi(h.vertex_count() as i32))
}

/// Reusable search plan for repeated counts of one pattern.
pub(crate) struct HomCounter {
    back: Vec<Vec<(usize, bool)>>,
}

impl HomCounter {
    pub(crate) fn new(h: &Digraph) -> Self {
        let order = search_order(h);
        Self { back: back_edges(h, &order) }
    }

    pub(crate) fn count(&self, q: &WeightedDigraphMatrix) -> f64 {
        let mut image = vec![0usize; self.back.len()];
        self.rec(q, 0, 1.0, &mut image)
    }

    fn rec(&self, q: &WeightedDigraphMatrix, i: usize, acc: f64, image: &mut [usize]) -> f64 {
        if i == self.back.len() {
            return acc;
        }
        let mut total = 0.0;
        for v in 0..q.n {
            let mut w = acc;
            for &(j, is_tail) in &self.back[i] {
                w *= if is_tail { q.get(v, image[j]) } else { q.get(image[j], v) };
                if w == 0.0 {
                    break;
                }
            }
            if w == 0.0 {
                continue;
            }
            image[i] = v;
            total += self.rec(q, i + 1, w, image);
        }
        total
    }
}
