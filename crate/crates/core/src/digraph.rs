//! Simple digraphs: storage, the edge-list format, degrees and structural flags.
//!
//! A [`Digraph`] has vertices `0..n` and a set of ordered edges `(u, v)` with
//! `u != v`. Both `(u, v)` and `(v, u)` may be present; that pair is a 2-cycle.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, ParseError};

/// A simple digraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    out_nbrs: Vec<Vec<usize>>,
    in_nbrs: Vec<Vec<usize>>,
}

/// In-, out- and total degree of one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRecord {
    pub in_deg: usize,
    pub out_deg: usize,
    pub deg: usize,
}

/// Structural flags used to gate closed forms, the clique branch and warnings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationFlags {
    /// No 2-cycles.
    pub oriented: bool,
    /// Weakly connected.
    pub connected: bool,
    /// Every vertex has total degree equal to the maximum degree.
    pub regular: bool,
    /// Every vertex of maximum degree has equal in- and out-degree.
    pub balanced_at_max: bool,
    /// The underlying undirected graph is bipartite.
    pub bipartite: bool,
    pub is_star: bool,
    pub is_directed_cycle: bool,
}

impl Digraph {
    /// Builds a digraph, rejecting self-loops, duplicates and out-of-range vertices.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !set.insert((u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        let mut out_nbrs = vec![Vec::new(); n];
        let mut in_nbrs = vec![Vec::new(); n];
        for &(u, v) in &set {
            out_nbrs[u].push(v);
            in_nbrs[v].push(u);
        }
        for list in in_nbrs.iter_mut() {
            list.sort_unstable();
        }
        Ok(Self { n, edges: set, out_nbrs, in_nbrs })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    /// True if `u` and `v` are joined by an edge in either direction.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) || self.has_edge(v, u)
    }

    /// Sorted out-neighbours of `v`.
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_nbrs[v]
    }

    /// Sorted in-neighbours of `v`.
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_nbrs[v]
    }

    pub fn degree(&self, v: usize) -> DegreeRecord {
        let in_deg = self.in_nbrs[v].len();
        let out_deg = self.out_nbrs[v].len();
        DegreeRecord { in_deg, out_deg, deg: in_deg + out_deg }
    }

    pub fn degrees(&self) -> Vec<DegreeRecord> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Maximum total degree, written Δ throughout the crate.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v).deg).max().unwrap_or(0)
    }

    fn undirected_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out_nbrs[v].iter().chain(&self.in_nbrs[v]).copied()
    }

    fn is_weakly_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.undirected_neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    fn is_underlying_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let s = side[v].unwrap();
                for w in self.undirected_neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn classify(&self) -> ClassificationFlags {
        let degrees = self.degrees();
        let max = self.max_degree();
        let oriented = self.edges.iter().all(|&(u, v)| !self.has_edge(v, u));
        let connected = self.is_weakly_connected();
        let regular = degrees.iter().all(|d| d.deg == max);
        let balanced_at_max = degrees.iter().filter(|d| d.deg == max).all(|d| d.in_deg == d.out_deg);
        let bipartite = self.is_underlying_bipartite();
        let centers = degrees.iter().filter(|d| d.deg == max).count();
        let is_star = max >= 2
            && centers == 1
            && self.n == max + 1
            && degrees.iter().filter(|d| d.deg != max).all(|d| d.deg == 1);
        let is_directed_cycle = self.n >= 2 && connected && degrees.iter().all(|d| d.in_deg == 1 && d.out_deg == 1);
        ClassificationFlags { oriented, connected, regular, balanced_at_max, bipartite, is_star, is_directed_cycle }
    }

    /// Parses the edge-list format: `#` comments, a header `n m`, then `m` lines `u v`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
        let (n, m) = parse_pair(hline, header, "header")?;
        if n == 0 {
            return Err(ParseError::NoVertices);
        }
        let mut edges = BTreeSet::new();
        let mut found = 0;
        for (line, body) in lines {
            let (u, v) = parse_pair(line, body, "edge")?;
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(ParseError::VertexOutOfRange { line, vertex, n });
                }
            }
            if u == v {
                return Err(ParseError::SelfLoop { line, vertex: u });
            }
            if !edges.insert((u, v)) {
                return Err(ParseError::DuplicateEdge { line, u, v });
            }
            found += 1;
        }
        if found != m {
            return Err(ParseError::EdgeCountMismatch { expected: m, found });
        }
        Ok(Self::new(n, edges).expect("edges validated above"))
    }
}

fn parse_pair(line: usize, body: &str, what: &'static str) -> Result<(usize, usize), ParseError> {
    let malformed = || ParseError::Malformed { line, what, text: body.to_string() };
    let mut it = body.split_whitespace();
    let a = it.next().and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
    let b = it.next().and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
    if it.next().is_some() {
        return Err(malformed());
    }
    Ok((a, b))
}

impl FromStr for Digraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// Serializes to the edge-list format with edges in lexicographic order.
impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let d: Digraph = "3 3\n1 0\n1 2\n2 0".parse().unwrap();
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(d.edges().collect::<Vec<_>>(), vec![(1, 0), (1, 2), (2, 0)]);
    }

    #[test]
    fn parses_single_vertex_and_c2() {
        let d: Digraph = "1 0".parse().unwrap();
        assert_eq!((d.vertex_count(), d.edge_count()), (1, 0));
        let c2: Digraph = "# two-cycle\n2 2\n0 1\n1 0\n".parse().unwrap();
        assert!(c2.has_edge(0, 1) && c2.has_edge(1, 0));
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert!(matches!(Digraph::parse("3 1\n0 x"), Err(ParseError::Malformed { line: 2, .. })));
        assert!(matches!(Digraph::parse("3 1\n0 3"), Err(ParseError::VertexOutOfRange { vertex: 3, .. })));
        assert!(matches!(Digraph::parse("3 2\n0 1\n0 1"), Err(ParseError::DuplicateEdge { line: 3, .. })));
        assert!(matches!(Digraph::parse("3 1\n2 2"), Err(ParseError::SelfLoop { vertex: 2, .. })));
        assert_eq!(Digraph::parse("# nothing\n"), Err(ParseError::MissingHeader));
        assert!(matches!(Digraph::parse("3 2\n0 1"), Err(ParseError::EdgeCountMismatch { expected: 2, found: 1 })));
    }

    #[test]
    fn degrees_and_max() {
        let tri: Digraph = "3 3\n1 0\n1 2\n2 0".parse().unwrap();
        assert!(tri.degrees().iter().all(|d| d.deg == 2));
        assert_eq!(tri.max_degree(), 2);

        let star = Digraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.degree(0).deg, 3);
        assert!((1..4).all(|v| star.degree(v).deg == 1));

        let c2 = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert!(c2.degrees().iter().all(|d| d.in_deg == 1 && d.out_deg == 1));
        assert_eq!(c2.max_degree(), 2);
    }

    #[test]
    fn classification() {
        let cyc = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let f = cyc.classify();
        assert!(f.regular && f.balanced_at_max && f.oriented && f.connected);
        assert!(f.is_directed_cycle && !f.bipartite && !f.is_star);

        let c2 = Digraph::new(2, [(0, 1), (1, 0)]).unwrap().classify();
        assert!(c2.regular && c2.balanced_at_max && !c2.oriented);

        let star = Digraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap().classify();
        assert!(star.is_star && !star.regular && star.bipartite);
    }

    #[test]
    fn disconnected_is_flagged() {
        let d = Digraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!d.classify().connected);
    }
}
