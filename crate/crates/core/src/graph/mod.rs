//! Simple undirected graphs with dense vertex indices.
//!
//! Every other module is built on [`Graph`]: vertices are `0..n`, the edge
//! list is kept sorted with `u < v`, and optional string labels carry
//! provenance (CFI subsets, clone indices) without affecting any semantics.

mod hom;
mod iso;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use hom::{count_hom, count_hom_tau, count_hom_tau_with, count_hom_with, ColouredGraph, Homomorphism};
pub(crate) use hom::{bfs_order, ExtensionSearch};
pub use iso::{automorphisms, automorphisms_with, is_isomorphic, is_isomorphic_with};
pub(crate) use iso::coloured_isomorphism;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge iterator, rejecting self-loops and
    /// out-of-range endpoints. Parallel edges collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    line: 0,
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop { line: 0, vertex: u });
            }
            list.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_canonical(n, list))
    }

    /// Panicking constructor for literals in tests and examples.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        Self::new(n, edges.iter().copied()).expect("invalid edge list")
    }

    fn from_canonical(n: usize, mut edges: Vec<(usize, usize)>) -> Graph {
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        let mut matrix = vec![false; n * n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adj,
            matrix,
            labels: None,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_canonical(n, Vec::new())
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_canonical(n, edges)
    }

    pub fn path(n: usize) -> Graph {
        Self::from_canonical(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Self::from_canonical(n, edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Self::from_canonical(a + b, edges)
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_canonical(self.n + other.n, edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order, each with `u < v`.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u].min(index[v]), index[u].max(index[v])))
            .collect();
        let mut g = Self::from_canonical(vertices.len(), edges);
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&vec![true; self.n])
    }

    /// Components of the subgraph induced by the vertices with `mask[v]`.
    pub fn components_within(&self, mask: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if !mask[s] || seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if mask[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Categorical (tensor) product; vertex `(a, b)` gets index `a * |V(other)| + b`.
    pub fn tensor(&self, other: &Graph) -> Graph {
        let m = other.n;
        let mut edges = Vec::with_capacity(2 * self.edges.len() * other.edges.len());
        for &(a, a2) in &self.edges {
            for &(b, b2) in &other.edges {
                edges.push((a * m + b, a2 * m + b2));
                edges.push((a * m + b2, a2 * m + b));
            }
        }
        let edges = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        let g = Self::from_canonical(self.n * m, edges);
        let labels = (0..self.n)
            .flat_map(|a| (0..m).map(move |b| format!("({a},{b})")))
            .collect();
        g.with_labels(labels)
    }

    /// Loop-free complement.
    pub fn complement(&self) -> Graph {
        let n = self.n;
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect();
        let mut g = Self::from_canonical(n, edges);
        g.labels = self.labels.clone();
        g
    }

    /// Graph file text: `p <n>` followed by sorted `e <u> <v>` lines.
    pub fn to_text(&self) -> String {
        let mut out = format!("p {}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Graph> {
        parse_graph(text)
    }
}

/// Parses the line-oriented graph format:
///
/// ```text
/// # comment
/// p 3
/// e 0 1
/// e 1 2
/// ```
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let syntax = |line: usize, message: &str| Error::Syntax {
        line,
        message: message.to_string(),
    };
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(syntax(line, "duplicate `p` line"));
                }
                let count = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| syntax(line, "expected `p <n>`"))?;
                if tokens.next().is_some() {
                    return Err(syntax(line, "trailing tokens after `p <n>`"));
                }
                n = Some(count);
            }
            Some("e") => {
                let count = n.ok_or_else(|| syntax(line, "edge before `p` line"))?;
                let mut endpoint = || {
                    tokens
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| syntax(line, "expected `e <u> <v>`"))
                };
                let u = endpoint()?;
                let v = endpoint()?;
                if tokens.next().is_some() {
                    return Err(syntax(line, "trailing tokens after `e <u> <v>`"));
                }
                for w in [u, v] {
                    if w >= count {
                        return Err(Error::VertexOutOfRange {
                            line,
                            vertex: w,
                            n: count,
                        });
                    }
                }
                if u == v {
                    return Err(Error::SelfLoop { line, vertex: u });
                }
                edges.push((u.min(v), u.max(v)));
            }
            Some(other) => return Err(syntax(line, &format!("unknown record `{other}`"))),
            None => unreachable!(),
        }
    }
    let n = n.ok_or_else(|| syntax(text.lines().count(), "missing `p <n>` line"))?;
    Ok(Graph::from_canonical(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let g = parse_graph("p 3\ne 0 1\ne 1 2\ne 0 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn parses_edgeless_and_comments() {
        let g = parse_graph("# two isolated vertices\np 2\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn rejects_self_loop_with_line() {
        let err = parse_graph("p 2\ne 0 0\n").unwrap_err();
        assert_eq!(err, Error::SelfLoop { line: 2, vertex: 0 });
    }

    #[test]
    fn rejects_out_of_range_and_garbage() {
        assert!(matches!(
            parse_graph("p 2\ne 0 2\n"),
            Err(Error::VertexOutOfRange { line: 2, vertex: 2, n: 2 })
        ));
        assert!(matches!(parse_graph("p 2\nx 0 1\n"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(parse_graph("e 0 1\n"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph(""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn duplicate_edges_collapse_and_emit_sorted() {
        let g = parse_graph("p 3\ne 2 1\ne 1 2\ne 1 0\n").unwrap();
        assert_eq!(g.to_text(), "p 3\ne 0 1\ne 1 2\n");
        assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn tensor_sizes() {
        let t = Graph::complete(3).tensor(&Graph::complete(3));
        assert_eq!(t.n(), 9);
        assert_eq!(t.edge_count(), 18);
        let lone = Graph::cycle(5).tensor(&Graph::empty(1));
        assert_eq!(lone.edge_count(), 0);
        assert_eq!(lone.n(), 5);
    }

    #[test]
    fn complement_basics() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        let g = Graph::from_edges(5, &[(0, 1), (1, 3), (2, 4)]);
        assert_eq!(g.complement().complement(), g);
        assert!(is_isomorphic(&Graph::cycle(5).complement(), &Graph::cycle(5)).unwrap());
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::complete(3).disjoint_union(&Graph::path(2));
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(!g.is_connected());
        let sub = g.induced(&[4, 3, 0]);
        assert_eq!(sub.edges(), &[(0, 1)]);
    }
}
