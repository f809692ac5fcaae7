use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// 0/1 edge weights whose sum at each vertex is odd exactly on `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityAssignment {
    pub graph: Graph,
    pub target: Vec<usize>,
    /// One weight per edge, aligned with `graph.edges()`.
    pub beta: Vec<bool>,
}

impl ParityAssignment {
    pub fn weight(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        match self.graph.edges().binary_search(&key) {
            Ok(i) => self.beta[i],
            Err(_) => false,
        }
    }

    /// Checks the parity identity at every vertex.
    pub fn is_valid(&self) -> bool {
        let mut odd = vec![false; self.graph.n()];
        for (&(u, v), &b) in self.graph.edges().iter().zip(&self.beta) {
            if b {
                odd[u] ^= true;
                odd[v] ^= true;
            }
        }
        let mut want = vec![false; self.graph.n()];
        for &v in &self.target {
            want[v] = true;
        }
        odd == want
    }
}

/// Peels off BFS-tree leaves, deepest first. Each one is a non-cut vertex
/// of what remains; when it is still in the target set it sends a unit
/// to its tree parent and the parent's membership flips.
pub fn parity_edge_assignment(g: &Graph, target: &[usize]) -> Result<ParityAssignment> {
    let n = g.n();
    let mut pending = vec![false; n];
    for &v in target {
        if v >= n {
            return Err(Error::Invalid(format!("vertex {v} is not in the graph")));
        }
        pending[v] ^= true;
    }
    if pending.iter().filter(|&&p| p).count() % 2 == 1 {
        return Err(Error::Invalid("target set must have even size".into()));
    }
    if !g.is_connected() {
        return Err(Error::Invalid("parity assignment needs a connected graph".into()));
    }
    let mut beta = vec![false; g.edge_count()];
    if n > 0 {
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbours(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        for &v in order.iter().skip(1).rev() {
            if pending[v] {
                let p = parent[v];
                let edge = g.edges().binary_search(&(v.min(p), v.max(p))).expect("tree edge exists");
                beta[edge] = true;
                pending[v] = false;
                pending[p] ^= true;
            }
        }
    }
    let mut sorted = target.to_vec();
    sorted.sort_unstable();
    let assignment = ParityAssignment {
        graph: g.clone(),
        target: sorted,
        beta,
    };
    if !assignment.is_valid() {
        return Err(Error::Internal("parity assignment violates its identity".into()));
    }
    Ok(assignment)
}
