use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

/// Bags indexed by tree node, plus the tree's edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    #[serde(rename = "treeEdges")]
    pub tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Largest bag size minus one; 0 for a decomposition without vertices.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn tree(&self) -> Graph {
        Graph::new(self.bags.len(), self.tree_edges.iter().copied()).expect("tree edges are in range")
    }

    /// Checks that the bags cover every vertex and edge of `g`, that the
    /// bags containing any vertex form a subtree, and that the tree is one.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let tree = self.tree();
        if tree.n() == 0 || tree.edge_count() + 1 != tree.n() || !tree.is_connected() {
            return Err(Error::Invalid("decomposition tree is not a tree".into()));
        }
        let mut holders = vec![Vec::new(); g.n()];
        for (t, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= g.n() {
                    return Err(Error::Invalid(format!("bag {t} holds unknown vertex {v}")));
                }
                holders[v].push(t);
            }
        }
        for (v, nodes) in holders.iter().enumerate() {
            if nodes.is_empty() {
                return Err(Error::Invalid(format!("vertex {v} is in no bag")));
            }
            let mut mask = vec![false; tree.n()];
            for &t in nodes {
                mask[t] = true;
            }
            if tree.components_within(&mask).len() != 1 {
                return Err(Error::Invalid(format!("bags holding vertex {v} are not connected")));
            }
        }
        for &(u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(&u) && b.contains(&v)) {
                return Err(Error::Invalid(format!("edge {u}-{v} is in no bag")));
            }
        }
        Ok(())
    }
}

/// Vertices outside `eliminated ∪ {v}` reachable from `v` through
/// eliminated vertices: the neighbourhood of `v` once everything in
/// `eliminated` has been eliminated.
fn later_neighbours(adj: &[u64], eliminated: u64, v: usize) -> u64 {
    let mut seen = 1u64 << v;
    let mut frontier = 1u64 << v;
    let mut found = 0u64;
    while frontier != 0 {
        let u = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[u] & !seen;
        seen |= fresh;
        found |= fresh & !eliminated;
        frontier |= fresh & eliminated;
    }
    found
}

struct Solver<'a> {
    adj: &'a [u64],
    n: usize,
    width: u32,
    failed: HashSet<u64>,
    order: Vec<usize>,
}

impl Solver<'_> {
    fn search(&mut self, eliminated: u64) -> bool {
        if self.order.len() == self.n {
            return true;
        }
        if self.failed.contains(&eliminated) {
            return false;
        }
        for v in 0..self.n {
            if eliminated & (1 << v) != 0 {
                continue;
            }
            if later_neighbours(self.adj, eliminated, v).count_ones() > self.width {
                continue;
            }
            self.order.push(v);
            if self.search(eliminated | (1 << v)) {
                return true;
            }
            self.order.pop();
        }
        self.failed.insert(eliminated);
        false
    }
}

/// Lexicographically smallest elimination ordering of minimum width.
pub fn optimal_elimination_ordering(g: &Graph, limits: &Limits) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    if n > limits.max_treewidth_vertices.min(64) {
        return Err(Error::TooLarge(format!(
            "exact treewidth limited to {} vertices, got {n}",
            limits.max_treewidth_vertices.min(64)
        )));
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let lower = if g.edge_count() > 0 { 1 } else { 0 };
    for width in lower..n.max(1) as u32 {
        let mut solver = Solver {
            adj: &adj,
            n,
            width,
            failed: HashSet::new(),
            order: Vec::with_capacity(n),
        };
        if solver.search(0) {
            return Ok((width as usize, solver.order));
        }
    }
    Ok((n.saturating_sub(1), (0..n).collect()))
}

/// Tree decomposition read off an elimination ordering: vertex `v`'s bag
/// is `v` plus its later neighbours, attached to the bag of the earliest
/// of those.
pub fn decomposition_from_ordering(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition {
            bags: vec![Vec::new()],
            tree_edges: Vec::new(),
        };
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut tree_edges = Vec::with_capacity(n - 1);
    let mut eliminated = 0u64;
    for (i, &v) in order.iter().enumerate() {
        let later = later_neighbours(&adj, eliminated, v);
        let mut bag: Vec<usize> = (0..n).filter(|&w| w == v || later & (1 << w) != 0).collect();
        bag.sort_unstable();
        let parent = (0..n)
            .filter(|&w| later & (1 << w) != 0)
            .map(|w| position[w])
            .min()
            .or(if i + 1 < n { Some(i + 1) } else { None });
        if let Some(p) = parent {
            tree_edges.push((i, p));
        }
        bags.push(bag);
        eliminated |= 1 << v;
    }
    TreeDecomposition { bags, tree_edges }
}

/// Exact treewidth with a witnessing decomposition.
pub fn treewidth(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    treewidth_with(g, &Limits::default())
}

pub fn treewidth_with(g: &Graph, limits: &Limits) -> Result<(usize, TreeDecomposition)> {
    let (width, order) = optimal_elimination_ordering(g, limits)?;
    let td = decomposition_from_ordering(g, &order);
    debug_assert_eq!(td.width(), width);
    Ok((width, td))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_widths() {
        assert_eq!(treewidth(&Graph::complete(4)).unwrap().0, 3);
        assert_eq!(treewidth(&Graph::cycle(6)).unwrap().0, 2);
        assert_eq!(treewidth(&Graph::path(5)).unwrap().0, 1);
        assert_eq!(treewidth(&Graph::complete_bipartite(3, 3)).unwrap().0, 3);
        assert_eq!(treewidth(&Graph::complete_bipartite(2, 3)).unwrap().0, 2);
        assert_eq!(treewidth(&Graph::empty(3)).unwrap().0, 0);
        assert_eq!(treewidth(&Graph::empty(0)).unwrap().0, 0);
    }

    #[test]
    fn decompositions_validate() {
        for g in [Graph::complete(4), Graph::cycle(7), Graph::empty(3), Graph::complete_bipartite(2, 4)] {
            let (w, td) = treewidth(&g).unwrap();
            td.validate(&g).unwrap();
            assert_eq!(td.width(), w);
        }
    }

    #[test]
    fn lexicographic_ordering() {
        let (_, order) = optimal_elimination_ordering(&Graph::path(4), &Limits::default()).unwrap();
        assert_eq!(order, vec![0, 1, 2, 3]);
    }

    #[test]
    fn broken_decompositions_rejected() {
        let g = Graph::path(3);
        let td = TreeDecomposition {
            bags: vec![vec![0, 1], vec![2]],
            tree_edges: vec![(0, 1)],
        };
        assert!(td.validate(&g).is_err());
    }

    #[test]
    fn too_large() {
        let limits = Limits {
            max_treewidth_vertices: 4,
            ..Limits::default()
        };
        assert!(treewidth_with(&Graph::path(5), &limits).unwrap_err().is_budget());
    }
}
