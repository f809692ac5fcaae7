//! CFI graphs χ(G, W) and colour-block cloning.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ColouredGraph, Graph};
use crate::limits::Limits;

/// Provenance of one vertex of a CFI or cloned graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexOrigin {
    pub vertex: usize,
    pub base: usize,
    pub subset: Vec<usize>,
    /// 0 for primal vertices, `1..=z` for clones.
    pub clone: usize,
}

/// χ(G, W) together with its base graph and first-projection colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfiGraph {
    pub base: Graph,
    pub odd_set: Vec<usize>,
    /// `(w, S)` per vertex of the result, `S` sorted.
    pub pairs: Vec<(usize, Vec<usize>)>,
    pub coloured: ColouredGraph,
}

impl CfiGraph {
    pub fn result(&self) -> &Graph {
        self.coloured.graph()
    }

    /// The first projection, an F-colouring of the result.
    pub fn colouring(&self) -> &[usize] {
        self.coloured.colouring()
    }

    /// JSON sidecar mapping each vertex to its base vertex and subset.
    pub fn sidecar(&self) -> Vec<VertexOrigin> {
        self.pairs
            .iter()
            .enumerate()
            .map(|(v, (w, s))| VertexOrigin {
                vertex: v,
                base: *w,
                subset: s.clone(),
                clone: 0,
            })
            .collect()
    }
}

fn base_label(g: &Graph, w: usize) -> String {
    g.label(w).map(str::to_string).unwrap_or_else(|| w.to_string())
}

/// χ(G, W): vertices `(w, S)` with `S ⊆ N(w)` and `|S|` odd exactly when
/// `w ∈ W`; `(w, S)` and `(w', S')` are adjacent when `ww'` is an edge
/// and `w' ∈ S ⟺ w ∈ S'`. Vertices are sorted by `w`, then by the
/// bitmask of `S` over the sorted neighbourhood of `w`.
pub fn cfi(g: &Graph, odd_set: &[usize]) -> Result<CfiGraph> {
    cfi_with(g, odd_set, &Limits::default())
}

pub fn cfi_with(g: &Graph, odd_set: &[usize], limits: &Limits) -> Result<CfiGraph> {
    let n = g.n();
    let mut odd = vec![false; n];
    for &w in odd_set {
        if w >= n {
            return Err(Error::Invalid(format!("vertex {w} is not in the base graph")));
        }
        odd[w] = true;
    }
    if let Some(w) = (0..n).find(|&w| g.degree(w) > limits.max_cfi_degree) {
        return Err(Error::TooLarge(format!(
            "vertex {w} has degree {} above the CFI cap {}",
            g.degree(w),
            limits.max_cfi_degree
        )));
    }
    // masks[w] lists the admissible subsets of N(w) as bitmasks; start[w]
    // is the index of the first vertex over w.
    let mut start = Vec::with_capacity(n);
    let mut masks = Vec::with_capacity(n);
    let mut pairs = Vec::new();
    let mut labels = Vec::new();
    let mut colouring = Vec::new();
    for w in 0..n {
        start.push(pairs.len());
        let nb = g.neighbours(w);
        let ms: Vec<u32> = (0..1u32 << nb.len())
            .filter(|m| (m.count_ones() % 2 == 1) == odd[w])
            .collect();
        for &m in &ms {
            let s: Vec<usize> = (0..nb.len()).filter(|&i| m & (1 << i) != 0).map(|i| nb[i]).collect();
            let names: Vec<String> = s.iter().map(|&u| base_label(g, u)).collect();
            labels.push(format!("({},{{{}}})", base_label(g, w), names.join(",")));
            colouring.push(w);
            pairs.push((w, s));
        }
        masks.push(ms);
    }
    let mut edges = Vec::new();
    for &(a, b) in g.edges() {
        let bit_b = 1 << g.neighbours(a).binary_search(&b).expect("edge is in adjacency");
        let bit_a = 1 << g.neighbours(b).binary_search(&a).expect("edge is in adjacency");
        for (i, &ma) in masks[a].iter().enumerate() {
            for (j, &mb) in masks[b].iter().enumerate() {
                if (ma & bit_b != 0) == (mb & bit_a != 0) {
                    edges.push((start[a] + i, start[b] + j));
                }
            }
        }
    }
    let result = Graph::new(pairs.len(), edges)?.with_labels(labels);
    let coloured = ColouredGraph::new(result, g.clone(), colouring)?;
    let mut odd_set: Vec<usize> = odd_set.to_vec();
    odd_set.sort_unstable();
    odd_set.dedup();
    Ok(CfiGraph {
        base: g.clone(),
        odd_set,
        pairs,
        coloured,
    })
}

/// Predicted isomorphism verdict for χ(G, W1) and χ(G, W2) over a
/// connected base: isomorphic exactly when |W1| and |W2| have the same parity.
pub fn cfi_iso_parity(_g: &Graph, w1: &[usize], w2: &[usize]) -> bool {
    w1.len() % 2 == w2.len() % 2
}

/// Colour classes to clone and how many copies each should end up with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CloneSpec {
    #[serde(rename = "blockVertices")]
    pub block_vertices: Vec<usize>,
    pub multiplicities: Vec<usize>,
}

impl CloneSpec {
    pub fn new(block_vertices: Vec<usize>, multiplicities: Vec<usize>) -> Result<CloneSpec> {
        if block_vertices.len() != multiplicities.len() {
            return Err(Error::Invalid("one multiplicity per block vertex".into()));
        }
        if multiplicities.contains(&0) {
            return Err(Error::Invalid("multiplicities must be positive".into()));
        }
        let mut sorted = block_vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != block_vertices.len() {
            return Err(Error::Invalid("block vertices must be distinct".into()));
        }
        Ok(CloneSpec {
            block_vertices,
            multiplicities,
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.multiplicities.iter().all(|&z| z == 1)
    }
}

/// A cloned graph with the map back to the original.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cloned {
    /// The cloned graph coloured by inheriting each primal's colour.
    pub coloured: ColouredGraph,
    /// Original vertex of every vertex (identity on primal vertices).
    pub rho: Vec<usize>,
    /// 0 for primal vertices, `1..=z` for clones.
    pub clone_index: Vec<usize>,
}

/// Replaces the colour class of each block vertex `v_i` by `z_i` copies.
/// A clone is adjacent to whatever its original is adjacent to, clones
/// included. Vertex order follows the original, copies consecutive.
pub fn clone_blocks(g: &ColouredGraph, spec: &CloneSpec) -> Result<Cloned> {
    let spec = CloneSpec::new(spec.block_vertices.clone(), spec.multiplicities.clone())?;
    let pattern = g.pattern();
    let mut mult = vec![0usize; pattern.n()];
    for (&v, &z) in spec.block_vertices.iter().zip(&spec.multiplicities) {
        if v >= pattern.n() {
            return Err(Error::Invalid(format!("block vertex {v} is not in the pattern")));
        }
        mult[v] = z;
    }
    let base = g.graph();
    let mut rho = Vec::new();
    let mut clone_index = Vec::new();
    let mut first = Vec::with_capacity(base.n());
    for u in 0..base.n() {
        first.push(rho.len());
        match mult[g.colour(u)] {
            0 => {
                rho.push(u);
                clone_index.push(0);
            }
            z => {
                for i in 1..=z {
                    rho.push(u);
                    clone_index.push(i);
                }
            }
        }
    }
    let copies = |u: usize| first[u]..first[u] + mult[g.colour(u)].max(1);
    let mut edges = Vec::new();
    for &(a, b) in base.edges() {
        for p in copies(a) {
            for q in copies(b) {
                edges.push((p, q));
            }
        }
    }
    let labels = rho
        .iter()
        .zip(&clone_index)
        .map(|(&u, &i)| {
            let l = base.label(u).map(str::to_string).unwrap_or_else(|| u.to_string());
            if i == 0 {
                l
            } else {
                format!("{l}#{i}")
            }
        })
        .collect();
    let graph = Graph::new(rho.len(), edges)?.with_labels(labels);
    let colouring = rho.iter().map(|&u| g.colour(u)).collect();
    let coloured = ColouredGraph::new(graph, pattern.clone(), colouring)?;
    Ok(Cloned {
        coloured,
        rho,
        clone_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{count_hom_tau, is_isomorphic};

    fn two_triangles() -> Graph {
        Graph::complete(3).disjoint_union(&Graph::complete(3))
    }

    #[test]
    fn triangle_cfi_graphs() {
        let even = cfi(&Graph::complete(3), &[]).unwrap();
        assert!(is_isomorphic(even.result(), &two_triangles()).unwrap());
        let odd = cfi(&Graph::complete(3), &[0]).unwrap();
        assert!(is_isomorphic(odd.result(), &Graph::cycle(6)).unwrap());
        let two = cfi(&Graph::complete(3), &[0, 1]).unwrap();
        assert!(is_isomorphic(two.result(), even.result()).unwrap());
    }

    #[test]
    fn vertex_count_and_parity() {
        let g = Graph::complete_bipartite(2, 3);
        let c = cfi(&g, &[0]).unwrap();
        let expected: usize = (0..g.n()).map(|w| 1 << (g.degree(w) - 1)).sum();
        assert_eq!(c.result().n(), expected);
        for (w, s) in &c.pairs {
            assert_eq!(s.len() % 2 == 1, *w == 0);
        }
        assert_eq!(c.result().label(0), Some("(0,{2})"));
    }

    #[test]
    fn degree_cap() {
        let limits = Limits {
            max_cfi_degree: 2,
            ..Limits::default()
        };
        assert!(cfi_with(&Graph::complete(4), &[], &limits).unwrap_err().is_budget());
    }

    #[test]
    fn edge_colour_class_count() {
        let c = cfi(&Graph::complete(3), &[]).unwrap();
        let k2 = Graph::complete(2);
        assert_eq!(count_hom_tau(&k2, &c.coloured, &[0, 1]).unwrap(), 2);
    }

    #[test]
    fn parity_prediction() {
        let k3 = Graph::complete(3);
        assert!(cfi_iso_parity(&k3, &[], &[0, 1]));
        assert!(!cfi_iso_parity(&k3, &[], &[0]));
        assert!(cfi_iso_parity(&k3, &[2], &[2]));
    }

    #[test]
    fn cloning() {
        let c = cfi(&Graph::complete(3), &[]).unwrap();
        let same = clone_blocks(&c.coloured, &CloneSpec::new(vec![0, 1], vec![1, 1]).unwrap()).unwrap();
        assert_eq!(same.coloured.graph(), c.result());
        assert_eq!(same.coloured.colouring(), c.colouring());

        let doubled = clone_blocks(&c.coloured, &CloneSpec::new(vec![0], vec![2]).unwrap()).unwrap();
        assert_eq!(doubled.coloured.graph().n(), 8);
        assert_eq!(doubled.coloured.classes()[0].len(), 4);
        assert_eq!(doubled.coloured.graph().label(1), Some("(0,{})#2"));
        let k3 = Graph::complete(3);
        assert_eq!(count_hom_tau(&k3, &doubled.coloured, &[0, 1, 2]).unwrap(), 4);
    }

    #[test]
    fn clone_spec_validation() {
        assert!(CloneSpec::new(vec![0, 0], vec![1, 1]).is_err());
        assert!(CloneSpec::new(vec![0], vec![0]).is_err());
        let c = cfi(&Graph::complete(3), &[]).unwrap();
        assert!(clone_blocks(&c.coloured, &CloneSpec { block_vertices: vec![7], multiplicities: vec![2] }).is_err());
    }
}
