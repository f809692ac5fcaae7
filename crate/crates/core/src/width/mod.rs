//! Treewidth, the extension graph, ℓ-copies and semantic extension width.

mod treewidth;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Homomorphism};
use crate::limits::Limits;
use crate::query::{minimize_with, ConjunctiveQuery};

pub use treewidth::{
    decomposition_from_ordering, optimal_elimination_ordering, treewidth, treewidth_with, TreeDecomposition,
};

/// `H` plus an edge between any two free variables adjacent to a common
/// component of `H[Y]`.
pub fn extension_graph(q: &ConjunctiveQuery) -> Graph {
    let h = q.graph();
    let mut edges = h.edges().to_vec();
    for comp in q.existential_components() {
        let mut touching: Vec<usize> = comp
            .iter()
            .flat_map(|&y| h.neighbours(y).iter().copied())
            .filter(|&v| q.is_free(v))
            .collect();
        touching.sort_unstable();
        touching.dedup();
        for (i, &a) in touching.iter().enumerate() {
            for &b in &touching[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Graph::new(h.n(), edges).expect("extension graph stays simple")
}

/// Treewidth of the extension graph.
pub fn extension_width(q: &ConjunctiveQuery) -> Result<usize> {
    extension_width_with(q, &Limits::default())
}

pub fn extension_width_with(q: &ConjunctiveQuery, limits: &Limits) -> Result<usize> {
    Ok(treewidth_with(&extension_graph(q), limits)?.0)
}

/// The extension graph induced on the free variables, in declaration order.
pub fn contract_graph(q: &ConjunctiveQuery) -> Graph {
    extension_graph(q).induced(q.free())
}

/// Extension width of the counting-minimal core.
pub fn semantic_extension_width(q: &ConjunctiveQuery) -> Result<usize> {
    semantic_extension_width_with(q, &Limits::default())
}

pub fn semantic_extension_width_with(q: &ConjunctiveQuery, limits: &Limits) -> Result<usize> {
    q.require_free()?;
    let core = minimize_with(q, limits)?;
    extension_width_with(&core, limits)
}

/// `H` with every component of `H[Y]` copied `ell` times; the free
/// variables are shared between the copies.
///
/// Vertex layout: the free variables first, in declaration order, then
/// `(y, j)` for each existential `y` ascending and `j = 1..=ell`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllCopy {
    #[serde(skip)]
    pub f: Graph,
    #[serde(skip)]
    pub gamma: Homomorphism,
    pub ell: usize,
    /// `component_copies[i][j]` holds the vertices of copy `j + 1` of the
    /// `i`-th component of `H[Y]`.
    #[serde(rename = "componentCopies")]
    pub component_copies: Vec<Vec<Vec<usize>>>,
    #[serde(skip)]
    x_index: Vec<usize>,
    #[serde(skip)]
    y_index: Vec<usize>,
}

impl EllCopy {
    /// Index in `F` of the free variable `x` of `H`.
    pub fn free_vertex(&self, x: usize) -> usize {
        self.x_index[x]
    }

    /// Index in `F` of `(y, j)` for `j` in `1..=ell`.
    pub fn copy_vertex(&self, y: usize, j: usize) -> usize {
        assert!((1..=self.ell).contains(&j), "copy index out of range");
        self.y_index[y] + j - 1
    }

    /// `F` as a query with the free variables of `H`.
    pub fn query(&self, q: &ConjunctiveQuery) -> ConjunctiveQuery {
        let free = q.free().iter().map(|&x| self.free_vertex(x)).collect();
        let names = self.f.labels().expect("copies are labelled").to_vec();
        ConjunctiveQuery::new(self.f.clone(), free)
            .and_then(|c| c.with_names(names))
            .expect("copy keeps free variables")
    }
}

pub fn ell_copy(q: &ConjunctiveQuery, ell: usize) -> Result<EllCopy> {
    if ell == 0 {
        return Err(Error::Invalid("ell must be positive".into()));
    }
    let h = q.graph();
    let n = h.n();
    let mut x_index = vec![usize::MAX; n];
    let mut labels = Vec::new();
    let mut gamma = Vec::new();
    for &x in q.free() {
        x_index[x] = labels.len();
        labels.push(q.name(x).to_string());
        gamma.push(x);
    }
    let mut y_index = vec![usize::MAX; n];
    for y in q.existential() {
        y_index[y] = labels.len();
        for j in 1..=ell {
            labels.push(format!("({},{j})", q.name(y)));
            gamma.push(y);
        }
    }
    let mut edges = Vec::new();
    for &(u, v) in h.edges() {
        match (q.is_free(u), q.is_free(v)) {
            (true, true) => edges.push((x_index[u], x_index[v])),
            (true, false) => edges.extend((0..ell).map(|j| (x_index[u], y_index[v] + j))),
            (false, true) => edges.extend((0..ell).map(|j| (x_index[v], y_index[u] + j))),
            (false, false) => edges.extend((0..ell).map(|j| (y_index[u] + j, y_index[v] + j))),
        }
    }
    let f = Graph::new(labels.len(), edges)?.with_labels(labels);
    let component_copies = q
        .existential_components()
        .iter()
        .map(|comp| {
            (0..ell)
                .map(|j| {
                    let mut vs: Vec<usize> = comp.iter().map(|&y| y_index[y] + j).collect();
                    vs.sort_unstable();
                    vs
                })
                .collect()
        })
        .collect();
    let gamma = Homomorphism::new(&f, h, gamma)?;
    Ok(EllCopy {
        f,
        gamma,
        ell,
        component_copies,
        x_index,
        y_index,
    })
}

/// Smallest odd `ell` whose copy has treewidth equal to the extension
/// width of `q`. Expects a counting-minimal connected query.
pub fn choose_witness_ell(q: &ConjunctiveQuery) -> Result<usize> {
    choose_witness_ell_with(q, &Limits::default())
}

pub fn choose_witness_ell_with(q: &ConjunctiveQuery, limits: &Limits) -> Result<usize> {
    q.require_connected()?;
    let ew = extension_width_with(q, limits)?;
    let mut ell = 1;
    while ell <= q.n() + 3 {
        let copy = ell_copy(q, ell)?;
        if treewidth_with(&copy.f, limits)?.0 == ew {
            return Ok(ell);
        }
        ell += 2;
    }
    Err(Error::Internal(format!(
        "no odd ell up to {} reaches extension width {ew}",
        q.n() + 3
    )))
}
