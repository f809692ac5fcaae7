use super::ConjunctiveQuery;
use crate::error::Result;
use crate::graph::{automorphisms_with, bfs_order, coloured_isomorphism, ExtensionSearch, Graph};
use crate::limits::Limits;

/// Searches for an endomorphism of `H` that permutes `X` and misses some
/// existential vertex. Missed vertices are tried in ascending order.
fn folding_endomorphism(query: &ConjunctiveQuery, limits: &Limits) -> Result<Option<Vec<usize>>> {
    let h = query.graph();
    let n = h.n();
    let free: Vec<usize> = {
        let mut f = query.free().to_vec();
        f.sort_unstable();
        f
    };
    let order = bfs_order(h, &vec![true; n], &vec![false; n]);
    let mut budget = limits.budget("query minimisation");
    for missed in query.existential() {
        let domains: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                if query.is_free(v) {
                    free.clone()
                } else {
                    (0..n).filter(|&w| w != missed).collect()
                }
            })
            .collect();
        let search = ExtensionSearch::new(h, h, order.clone())
            .with_domains(domains)
            .with_injective(query.free_mask().to_vec());
        let mut assign = vec![usize::MAX; n];
        if search.find(&mut assign, &mut budget)? {
            return Ok(Some(assign));
        }
    }
    Ok(None)
}

/// Replaces `H` by the image `h(H)`, keeping the free variables in their
/// original order and relabelling vertices by ascending original index.
fn fold(query: &ConjunctiveQuery, endo: &[usize]) -> ConjunctiveQuery {
    let n = query.n();
    let mut keep = vec![false; n];
    for &w in endo {
        keep[w] = true;
    }
    let vertices: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    let edges = query
        .graph()
        .edges()
        .iter()
        .map(|&(u, v)| (index[endo[u]], index[endo[v]]));
    let graph = Graph::new(vertices.len(), edges).expect("image of a homomorphism has no loops");
    let free = query.free().iter().map(|&x| index[x]).collect();
    let names = vertices.iter().map(|&v| query.name(v).to_string()).collect();
    ConjunctiveQuery::new(graph, free)
        .and_then(|q| q.with_names(names))
        .expect("folding preserves free variables")
}

/// A counting-minimal query counting-equivalent to `query`.
///
/// Repeatedly folds `H` along an endomorphism that is a bijection on `X`
/// but not an automorphism, until every such endomorphism is an
/// automorphism.
pub fn minimize(query: &ConjunctiveQuery) -> Result<ConjunctiveQuery> {
    minimize_with(query, &Limits::default())
}

pub fn minimize_with(query: &ConjunctiveQuery, limits: &Limits) -> Result<ConjunctiveQuery> {
    query.require_connected()?;
    let mut current = query.clone();
    while let Some(endo) = folding_endomorphism(&current, limits)? {
        current = fold(&current, &endo);
    }
    Ok(current)
}

/// Query isomorphism: a graph isomorphism mapping the free set onto the
/// free set.
pub fn queries_isomorphic(a: &ConjunctiveQuery, b: &ConjunctiveQuery, limits: &Limits) -> Result<bool> {
    if a.arity() != b.arity() {
        return Ok(false);
    }
    let ca: Vec<usize> = a.free_mask().iter().map(|&f| f as usize).collect();
    let cb: Vec<usize> = b.free_mask().iter().map(|&f| f as usize).collect();
    Ok(coloured_isomorphism(a.graph(), &ca, b.graph(), &cb, limits)?.is_some())
}

pub fn is_counting_equivalent(a: &ConjunctiveQuery, b: &ConjunctiveQuery) -> Result<bool> {
    is_counting_equivalent_with(a, b, &Limits::default())
}

pub fn is_counting_equivalent_with(a: &ConjunctiveQuery, b: &ConjunctiveQuery, limits: &Limits) -> Result<bool> {
    if a.arity() != b.arity() {
        return Ok(false);
    }
    let ma = minimize_with(a, limits)?;
    let mb = minimize_with(b, limits)?;
    queries_isomorphic(&ma, &mb, limits)
}

/// Restrictions of automorphisms of `H` to the free variables.
///
/// Each map lists, for the free variables in declaration order, the
/// vertex they are sent to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialAutomorphismSet {
    free: Vec<usize>,
    maps: Vec<Vec<usize>>,
}

impl PartialAutomorphismSet {
    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn contains(&self, map: &[usize]) -> bool {
        self.maps.binary_search_by(|m| m.as_slice().cmp(map)).is_ok()
    }

    pub fn contains_identity(&self) -> bool {
        self.contains(&self.free)
    }

    /// Closed under composition and inverses.
    pub fn is_group(&self) -> bool {
        let position = |v: usize| self.free.iter().position(|&x| x == v).expect("maps stay inside X");
        let compose = |f: &[usize], g: &[usize]| -> Vec<usize> { g.iter().map(|&v| f[position(v)]).collect() };
        let inverse = |f: &[usize]| -> Vec<usize> {
            let mut inv = vec![0; f.len()];
            for (p, &v) in f.iter().enumerate() {
                inv[position(v)] = self.free[p];
            }
            inv
        };
        self.maps.iter().all(|f| {
            self.contains(&inverse(f)) && self.maps.iter().all(|g| self.contains(&compose(f, g)))
        })
    }
}

pub fn partial_automorphisms(query: &ConjunctiveQuery) -> Result<PartialAutomorphismSet> {
    partial_automorphisms_with(query, &Limits::default())
}

pub fn partial_automorphisms_with(query: &ConjunctiveQuery, limits: &Limits) -> Result<PartialAutomorphismSet> {
    let colours: Vec<usize> = query.free_mask().iter().map(|&f| f as usize).collect();
    let auts = automorphisms_with(query.graph(), &colours, limits)?;
    let mut maps: Vec<Vec<usize>> = auts
        .iter()
        .map(|a| query.free().iter().map(|&x| a[x]).collect())
        .collect();
    maps.sort();
    maps.dedup();
    Ok(PartialAutomorphismSet {
        free: query.free().to_vec(),
        maps,
    })
}
