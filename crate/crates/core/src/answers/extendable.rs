use std::collections::HashMap;

use super::parity_edge_assignment;
use crate::cfi::{cfi_with, CfiGraph};
use crate::error::{Error, Result};
use crate::graph::Homomorphism;
use crate::limits::Limits;
use crate::query::ConjunctiveQuery;
use crate::width::EllCopy;

/// An assignment `x_p ↦ (x_p, S_p)` into χ(F, W) with its parity checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendableAssignment {
    /// Vertex of χ(F, W) per free variable, in declaration order.
    pub phi: Vec<usize>,
    /// `S_p` as sorted vertices of `F`.
    pub sets: Vec<Vec<usize>>,
    pub e1: bool,
    pub e2: bool,
    /// Per component of `H[Y]`, the smallest copy `j` (1-based) whose
    /// intersection sum is even.
    pub witness_copies: Vec<Option<usize>>,
}

impl ExtendableAssignment {
    pub fn is_extendable(&self) -> bool {
        self.e1 && self.e2
    }
}

/// Lowest-indexed free variable with an existential neighbour.
pub fn witness_free_variable(q: &ConjunctiveQuery) -> Option<usize> {
    let mut free = q.free().to_vec();
    free.sort_unstable();
    free.into_iter()
        .find(|&x| q.graph().neighbours(x).iter().any(|&v| !q.is_free(v)))
}

fn check_preconditions(q: &ConjunctiveQuery, copy: &EllCopy, w: &[usize]) -> Result<()> {
    q.require_connected()?;
    q.require_free()?;
    if copy.ell % 2 == 0 {
        return Err(Error::Invalid("ell must be odd".into()));
    }
    if witness_free_variable(q).is_none() {
        return Err(Error::Invalid("no free variable is adjacent to an existential one".into()));
    }
    if w.iter().any(|&x| x >= q.n() || !q.is_free(x)) {
        return Err(Error::Invalid("W must consist of free variables".into()));
    }
    Ok(())
}

fn odd_set_in_copy(copy: &EllCopy, w: &[usize]) -> Vec<usize> {
    w.iter().map(|&x| copy.free_vertex(x)).collect()
}

/// Evaluates (E1) and (E2) for the given sets `S_p` (vertices of `F`).
pub fn check_extendable(q: &ConjunctiveQuery, copy: &EllCopy, sets: &[Vec<usize>]) -> (bool, bool, Vec<Option<usize>>) {
    let free = q.free();
    let fx: Vec<usize> = free.iter().map(|&x| copy.free_vertex(x)).collect();
    let mut e1 = true;
    for a in 0..free.len() {
        for b in 0..a {
            if q.graph().has_edge(free[a], free[b]) && sets[b].contains(&fx[a]) != sets[a].contains(&fx[b]) {
                e1 = false;
            }
        }
    }
    let witness: Vec<Option<usize>> = copy
        .component_copies
        .iter()
        .map(|copies| {
            (0..copies.len()).find(|&j| {
                let hits: usize = sets
                    .iter()
                    .map(|s| s.iter().filter(|v| copies[j].binary_search(v).is_ok()).count())
                    .sum();
                hits % 2 == 0
            })
            .map(|j| j + 1)
        })
        .collect();
    let e2 = witness.iter().all(Option::is_some);
    (e1, e2, witness)
}

fn vertex_index(g: &CfiGraph) -> HashMap<(usize, Vec<usize>), usize> {
    g.pairs.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect()
}

/// ℰ(X, F, W): every assignment into χ(F, W) respecting the colours of
/// the free variables and satisfying (E1) and (E2), in lexicographic
/// order of the vertex tuples. `w` lists free variables of `q`.
pub fn enumerate_extendable(q: &ConjunctiveQuery, copy: &EllCopy, w: &[usize]) -> Result<Vec<ExtendableAssignment>> {
    enumerate_extendable_with(q, copy, w, &Limits::default())
}

pub fn enumerate_extendable_with(
    q: &ConjunctiveQuery,
    copy: &EllCopy,
    w: &[usize],
    limits: &Limits,
) -> Result<Vec<ExtendableAssignment>> {
    check_preconditions(q, copy, w)?;
    let g = cfi_with(&copy.f, &odd_set_in_copy(copy, w), limits)?;
    let free = q.free();
    let fx: Vec<usize> = free.iter().map(|&x| copy.free_vertex(x)).collect();
    // candidate vertices of χ(F, W) over each x_p, already parity-filtered
    let options: Vec<Vec<usize>> = fx
        .iter()
        .map(|&v| (0..g.pairs.len()).filter(|&i| g.pairs[i].0 == v).collect())
        .collect();
    let mut budget = limits.budget("extendable assignment enumeration");
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(free.len());
    fn rec(
        p: usize,
        q: &ConjunctiveQuery,
        copy: &EllCopy,
        g: &CfiGraph,
        fx: &[usize],
        options: &[Vec<usize>],
        chosen: &mut Vec<usize>,
        out: &mut Vec<ExtendableAssignment>,
        budget: &mut crate::limits::Budget,
    ) -> Result<()> {
        let free = q.free();
        if p == free.len() {
            let sets: Vec<Vec<usize>> = chosen.iter().map(|&v| g.pairs[v].1.clone()).collect();
            let (e1, e2, witness_copies) = check_extendable(q, copy, &sets);
            if e1 && e2 {
                out.push(ExtendableAssignment {
                    phi: chosen.clone(),
                    sets,
                    e1,
                    e2,
                    witness_copies,
                });
            }
            return Ok(());
        }
        for &v in &options[p] {
            budget.tick()?;
            let s = &g.pairs[v].1;
            // (E1) against the free variables chosen so far
            let consistent = (0..p).all(|b| {
                !q.graph().has_edge(free[p], free[b])
                    || s.contains(&fx[b]) == g.pairs[chosen[b]].1.contains(&fx[p])
            });
            if !consistent {
                continue;
            }
            chosen.push(v);
            rec(p + 1, q, copy, g, fx, options, chosen, out, budget)?;
            chosen.pop();
        }
        Ok(())
    }
    rec(0, q, copy, &g, &fx, &options, &mut chosen, &mut out, &mut budget)?;
    out.sort_by(|a, b| a.phi.cmp(&b.phi));
    Ok(out)
}

/// Extends an extendable assignment to a colour-prescribed homomorphism
/// from `H` into χ(F, W). Each component `C_i` of `H[Y]` goes to its
/// witness copy `j_i`; `y` receives the free variables whose sets contain
/// `(y, j_i)`, topped up by a parity assignment on `C_i` so that its own
/// set has even size.
pub fn extend_assignment(
    phi: &ExtendableAssignment,
    q: &ConjunctiveQuery,
    copy: &EllCopy,
    w: &[usize],
) -> Result<Homomorphism> {
    extend_assignment_with(phi, q, copy, w, &Limits::default())
}

pub fn extend_assignment_with(
    phi: &ExtendableAssignment,
    q: &ConjunctiveQuery,
    copy: &EllCopy,
    w: &[usize],
    limits: &Limits,
) -> Result<Homomorphism> {
    check_preconditions(q, copy, w)?;
    let g = cfi_with(&copy.f, &odd_set_in_copy(copy, w), limits)?;
    let free = q.free();
    if phi.phi.len() != free.len() {
        return Err(Error::Invalid("assignment must cover every free variable".into()));
    }
    let fx: Vec<usize> = free.iter().map(|&x| copy.free_vertex(x)).collect();
    for (p, &v) in phi.phi.iter().enumerate() {
        if v >= g.pairs.len() || g.pairs[v].0 != fx[p] {
            return Err(Error::Invalid(format!("free variable {} is not sent into its colour class", q.name(free[p]))));
        }
    }
    let sets: Vec<Vec<usize>> = phi.phi.iter().map(|&v| g.pairs[v].1.clone()).collect();
    let (e1, e2, witness) = check_extendable(q, copy, &sets);
    if !(e1 && e2) {
        return Err(Error::NoExtension(format!(
            "assignment violates {}",
            if e1 { "(E2)" } else { "(E1)" }
        )));
    }
    let index = vertex_index(&g);
    let mut h = vec![usize::MAX; q.n()];
    for (p, &x) in free.iter().enumerate() {
        h[x] = phi.phi[p];
    }
    let h_graph = q.graph();
    for (comp, j) in q.existential_components().iter().zip(&witness) {
        let j = j.expect("(E2) holds");
        let t_x: Vec<Vec<usize>> = comp
            .iter()
            .map(|&y| {
                let target = copy.copy_vertex(y, j);
                (0..free.len()).filter(|&p| sets[p].contains(&target)).map(|p| fx[p]).collect()
            })
            .collect();
        let omega: Vec<usize> = (0..comp.len()).filter(|&s| t_x[s].len() % 2 == 1).collect();
        let local = h_graph.induced(comp);
        let beta = parity_edge_assignment(&local, &omega)?;
        for (s, &y) in comp.iter().enumerate() {
            let mut t = t_x[s].clone();
            for &s2 in local.neighbours(s) {
                if beta.weight(s, s2) {
                    t.push(copy.copy_vertex(comp[s2], j));
                }
            }
            t.sort_unstable();
            let key = (copy.copy_vertex(y, j), t);
            h[y] = *index
                .get(&key)
                .ok_or_else(|| Error::Internal(format!("constructed set for {} is not a CFI vertex", q.name(y))))?;
        }
    }
    let hom = Homomorphism::new(h_graph, g.result(), h)
        .map_err(|e| Error::Internal(format!("constructed extension is not a homomorphism: {e}")))?;
    for v in 0..q.n() {
        if copy.gamma.apply(g.colouring()[hom.apply(v)]) != v {
            return Err(Error::Internal(format!("extension is not colour-prescribed at {}", q.name(v))));
        }
    }
    Ok(hom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::star_query;
    use crate::query::parse_query;
    use crate::width::ell_copy;

    #[test]
    fn edge_query_counts() {
        let q = parse_query("q(x) :- E(x,y)").unwrap();
        let copy = ell_copy(&q, 3).unwrap();
        assert_eq!(enumerate_extendable(&q, &copy, &[]).unwrap().len(), 4);
        assert_eq!(enumerate_extendable(&q, &copy, &[0]).unwrap().len(), 3);
    }

    #[test]
    fn empty_set_extends_to_first_copy() {
        let q = parse_query("q(x) :- E(x,y)").unwrap();
        let copy = ell_copy(&q, 3).unwrap();
        let all = enumerate_extendable(&q, &copy, &[]).unwrap();
        let phi = all.iter().find(|a| a.sets[0].is_empty()).unwrap();
        let h = extend_assignment(phi, &q, &copy, &[]).unwrap();
        let g = crate::cfi::cfi(&copy.f, &[]).unwrap();
        assert_eq!(g.pairs[h.apply(1)], (copy.copy_vertex(1, 1), vec![]));
    }

    #[test]
    fn non_extendable_assignment_is_refused() {
        let q = parse_query("q(x) :- E(x,y)").unwrap();
        let copy = ell_copy(&q, 3).unwrap();
        let g = crate::cfi::cfi(&copy.f, &[0]).unwrap();
        // the full neighbourhood has odd size 3 and meets every copy once
        let v = g.pairs.iter().position(|(w, s)| *w == 0 && s.len() == 3).unwrap();
        let phi = ExtendableAssignment {
            phi: vec![v],
            sets: vec![g.pairs[v].1.clone()],
            e1: true,
            e2: true,
            witness_copies: vec![Some(1)],
        };
        assert!(matches!(extend_assignment(&phi, &q, &copy, &[0]), Err(Error::NoExtension(_))));
    }

    #[test]
    fn every_star_assignment_extends() {
        let q = star_query(2);
        for ell in [3, 5] {
            let copy = ell_copy(&q, ell).unwrap();
            for w in [vec![], vec![0]] {
                for phi in enumerate_extendable(&q, &copy, &w).unwrap() {
                    extend_assignment(&phi, &q, &copy, &w).unwrap();
                }
            }
        }
    }

    #[test]
    fn preconditions() {
        let q = parse_query("q(x) :- E(x,y)").unwrap();
        assert!(enumerate_extendable(&q, &ell_copy(&q, 2).unwrap(), &[]).is_err());
        let full = ConjunctiveQuery::full(crate::graph::Graph::complete(2));
        assert!(enumerate_extendable(&full, &ell_copy(&full, 1).unwrap(), &[]).is_err());
        assert_eq!(witness_free_variable(&star_query(3)), Some(0));
    }
}
