//! Colour-restricted answer counting, extendable assignments into CFI
//! graphs, and answer recovery by interpolation.

mod extendable;
mod interpolation;
mod parity;

use crate::error::{Error, Result};
use crate::graph::{ColouredGraph, Homomorphism};
use crate::limits::Limits;
use crate::query::{AnswerCounter, ConjunctiveQuery};

pub use extendable::{
    check_extendable, enumerate_extendable, enumerate_extendable_with, extend_assignment, extend_assignment_with,
    witness_free_variable, ExtendableAssignment,
};
pub use interpolation::{ans_via_interpolation, ans_via_interpolation_with};
pub use parity::{parity_edge_assignment, ParityAssignment};

/// The colour in `V(H)` of every vertex of `g`: its colour itself when
/// the pattern is `H`, or its colour pushed through `gamma` when the
/// pattern is an ℓ-copy of `H`.
fn h_colours(q: &ConjunctiveQuery, g: &ColouredGraph, gamma: Option<&Homomorphism>) -> Result<Vec<usize>> {
    match gamma {
        None => {
            if g.pattern().n() != q.n() {
                return Err(Error::Invalid("colouring pattern is not the query graph".into()));
            }
            Ok(g.colouring().to_vec())
        }
        Some(gamma) => {
            if gamma.map().len() != g.pattern().n() || gamma.map().iter().any(|&v| v >= q.n()) {
                return Err(Error::Invalid("gamma does not map the colouring pattern into the query graph".into()));
            }
            Ok(g.colouring().iter().map(|&c| gamma.apply(c)).collect())
        }
    }
}

fn classes(colours: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); n];
    for (v, &c) in colours.iter().enumerate() {
        out[c].push(v);
    }
    out
}

/// |Ans^τ|: answers whose free variable `x_p` lands in the colour class
/// `tau[p]` of `V(H)`. Existential variables are unrestricted.
pub fn count_answers_tau(
    q: &ConjunctiveQuery,
    g: &ColouredGraph,
    gamma: Option<&Homomorphism>,
    tau: &[usize],
) -> Result<u64> {
    count_answers_tau_with(q, g, gamma, tau, &Limits::default())
}

pub fn count_answers_tau_with(
    q: &ConjunctiveQuery,
    g: &ColouredGraph,
    gamma: Option<&Homomorphism>,
    tau: &[usize],
    limits: &Limits,
) -> Result<u64> {
    if tau.len() != q.arity() || tau.iter().any(|&t| t >= q.n()) {
        return Err(Error::Invalid("tau must send each free variable to a query vertex".into()));
    }
    let cls = classes(&h_colours(q, g, gamma)?, q.n());
    let all: Vec<usize> = (0..g.graph().n()).collect();
    let mut domains = vec![all; q.n()];
    for (&x, &t) in q.free().iter().zip(tau) {
        domains[x] = cls[t].clone();
    }
    AnswerCounter::new(q, g.graph(), Some(domains), limits).count()
}

/// Colour-prescribed answers: assignments extending to a homomorphism
/// that sends every query vertex into its own colour class. Sorted, each
/// listing the images of the free variables in declaration order.
pub fn list_cp_answers(q: &ConjunctiveQuery, g: &ColouredGraph, gamma: Option<&Homomorphism>) -> Result<Vec<Vec<usize>>> {
    list_cp_answers_with(q, g, gamma, &Limits::default())
}

pub fn list_cp_answers_with(
    q: &ConjunctiveQuery,
    g: &ColouredGraph,
    gamma: Option<&Homomorphism>,
    limits: &Limits,
) -> Result<Vec<Vec<usize>>> {
    let domains = classes(&h_colours(q, g, gamma)?, q.n());
    AnswerCounter::new(q, g.graph(), Some(domains), limits).collect()
}

/// |cpAns|.
pub fn count_cp_answers(q: &ConjunctiveQuery, g: &ColouredGraph, gamma: Option<&Homomorphism>) -> Result<u64> {
    count_cp_answers_with(q, g, gamma, &Limits::default())
}

pub fn count_cp_answers_with(
    q: &ConjunctiveQuery,
    g: &ColouredGraph,
    gamma: Option<&Homomorphism>,
    limits: &Limits,
) -> Result<u64> {
    let domains = classes(&h_colours(q, g, gamma)?, q.n());
    AnswerCounter::new(q, g.graph(), Some(domains), limits).count()
}
