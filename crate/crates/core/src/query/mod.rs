//! Conjunctive queries over a single binary relation.
//!
//! A query is its Gaifman graph `H` plus an ordered list of free
//! variables `X`; the remaining vertices `Y` are existentially quantified.

mod answers;
mod minimize;
mod parse;

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use answers::{count_answers, count_answers_with, list_answers};
pub(crate) use answers::AnswerCounter;
pub use minimize::{
    is_counting_equivalent, is_counting_equivalent_with, minimize, minimize_with, partial_automorphisms,
    partial_automorphisms_with, queries_isomorphic, PartialAutomorphismSet,
};
pub use parse::parse_query;

#[derive(Clone, PartialEq, Eq)]
pub struct ConjunctiveQuery {
    graph: Graph,
    names: Vec<String>,
    free: Vec<usize>,
    is_free: Vec<bool>,
}

impl fmt::Debug for ConjunctiveQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dsl("q"))
    }
}

impl fmt::Display for ConjunctiveQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dsl("q"))
    }
}

impl ConjunctiveQuery {
    /// `free` lists the free variables in order; names default to
    /// `x1..` for free and `y1..` for existential vertices.
    pub fn new(graph: Graph, free: Vec<usize>) -> Result<ConjunctiveQuery> {
        let mut is_free = vec![false; graph.n()];
        for &x in &free {
            if x >= graph.n() {
                return Err(Error::Invalid(format!("free variable {x} is not a vertex")));
            }
            if is_free[x] {
                return Err(Error::Invalid(format!("free variable {x} listed twice")));
            }
            is_free[x] = true;
        }
        let mut names = vec![String::new(); graph.n()];
        for (i, &x) in free.iter().enumerate() {
            names[x] = format!("x{}", i + 1);
        }
        let mut next = 1;
        for (v, name) in names.iter_mut().enumerate() {
            if !is_free[v] {
                *name = format!("y{next}");
                next += 1;
            }
        }
        Ok(ConjunctiveQuery {
            graph,
            names,
            free,
            is_free,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<ConjunctiveQuery> {
        if names.len() != self.graph.n() {
            return Err(Error::Invalid("one name per variable".into()));
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(Error::Invalid("variable names must be unique".into()));
        }
        self.names = names;
        Ok(self)
    }

    /// The query with every vertex free.
    pub fn full(graph: Graph) -> ConjunctiveQuery {
        let free = (0..graph.n()).collect();
        ConjunctiveQuery::new(graph, free).expect("all vertices are valid")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Free variables in declaration order.
    pub fn free(&self) -> &[usize] {
        &self.free
    }

    pub fn is_free(&self, v: usize) -> bool {
        self.is_free[v]
    }

    pub fn free_mask(&self) -> &[bool] {
        &self.is_free
    }

    /// Existential variables, ascending.
    pub fn existential(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| !self.is_free[v]).collect()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    /// Connected components of `H[Y]`, ordered by smallest vertex.
    pub fn existential_components(&self) -> Vec<Vec<usize>> {
        let mask: Vec<bool> = self.is_free.iter().map(|&f| !f).collect();
        self.graph.components_within(&mask)
    }

    /// Renders the query in the DSL accepted by [`parse_query`].
    pub fn to_dsl(&self, name: &str) -> String {
        let head: Vec<&str> = self.free.iter().map(|&x| self.names[x].as_str()).collect();
        let body: Vec<String> = self
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| format!("E({},{})", self.names[u], self.names[v]))
            .collect();
        format!("{name}({}) :- {}", head.join(","), body.join(", "))
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::DisconnectedQuery)
        }
    }

    pub(crate) fn require_free(&self) -> Result<()> {
        if self.free.is_empty() {
            Err(Error::NoFreeVariables)
        } else {
            Ok(())
        }
    }

    /// Number of free variables.
    pub fn arity(&self) -> usize {
        self.free.len()
    }
}
