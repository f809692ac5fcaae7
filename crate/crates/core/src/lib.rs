pub mod answers;
pub mod cfi;
pub mod cli;
pub mod error;
pub mod graph;
pub mod limits;
pub mod quantum;
pub mod query;
pub mod width;
pub mod witness;
pub mod wl;

pub use error::{Error, Result};
pub use graph::{ColouredGraph, Graph, Homomorphism};
pub use limits::Limits;
pub use query::ConjunctiveQuery;
