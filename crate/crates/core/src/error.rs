use thiserror::Error;

/// Errors produced by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },

    #[error("self-loop atom E({0},{0})")]
    SelfLoopAtom(String),

    #[error("isolated variable {0}")]
    IsolatedVariable(String),

    #[error("disconnected query out of scope")]
    DisconnectedQuery,

    #[error("query has no free variables")]
    NoFreeVariables,

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("no extension: {0}")]
    NoExtension(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by a resource cap rather than by bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded(_) | Error::TooLarge(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
