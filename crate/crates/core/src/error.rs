use thiserror::Error;

use crate::closure::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("duplicate label `{0}` in universe")]
    DuplicateLabel(String),
    #[error("universe has {size} elements, over the cap of {cap}")]
    OverCap { size: usize, cap: usize },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("element index {0} is outside the universe")]
    UnknownElement(usize),
    #[error("covering contains an empty block")]
    EmptyBlock,
    #[error("blocks do not cover the universe; uncovered: {0}")]
    NotCovered(String),
    #[error("subset does not belong to this universe")]
    UniverseMismatch,
    #[error("{0} is not a block of the covering")]
    NotABlock(String),
    #[error("family is not a closure system")]
    NotClosureSystem,
    #[error("closure table does not satisfy the matroid closure axioms ({0})")]
    AxiomsNotSatisfied(Box<AxiomReport>),
    #[error("family violates the matroid independence axioms: {0}")]
    NotAMatroid(String),
    #[error("{what} requires at most {limit}, got {got}")]
    OverGuard {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("invalid covering document: {0}")]
    Json(#[from] serde_json::Error),
}
