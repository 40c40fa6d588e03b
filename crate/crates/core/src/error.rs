use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("order relation has a cycle through {0} and {1}")]
    NotAPoset(String, String),
    #[error("{0} and {1} have no unique {2}")]
    NotALattice(String, String, &'static str),
    #[error("order has no global {0}")]
    NoBounds(&'static str),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("{what} has size {size}, above the cap {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("ground set is not closed under meet: {0} ∧ {1}")]
    GroundNotMeetClosed(String, String),
    #[error("ground set is not closed under the supplied operations: {0} and {1}")]
    GroundNotClosed(String, String),
    #[error("invalid point set: {0}")]
    InvalidPoints(String),
    #[error("{0} is not a closed element")]
    NotClosedElements(String),
    #[error("independent checks disagree in {check}: {detail}")]
    OracleDisagreement { check: &'static str, detail: String },
    #[error("the lattice is not X-top; {0}")]
    NotXTop(String),
    #[error("point set must be non-empty")]
    EmptySet,
    #[error("space must be non-empty")]
    EmptySpace,
    #[error("bad module spec: {0}")]
    BadSpec(String),
    #[error("submodule must be non-zero")]
    ZeroSubmodule,
    #[error("module has no first submodules")]
    Firstless,
    #[error("module is not a top^f-module")]
    NotTopf,
    #[error("ring axiom failure: {0}")]
    RingAxiom(String),
    #[error("module axiom failure: {0}")]
    ModuleAxiom(String),
    #[error("malformed input: {0}")]
    Schema(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotAPoset(..) | Error::NotALattice(..) | Error::NoBounds(_) => 3,
            Error::InvalidPoints(_) => 4,
            Error::TooLarge { .. } => 5,
            Error::OracleDisagreement { .. } => 1,
            _ => 2,
        }
    }
}
