//! Exact chain-level computations for simplicial suspensions, loop groups
//! and the James construction: normalized chains, the Alexander-Whitney and
//! Eilenberg-Zilber maps with the Eilenberg-MacLane homotopy, the cobar
//! construction and its extended diagonal, Gugenheim-Munkholm perturbation
//! data, the Szczarba twisting cochain for suspensions, and the Milgram
//! strong deformation retract.
//!
//! All arithmetic is exact (integers, optionally reduced mod `m`). Every
//! identity the library claims is checkable at desk scale through the
//! verification suites in [`verify`] or the `simplicial-cobar` binary.

pub mod chains;
pub mod coalgebra;
pub mod cobar;
pub mod ezaw;
pub mod fixtures;
pub mod james;
pub mod milgram;
pub mod operator;
pub mod perturbation;
pub mod simplicial;
pub mod snf;
pub mod szczarba;
pub mod verify;

pub mod cli;

use thiserror::Error as ThisError;

/// Errors surfaced by the library.
#[derive(Debug, ThisError)]
pub enum Error {
    #[error("operator symbol {symbol} out of range for dimension {dim}")]
    OperatorIndex { symbol: String, dim: usize },

    #[error("complex {0} is not reduced")]
    NotReduced(String),

    #[error("coalgebra {0} is not connected")]
    NotConnected(String),

    #[error("basis of {complex} is infinite in degree {degree}; supply a word-length bound")]
    InfiniteBasis { complex: String, degree: usize },

    #[error("basis size cap {cap} exceeded for {complex}")]
    BasisCap { complex: String, cap: usize },

    #[error("{map} is not nilpotent within word-length bound {bound}: component {k} is nonzero")]
    NotNilpotent { map: String, bound: usize, k: usize },

    #[error("unknown label: {0}")]
    UnknownLabel(String),

    #[error("malformed space spec: {0}")]
    BadSpaceSpec(String),

    #[error("invalid fixture: {0}")]
    BadFixture(String),

    #[error("szczarba index {i} out of range for level {n}")]
    SzczarbaIndex { i: usize, n: usize },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
