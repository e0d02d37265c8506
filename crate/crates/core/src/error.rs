use thiserror::Error;

use crate::rootsys::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{family}{rank} is not a simple type (valid: A1+, B2+, C3+, D4+, E6-8, F4, G2)")]
    InvalidType { family: Family, rank: usize },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("root string of a root through plus or minus itself is degenerate")]
    DegenerateString,

    #[error("{0} is not a root of the system")]
    NotARoot(String),

    #[error("root {0} lies in R_h, where the ordering sign is undefined")]
    IsotropyRoot(String),

    #[error("painted set {painted:?} must be a nonempty subset of nodes 1..={rank}")]
    BadPainting { painted: Vec<usize>, rank: usize },

    #[error("invalid Kähler parameter: {0}")]
    BadKahlerParam(String),

    /// A property guaranteed by the theory failed; this always means a bug.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}
