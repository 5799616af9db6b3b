use std::fmt;

use crate::complex::Vertex;

/// Why a raw simplex family fails to be a canonical, closed simplicial complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    UnknownVertex {
        simplex: Vec<Vertex>,
        vertex: Vertex,
    },
    EmptySimplex,
    NotCanonical {
        simplex: Vec<Vertex>,
    },
    Duplicate {
        simplex: Vec<Vertex>,
    },
    MissingFace {
        simplex: Vec<Vertex>,
        face: Vec<Vertex>,
    },
}

fn braces(s: &[Vertex]) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownVertex { simplex, vertex } => {
                write!(f, "unknown vertex {vertex} in simplex {}", braces(simplex))
            }
            Violation::EmptySimplex => write!(f, "empty simplex"),
            Violation::NotCanonical { simplex } => {
                write!(f, "simplex {} is not strictly increasing", braces(simplex))
            }
            Violation::Duplicate { simplex } => write!(f, "duplicate simplex {}", braces(simplex)),
            Violation::MissingFace { simplex, face } => {
                write!(
                    f,
                    "missing face {} of simplex {}",
                    braces(face),
                    braces(simplex)
                )
            }
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid complex: {0}")]
    Invalid(Violation),
    #[error("vertex labels overlap: {0}")]
    LabelClash(String),
    #[error("simplex {0:?} is not in the complex")]
    SimplexNotFound(Vec<Vertex>),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("subcomplex is not full (witness {witness:?}); subdivide first")]
    NotFull { witness: Vec<Vertex> },
    #[error("homology up to degree {requested} needs the {needed}-skeleton, only the {available}-skeleton is available")]
    InsufficientSkeleton {
        requested: usize,
        needed: usize,
        available: usize,
    },
    #[error("complex is only materialized up to a skeleton bound")]
    SkeletonBounded,
    #[error("complex is disconnected")]
    Disconnected,
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("action is not regular: simplex {witness:?} {reason}")]
    Irregular {
        witness: Vec<Vertex>,
        reason: String,
    },
    #[error("boundary of boundary is nonzero in degree {0}")]
    BoundarySquare(usize),
    #[error("invariant factor does not fit in 64 bits")]
    FactorOverflow,
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
