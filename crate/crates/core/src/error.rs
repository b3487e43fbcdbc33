//! Error type shared by every module of the crate.

use thiserror::Error;

use crate::lattice::{LatticePoint, MultiIndex};

/// All failure modes surfaced by the library.
#[derive(Debug, Error)]
pub enum CoreError {
    /// Invalid ring configuration (bad modulus, negative tolerance).
    #[error("configuration: {0}")]
    Config(String),

    /// A string could not be read as an element, or a file violates a schema.
    #[error("parse: {0}")]
    Parse(String),

    /// Operands live over different rings, boxes, or dimensions.
    #[error("mismatch: {0}")]
    Mismatch(String),

    /// A constructor invariant was violated (wrong component count, bad index).
    #[error("validation: {0}")]
    Validation(String),

    /// The requested degree is outside the range an operation supports.
    #[error("degree: {0}")]
    Degree(String),

    /// An operation would produce a grid with a zero extent.
    #[error("empty domain: {0}")]
    EmptyDomain(String),

    /// A cell or point falls outside the box it is evaluated against.
    #[error("out of domain: {0}")]
    OutOfDomain(String),

    /// A potential was requested for a form that is not closed.
    #[error("not closed: component {component} at point {point}")]
    NotClosed {
        component: MultiIndex,
        point: LatticePoint,
    },

    /// A brute-force computation exceeds the configured size cap.
    #[error("resource: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
