//! Co-centralizer graphs of finite non-abelian groups and their exact
//! distance, distance Laplacian and distance signless Laplacian spectra.
//!
//! The pipeline is: build a group from one of five hard-coded families,
//! enumerate its proper centralizers by brute force, form the centralizer
//! graph (equal cardinality = adjacent) and its complement, then compute
//! exact characteristic polynomials of the distance-based matrices and
//! compare them against the closed-form spectra the families admit.

pub mod closed_form;
pub mod field;
pub mod graph;
pub mod group;
pub mod linalg;
pub mod numeric;
pub mod poly;
pub mod verify;

pub use closed_form::{EigenvalueExpr, GraphShape, MatrixKind, SpectrumSpec};
pub use graph::Graph;
pub use group::{CentralizerFamily, FiniteGroup, GroupSpec};
pub use linalg::IntMatrix;
pub use poly::{BigPoly, SurdValue};
pub use verify::{Outcome, VerificationReport};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("field degree must be in 1..=16, got {0}")]
    FieldDegree(u32),
    #[error("division by zero in GF(2^k)")]
    DivisionByZero,
    #[error("group is abelian: no proper centralizers")]
    NoProperCentralizers,
    #[error("graph is disconnected: distances undefined")]
    Disconnected,
    #[error("dimension {0} above exact char-poly cap {1}: use the nullity path")]
    UseNullityPath(usize, usize),
    #[error("negative discriminant {0}: complex roots")]
    ComplexRoots(String),
    #[error("malformed spectrum: {0}")]
    MalformedSpectrum(String),
    #[error("complete multipartite needs at least 2 parts")]
    TooFewParts,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("claimed multiplicity total {0} does not match dimension {1}")]
    MultiplicityMismatch(usize, usize),
    #[error("degenerate instance: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
