//! Exact-integer combinatorics of level-1 perfect crystals in affine types
//! E6, E7 and E8: the finite crystals themselves, energy functions, Young
//! column and Young wall models, path and Fock-space models, and the
//! cross-checks tying all of these realizations together.

pub mod cartan;
pub mod column;
pub mod energy;
pub mod export;
pub mod graph;
pub mod minuscule;
pub mod path;
pub mod perfect;
pub mod root_crystal;
pub mod roots;
pub mod sigma;
pub mod tables;
pub mod tensor;
pub mod verify;
pub mod wall;
pub mod weight;

pub use cartan::{AffineType, CartanSpec};
pub use graph::{Crystal, NONE};
pub use roots::{Root, RootSystem};
pub use weight::Weight;

/// Errors carry a stable machine-readable token as the prefix of their
/// display form, followed by a human-readable explanation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A requested node does not index a level-1 dominant weight.
    #[error("NODE_NOT_MINUSCULE: node {0} is not a level-1 dominant weight node")]
    NodeNotMinuscule(usize),
    /// An operation that requires all strings to have length at most one met
    /// a longer string.
    #[error("STRINGS_TOO_LONG: {0}")]
    StringsTooLong(String),
    /// Propagated data (energy values, powers, weights) disagreed along some
    /// edge of a graph traversal.
    #[error("INCONSISTENT: {0}")]
    Inconsistent(String),
    /// Static data (pattern files, embedded tables) failed validation.
    #[error("DATA_INVALID: {0}")]
    DataInvalid(String),
    /// Weight propagation along arrows produced two different weights for
    /// the same element.
    #[error("WEIGHT_CONFLICT: {0}")]
    WeightConflict(String),
    /// No colored-graph isomorphism exists with the given anchor.
    #[error("NO_ISO: {0}")]
    NoIso(String),
    /// An anchored equivariant traversal assigned two different images to
    /// the same element.
    #[error("CONFLICT: {0}")]
    Conflict(String),
    /// A weight outside the valid domain of an operation.
    #[error("BAD_WEIGHT: {0}")]
    BadWeight(String),
    /// An enumeration exceeded its configured depth or size bound.
    #[error("DEPTH_OVERFLOW: {0}")]
    DepthOverflow(String),
    /// Computed data does not match an embedded reference table.
    #[error("TABLE_MISMATCH: {0}")]
    TableMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
