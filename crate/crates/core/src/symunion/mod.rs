//! Symmetric unions `D ⊔ -D(n_1, ..., n_k)` built from marked diagrams.
//!
//! A marking puts a disk on one edge (gap) of the partial diagram `D`. The
//! union is assembled by walking `D` and its mirror copy segment by segment,
//! joining them through the ∞-tangle and the twist tangles on the axis.

mod build;
mod compat;
mod marking;
mod normalize;
mod reduced;

use thiserror::Error;

use crate::codes::CodeError;
use crate::coloring::ColoringError;

pub use build::{build_direct, build_symmetric_union, union_coloring_matrix, StrandLabel, SymUnionDiagram};
pub use compat::{
    all_colorings_compatible, is_symmetrically_compatible, lift_coloring, lift_into, search_incompatible,
    IncompatibleHit,
};
pub use marking::{Disk, MarkedDiagram, Marking};
pub use normalize::normalize_markings;
pub use reduced::reduced_block_matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymUnionError {
    #[error("invalid marking: {0}")]
    InvalidMarking(String),
    #[error("cannot parse marked diagram: {0}")]
    Parse(String),
    #[error("markings do not give a knot: traversal covers {visited} of {segments} segments")]
    NotAKnot { visited: usize, segments: usize },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("internal error: {0}")]
    Internal(String),
}
