//! Exact linear algebra over `Z_p` and over the integers.

pub(crate) mod det;
mod elim;
mod matrix;

use thiserror::Error;

pub use det::{det_integer, det_mod_p, BareissDeterminant, CrtDeterminant, DeterminantRegistry, DeterminantStrategy};
pub(crate) use elim::check_prime;
pub use elim::{elim_mod_p, rank_mod_p, EliminationResult};
pub use matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
}
