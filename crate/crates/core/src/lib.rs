//! Exact Demazure characters and multiplicity bounds for finite root systems.
//!
//! The crate is organized bottom-up:
//!
//! - [`root_system`]: Cartan data, positive roots and the weight lattice.
//! - [`weyl`]: Weyl group elements in canonical form, reduced words, parabolic
//!   decompositions and the 0-Hecke (Demazure) monoid product.
//! - [`character`]: the group algebra `Z[Λ]`, Demazure operators, Demazure and
//!   Weyl characters, weight multiplicities and dimensions.
//! - [`growth`]: exact polynomial-degree detection along dilation rays.
//! - [`branching`]: restriction to Levi subgroups and the Demazure bounds on
//!   branching multiplicities.
//! - [`sl3t`]: the multiplicity formulas for `SL_3 / T`.
//! - [`cli`]: the `demazure` command-line front end.

pub mod branching;
pub mod character;
pub mod cli;
pub mod growth;
pub mod root_system;
pub mod sl3t;
pub mod weyl;

pub use character::Character;
pub use root_system::{Family, RootSystem, Weight};
pub use weyl::{ReducedWord, WeylElement};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(
        "unknown root system type {0:?}; expected a family letter A-G followed by a rank, e.g. A2"
    )]
    UnknownType(String),
    #[error("invalid root system {name}: allowed ranks are {allowed}")]
    InvalidRootSystem { name: String, allowed: &'static str },
    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight has {got} coordinates, expected {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {weight} is not dominant for the Levi subset")]
    NotLeviDominant { weight: Weight },
    #[error("word {word:?} is not reduced (length {length} < {letters} letters)")]
    NotReduced {
        word: Vec<usize>,
        length: usize,
        letters: usize,
    },
    #[error("sequence too short: need N >= {required}, got N = {got}")]
    SequenceTooShort { required: usize, got: usize },
    #[error("inconclusive: no finite difference up to order {max_order} vanishes, extend N")]
    Inconclusive { max_order: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
