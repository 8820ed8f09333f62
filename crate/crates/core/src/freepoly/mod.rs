//! Free nonassociative multilinear polynomials.
//!
//! Monomials are full binary product trees with variable-labeled leaves;
//! polynomials are sparse rational combinations of them. Alternation
//! operators can be expanded eagerly or kept symbolic and evaluated lazily,
//! which is what makes the high-degree evaluations tractable.

mod alternating;
mod fm;
mod monomial;
mod polynomial;
mod symmetrizer;

pub use alternating::AlternatedPolynomial;
pub use fm::{
    action_variables, fm_polynomial, fm_variable_name, padded_phi_value, pair_chain,
    FmPolynomial, PairChain,
};
pub use monomial::{Monomial, VarParity, Variable};
pub use polynomial::{Assignment, Polynomial};
pub use symmetrizer::{
    apply_symmetrizer, symmetrize_alternating, SymmetrizedAlternating,
};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FreePolyError {
    #[error("a monomial needs at least one variable")]
    EmptyProduct,
    #[error("variable v{0} repeated; monomials must be multilinear")]
    DuplicateVariable(u32),
    #[error("variable v{0} is not in the polynomial's support")]
    NotInSupport(u32),
    #[error("the variable map is not a bijection on the support")]
    NotBijection,
    #[error("missing assignment for variable v{0}")]
    MissingAssignment(u32),
    #[error("value assigned to v{0} violates its parity restriction")]
    ParityViolation(u32),
    #[error("alternation sets must be pairwise disjoint")]
    OverlappingSets,
    #[error("alternation set mixes parity restrictions")]
    MixedParities,
    #[error("tableau has {boxes} boxes but the action covers {vars} variables")]
    SizeMismatch { boxes: usize, vars: usize },
    #[error("block count must be at least one")]
    ZeroBlocks,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
