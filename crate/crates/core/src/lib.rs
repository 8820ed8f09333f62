//! Exact-arithmetic toolkit for polynomial identities of finite-dimensional
//! algebras and superalgebras.
//!
//! Everything is computed over the rationals with arbitrary precision; no
//! floating point is used anywhere in the algebraic pipeline. The crate
//! provides:
//!
//! * structure-constant algebras with optional Z2-grading, supercommutator
//!   brackets, derived and lower central series ([`algebra`]),
//! * constructors for upper-triangular matrix algebras, involutions, the
//!   doubled graded algebra and the solvable superalgebra family built from
//!   them ([`constructors`]),
//! * free nonassociative multilinear polynomials, alternation operators,
//!   Young symmetrizers and evaluation ([`freepoly`]),
//! * codimension sequences and graded codimensions via exact sparse rank
//!   ([`codim`], [`linalg`]),
//! * the symmetric-group toolkit: partitions, hook lengths, characters,
//!   cocharacters and colengths ([`symfun`]).

pub mod algebra;
pub mod codim;
pub mod constructors;
pub mod freepoly;
pub mod linalg;
pub mod perm;
pub mod scalar;
pub mod subspace;
pub mod symfun;
pub mod witness;

pub use algebra::{Algebra, AlgebraError, Element, Parity};
pub use scalar::Scalar;
pub use subspace::Subspace;
