//! Symmetric-group toolkit: partitions, hook lengths, standard tableaux,
//! irreducible characters, and cocharacter/colength computations on the
//! multilinear quotient modules.

mod characters;
mod cocharacter;
mod hooks;
mod partitions;
mod tableaux;

pub use characters::{class_size, CharacterCache};
pub use cocharacter::{
    cocharacter, colength, graded_cocharacter, graded_colength, quotient_module, shape_filter_report,
    graded_shape_filter_report, CocharacterEntry, CocharacterReport, GradedCocharacterEntry,
    GradedCocharacterReport, QuotientModule, ShapeFilterReport,
};
pub use hooks::{
    colength_polynomial_bound, hook_dimension, hook_lengths, rectangle_bound_check,
    RectangleBoundCheck,
};
pub use partitions::{partitions, Partition};
pub use tableaux::{count_standard_tableaux, standard_tableaux, YoungTableau};

use thiserror::Error;

use crate::codim::CodimError;

#[derive(Debug, Error)]
pub enum SymfunError {
    #[error("partition sizes differ: |lambda| = {lambda}, |class| = {class}")]
    SizeMismatch { lambda: usize, class: usize },
    #[error("enumeration limited to n <= {cap}, got {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("multiplicity of {lambda} is not a nonnegative integer: {value}")]
    BadMultiplicity { lambda: String, value: String },
    #[error("colength {value} exceeds the dimension bound at n = {n}")]
    ColengthBound { n: usize, value: String },
    #[error("pivot bookkeeping inconsistent while computing a trace")]
    TraceInconsistency,
    #[error(transparent)]
    Codim(#[from] CodimError),
}
