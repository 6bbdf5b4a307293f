//! Higher preprojective algebras of quivers with quadratic relations.
//!
//! All arithmetic is exact over the rationals. Paths are stored in written
//! order `[a_l, ..., a_1]` with `a_1` acting first; see [`quiver`].

pub mod algebra;
pub mod error;
pub mod grading;
pub mod io;
pub mod koszul;
pub mod linalg;
pub mod mckay;
pub mod preprojective;
pub mod presentations;
pub mod quiver;
pub mod superpotential;
pub mod tensor;

pub use algebra::{
    graded_dim, hilbert_table, is_zero_in_quotient, koszulity_probe, quadratic_dual, GradedDims, KoszulVerdict,
    QuadraticPresentation,
};
pub use error::{Error, Result};
pub use grading::{
    degree_zero_part, finiteness_check, gorenstein_parameter, grading_search, validate_grading,
    validate_grading_with_finiteness, Finiteness, GradingVerdict, SearchOptions, SearchReport, WeightGrading,
};
pub use koszul::{koszul_dims, koszul_space, top_form, KoszulSpace, TopForm};
pub use linalg::{Rational, RationalMatrix, Subspace};
pub use mckay::{air_grading, classify_group, mckay_presentation, skew_superpotential, CyclicGroupSpec};
pub use preprojective::{build_preprojective, preprojective_superpotential, PreprojectivePresentation};
pub use quiver::{Path, PathVector, Quiver};
pub use superpotential::{
    check_superpotential, derivation_quotient, derive, shuffle_product, signed_cyclic_shift, Side, Superpotential,
};
pub use tensor::{lift_grading_sum, tensor_presentation, TensorMap};
