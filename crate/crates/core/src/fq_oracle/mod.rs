//! Independent geometric verification over prime finite fields.
//!
//! Everything the combinatorial modules compute can be recounted here the
//! long way: subspaces of `F_q^n` are enumerated as row-reduced matrices,
//! Schubert incidence conditions are checked by exact rank arithmetic, and
//! zero-dimensional intersection problems are counted point by point,
//! either against fixed flags or as modal counts over random flag draws.
//! The finite-field counts corroborate the Littlewood-Richardson numbers;
//! they are a plausibility oracle, not a proof about characteristic zero.

mod field;
mod flags;
mod grassmann;
mod matrix;
mod orthogonal;

pub use field::{is_prime, FqScalar};
pub use flags::FlagFq;
pub use grassmann::{
    cell_partition, empirical_intersection, empirical_intersection_trials,
    enumerate_grassmannian, grassmannian_size, schubert_condition, trial_rng, CellMatrices,
    TrialReport, DEFAULT_POINT_CAP,
};
pub use matrix::{plucker_int, FqMatrix};
pub use orthogonal::{
    empirical_og_intersection, empirical_og_intersection_trials, enumerate_og_points,
    is_isotropic, isotropic_cell_points, og_size, reverse_form,
};
