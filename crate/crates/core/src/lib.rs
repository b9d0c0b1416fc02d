//! Exact-arithmetic Schubert calculus.
//!
//! This crate computes intersection numbers of Schubert varieties in three
//! settings, entirely by exact combinatorial enumeration:
//!
//! * the Grassmannian `Gr(n,k)`: Littlewood-Richardson coefficients, Schur
//!   function products, the Pieri rule, and zero-dimensional intersection
//!   counts ([`schur_ring`], [`tableaux`], [`partitions`]);
//! * the complete flag variety: Schubert polynomials via divided-difference
//!   operators, Monk's rule, and the coinvariant ring ([`permutations`],
//!   [`schubert_polys`]);
//! * the odd orthogonal Grassmannian `OG(2n+1,n)`: Schur P/Q functions,
//!   shifted tableaux, and their structure constants ([`shifted`]).
//!
//! Every combinatorial answer can be cross-checked against an independent
//! geometric oracle that enumerates subspaces over small prime fields
//! ([`fq_oracle`]).
//!
//! All counts and coefficients use arbitrary-precision integers; there is no
//! floating point anywhere.

pub mod error;
pub mod fq_oracle;
pub mod partitions;
pub mod permutations;
pub mod poly;
pub mod schubert_polys;
pub mod schur_ring;
pub mod shifted;
pub mod tableaux;

pub use error::{Error, Result};
pub use partitions::{AmbientRectangle, Partition, ShiftedPartition, SkewShape};
pub use permutations::Permutation;
pub use poly::IntPolynomial;
pub use schur_ring::SchurExpansion;
pub use tableaux::Tableau;
