//! Chow groups of degree-zero 0-cycles on Chatelet surfaces
//! `y^2 - d z^2 = (x - c1)(x - c2)(x - c3)` over Q and over its completions.
//!
//! Every local group is computed twice: as the subgroup of `(Z/2Z)^3`
//! generated by the images of the fibres carrying local points, and as an
//! order predicted from the case analysis of the roots. The global group is
//! the kernel of the sum of the local groups.

pub mod check;
pub mod error;
pub mod factor;
pub mod global;
pub mod local;
pub mod norm;
pub mod padic;

pub use error::{ChowError, Result};
pub use global::{candidate_places, global_chow, kernel_dimension, reciprocity_check, GlobalOptions, GlobalReport};
pub use local::{local_chow, CaseLabel, F2Triple, LocalOptions, LocalReport, NormalizedSurface, Subgroup3};
pub use norm::{chi, classify_extension, conductor_n, stability_modulus, ExtKind, QuadExtClass};
pub use padic::{
    hilbert_oracle, hilbert_symbol, is_local_square, legendre, parse_rational, unit_residue, valuation, Place,
    Rational, Valuation, F2,
};
