//! Vaughan's identity, smooth weights, dyadic partitions and the prime and
//! Type-I/II sums over pluggable coefficient sources.

pub mod constraint;
pub mod decomp;
pub mod partition;
pub mod source;
pub mod sums;
pub mod vaughan;
pub mod weight;

pub use constraint::ProgressionConstraint;
pub use decomp::{check_rs_condition, vaughan_decomposition_check, vaughan_decomposition_general, DecompositionReport};
pub use partition::DyadicPartition;
pub use source::CoefficientSource;
pub use sums::{prime_sum_sharp, smoothed_prime_sum, type1_average, type1_pointwise, type2_bilinear, PrimeSums};
pub use vaughan::{vaughan_terms, VaughanTerms};
pub use weight::{SmoothWeight, WeightProfile};
