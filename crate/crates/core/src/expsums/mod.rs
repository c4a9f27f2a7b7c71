//! Cubic exponential sums: Gauss, Kloosterman and Ramanujan sums and the
//! finite transforms built from them.

pub mod bias;
pub mod csum;
pub mod gauss;
pub mod kloosterman;
pub mod psi;
pub mod ramanujan;

pub use csum::ComplexSum;
pub use gauss::{gauss_direct, gauss_fast, normalized_gauss, GaussSumResult};
pub use kloosterman::{kloosterman_ss, kloosterman_sx, weil_bound, Cusp, KloostermanKernel};
pub use psi::{psi_sharp, psi_star};
pub use ramanujan::{orthogonality_check, ramanujan_closed, OrthogonalityTable};
