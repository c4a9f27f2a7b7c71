//! Exact arithmetic, cubic residue symbols and cubic exponential sums over
//! the Eisenstein integers Z[ω].

pub mod arith;
pub mod cli;
pub mod error;
pub mod expsums;
pub mod factor;
pub mod largesieve;
pub mod residue;
pub mod ring;
pub mod sieve;
pub mod symbol;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{gcd, inverse_mod, DualElement, Eisenstein, EisensteinInt, PrimaryDecomposition, Unit, Zw};
pub use symbol::{cubic_symbol, CubicSymbolValue};
