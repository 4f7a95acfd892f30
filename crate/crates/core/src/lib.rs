//! Idempotent stable range one for 2×2 integer matrices.
//!
//! - [`bezout`]: Bézout families, minimal pairs, the shifted-product equation.
//! - [`mat2`]: exact 2×2 integer matrix algebra.
//! - [`zdecider`]: the decision procedure, witnesses and clean decompositions.
//! - [`modring`]: exhaustive checks of the definitions over `M₂(ℤ/n)`.
//! - [`cli`]: the `isr1` command-line tool.

pub mod bezout;
pub mod cli;
pub mod error;
pub mod json;
pub mod mat2;
pub mod modring;
pub mod zdecider;

pub use error::{Error, Result};
pub use mat2::Mat2;
