//! Scalar special functions and their local expansions.

mod bessel;
mod gamma;

pub use bessel::bessel_k;
pub use gamma::{gamma_laurent, gamma_value, ln_gamma, GammaExpansion};
