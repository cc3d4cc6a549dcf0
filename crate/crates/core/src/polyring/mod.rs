//! Exact polynomial arithmetic over the integers.

mod bivariate;
mod coeff;
mod dense;
mod gcd;

pub use bivariate::BiPoly;
pub use coeff::Coeff;
pub use dense::{Degree, DensePoly};
pub use gcd::{gcd_rational, resultant, shares_root_by_resultant};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("compose_power needs an exponent k >= 1")]
    ZeroExponent,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("resultant is only defined here for nonzero polynomials")]
    ZeroResultantInput,
}
