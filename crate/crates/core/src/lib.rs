//! SL2(C) Casson invariant of integral homology spheres built from Brieskorn
//! spheres, Dehn surgery on knots, and splicing.
//!
//! The polynomial layer is generic over the coefficient ring; the aliases
//! below fix it to arbitrary-precision integers, which is what the rest of
//! the crate uses.

pub mod casson;
pub mod knots;
pub mod oracle;
pub mod polyring;
pub mod splice;

use num_bigint::BigInt;
use num_rational::Ratio;

pub use casson::{brieskorn_lambda, BrieskornTriple, CassonError};
pub use knots::{KnotDescriptor, KnotStore};
pub use polyring::{BiPoly, Coeff, DensePoly, PolyError};
pub use splice::{AmbientKnot, Evaluator, LambdaCertificate, ManifoldExpression, Status, Verdict};

/// One-variable integer polynomial in `t`.
pub type IntPolynomial = DensePoly<BigInt>;
/// Integer polynomial in `M` and `L`.
pub type TwoVarPolynomial = BiPoly<BigInt>;
pub type Rational = Ratio<BigInt>;
