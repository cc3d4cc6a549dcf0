use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

/// Coefficient ring for the polynomial types: an exact signed integer type.
///
/// Implemented for `i64`, `i128` and `BigInt`. The fixed-width types are handy
/// in tests and small sweeps; anything that computes resultants should use
/// `BigInt`, since intermediate values grow quickly.
pub trait Coeff:
    Clone + Integer + Signed + From<i64> + Debug + Display + Send + Sync + 'static
{
}

impl<T> Coeff for T where
    T: Clone + Integer + Signed + From<i64> + Debug + Display + Send + Sync + 'static
{
}

// Compile-time check that the aliases at the crate root are valid.
#[allow(dead_code)]
fn _assert_impls() {
    fn is_coeff<C: Coeff>() {}
    is_coeff::<i64>();
    is_coeff::<i128>();
    is_coeff::<BigInt>();
}
