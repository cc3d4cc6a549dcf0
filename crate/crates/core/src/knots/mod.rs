//! Knots in `S^3` and the invariants the evaluators need from them.
//!
//! Unknot, torus and twist knots carry closed-form Alexander polynomials.
//! A-polynomials are built in for the unknot and the (2,3) torus knot only;
//! everything else comes from data files loaded into a [`KnotStore`].

mod store;

pub use store::{KnotStore, LoadError, RESERVED_NAMES};

use std::borrow::Cow;
use std::fmt;
use std::num::NonZeroI64;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;
use thiserror::Error;

use crate::{IntPolynomial, TwoVarPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("torus knot parameters ({p}, {q}) must be coprime and at least 2")]
    InvalidTorus { p: i64, q: i64 },
    #[error("twist knot parameter must be nonzero")]
    ZeroTwist,
    #[error("unknown knot `{0}` (no record loaded)")]
    UnknownKnot(String),
    #[error("no A-polynomial available for {0}")]
    MissingAPolynomial(String),
}

/// Parameters of a torus knot, kept coprime with `2 <= p < q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusParams {
    p: u32,
    q: u32,
}

impl TorusParams {
    pub fn new(p: i64, q: i64) -> Result<Self, KnotError> {
        let (lo, hi) = if p <= q { (p, q) } else { (q, p) };
        if lo < 2 || lo.gcd(&hi) != 1 || hi > i64::from(u32::MAX) {
            return Err(KnotError::InvalidTorus { p, q });
        }
        Ok(Self {
            p: lo as u32,
            q: hi as u32,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }
}

/// Which knot in `S^3`.
///
/// `Twist(n)` follows the convention `Δ_n(t) = n t^2 - (2n+1) t + n`, so
/// `Twist(1)` is the figure-eight knot and `Twist(-1)` a trefoil.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KnotDescriptor {
    Unknot,
    Torus(TorusParams),
    Twist(NonZeroI64),
    Named(String),
}

impl KnotDescriptor {
    pub fn torus(p: i64, q: i64) -> Result<Self, KnotError> {
        TorusParams::new(p, q).map(KnotDescriptor::Torus)
    }

    pub fn twist(n: i64) -> Result<Self, KnotError> {
        NonZeroI64::new(n)
            .map(KnotDescriptor::Twist)
            .ok_or(KnotError::ZeroTwist)
    }

    pub fn named(name: impl Into<String>) -> Self {
        KnotDescriptor::Named(name.into())
    }

    pub fn is_unknot(&self) -> bool {
        matches!(self, KnotDescriptor::Unknot)
    }
}

impl fmt::Display for KnotDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotDescriptor::Unknot => write!(f, "unknot"),
            KnotDescriptor::Torus(t) => write!(f, "torus({},{})", t.p, t.q),
            KnotDescriptor::Twist(n) => write!(f, "twist({n})"),
            KnotDescriptor::Named(name) => write!(f, "{name}"),
        }
    }
}

/// Boundary-slope knowledge for a knot exterior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlopeInfo {
    /// The complete list of integral boundary slopes.
    Explicit(Vec<i64>),
    /// All boundary slopes are even integers (2-bridge knots).
    EvenOnly,
}

/// Invariants attached to one knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotInvariantRecord {
    pub alexander: IntPolynomial,
    /// Stored without the abelian factor `L - 1`, except for the unknot whose
    /// A-polynomial is exactly `L - 1`.
    pub a_polynomial: Option<TwoVarPolynomial>,
    pub slopes: Option<SlopeInfo>,
    /// Known to be a small (no closed essential surface) nontrivial knot.
    pub small: bool,
}

impl KnotInvariantRecord {
    pub fn is_two_bridge(&self) -> bool {
        matches!(self.slopes, Some(SlopeInfo::EvenOnly))
    }
}

/// Puts an Alexander polynomial in the normal form used throughout: no factor
/// of `t`, positive leading coefficient.
pub fn normalize_alexander(p: &IntPolynomial) -> IntPolynomial {
    p.strip_t_factor().0.with_positive_leading()
}

/// Which of the two Alexander-polynomial invariants a polynomial violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlexanderDefect {
    /// `Δ(1) ≠ ±1`
    ValueAtOne,
    /// not palindromic up to sign
    Symmetry,
}

impl fmt::Display for AlexanderDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlexanderDefect::ValueAtOne => write!(f, "Δ(1) = ±1"),
            AlexanderDefect::Symmetry => write!(f, "Δ(t) = ±t^deg Δ(1/t)"),
        }
    }
}

pub fn check_alexander(p: &IntPolynomial) -> Result<(), AlexanderDefect> {
    let v = p.eval(&1.into());
    if v.abs() != 1.into() {
        return Err(AlexanderDefect::ValueAtOne);
    }
    if !p.is_palindromic_up_to_sign() {
        return Err(AlexanderDefect::Symmetry);
    }
    Ok(())
}

fn torus_alexander(t: TorusParams) -> IntPolynomial {
    let (p, q) = (t.p as usize, t.q as usize);
    let minus_one = IntPolynomial::from_ints(&[-1]);
    let x_n_minus_1 = |n: usize| &IntPolynomial::monomial(1.into(), n) + &minus_one;
    let num = x_n_minus_1(p * q) * x_n_minus_1(1);
    let den = x_n_minus_1(p) * x_n_minus_1(q);
    num.div_exact(&den)
        .expect("nonzero divisor")
        .expect("cyclotomic quotient is exact")
}

fn twist_alexander(n: NonZeroI64) -> IntPolynomial {
    let n = n.get();
    normalize_alexander(&IntPolynomial::from_ints(&[n, -(2 * n + 1), n]))
}

fn unknot_a_polynomial() -> TwoVarPolynomial {
    TwoVarPolynomial::from_terms([(1.into(), 0, 1), ((-1).into(), 0, 0)])
}

fn trefoil_a_polynomial() -> TwoVarPolynomial {
    TwoVarPolynomial::from_terms([(1.into(), 6, 1), (1.into(), 0, 0)])
}

/// Resolves a descriptor to its invariant record. Built-in knots are computed
/// on the fly; named knots are borrowed from the store.
pub fn record<'a>(
    knot: &KnotDescriptor,
    store: &'a KnotStore,
) -> Result<Cow<'a, KnotInvariantRecord>, KnotError> {
    Ok(match knot {
        KnotDescriptor::Unknot => Cow::Owned(KnotInvariantRecord {
            alexander: IntPolynomial::one(),
            a_polynomial: Some(unknot_a_polynomial()),
            slopes: Some(SlopeInfo::Explicit(vec![0])),
            small: false,
        }),
        KnotDescriptor::Torus(t) => Cow::Owned(KnotInvariantRecord {
            alexander: torus_alexander(*t),
            a_polynomial: (t.p == 2 && t.q == 3).then(trefoil_a_polynomial),
            slopes: Some(SlopeInfo::Explicit(vec![
                0,
                i64::from(t.p) * i64::from(t.q),
            ])),
            small: true,
        }),
        KnotDescriptor::Twist(n) => Cow::Owned(KnotInvariantRecord {
            alexander: twist_alexander(*n),
            a_polynomial: None,
            slopes: Some(SlopeInfo::EvenOnly),
            small: true,
        }),
        KnotDescriptor::Named(name) => Cow::Borrowed(
            store
                .get(name)
                .ok_or_else(|| KnotError::UnknownKnot(name.clone()))?,
        ),
    })
}

pub fn alexander(knot: &KnotDescriptor, store: &KnotStore) -> Result<IntPolynomial, KnotError> {
    Ok(record(knot, store)?.alexander.clone())
}

pub fn a_polynomial(
    knot: &KnotDescriptor,
    store: &KnotStore,
) -> Result<TwoVarPolynomial, KnotError> {
    record(knot, store)?
        .a_polynomial
        .clone()
        .ok_or_else(|| KnotError::MissingAPolynomial(knot.to_string()))
}

/// Whether neither `+1` nor `-1` is a boundary slope. `None` when the record
/// carries no slope information.
pub fn boundary_slope_excludes_pm1(
    knot: &KnotDescriptor,
    store: &KnotStore,
) -> Result<Option<bool>, KnotError> {
    let rec = record(knot, store)?;
    Ok(match &rec.slopes {
        None => None,
        Some(SlopeInfo::EvenOnly) => Some(true),
        Some(SlopeInfo::Explicit(s)) => Some(!s.iter().any(|&x| x == 1 || x == -1)),
    })
}

/// Largest absolute explicit boundary slope, if the record lists any.
pub fn max_abs_slope(knot: &KnotDescriptor, store: &KnotStore) -> Result<Option<i64>, KnotError> {
    let rec = record(knot, store)?;
    Ok(match &rec.slopes {
        Some(SlopeInfo::Explicit(s)) => s.iter().map(|x| x.abs()).max(),
        _ => None,
    })
}

/// Culler–Shalen seminorm `||p μ + q λ||` of a curve whose norm is
/// `k |p - q α| / 4` for the boundary slope `α`.
pub fn cs_seminorm<I>(k: I, alpha: I, p: I, q: I) -> Ratio<I>
where
    I: Integer + Signed + Clone + From<i8>,
{
    assert!(k.is_positive(), "seminorm multiplier k must be positive");
    Ratio::new(k * (p - q * alpha).abs(), I::from(4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn store() -> KnotStore {
        KnotStore::new()
    }

    #[test]
    fn alexander_examples() {
        let s = store();
        assert_eq!(
            alexander(&KnotDescriptor::Unknot, &s).unwrap(),
            IntPolynomial::one()
        );
        assert_eq!(
            alexander(&KnotDescriptor::torus(2, 3).unwrap(), &s).unwrap(),
            IntPolynomial::from_ints(&[1, -1, 1])
        );
        let fig8 = alexander(&KnotDescriptor::twist(1).unwrap(), &s).unwrap();
        assert_eq!(fig8, IntPolynomial::from_ints(&[1, -3, 1]));
        assert_eq!(fig8.eval(&BigInt::from(1)), BigInt::from(-1));
    }

    #[test]
    fn torus_canonical_order() {
        assert_eq!(KnotDescriptor::torus(5, 2), KnotDescriptor::torus(2, 5));
        assert!(KnotDescriptor::torus(2, 4).is_err());
        assert!(KnotDescriptor::torus(1, 4).is_err());
        assert!(KnotDescriptor::torus(-2, 3).is_err());
        assert_eq!(KnotDescriptor::twist(0), Err(KnotError::ZeroTwist));
    }

    #[test]
    fn torus_degree() {
        let s = store();
        for p in 2..=12i64 {
            for q in (p + 1)..=12 {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let d = alexander(&KnotDescriptor::torus(p, q).unwrap(), &s).unwrap();
                assert_eq!(d.degree().finite(), Some(((p - 1) * (q - 1)) as usize));
                assert_eq!(check_alexander(&d), Ok(()));
            }
        }
    }

    #[test]
    fn twist_invariants() {
        let s = store();
        for n in (-20..=20).filter(|&n| n != 0) {
            let d = alexander(&KnotDescriptor::twist(n).unwrap(), &s).unwrap();
            assert_eq!(check_alexander(&d), Ok(()), "twist({n})");
            assert!(d.leading_coeff().unwrap() > &BigInt::from(0));
        }
    }

    #[test]
    fn a_polynomial_builtins() {
        let s = store();
        assert_eq!(
            a_polynomial(&KnotDescriptor::Unknot, &s)
                .unwrap()
                .to_string(),
            "L - 1"
        );
        assert_eq!(
            a_polynomial(&KnotDescriptor::torus(2, 3).unwrap(), &s)
                .unwrap()
                .to_string(),
            "L*M^6 + 1"
        );
        assert_eq!(
            a_polynomial(&KnotDescriptor::named("unlisted"), &s),
            Err(KnotError::UnknownKnot("unlisted".into()))
        );
        assert!(matches!(
            a_polynomial(&KnotDescriptor::torus(2, 5).unwrap(), &s),
            Err(KnotError::MissingAPolynomial(_))
        ));
    }

    #[test]
    fn slopes() {
        let mut s = store();
        s.load_str(
            "knot bare\nalexander 1 -1 1\nend\nknot tb\nalexander 1 -3 1\nslopes even-only\nend\n",
        )
        .unwrap();
        let t23 = KnotDescriptor::torus(2, 3).unwrap();
        assert_eq!(boundary_slope_excludes_pm1(&t23, &s), Ok(Some(true)));
        assert_eq!(max_abs_slope(&t23, &s), Ok(Some(6)));
        assert_eq!(
            boundary_slope_excludes_pm1(&KnotDescriptor::named("tb"), &s),
            Ok(Some(true))
        );
        assert_eq!(
            boundary_slope_excludes_pm1(&KnotDescriptor::named("bare"), &s),
            Ok(None)
        );
    }

    #[test]
    fn seminorm_examples() {
        assert_eq!(cs_seminorm(4i64, 1, 1, 1), Ratio::from_integer(0));
        assert_eq!(cs_seminorm(4i64, -1, -1, 1), Ratio::from_integer(0));
        assert_eq!(cs_seminorm(8i64, 2, 1, 0), Ratio::from_integer(2));
        assert_eq!(cs_seminorm(1i64, 0, 3, 5), Ratio::new(3, 4));
    }

    #[test]
    fn alexander_defects() {
        assert_eq!(
            check_alexander(&IntPolynomial::from_ints(&[1, -2, 1])),
            Err(AlexanderDefect::ValueAtOne)
        );
        assert_eq!(
            check_alexander(&IntPolynomial::from_ints(&[2, -3, 2, 0])),
            Ok(())
        );
        assert_eq!(
            check_alexander(&IntPolynomial::from_ints(&[1, -1, 0, 1])),
            Err(AlexanderDefect::Symmetry)
        );
    }
}
