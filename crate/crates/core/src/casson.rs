//! Closed-form `λ_{SL2(C)}` values for Brieskorn spheres, torus-knot surgeries
//! and Whitehead-double surgeries, plus the positivity predicates for `1/q`
//! surgeries.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::knots::{self, KnotDescriptor, KnotError, KnotStore};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CassonError {
    #[error("Brieskorn parameters ({0}, {1}, {2}) must be pairwise coprime and at least 2")]
    InvalidTriple(i64, i64, i64),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogName(String),
    #[error("the Whitehead-double formula is only established for k > 0 (got k = {0})")]
    NonPositiveTwist(i64),
    #[error("surgery coefficient must be nonzero")]
    ZeroSurgery,
    #[error("degenerate surgery: |pqk - 1| = {0} < 2")]
    DegenerateSurgery(i64),
    #[error("arithmetic overflow evaluating {0}")]
    Overflow(&'static str),
    #[error(transparent)]
    Knot(#[from] KnotError),
}

/// Exceptional fiber orders of a Brieskorn sphere `Σ(a1, a2, a3)`:
/// pairwise coprime, each at least 2, stored ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BrieskornTriple([u64; 3]);

impl BrieskornTriple {
    pub fn new(a1: i64, a2: i64, a3: i64) -> Result<Self, CassonError> {
        let err = || CassonError::InvalidTriple(a1, a2, a3);
        let mut a = [a1, a2, a3];
        if a.iter().any(|&x| x < 2) {
            return Err(err());
        }
        a.sort_unstable();
        if a[0].gcd(&a[1]) != 1 || a[0].gcd(&a[2]) != 1 || a[1].gcd(&a[2]) != 1 {
            return Err(err());
        }
        Ok(Self(a.map(|x| x as u64)))
    }

    pub fn orders(&self) -> [u64; 3] {
        self.0
    }

    pub fn product(&self) -> Option<u64> {
        self.0[0].checked_mul(self.0[1])?.checked_mul(self.0[2])
    }

    /// 1-based position of a fiber of the given order, if present.
    pub fn fiber_index(&self, order: u64) -> Option<u8> {
        self.0.iter().position(|&a| a == order).map(|i| i as u8 + 1)
    }

    /// Order of the 1-based fiber `index`.
    pub fn fiber_order(&self, index: u8) -> Option<u64> {
        self.0.get(usize::from(index).checked_sub(1)?).copied()
    }

    /// All valid triples with `a1 * a2 * a3 <= max_product`, in ascending order.
    pub fn enumerate(max_product: u64) -> Vec<BrieskornTriple> {
        let mut out = Vec::new();
        let mut a1 = 2u64;
        while a1 * (a1 + 1) * (a1 + 2) <= max_product {
            let mut a2 = a1 + 1;
            while a1 * a2 * (a2 + 1) <= max_product {
                if a1.gcd(&a2) == 1 {
                    let mut a3 = a2 + 1;
                    while a1 * a2 * a3 <= max_product {
                        if a1.gcd(&a3) == 1 && a2.gcd(&a3) == 1 {
                            out.push(BrieskornTriple([a1, a2, a3]));
                        }
                        a3 += 1;
                    }
                }
                a2 += 1;
            }
            a1 += 1;
        }
        out
    }
}

impl fmt::Display for BrieskornTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "Σ({a},{b},{c})")
    }
}

/// `λ(Σ(a1,a2,a3)) = (a1-1)(a2-1)(a3-1)/4`.
///
/// Pairwise coprimality leaves at most one even order, so two of the factors
/// are even and the division is exact.
pub fn brieskorn_lambda(t: &BrieskornTriple) -> Result<u64, CassonError> {
    let [a, b, c] = t.0;
    let prod = (a - 1)
        .checked_mul(b - 1)
        .and_then(|x| x.checked_mul(c - 1))
        .ok_or(CassonError::Overflow("brieskorn_lambda"))?;
    debug_assert_eq!(prod % 4, 0);
    Ok(prod / 4)
}

/// Values for manifolds outside the three-fiber closed form.
const CATALOG: &[(&str, u64)] = &[("Sigma(2,3,5,7)", 20)];

/// Looks up a cataloged value. Three-parameter names `Sigma(a,b,c)` are
/// answered by [`brieskorn_lambda`].
pub fn catalog_lambda(name: &str) -> Result<u64, CassonError> {
    let key: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(&(_, v)) = CATALOG.iter().find(|(n, _)| *n == key) {
        return Ok(v);
    }
    let unknown = || CassonError::UnknownCatalogName(name.to_string());
    let inner = key
        .strip_prefix("Sigma(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(unknown)?;
    let parts: Vec<i64> = inner
        .split(',')
        .map(|s| s.parse().map_err(|_| unknown()))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [a, b, c] => brieskorn_lambda(&BrieskornTriple::new(a, b, c)?),
        _ => Err(unknown()),
    }
}

/// Names of the catalog entries that are not plain Brieskorn triples.
pub fn catalog_names() -> impl Iterator<Item = &'static str> {
    CATALOG.iter().map(|(n, _)| *n)
}

/// λ of `-1` surgery on the `-k`-twisted Whitehead double of `T(p,q)`:
/// `(p-1)(q-1)(pqk-2)/4`, which is λ(Σ(p, q, pqk-1)).
pub fn whitehead_double_surgery_lambda(p: i64, q: i64, k: i64) -> Result<u64, CassonError> {
    let torus = knots::TorusParams::new(p, q)?;
    if k <= 0 {
        return Err(CassonError::NonPositiveTwist(k));
    }
    let (p, q, k) = (u64::from(torus.p()), u64::from(torus.q()), k as u64);
    let pqk = p
        .checked_mul(q)
        .and_then(|x| x.checked_mul(k))
        .filter(|&x| x <= i64::MAX as u64)
        .ok_or(CassonError::Overflow("whitehead_double_surgery_lambda"))?;
    let value = (p - 1)
        .checked_mul(q - 1)
        .and_then(|x| x.checked_mul(pqk - 2))
        .ok_or(CassonError::Overflow("whitehead_double_surgery_lambda"))?
        / 4;
    let triple = BrieskornTriple::new(p as i64, q as i64, pqk as i64 - 1)?;
    let via_triple = brieskorn_lambda(&triple)?;
    assert_eq!(
        value, via_triple,
        "Whitehead-double value disagrees with λ({triple})"
    );
    Ok(value)
}

/// λ of `1/k` surgery on `T(p,q)`, identified with `Σ(p, q, |pqk - 1|)`.
/// Negative `k` uses the absolute value; λ does not see orientation.
pub fn torus_surgery_lambda(p: i64, q: i64, k: i64) -> Result<u64, CassonError> {
    let (_, value) = torus_surgery_triple(p, q, k)?;
    Ok(value)
}

/// The Brieskorn triple realizing `S^3_{1/k}(T(p,q))` together with its λ.
pub fn torus_surgery_triple(p: i64, q: i64, k: i64) -> Result<(BrieskornTriple, u64), CassonError> {
    let torus = knots::TorusParams::new(p, q)?;
    if k == 0 {
        return Err(CassonError::ZeroSurgery);
    }
    let (p, q) = (i64::from(torus.p()), i64::from(torus.q()));
    let third = p
        .checked_mul(q)
        .and_then(|x| x.checked_mul(k))
        .and_then(|x| x.checked_sub(1))
        .ok_or(CassonError::Overflow("torus_surgery_lambda"))?
        .abs();
    if third < 2 {
        return Err(CassonError::DegenerateSurgery(third));
    }
    let triple = BrieskornTriple::new(p, q, third)?;
    Ok((triple, brieskorn_lambda(&triple)?))
}

/// Which positivity result, if any, covers `S^3_{1/q}(K)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PositivityReason {
    /// torus or 2-bridge knot, any `q ≠ 0`
    TorusOrTwoBridge,
    /// small nontrivial knot with `|q| > 1`
    SmallKnot,
}

/// The positivity result that applies to `λ(S^3_{1/q}(K)) > 0`, if any.
/// `None` means no guarantee is available, not that λ vanishes.
pub fn positivity_reason(
    knot: &KnotDescriptor,
    q: i64,
    store: &KnotStore,
) -> Result<Option<PositivityReason>, KnotError> {
    if q == 0 || knot.is_unknot() {
        return Ok(None);
    }
    if matches!(knot, KnotDescriptor::Torus(_)) {
        return Ok(Some(PositivityReason::TorusOrTwoBridge));
    }
    let rec = knots::record(knot, store)?;
    if rec.is_two_bridge() {
        return Ok(Some(PositivityReason::TorusOrTwoBridge));
    }
    if rec.small && q.abs() > 1 {
        return Ok(Some(PositivityReason::SmallKnot));
    }
    Ok(None)
}

/// Whether `λ(S^3_{1/q}(K)) > 0` is guaranteed.
pub fn positivity_guarantee(
    knot: &KnotDescriptor,
    q: i64,
    store: &KnotStore,
) -> Result<bool, KnotError> {
    Ok(positivity_reason(knot, q, store)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: i64, b: i64, c: i64) -> BrieskornTriple {
        BrieskornTriple::new(a, b, c).unwrap()
    }

    #[test]
    fn brieskorn_values() {
        assert_eq!(brieskorn_lambda(&t(2, 3, 35)), Ok(17));
        assert_eq!(brieskorn_lambda(&t(6, 5, 7)), Ok(30));
        assert_eq!(brieskorn_lambda(&t(2, 3, 5)), Ok(2));
        assert_eq!(t(7, 2, 3).orders(), [2, 3, 7]);
        assert!(BrieskornTriple::new(2, 4, 5).is_err());
        assert!(BrieskornTriple::new(1, 4, 5).is_err());
    }

    #[test]
    fn catalog() {
        assert_eq!(catalog_lambda("Sigma(2,3,5,7)"), Ok(20));
        assert_eq!(catalog_lambda("Sigma(2, 3, 35)"), Ok(17));
        assert_eq!(
            catalog_lambda("nonsense"),
            Err(CassonError::UnknownCatalogName("nonsense".into()))
        );
        assert!(catalog_lambda("Sigma(2,3,5,11)").is_err());
    }

    #[test]
    fn whitehead_examples() {
        assert_eq!(whitehead_double_surgery_lambda(2, 3, 1), Ok(2));
        assert_eq!(whitehead_double_surgery_lambda(2, 3, 6), Ok(17));
        assert_eq!(whitehead_double_surgery_lambda(2, 5, 1), Ok(8));
        assert_eq!(
            whitehead_double_surgery_lambda(2, 3, 0),
            Err(CassonError::NonPositiveTwist(0))
        );
        assert!(whitehead_double_surgery_lambda(2, 3, -2).is_err());
    }

    #[test]
    fn torus_surgery_examples() {
        assert_eq!(torus_surgery_lambda(2, 3, 1), Ok(2));
        assert_eq!(torus_surgery_lambda(2, 3, -1), Ok(3));
        assert_eq!(torus_surgery_lambda(2, 5, 1), Ok(8));
        assert_eq!(torus_surgery_lambda(3, 2, 6), Ok(17));
        assert_eq!(torus_surgery_lambda(2, 3, 0), Err(CassonError::ZeroSurgery));
    }

    #[test]
    fn enumerate_small() {
        let v = BrieskornTriple::enumerate(60);
        assert_eq!(v, vec![t(2, 3, 5), t(2, 3, 7), t(3, 4, 5)]);
        assert!(BrieskornTriple::enumerate(29).is_empty());
    }

    #[test]
    fn positivity_examples() {
        let mut store = KnotStore::new();
        store
            .load_str("knot hyp\nalexander 1 -1 1\nsmall\nend\n")
            .unwrap();
        let t23 = KnotDescriptor::torus(2, 3).unwrap();
        let hyp = KnotDescriptor::named("hyp");
        assert_eq!(positivity_guarantee(&t23, 1, &store), Ok(true));
        assert_eq!(positivity_guarantee(&hyp, 1, &store), Ok(false));
        assert_eq!(positivity_guarantee(&hyp, -2, &store), Ok(true));
        assert_eq!(
            positivity_guarantee(&KnotDescriptor::Unknot, 3, &store),
            Ok(false)
        );
        assert_eq!(positivity_guarantee(&t23, 0, &store), Ok(false));
        assert_eq!(
            positivity_reason(&KnotDescriptor::twist(1).unwrap(), -1, &store),
            Ok(Some(PositivityReason::TorusOrTwoBridge))
        );
    }
}
