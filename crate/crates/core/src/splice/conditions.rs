use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::{SpliceError, Verdict};
use crate::knots::{self, KnotDescriptor, KnotError, KnotStore};
use crate::polyring::{gcd_rational, resultant};
use crate::IntPolynomial;

/// Inclusive range of twist parameters `k`; `k = 0` is always skipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KRange {
    lo: i64,
    hi: i64,
}

impl KRange {
    pub const DEFAULT_BOUND: i64 = 8;

    pub fn new(lo: i64, hi: i64) -> Result<Self, SpliceError> {
        if lo > hi || (lo == 0 && hi == 0) {
            return Err(SpliceError::EmptyKRange(lo, hi));
        }
        Ok(Self { lo, hi })
    }

    /// `[-b, b]`
    pub fn symmetric(b: i64) -> Result<Self, SpliceError> {
        Self::new(-b.abs(), b.abs())
    }

    /// `[-B, B]` with `B` the largest explicit boundary slope of either knot,
    /// and at least [`Self::DEFAULT_BOUND`].
    pub fn default_for(
        k1: &KnotDescriptor,
        k2: &KnotDescriptor,
        store: &KnotStore,
    ) -> Result<Self, KnotError> {
        let b = [
            knots::max_abs_slope(k1, store)?,
            knots::max_abs_slope(k2, store)?,
        ]
        .into_iter()
        .flatten()
        .fold(Self::DEFAULT_BOUND, i64::max);
        Ok(Self { lo: -b, hi: b })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn values(&self) -> impl Iterator<Item = i64> {
        (self.lo..=self.hi).filter(|&k| k != 0)
    }
}

impl fmt::Display for KRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// What a single `k` check examined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `g = gcd(Δ_{K2}(t^{2|k|}), A_{K1}(t, t^{-k}))` over `Q`, and the
    /// resultant of the same pair (`None` when the specialized A-polynomial is
    /// identically zero, where the resultant is undefined).
    Gcd {
        exponent: u32,
        gcd: IntPolynomial,
        resultant: Option<BigInt>,
        detectors_agree: bool,
    },
    MissingAPolynomial {
        knot: String,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Gcd {
                exponent,
                gcd,
                resultant,
                detectors_agree,
            } => {
                write!(f, "gcd(Δ(t^{exponent}), A(t,t^-k)) = {gcd}")?;
                match resultant {
                    None => write!(f, "; A(t,t^-k) ≡ 0")?,
                    Some(r) if r.is_zero() => write!(f, "; resultant = 0")?,
                    Some(r) => {
                        let digits = r.to_string();
                        if digits.len() <= 24 {
                            write!(f, "; resultant = {digits}")?
                        } else {
                            write!(
                                f,
                                "; resultant ≠ 0 ({} digits)",
                                digits.trim_start_matches('-').len()
                            )?
                        }
                    }
                }
                if !detectors_agree {
                    write!(f, "; gcd and resultant DISAGREE")?;
                }
                Ok(())
            }
            Witness::MissingAPolynomial { knot } => write!(f, "no A-polynomial for {knot}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionCheck {
    pub k: i64,
    pub verdict: Verdict,
    pub witness: Witness,
}

impl ConditionCheck {
    /// Whether the gcd route and the resultant route reached the same answer.
    /// Vacuously true when no polynomial check ran.
    pub fn detectors_agree(&self) -> bool {
        match &self.witness {
            Witness::Gcd {
                detectors_agree, ..
            } => *detectors_agree,
            Witness::MissingAPolynomial { .. } => true,
        }
    }
}

/// Checks, for every nonzero `k` in range, that `t^{2k}` being a root of
/// `Δ_{K2}` forces `A_{K1}(t, t^{-k}) ≠ 0`.
///
/// `PASS` when `Δ_{K2}(t^{2|k|})` and the specialization share no root,
/// `FAIL` (with the gcd as witness) when they do, `UNKNOWN` when `K1` has no
/// A-polynomial. Negative `k` uses `|2k|`: Alexander polynomials are
/// palindromic, so `Δ(t^{-2|k|})` and `Δ(t^{2|k|})` vanish together.
/// Swapping the knots gives the companion condition.
pub fn check_splice_conditions(
    k1: &KnotDescriptor,
    k2: &KnotDescriptor,
    krange: &KRange,
    store: &KnotStore,
) -> Result<Vec<ConditionCheck>, SpliceError> {
    let alexander = knots::alexander(k2, store)?;
    let apoly = match knots::a_polynomial(k1, store) {
        Ok(a) => Some(a),
        Err(KnotError::MissingAPolynomial(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let ks: Vec<i64> = krange.values().collect();
    if ks.is_empty() {
        return Err(SpliceError::EmptyKRange(krange.lo, krange.hi));
    }
    let Some(apoly) = apoly else {
        return Ok(ks
            .into_iter()
            .map(|k| ConditionCheck {
                k,
                verdict: Verdict::Unknown,
                witness: Witness::MissingAPolynomial {
                    knot: k1.to_string(),
                },
            })
            .collect());
    };

    ks.into_par_iter()
        .map(|k| {
            let exponent = u32::try_from(2 * k.unsigned_abs()).expect("k range fits in u32");
            let f = alexander.compose_power(exponent)?;
            let g = apoly.specialize_l(k);
            let common = gcd_rational(&f, &g)?;
            let by_gcd = common.degree().is_positive();
            let (res, by_res) = if g.is_zero() {
                (None, f.degree().is_positive())
            } else {
                let r = resultant(&f, &g)?;
                let z = r.is_zero();
                (Some(r), z)
            };
            let agree = by_gcd == by_res;
            let verdict = match (agree, by_gcd) {
                (false, _) => Verdict::Unknown,
                (true, true) => Verdict::Fail,
                (true, false) => Verdict::Pass,
            };
            Ok(ConditionCheck {
                k,
                verdict,
                witness: Witness::Gcd {
                    exponent,
                    gcd: common,
                    resultant: res,
                    detectors_agree: agree,
                },
            })
        })
        .collect()
}
