//! Independent count of the irreducible `SL2(C)` characters of a Brieskorn
//! sphere, used to certify the closed form in [`crate::casson`].
//!
//! `π1 Σ(a1,a2,a3)` has the Seifert presentation
//!
//! ```text
//! < x1, x2, x3, h | h central, x_i^{a_i} = h^{-b_i}, x1 x2 x3 = h^{-b0} >
//! ```
//!
//! with `b0 a1 a2 a3 + Σ b_i a1 a2 a3 / a_i = 1`. An irreducible
//! representation sends `h` to `ε I` with `ε = ±1` and each `x_i` to a
//! noncentral element of finite order, so `x_i` has eigenvalues
//! `exp(±iπ l_i / a_i)` with `0 < l_i < a_i` and `(-1)^{l_i} = ε^{b_i}`. The
//! character is fixed by `ε` and the trace triple
//! `(tr x1, tr x2, tr x1x2) = (2cos(π l1/a1), 2cos(π l2/a2), ε^{b0} 2cos(π l3/a3))`,
//! and it is irreducible exactly when `κ` of that triple is nonzero.
//!
//! The `κ = 0` test is done exactly. Writing the traces as `x + 1/x`,
//! `y + 1/y`, `z + 1/z`, `κ` as a quadratic in the third trace has roots
//! `xy + 1/(xy)` and `x/y + y/x`, so `κ = 0` iff `z ∈ {(xy)^±1, (x/y)^±1}`.
//! With every eigenvalue a root of unity `exp(iπ θ)` this reduces to a
//! congruence between rationals mod 2, checked in integers below.

use num_integer::Integer;
use num_traits::Float;
use rayon::prelude::*;
use serde::Serialize;

use crate::casson::{brieskorn_lambda, BrieskornTriple, CassonError};

/// Seifert invariants `(b0; b1, b2, b3)` for one presentation of the sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SeifertInvariants {
    pub b0: i64,
    pub b: [i64; 3],
}

impl SeifertInvariants {
    /// Solves `b_i (A / a_i) ≡ 1 (mod a_i)` for each fiber, then picks `b0`
    /// so the Euler number is `1 / A`, `A = a1 a2 a3`.
    pub fn solve(t: &BrieskornTriple) -> Self {
        let a = t.orders().map(|x| x as i64);
        let prod: i64 = a.iter().product();
        let b = a.map(|ai| {
            let cofactor = prod / ai;
            let inv = cofactor.extended_gcd(&ai).x;
            inv.rem_euclid(ai)
        });
        let s: i64 = (0..3).map(|i| b[i] * (prod / a[i])).sum();
        debug_assert_eq!((1 - s) % prod, 0);
        Self {
            b0: (1 - s) / prod,
            b,
        }
    }
}

/// Rotation data of one candidate character: `x_i` rotates by `π l_i / a_i`
/// and `h` maps to `central_sign · I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RotationTriple {
    pub l: [u64; 3],
    pub central_sign: i8,
}

impl RotationTriple {
    /// `(tr x1, tr x2, tr x1x2)` in floating point.
    pub fn traces<F: Float>(&self, t: &BrieskornTriple, inv: &SeifertInvariants) -> [F; 3] {
        let a = t.orders();
        let two = F::one() + F::one();
        let tr = |i: usize| {
            let angle = F::from(self.l[i]).unwrap() / F::from(a[i]).unwrap()
                * F::from(std::f64::consts::PI).unwrap();
            two * angle.cos()
        };
        let product_sign = if self.central_sign < 0 && inv.b0.is_odd() {
            -F::one()
        } else {
            F::one()
        };
        [tr(0), tr(1), product_sign * tr(2)]
    }
}

/// `κ(t1,t2,t3) = t1² + t2² + t3² − t1 t2 t3 − 4`; zero exactly when every
/// representation with these traces of `x`, `y`, `xy` is reducible.
pub fn kappa<F: Float>(t1: F, t2: F, t3: F) -> F {
    let four = F::from(4).unwrap();
    t1 * t1 + t2 * t2 + t3 * t3 - t1 * t2 * t3 - four
}

/// Exact `κ ≠ 0` test for the trace triple of a rotation triple.
fn is_irreducible(t: &BrieskornTriple, inv: &SeifertInvariants, r: &RotationTriple) -> bool {
    let a = t.orders().map(i128::from);
    let l = r.l.map(i128::from);
    let d = a[0] * a[1] * a[2];
    let modulus = 2 * d;
    // eigenvalue angles in units of π/d
    let th1 = l[0] * a[1] * a[2];
    let th2 = l[1] * a[0] * a[2];
    let extra = if r.central_sign < 0 && inv.b0.is_odd() {
        d
    } else {
        0
    };
    let th3 = l[2] * a[0] * a[1] + extra;
    for s2 in [1, -1] {
        for s3 in [1, -1] {
            if (th1 + s2 * th2 + s3 * th3).rem_euclid(modulus) == 0 {
                return false;
            }
        }
    }
    true
}

fn parity_ok(l: u64, b: i64, sign: i8) -> bool {
    // (-1)^l = sign^b
    let lhs_odd = l % 2 == 1;
    let rhs_odd = sign < 0 && b.rem_euclid(2) == 1;
    lhs_odd == rhs_odd
}

/// Every irreducible character, as sorted rotation data.
pub fn irreducible_characters(t: &BrieskornTriple) -> Vec<RotationTriple> {
    let inv = SeifertInvariants::solve(t);
    let a = t.orders();
    let mut out: Vec<RotationTriple> = [1i8, -1]
        .into_par_iter()
        .flat_map_iter(|sign| {
            let cands = move |i: usize| (1..a[i]).filter(move |&l| parity_ok(l, inv.b[i], sign));
            cands(0).flat_map(move |l1| {
                cands(1).flat_map(move |l2| {
                    cands(2).map(move |l3| RotationTriple {
                        l: [l1, l2, l3],
                        central_sign: sign,
                    })
                })
            })
        })
        .filter(|r| is_irreducible(t, &inv, r))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn count_irreducible_characters(t: &BrieskornTriple) -> u64 {
    irreducible_characters(t).len() as u64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub triple: BrieskornTriple,
    pub oracle: u64,
    pub closed_form: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_product: u64,
    pub triples_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the oracle count with the closed form on every valid triple with
/// `a1 a2 a3 <= max_product`.
pub fn verify_closed_form(max_product: u64) -> Result<VerifyReport, CassonError> {
    let triples = BrieskornTriple::enumerate(max_product);
    let results: Vec<Result<Option<Mismatch>, CassonError>> = triples
        .par_iter()
        .map(|t| {
            let closed_form = brieskorn_lambda(t)?;
            let oracle = count_irreducible_characters(t);
            Ok((oracle != closed_form).then_some(Mismatch {
                triple: *t,
                oracle,
                closed_form,
            }))
        })
        .collect();
    let mut mismatches = Vec::new();
    for r in results {
        mismatches.extend(r?);
    }
    Ok(VerifyReport {
        max_product,
        triples_checked: triples.len(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: i64, b: i64, c: i64) -> BrieskornTriple {
        BrieskornTriple::new(a, b, c).unwrap()
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(2.0, 2.0, 2.0), 0.0);
        assert_eq!(kappa(0.0, 1.0, 1.0), -2.0);
        assert_eq!(kappa(1.0, 1.0, 2.0), 0.0);
        assert_eq!(kappa(1.0f32, 2.0, 1.0), kappa(2.0f32, 1.0, 1.0));
    }

    #[test]
    fn seifert_invariants_are_consistent() {
        for tr in BrieskornTriple::enumerate(2000) {
            let inv = SeifertInvariants::solve(&tr);
            let a = tr.orders().map(|x| x as i64);
            let prod: i64 = a.iter().product();
            let e: i64 = inv.b0 * prod + (0..3).map(|i| inv.b[i] * prod / a[i]).sum::<i64>();
            assert_eq!(e, 1, "{tr}");
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_irreducible_characters(&t(2, 3, 5)), 2);
        assert_eq!(count_irreducible_characters(&t(2, 3, 7)), 3);
        assert_eq!(count_irreducible_characters(&t(2, 3, 35)), 17);
        assert_eq!(count_irreducible_characters(&t(5, 6, 7)), 30);
    }

    #[test]
    fn exact_test_matches_float_kappa() {
        // away from zero the float value and the exact test must agree
        for tr in BrieskornTriple::enumerate(400) {
            let inv = SeifertInvariants::solve(&tr);
            let a = tr.orders();
            for sign in [1i8, -1] {
                for l1 in 1..a[0] {
                    for l2 in 1..a[1] {
                        for l3 in 1..a[2] {
                            let r = RotationTriple {
                                l: [l1, l2, l3],
                                central_sign: sign,
                            };
                            let [x, y, z] = r.traces::<f64>(&tr, &inv);
                            let k = kappa(x, y, z);
                            let exact = is_irreducible(&tr, &inv, &r);
                            if exact {
                                assert!(k.abs() > 1e-9, "{tr} {r:?} κ={k}");
                            } else {
                                assert!(k.abs() < 1e-9, "{tr} {r:?} κ={k}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn deterministic() {
        let tr = t(3, 5, 7);
        assert_eq!(irreducible_characters(&tr), irreducible_characters(&tr));
    }
}
