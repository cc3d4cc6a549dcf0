use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Num;

use super::{Coeff, DensePoly};

/// Sparse polynomial in `M` and `L` with exact integer coefficients.
///
/// Terms are keyed by `(deg_m, deg_l)` and zero coefficients are never
/// stored, so two equal polynomials have identical term maps.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly<C> {
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: Coeff> BiPoly<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0, 0)
    }

    /// `c * M^deg_m * L^deg_l`
    pub fn monomial(c: C, deg_m: u32, deg_l: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, deg_m, deg_l);
        p
    }

    /// Builds from `(coeff, deg_m, deg_l)` triples; repeated exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, u32, u32)>,
    {
        let mut p = Self::zero();
        for (c, m, l) in terms {
            p.add_term(c, m, l);
        }
        p
    }

    fn add_term(&mut self, c: C, deg_m: u32, deg_l: u32) {
        if c.is_zero() {
            return;
        }
        let key = (deg_m, deg_l);
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `((deg_m, deg_l), coeff)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &C)> {
        self.terms.iter()
    }

    pub fn eval_in<R>(&self, m: &R, l: &R) -> R
    where
        R: Num + Clone + From<C>,
    {
        self.terms.iter().fold(R::zero(), |acc, (&(dm, dl), c)| {
            acc + R::from(c.clone()) * pow_r(m, dm) * pow_r(l, dl)
        })
    }

    /// Substitutes `M = t`, `L = t^(-k)`, clears the denominator, and strips
    /// every factor of `t` from the result.
    ///
    /// The nonzero roots of the output are exactly the nonzero `t` with
    /// `A(t, t^(-k)) = 0`. Zero maps to zero, as does any polynomial that
    /// vanishes identically along the substitution.
    pub fn specialize_l(&self, k: i64) -> DensePoly<C> {
        let mut by_exp: BTreeMap<i64, C> = BTreeMap::new();
        for (&(dm, dl), c) in &self.terms {
            let e = i64::from(dm) - k * i64::from(dl);
            let slot = by_exp.entry(e).or_insert_with(C::zero);
            *slot = slot.clone() + c.clone();
        }
        by_exp.retain(|_, c| !c.is_zero());
        let Some(&lo) = by_exp.keys().next() else {
            return DensePoly::zero();
        };
        let hi = *by_exp.keys().next_back().unwrap();
        let mut coeffs = vec![C::zero(); (hi - lo) as usize + 1];
        for (e, c) in by_exp {
            coeffs[(e - lo) as usize] = c;
        }
        DensePoly::from_coeffs(coeffs)
    }
}

fn pow_r<R: Num + Clone>(x: &R, e: u32) -> R {
    (0..e).fold(R::one(), |acc, _| acc * x.clone())
}

impl<C: Coeff> Default for BiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Add for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn add(self, rhs: Self) -> BiPoly<C> {
        let mut out = self.clone();
        for (&(m, l), c) in &rhs.terms {
            out.add_term(c.clone(), m, l);
        }
        out
    }
}

impl<C: Coeff> Sub for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn sub(self, rhs: Self) -> BiPoly<C> {
        let mut out = self.clone();
        for (&(m, l), c) in &rhs.terms {
            out.add_term(-c.clone(), m, l);
        }
        out
    }
}

impl<C: Coeff> Mul for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn mul(self, rhs: Self) -> BiPoly<C> {
        let mut out = BiPoly::zero();
        for (&(m1, l1), a) in &self.terms {
            for (&(m2, l2), b) in &rhs.terms {
                out.add_term(a.clone() * b.clone(), m1 + m2, l1 + l2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<C: Coeff> $tr for BiPoly<C> {
            type Output = BiPoly<C>;
            fn $m(self, rhs: Self) -> BiPoly<C> { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<C: Coeff> Neg for BiPoly<C> {
    type Output = BiPoly<C>;
    fn neg(self) -> BiPoly<C> {
        BiPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<C: Coeff> fmt::Display for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest L-degree first, then highest M-degree
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|t| std::cmp::Reverse((t.0 .1, t.0 .0)));
        for (idx, (&(dm, dl), c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !abs.is_one() || (dm == 0 && dl == 0) {
                factors.push(abs.to_string());
            }
            match dl {
                0 => {}
                1 => factors.push("L".into()),
                _ => factors.push(format!("L^{dl}")),
            }
            match dm {
                0 => {}
                1 => factors.push("M".into()),
                _ => factors.push(format!("M^{dm}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}
