use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{pow, Num, Signed, Zero};

use super::{Coeff, PolyError};

/// Degree of a univariate polynomial. The zero polynomial has degree
/// [`Degree::NegInfinity`], which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn is_positive(self) -> bool {
        matches!(self, Degree::Finite(d) if d > 0)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial in `t` with exact integer coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`. The vector never ends in a zero,
/// so the zero polynomial is the empty vector and structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DensePoly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> DensePoly<C> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^deg`
    pub fn monomial(c: C, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); deg + 1];
        coeffs[deg] = c;
        Self { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| C::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `t^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Evaluates in a ring that contains the coefficients, e.g. the rationals.
    pub fn eval_in<R>(&self, x: &R) -> R
    where
        R: Num + Clone + From<C>,
    {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + R::from(c.clone()))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplies by `t^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() || n == 0 {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Returns `f(t^k)`.
    pub fn compose_power(&self, k: u32) -> Result<Self, PolyError> {
        if k == 0 {
            return Err(PolyError::ZeroExponent);
        }
        let k = k as usize;
        if k == 1 || self.is_constant() {
            return Ok(self.clone());
        }
        let mut coeffs = vec![C::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Ok(Self { coeffs })
    }

    /// Removes the largest power of `t` dividing the polynomial, returning the
    /// quotient and the exponent removed.
    pub fn strip_t_factor(&self) -> (Self, usize) {
        let m = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if m == 0 || self.is_zero() {
            return (self.clone(), 0);
        }
        (
            Self {
                coeffs: self.coeffs[m..].to_vec(),
            },
            m,
        )
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |acc, c| acc.gcd(c))
    }

    /// The polynomial divided by its content, with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut content = self.content();
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            content = -content;
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.clone() / content.clone())
                .collect(),
        }
    }

    /// Same polynomial with its sign flipped if the leading coefficient is negative.
    pub fn with_positive_leading(&self) -> Self {
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// `t^deg f(1/t)`
    pub fn reversed(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().rev().cloned().collect())
    }

    /// True when `f(t) = ± t^deg f(1/t)`, i.e. the coefficient list reads the
    /// same backwards up to a single global sign.
    pub fn is_palindromic_up_to_sign(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let rev = self.reversed();
        // reversed() trims, so a t-factor makes lengths differ
        rev.coeffs.len() == self.coeffs.len() && (rev == *self || -rev == *self)
    }

    /// Pseudo-remainder: `lc(d)^(deg f - deg d + 1) f = q d + r` with `deg r < deg d`.
    pub fn pseudo_rem(&self, divisor: &Self) -> Result<Self, PolyError> {
        let dd = divisor.degree().finite().ok_or(PolyError::ZeroDivisor)?;
        let Some(fd) = self.degree().finite() else {
            return Ok(Self::zero());
        };
        if fd < dd {
            return Ok(self.clone());
        }
        let lc = divisor.leading_coeff().unwrap().clone();
        let mut remaining_scale = fd - dd + 1;
        let mut r = self.clone();
        while let Some(rd) = r.degree().finite() {
            if rd < dd {
                break;
            }
            let top = r.leading_coeff().unwrap().clone();
            r = r.scale(&lc) - divisor.scale(&top).shift(rd - dd);
            remaining_scale -= 1;
        }
        Ok(r.scale(&pow(lc, remaining_scale)))
    }

    /// Exact division over the integers. Returns `None` when `divisor` does not
    /// divide `self` in `Z[t]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>, PolyError> {
        let dd = divisor.degree().finite().ok_or(PolyError::ZeroDivisor)?;
        let Some(mut rd) = self.degree().finite() else {
            return Ok(Some(Self::zero()));
        };
        if rd < dd {
            return Ok(None);
        }
        let lc = divisor.leading_coeff().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![C::zero(); rd - dd + 1];
        loop {
            let (quot, rem) = r[rd].div_rem(lc);
            if !rem.is_zero() {
                return Ok(None);
            }
            let shift = rd - dd;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                r[i + shift] = r[i + shift].clone() - quot.clone() * c.clone();
            }
            q[shift] = quot;
            while rd > 0 && r[rd].is_zero() {
                rd -= 1;
            }
            if r[rd].is_zero() {
                return Ok(Some(Self::from_coeffs(q)));
            }
            if rd < dd {
                return Ok(None);
            }
        }
    }

    /// Converts the coefficients into another coefficient ring.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> DensePoly<D> {
        DensePoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coeff> Default for DensePoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

fn add_coeffs<C: Coeff>(a: &[C], b: &[C], negate_b: bool) -> Vec<C> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(C::zero);
            let y = b.get(i).cloned().unwrap_or_else(C::zero);
            if negate_b {
                x - y
            } else {
                x + y
            }
        })
        .collect()
}

impl<C: Coeff> Add for &DensePoly<C> {
    type Output = DensePoly<C>;
    fn add(self, rhs: Self) -> DensePoly<C> {
        DensePoly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl<C: Coeff> Sub for &DensePoly<C> {
    type Output = DensePoly<C>;
    fn sub(self, rhs: Self) -> DensePoly<C> {
        DensePoly::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl<C: Coeff> Mul for &DensePoly<C> {
    type Output = DensePoly<C>;
    fn mul(self, rhs: Self) -> DensePoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        DensePoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<C: Coeff> $tr for DensePoly<C> {
            type Output = DensePoly<C>;
            fn $m(self, rhs: Self) -> DensePoly<C> { (&self).$m(&rhs) }
        }
        impl<C: Coeff> $tr<&DensePoly<C>> for DensePoly<C> {
            type Output = DensePoly<C>;
            fn $m(self, rhs: &DensePoly<C>) -> DensePoly<C> { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<C: Coeff> Neg for DensePoly<C> {
    type Output = DensePoly<C>;
    fn neg(self) -> DensePoly<C> {
        DensePoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<C: Coeff> fmt::Display for DensePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{abs}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{abs}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for DensePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensePoly({self})")
    }
}
