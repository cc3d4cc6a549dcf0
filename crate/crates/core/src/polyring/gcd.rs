//! Shared-root detection in `Z[t]`: gcd over the rationals through a
//! primitive pseudo-remainder sequence, and resultants through the
//! subresultant sequence.

use num_traits::pow;

use super::{Coeff, DensePoly, PolyError};

/// Primitive integer representative of `gcd(f, g)` over `Q[t]`, normalized to
/// a positive leading coefficient. A constant result (degree 0) means `f` and
/// `g` have no common complex root.
pub fn gcd_rational<C: Coeff>(
    f: &DensePoly<C>,
    g: &DensePoly<C>,
) -> Result<DensePoly<C>, PolyError> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(PolyError::BothZero),
        (true, false) => return Ok(g.primitive_part()),
        (false, true) => return Ok(f.primitive_part()),
        _ => {}
    }
    let (mut a, mut b) = if f.degree() >= g.degree() {
        (f.primitive_part(), g.primitive_part())
    } else {
        (g.primitive_part(), f.primitive_part())
    };
    while !b.is_zero() {
        let r = a.pseudo_rem(&b)?;
        a = b;
        b = r.primitive_part();
    }
    Ok(a.primitive_part())
}

/// Exact resultant `Res(f, g) = lc(f)^deg g * lc(g)^deg f * prod (a_i - b_j)`.
///
/// Computed with the subresultant PRS, which keeps every intermediate
/// coefficient in `Z` without content blowup.
pub fn resultant<C: Coeff>(f: &DensePoly<C>, g: &DensePoly<C>) -> Result<C, PolyError> {
    let (Some(df), Some(dg)) = (f.degree().finite(), g.degree().finite()) else {
        return Err(PolyError::ZeroResultantInput);
    };
    if df == 0 {
        return Ok(pow(f.coeff(0), dg));
    }
    if dg == 0 {
        return Ok(pow(g.coeff(0), df));
    }

    let ca = f.content();
    let cb = g.content();
    let mut a = f.scale_down(&ca);
    let mut b = g.scale_down(&cb);
    let t = pow(ca, dg) * pow(cb, df);
    let mut s = C::one();
    if df < dg {
        std::mem::swap(&mut a, &mut b);
        if df % 2 == 1 && dg % 2 == 1 {
            s = -s;
        }
    }

    let mut g_acc = C::one();
    let mut h = C::one();
    loop {
        let da = a.degree().finite().unwrap();
        let db = b.degree().finite().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b)?;
        a = b;
        let divisor = g_acc.clone() * pow(h.clone(), delta);
        b = r.scale_down(&divisor);
        g_acc = a.leading_coeff().unwrap().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            pow(g_acc.clone(), delta) / pow(h.clone(), delta - 1)
        };
        match b.degree().finite() {
            None => return Ok(C::zero()),
            Some(0) => {
                let da = a.degree().finite().unwrap();
                let lb = b.coeff(0);
                // h^(1 - da) * lb^da
                let h_final = pow(lb, da) / pow(h, da - 1);
                return Ok(s * t * h_final);
            }
            Some(_) => {}
        }
    }
}

/// Shared-root test through the resultant, extended to a zero operand: the
/// zero polynomial shares a root with `f` exactly when `f` has a root.
pub fn shares_root_by_resultant<C: Coeff>(
    f: &DensePoly<C>,
    g: &DensePoly<C>,
) -> Result<bool, PolyError> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => Err(PolyError::BothZero),
        (true, false) => Ok(g.degree().is_positive()),
        (false, true) => Ok(f.degree().is_positive()),
        _ => Ok(resultant(f, g)?.is_zero()),
    }
}

impl<C: Coeff> DensePoly<C> {
    fn scale_down(&self, c: &C) -> Self {
        if c.is_one() {
            return self.clone();
        }
        DensePoly::from_coeffs(
            self.coeffs()
                .iter()
                .map(|a| a.clone() / c.clone())
                .collect(),
        )
    }
}
