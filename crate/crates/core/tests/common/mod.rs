//! Oracles shared by the integration tests. Nothing here calls the gcd or
//! resultant code under test.

#![allow(dead_code)]

use casson_core::IntPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Determinant by fraction-free Gaussian elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn sylvester_resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    let m = f.coeffs().len() - 1;
    let n = g.coeffs().len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    let desc = |p: &IntPolynomial| p.coeffs().iter().rev().cloned().collect::<Vec<_>>();
    let (fd, gd) = (desc(f), desc(g));
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in fd.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in gd.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    bareiss_det(rows)
}

/// Monic gcd over `Q` by the plain Euclidean algorithm on rationals.
pub fn euclid_gcd_q(f: &IntPolynomial, g: &IntPolynomial) -> Vec<BigRational> {
    let to_q = |p: &IntPolynomial| -> Vec<BigRational> {
        p.coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    };
    let trim = |v: &mut Vec<BigRational>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    let (mut a, mut b) = (to_q(f), to_q(g));
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let mut r = a.clone();
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let factor = r.last().unwrap() / b.last().unwrap();
            for (i, c) in b.iter().enumerate() {
                r[i + shift] = &r[i + shift] - &factor * c;
            }
            r.pop();
            trim(&mut r);
        }
        a = b;
        b = r;
    }
    if let Some(lc) = a.last().cloned() {
        for c in a.iter_mut() {
            *c = &*c / &lc;
        }
    }
    a
}

pub fn monic_q(p: &IntPolynomial) -> Vec<BigRational> {
    let lc = BigRational::from_integer(p.leading_coeff().expect("nonzero").clone());
    p.coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()) / &lc)
        .collect()
}

/// Nonzero polynomial of degree at most `max_deg` with coefficients in `[-b, b]`.
pub fn random_poly(rng: &mut impl Rng, max_deg: usize, b: i64) -> IntPolynomial {
    loop {
        let d = rng.gen_range(0..=max_deg);
        let c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-b..=b)).collect();
        let p = IntPolynomial::from_ints(&c);
        if !p.is_zero() {
            return p;
        }
    }
}
