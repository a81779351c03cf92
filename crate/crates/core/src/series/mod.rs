//! Truncated formal power series over `F_p`.
//!
//! A [`PowerSeries`] of order `N` is known modulo `X^N`. Binary operations
//! truncate to the smaller order of their operands.

mod bivariate;
pub mod catalog;
mod compose;
mod newton;

pub use bivariate::BivariatePoly;
pub use compose::{comp_inverse_ref, compose};
pub use newton::{newton_root, residual};

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{FieldElement, Prime};
use crate::ntt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    modulus: Prime,
    coeffs: Vec<u32>,
}

impl PowerSeries {
    /// Coefficients are reduced mod `p`; the order is `coeffs.len()`.
    pub fn new(modulus: Prime, coeffs: Vec<u32>) -> Self {
        let p = modulus.get();
        let coeffs = coeffs.into_iter().map(|c| c % p).collect();
        PowerSeries { modulus, coeffs }
    }

    pub fn from_i64(modulus: Prime, coeffs: &[i64]) -> Self {
        PowerSeries { modulus, coeffs: coeffs.iter().map(|&c| modulus.reduce(c)).collect() }
    }

    /// A polynomial viewed as a series of the given order.
    pub fn from_poly(modulus: Prime, poly: &[i64], order: usize) -> Self {
        let mut coeffs = vec![0u32; order];
        for (c, &v) in coeffs.iter_mut().zip(poly) {
            *c = modulus.reduce(v);
        }
        PowerSeries { modulus, coeffs }
    }

    pub fn zero(modulus: Prime, order: usize) -> Self {
        PowerSeries { modulus, coeffs: vec![0; order] }
    }

    pub fn one(modulus: Prime, order: usize) -> Self {
        Self::from_poly(modulus, &[1], order)
    }

    /// The series `X`.
    pub fn x(modulus: Prime, order: usize) -> Self {
        Self::from_poly(modulus, &[0, 1], order)
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u32> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> FieldElement {
        self.modulus.elem(self.coeffs[n] as i64)
    }

    /// Index of the first nonzero coefficient, or `None` if zero to this order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, order: usize) -> Self {
        PowerSeries { modulus: self.modulus, coeffs: self.coeffs[..order.min(self.order())].to_vec() }
    }

    /// Change the order: truncates, or pads with zero coefficients. Padding
    /// is only meaningful when the series is a polynomial.
    pub fn resized(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order, 0);
        PowerSeries { modulus: self.modulus, coeffs }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus.get(), other.modulus.get()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let p = self.modulus;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| p.add(a, b)).collect();
        Ok(PowerSeries { modulus: p, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let p = self.modulus;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| p.sub(a, b)).collect();
        Ok(PowerSeries { modulus: p, coeffs })
    }

    pub fn neg(&self) -> Self {
        let p = self.modulus;
        PowerSeries { modulus: p, coeffs: self.coeffs.iter().map(|&a| p.neg(a)).collect() }
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.modulus;
        PowerSeries { modulus: p, coeffs: self.coeffs.iter().map(|&a| p.mul(a, c)).collect() }
    }

    /// Fast product (NTT convolution), truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let order = self.order().min(other.order());
        Ok(self.mul_to(other, order))
    }

    pub(crate) fn mul_to(&self, other: &Self, order: usize) -> Self {
        let mut coeffs = ntt::convolve(&self.coeffs, &other.coeffs, self.modulus, order);
        coeffs.resize(order, 0);
        PowerSeries { modulus: self.modulus, coeffs }
    }

    pub fn square(&self) -> Self {
        let order = self.order();
        let mut coeffs = ntt::convolve(&self.coeffs, &self.coeffs, self.modulus, order);
        coeffs.resize(order, 0);
        PowerSeries { modulus: self.modulus, coeffs }
    }

    /// Multiply by a short polynomial in `X` without a transform.
    pub fn mul_poly(&self, poly: &[u32]) -> Self {
        let p = self.modulus;
        let n = self.order();
        let mut out = vec![0u32; n];
        for (shift, &c) in poly.iter().enumerate() {
            if c == 0 || shift >= n {
                continue;
            }
            for (o, &a) in out[shift..].iter_mut().zip(&self.coeffs) {
                *o = p.add(*o, p.mul(a, c));
            }
        }
        PowerSeries { modulus: p, coeffs: out }
    }

    /// `X^k · self`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![0u32; n];
        if k < n {
            coeffs[k..].copy_from_slice(&self.coeffs[..n - k]);
        }
        PowerSeries { modulus: self.modulus, coeffs }
    }

    /// Exact division by `X^k`; the order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|&c| c != 0) {
            return Err(Error::Invalid(format!("series not divisible by X^{k}")));
        }
        Ok(PowerSeries { modulus: self.modulus, coeffs: self.coeffs[k.min(self.order())..].to_vec() })
    }

    /// Substitute `X -> X^k`. The result is valid to order `k·N`, but is
    /// returned truncated to the original order `N`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let n = self.order();
        let mut coeffs = vec![0u32; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            match i.checked_mul(k) {
                Some(j) if j < n => coeffs[j] = c,
                _ => break,
            }
        }
        PowerSeries { modulus: self.modulus, coeffs }
    }

    /// `self^p` via Frobenius: over `F_p`, `f(X)^p = f(X^p)`.
    pub fn frobenius(&self) -> Self {
        self.substitute_power(self.modulus.get() as usize)
    }

    /// `self^e` using Frobenius for the base-p digits of `e`.
    pub fn pow(&self, e: u64) -> Self {
        let p = self.modulus.get() as u64;
        if e == 0 {
            return Self::one(self.modulus, self.order());
        }
        if e == 1 {
            return self.clone();
        }
        if e >= p {
            let high = self.pow(e / p).frobenius();
            let low = e % p;
            if low == 0 {
                return high;
            }
            return high.mul_to(&self.pow(low), self.order());
        }
        // small exponent: square and multiply
        let half = self.pow(e / 2).square();
        if e % 2 == 1 {
            half.mul_to(self, self.order())
        } else {
            half
        }
    }

    pub fn derivative(&self) -> Self {
        let p = self.modulus;
        let n = self.order();
        let mut coeffs = vec![0u32; n.saturating_sub(1)];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = p.mul(self.coeffs[i + 1], p.reduce((i + 1) as i64));
        }
        PowerSeries { modulus: p, coeffs }
    }

    /// Multiplicative inverse `1/self` by Newton iteration `h <- h(2 - f h)`.
    pub fn inverse(&self) -> Result<Self> {
        let p = self.modulus;
        let n = self.order();
        let c0 = *self.coeffs.first().ok_or_else(|| Error::Invalid("empty series".into()))?;
        let inv0 = p.inv(c0)?;
        let mut h = PowerSeries { modulus: p, coeffs: vec![inv0] };
        let mut m = 1;
        while m < n {
            let m2 = (2 * m).min(n);
            let f = self.truncate(m2);
            let fh = f.mul_to(&h, m2);
            // 2 - f h
            let mut t = fh.neg();
            t.coeffs[0] = p.add(t.coeffs[0], 2 % p.get());
            h = h.resized(m2).mul_to(&t, m2);
            m = m2;
        }
        Ok(h.resized(n))
    }

    /// `self / other` (other must have invertible constant term).
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let order = self.order().min(other.order());
        let inv = other.truncate(order).inverse()?;
        Ok(self.truncate(order).mul_to(&inv, order))
    }

    /// `index,coefficient` lines.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("index,coefficient\n");
        for (i, c) in self.coeffs.iter().enumerate() {
            let _ = writeln!(s, "{i},{c}");
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.coeffs).expect("vector of integers serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ntt::schoolbook;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn characteristic_two_examples() {
        let two = p(2);
        let x = PowerSeries::x(two, 5);
        assert!(x.add(&x).unwrap().is_zero());
        let one_plus_x = PowerSeries::from_poly(two, &[1, 1], 5);
        assert_eq!(one_plus_x.mul(&one_plus_x).unwrap().coeffs(), &[1, 0, 1, 0, 0]);
    }

    #[test]
    fn substitution_example() {
        let s = PowerSeries::from_poly(p(3), &[0, 1, 1], 8);
        assert_eq!(s.substitute_power(3).coeffs(), &[0, 0, 0, 1, 0, 0, 1, 0]);
    }

    #[test]
    fn orders_truncate_to_minimum() {
        let a = PowerSeries::one(p(5), 10);
        let b = PowerSeries::one(p(5), 4);
        assert_eq!(a.add(&b).unwrap().order(), 4);
        assert_eq!(a.mul(&b).unwrap().order(), 4);
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let a = PowerSeries::one(p(5), 3);
        let b = PowerSeries::one(p(3), 3);
        assert!(matches!(a.mul(&b), Err(Error::ModulusMismatch(5, 3))));
    }

    #[test]
    fn frobenius_power_agrees_with_repeated_products() {
        let prime = p(3);
        let f = PowerSeries::from_i64(prime, &(0..200).map(|i| (i * 7 + 1) % 5).collect::<Vec<_>>());
        let mut acc = PowerSeries::one(prime, 200);
        for e in 0..12u64 {
            assert_eq!(f.pow(e), acc, "exponent {e}");
            acc = acc.mul(&f).unwrap();
        }
    }

    #[test]
    fn inverse_round_trip() {
        let prime = p(7);
        let f = PowerSeries::from_i64(prime, &(0..300).map(|i| (i * i + 3) % 11).collect::<Vec<_>>());
        let prod = f.mul(&f.inverse().unwrap()).unwrap();
        assert_eq!(prod, PowerSeries::one(prime, 300));
        assert!(PowerSeries::x(prime, 4).inverse().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]
            #[test]
            fn mul_agrees_with_schoolbook(
                pi in 0usize..4,
                a in proptest::collection::vec(0u32..65521, 1..512),
                b in proptest::collection::vec(0u32..65521, 1..512),
            ) {
                let prime = p([2u64, 3, 5, 65521][pi]);
                let fa = PowerSeries::new(prime, a);
                let fb = PowerSeries::new(prime, b);
                let order = fa.order().min(fb.order());
                let reference = schoolbook(fa.coeffs(), fb.coeffs(), prime, order);
                let mut reference = reference;
                reference.resize(order, 0);
                let prod = fa.mul(&fb).unwrap();
                prop_assert_eq!(prod.coeffs(), &reference[..]);
            }
        }
    }
}
