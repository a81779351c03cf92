//! Prime-field scalars and base-p digit strings.
//!
//! Values are stored as `u32` residues; every product of two residues fits
//! in a `u64` because the modulus is kept below 2^16.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime `p` with `2 <= p < 2^16`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 16).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Reduce an arbitrary signed integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.0;
        let mut acc = 1 % self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u32) -> Result<u32> {
        if a % self.0 == 0 {
            return Err(Error::NonInvertible(a, self.0));
        }
        Ok(self.pow(a, self.0 as u64 - 2))
    }

    pub fn elem(self, v: i64) -> FieldElement {
        FieldElement { value: self.reduce(v), modulus: self }
    }
}

impl TryFrom<u32> for Prime {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        Prime::new(p as u64)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Trial division; the moduli in play are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    modulus: Prime,
}

impl FieldElement {
    pub fn new(value: i64, modulus: Prime) -> Self {
        modulus.elem(value)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        self.same(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.same(rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        self.same(rhs)?;
        Ok(self * rhs)
    }

    pub fn inv(self) -> Result<Self> {
        let value = self.modulus.inv(self.value)?;
        Ok(FieldElement { value, modulus: self.modulus })
    }

    pub fn pow(self, e: u64) -> Self {
        FieldElement { value: self.modulus.pow(self.value, e), modulus: self.modulus }
    }

    fn same(self, rhs: Self) -> Result<()> {
        if self.modulus != rhs.modulus {
            return Err(Error::ModulusMismatch(self.modulus.0, rhs.modulus.0));
        }
        Ok(())
    }
}

// The operator impls panic on mismatched moduli; the `checked_*` variants
// report it as an error instead.
impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        FieldElement { value: self.modulus.add(self.value, rhs.value), modulus: self.modulus }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        FieldElement { value: self.modulus.sub(self.value, rhs.value), modulus: self.modulus }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        FieldElement { value: self.modulus.mul(self.value, rhs.value), modulus: self.modulus }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> Self {
        FieldElement { value: self.modulus.neg(self.value), modulus: self.modulus }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Base-`b` digits, least significant first, in canonical form (no
/// trailing zero; the empty string is 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    digits: Vec<u32>,
    base: u32,
}

impl DigitString {
    /// Wrap raw LSD-first digits. Trailing zeros are kept, so this also
    /// represents padded words; use [`DigitString::canonical`] to strip them.
    pub fn from_digits(digits: Vec<u32>, base: u32) -> Result<Self> {
        if let Some(&d) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::DigitOutOfRange { digit: d, base });
        }
        Ok(DigitString { digits, base })
    }

    /// Parse a word written in reading order, one character per digit
    /// (`"1111001"`), or comma separated when the base exceeds 10.
    pub fn parse_word(s: &str, base: u32) -> Result<Self> {
        let s = s.trim();
        let digits: Vec<u32> = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Invalid(format!("bad digit `{t}`: {e}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(base.min(36)).ok_or_else(|| Error::Invalid(format!("bad digit `{c}` for base {base}"))))
                .collect::<Result<_>>()?
        };
        Self::from_digits(digits, base)
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.digits.last() != Some(&0)
    }

    pub fn canonical(mut self) -> Self {
        while self.digits.last() == Some(&0) {
            self.digits.pop();
        }
        self
    }

    /// Pad with zeros (most significant side) up to `len` digits.
    pub fn padded(mut self, len: usize) -> Self {
        if self.digits.len() < len {
            self.digits.resize(len, 0);
        }
        self
    }

    pub fn value(&self) -> u128 {
        value_lsd(self)
    }
}

impl fmt::Display for DigitString {
    /// Reading order (least significant first), matching how words are fed
    /// to the automata.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base <= 10 {
            for d in &self.digits {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Canonical LSD-first digits of `n` in base `base`.
pub fn digits_lsd(mut n: u128, base: u32) -> DigitString {
    assert!(base >= 2, "base must be at least 2");
    let mut digits = Vec::new();
    let b = base as u128;
    while n > 0 {
        digits.push((n % b) as u32);
        n /= b;
    }
    DigitString { digits, base }
}

pub fn value_lsd(d: &DigitString) -> u128 {
    d.digits.iter().rev().fold(0u128, |acc, &x| acc * d.base as u128 + x as u128)
}

/// `s_p(n)` reduced into `F_p`.
pub fn digit_sum(mut n: u128, p: Prime) -> FieldElement {
    let b = p.get() as u128;
    let mut s = 0u64;
    while n > 0 {
        s += (n % b) as u64;
        n /= b;
    }
    p.elem(s as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn scalar_examples() {
        let three = p(3);
        assert_eq!((three.elem(2) + three.elem(2)).value(), 1);
        assert_eq!((-three.elem(2)).value(), 1);
        assert_eq!(p(5).elem(2).inv().unwrap().value(), 3);
        assert_eq!(p(7).elem(3).pow(6).value(), 1);
    }

    #[test]
    fn zero_is_not_invertible() {
        assert_eq!(p(5).elem(0).inv(), Err(Error::NonInvertible(0, 5)));
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(4).is_err());
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(65537).is_err());
        assert_eq!(Prime::new(65521).unwrap().get(), 65521);
    }

    #[test]
    fn mixed_moduli_are_rejected() {
        assert!(p(3).elem(1).checked_add(p(5).elem(1)).is_err());
    }

    #[test]
    fn digit_examples() {
        assert_eq!(digits_lsd(11, 3).digits(), &[2, 0, 1]);
        assert!(digits_lsd(0, 7).is_empty());
        assert_eq!(digits_lsd(79, 2).digits(), &[1, 1, 1, 1, 0, 0, 1]);
        assert_eq!(value_lsd(&DigitString::from_digits(vec![2, 0, 1], 3).unwrap()), 11);
        assert_eq!(value_lsd(&DigitString::from_digits(vec![], 3).unwrap()), 0);
        assert_eq!(value_lsd(&DigitString::from_digits(vec![1, 1], 3).unwrap()), 4);
    }

    #[test]
    fn digit_sum_examples() {
        assert_eq!(digit_sum(5, p(3)).value(), 0);
        assert_eq!(digit_sum(0, p(5)).value(), 0);
        assert_eq!(digit_sum(7, p(2)).value(), 1);
    }

    #[test]
    fn round_trip_below_a_million() {
        for base in [2u32, 3, 5, 7] {
            let prime = p(base as u64);
            for n in 0..1_000_000u128 {
                let d = digits_lsd(n, base);
                assert!(d.is_canonical());
                assert_eq!(value_lsd(&d), n);
                if n % 997 == 0 {
                    let s: i64 = d.digits().iter().map(|&x| x as i64).sum();
                    assert_eq!(digit_sum(n, prime), prime.elem(s));
                }
            }
        }
    }

    #[test]
    fn words_parse_in_reading_order() {
        let w = DigitString::parse_word("1111001", 2).unwrap();
        assert_eq!(w.value(), 79);
        assert_eq!(w.to_string(), "1111001");
        assert!(DigitString::parse_word("13", 3).is_err());
        assert_eq!(DigitString::parse_word("10,3", 16).unwrap().digits(), &[10, 3]);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn field_axioms(pi in 0usize..4, a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
                let prime = Prime::new([2u64, 3, 5, 65521][pi]).unwrap();
                let (a, b, c) = (prime.elem(a as i64), prime.elem(b as i64), prime.elem(c as i64));
                prop_assert_eq!((a + b) + c, a + (b + c));
                prop_assert_eq!((a * b) * c, a * (b * c));
                prop_assert_eq!(a * (b + c), a * b + a * c);
                prop_assert_eq!(a - a, prime.elem(0));
                if !a.is_zero() {
                    prop_assert_eq!(a * a.inv().unwrap(), prime.elem(1));
                }
            }
        }
    }
}
