use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Prime;

/// `P(X, Y) = Σ a_ij X^i Y^j` over `F_p`; only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    modulus: Prime,
    // keyed (j, i) so that iteration groups by the power of Y
    terms: BTreeMap<(u32, u32), u32>,
}

impl BivariatePoly {
    pub fn zero(modulus: Prime) -> Self {
        BivariatePoly { modulus, terms: BTreeMap::new() }
    }

    pub fn constant(modulus: Prime, c: i64) -> Self {
        Self::monomial(modulus, c, 0, 0)
    }

    /// `c · X^i · Y^j`
    pub fn monomial(modulus: Prime, c: i64, i: u32, j: u32) -> Self {
        let mut p = Self::zero(modulus);
        p.add_term(i, j, c);
        p
    }

    pub fn x(modulus: Prime) -> Self {
        Self::monomial(modulus, 1, 1, 0)
    }

    pub fn y(modulus: Prime) -> Self {
        Self::monomial(modulus, 1, 0, 1)
    }

    pub fn from_terms(modulus: Prime, terms: &[(u32, u32, i64)]) -> Self {
        let mut p = Self::zero(modulus);
        for &(i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: i64) {
        let m = self.modulus;
        let c = m.reduce(c);
        let e = self.terms.entry((j, i)).or_insert(0);
        *e = m.add(*e, c);
        if *e == 0 {
            self.terms.remove(&(j, i));
        }
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn coeff(&self, i: u32, j: u32) -> u32 {
        self.terms.get(&(j, i)).copied().unwrap_or(0)
    }

    /// Nonzero terms as `(i, j, a_ij)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        self.terms.iter().map(|(&(j, i), &c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(j, _)| j).max()
    }

    /// The coefficient of `Y^j` as a dense polynomial in `X`.
    pub fn y_coefficient(&self, j: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for (&(jj, i), &c) in self.terms.range((j, 0)..=(j, u32::MAX)) {
            debug_assert_eq!(jj, j);
            if out.len() <= i as usize {
                out.resize(i as usize + 1, 0);
            }
            out[i as usize] = c;
        }
        out
    }

    /// Formal partial derivative in `Y`. The factors `j` are reduced mod `p`,
    /// so `Y^p` terms vanish and `Y^(p+1)` differentiates to `Y^p`.
    pub fn d_dy(&self) -> Self {
        let mut out = Self::zero(self.modulus);
        for (i, j, c) in self.terms() {
            if j > 0 {
                out.add_term(i, j - 1, self.modulus.mul(c, self.modulus.reduce(j as i64)) as i64);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.modulus, 1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `P(X, Y + c)`.
    pub fn shift_y(&self, c: i64) -> Self {
        let m = self.modulus;
        let shifted = Self::y(m) + Self::constant(m, c);
        let mut out = Self::zero(m);
        for (i, j, a) in self.terms() {
            out = out + Self::monomial(m, a as i64, i, 0) * shifted.pow(j);
        }
        out
    }
}

impl Add for BivariatePoly {
    type Output = BivariatePoly;
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus);
        for (i, j, c) in rhs.terms() {
            self.add_term(i, j, c as i64);
        }
        self
    }
}

impl Neg for BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> Self {
        let m = self.modulus;
        let terms = self.terms.into_iter().map(|(k, c)| (k, m.neg(c))).collect();
        BivariatePoly { modulus: m, terms }
    }
}

impl Sub for BivariatePoly {
    type Output = BivariatePoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: Self) -> BivariatePoly {
        assert_eq!(self.modulus, rhs.modulus);
        let m = self.modulus;
        let mut out = BivariatePoly::zero(m);
        for (i1, j1, c1) in self.terms() {
            for (i2, j2, c2) in rhs.terms() {
                out.add_term(i1 + i2, j1 + j2, m.mul(c1, c2) as i64);
            }
        }
        out
    }
}

impl Mul for BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: Self) -> BivariatePoly {
        &self * &rhs
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, j, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts = Vec::new();
            if c != 1 || (i == 0 && j == 0) {
                parts.push(c.to_string());
            }
            match i {
                0 => {}
                1 => parts.push("X".into()),
                _ => parts.push(format!("X^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("Y".into()),
                _ => parts.push(format!("Y^{j}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_in_characteristic_p() {
        let three = Prime::new(3).unwrap();
        // Y^4 -> Y^3 (4 ≡ 1), Y^3 -> 0
        let poly = BivariatePoly::from_terms(three, &[(0, 4, 1), (0, 3, 1), (1, 1, 2)]);
        let d = poly.d_dy();
        assert_eq!(d.coeff(0, 3), 1);
        assert_eq!(d.coeff(0, 2), 0);
        assert_eq!(d.coeff(1, 0), 2);
    }

    #[test]
    fn cancellation_drops_entries() {
        let two = Prime::new(2).unwrap();
        let y = BivariatePoly::y(two);
        assert!((y.clone() + y).is_zero());
    }

    #[test]
    fn binomial_expansion_mod_two() {
        let two = Prime::new(2).unwrap();
        let one_plus_x = BivariatePoly::constant(two, 1) + BivariatePoly::x(two);
        let fifth = one_plus_x.pow(5);
        assert_eq!(fifth.y_coefficient(0), vec![1, 1, 0, 0, 1, 1]);
    }
}
