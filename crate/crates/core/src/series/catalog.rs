//! The algebraic equations satisfied by the generating series studied here,
//! each paired with the seed from which Newton lifting starts.

use super::{BivariatePoly, PowerSeries};
use crate::field::Prime;

/// A catalogued equation `P(X, Y) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equation {
    /// `(1 - X)^(p+1) Y^p - (1 - X)^2 Y + X`, root `F_p` (digit sums mod p).
    ThueMorse(Prime),
    /// `(1 - Y)^(p+1) X^p - (1 - Y)^2 X + Y`, root `C_p`, the inverse of `F_p`.
    ThueInverse(Prime),
    /// `Y^(p+1) - Y^2 - Y + X`, root `S_p = X(1 - C_p)`.
    Shifted(Prime),
    /// `(1 + X)^5 Y^2 + (1 + X)^4 Y + X^3`, root `R` (Rudin–Shapiro).
    Rudin,
    /// The Rudin equation rewritten for `R_1 = R + 1`.
    RudinZeroed,
    /// The equation of `U`, the inverse of `R_1`.
    InverseZeroed,
    /// The Rudin equation rewritten for `R_2 = X R`.
    RudinShifted,
    /// The equation of `V`, the inverse of `R_2`.
    InverseShifted,
}

impl Equation {
    pub fn modulus(self) -> Prime {
        match self {
            Equation::ThueMorse(p) | Equation::ThueInverse(p) | Equation::Shifted(p) => p,
            _ => Prime::new(2).expect("2 is prime"),
        }
    }

    pub fn poly(self) -> BivariatePoly {
        let m = self.modulus();
        let x = || BivariatePoly::x(m);
        let y = || BivariatePoly::y(m);
        let k = |c: i64| BivariatePoly::constant(m, c);
        let p = m.get();
        match self {
            Equation::ThueMorse(_) => {
                (k(1) - x()).pow(p + 1) * y().pow(p) - (k(1) - x()).pow(2) * y() + x()
            }
            Equation::ThueInverse(_) => {
                (k(1) - y()).pow(p + 1) * x().pow(p) - (k(1) - y()).pow(2) * x() + y()
            }
            Equation::Shifted(_) => y().pow(p + 1) - y().pow(2) - y() + x(),
            Equation::Rudin => {
                (k(1) + x()).pow(5) * y().pow(2) + (k(1) + x()).pow(4) * y() + x().pow(3)
            }
            Equation::RudinZeroed => {
                (y().pow(2) + k(1)) * x().pow(5)
                    + (y().pow(2) + y()) * x().pow(4)
                    + x().pow(3)
                    + (y().pow(2) + k(1)) * x()
                    + y().pow(2)
                    + y()
            }
            Equation::InverseZeroed => {
                (x().pow(2) + k(1)) * y().pow(5)
                    + (x().pow(2) + x()) * y().pow(4)
                    + y().pow(3)
                    + (x().pow(2) + k(1)) * y()
                    + x().pow(2)
                    + x()
            }
            Equation::RudinShifted => {
                (y().pow(2) + y() + k(1)) * x().pow(5)
                    + y().pow(2) * x().pow(4)
                    + (y().pow(2) + y()) * x()
                    + y().pow(2)
            }
            Equation::InverseShifted => {
                (x().pow(2) + x() + k(1)) * y().pow(5)
                    + x().pow(2) * y().pow(4)
                    + (x().pow(2) + x()) * y()
                    + x().pow(2)
            }
        }
    }

    /// Low-order truncation of the intended root.
    pub fn seed(self) -> PowerSeries {
        let m = self.modulus();
        match self {
            Equation::Rudin => PowerSeries::from_poly(m, &[1, 1], 2),
            _ => PowerSeries::x(m, 2),
        }
    }

    pub fn all(primes: &[Prime]) -> Vec<Equation> {
        let mut out = Vec::new();
        for &p in primes {
            out.extend([Equation::ThueMorse(p), Equation::ThueInverse(p), Equation::Shifted(p)]);
        }
        out.extend([
            Equation::Rudin,
            Equation::RudinZeroed,
            Equation::InverseZeroed,
            Equation::RudinShifted,
            Equation::InverseShifted,
        ]);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rewritten_forms_agree() {
        let two = Prime::new(2).unwrap();
        // R_1 = R + 1
        assert_eq!(Equation::Rudin.poly().shift_y(1), Equation::RudinZeroed.poly());
        // R_2 = X R: substitute Y -> Y / X and clear X^2
        let mut scaled = BivariatePoly::zero(two);
        for (i, j, c) in Equation::Rudin.poly().terms() {
            scaled.add_term(i + 2 - j, j, c as i64);
        }
        assert_eq!(scaled, Equation::RudinShifted.poly());
    }
}
