//! Newton–Hensel lifting of power-series roots of `P(X, Y) = 0`.

use super::{BivariatePoly, PowerSeries};
use crate::error::{Error, Result};

/// Coefficient polynomials longer than this are multiplied by transform.
const SHORT_POLY: usize = 64;

/// `P(X, f)` computed modulo `X^order` (f is padded or truncated to `order`).
pub(crate) fn evaluate(poly: &BivariatePoly, f: &PowerSeries, order: usize) -> PowerSeries {
    let m = poly.modulus();
    let f = f.resized(order);
    let mut acc = PowerSeries::zero(m, order);
    let mut js: Vec<u32> = poly.terms().map(|(_, j, _)| j).collect();
    js.dedup();
    for j in js {
        let cj = poly.y_coefficient(j);
        let fj = f.pow(j as u64);
        let term = if cj.len() <= SHORT_POLY {
            fj.mul_poly(&cj)
        } else {
            let cs = PowerSeries::new(m, cj).resized(order);
            fj.mul_to(&cs, order)
        };
        acc = acc.add(&term).expect("same modulus");
    }
    acc
}

/// `P(X, f)` truncated to the order of `f`.
pub fn residual(poly: &BivariatePoly, f: &PowerSeries) -> Result<PowerSeries> {
    if poly.modulus() != f.modulus() {
        return Err(Error::ModulusMismatch(poly.modulus().get(), f.modulus().get()));
    }
    Ok(evaluate(poly, f, f.order()))
}

/// Lift `seed` to a root of `poly` modulo `X^order`.
///
/// With `e = v(∂P/∂Y(seed))` and `v = v(P(seed))`, lifting requires
/// `v > 2e`; the seed is then correct to order `v - e` and each step maps
/// precision `m` to `2m - e` via `f <- f - P(f)/P_Y(f)`. The usual simple-root
/// case is `e = 0`; `e > 0` covers equations such as the one satisfied by
/// the inverse of `X·R`, whose `Y`-derivative vanishes at `X = 0`.
pub fn newton_root(poly: &BivariatePoly, seed: &PowerSeries, order: usize) -> Result<PowerSeries> {
    let m_ = poly.modulus();
    if m_ != seed.modulus() {
        return Err(Error::ModulusMismatch(m_.get(), seed.modulus().get()));
    }
    let dpoly = poly.d_dy();
    let probe = 2 * seed.order() + 64;
    let r0 = evaluate(poly, seed, probe);
    let d0 = evaluate(&dpoly, seed, probe);
    let e = d0
        .valuation()
        .ok_or_else(|| Error::NewtonInapplicable("∂P/∂Y vanishes at the seed".into()))?;
    let mut m = match r0.valuation() {
        None => probe - e,
        Some(v) if v > 2 * e => v - e,
        Some(v) => {
            return Err(Error::NewtonInapplicable(format!(
                "residual valuation {v} does not exceed twice the derivative valuation {e}"
            )))
        }
    };
    if m <= e {
        return Err(Error::NewtonInapplicable("seed too coarse for a multiple root".into()));
    }
    let mut f = seed.resized(m.min(order));
    if m >= order {
        return Ok(f.resized(order));
    }
    // g = 1 / (P_Y(f) / X^e), known to order m - e, which is all the next
    // correction needs because P(f) / X^e vanishes to order m.
    let mut g = evaluate(&dpoly, &f, m).shift_down(e)?.inverse()?;
    loop {
        let m2 = (2 * m - e).min(order);
        let work = m2 + e;
        let fw = f.resized(work);
        let h = evaluate(poly, &fw, work).shift_down(m + e)?;
        let q = h.mul_to(&g, m2 - m);
        let mut coeffs = fw.truncate(m2).into_coeffs();
        for (c, &x) in coeffs[m..].iter_mut().zip(q.coeffs()) {
            *c = m_.sub(*c, x);
        }
        f = PowerSeries::new(m_, coeffs);
        m = m2;
        if m >= order {
            break;
        }
        // one inverse step g <- g (2 - d g) doubles its precision to m - e
        let d = evaluate(&dpoly, &f, m).shift_down(e)?;
        let gw = g.resized(m - e);
        let mut t = d.mul_to(&gw, m - e).neg();
        let mut tc = t.into_coeffs();
        tc[0] = m_.add(tc[0], 2 % m_.get());
        t = PowerSeries::new(m_, tc);
        g = gw.mul_to(&t, m - e);
    }
    Ok(f.resized(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Prime;

    #[test]
    fn telescoping_root_over_f2() {
        // Y^2 + Y + X = 0 has the root Σ X^(2^k)
        let two = Prime::new(2).unwrap();
        let poly = BivariatePoly::from_terms(two, &[(0, 2, 1), (0, 1, 1), (1, 0, 1)]);
        let root = newton_root(&poly, &PowerSeries::x(two, 2), 300).unwrap();
        for (n, &c) in root.coeffs().iter().enumerate() {
            assert_eq!(c == 1, n.is_power_of_two(), "coefficient {n}");
        }
        assert!(residual(&poly, &root).unwrap().is_zero());
    }

    #[test]
    fn identity_equation() {
        let five = Prime::new(5).unwrap();
        let poly = BivariatePoly::from_terms(five, &[(0, 1, 1), (1, 0, -1)]);
        let x = PowerSeries::x(five, 50);
        assert!(residual(&poly, &x).unwrap().is_zero());
        assert_eq!(newton_root(&poly, &PowerSeries::x(five, 2), 50).unwrap(), x);
    }

    #[test]
    fn rejects_unseparated_or_inseparable_roots() {
        let three = Prime::new(3).unwrap();
        // Y^2 - X^3 at Y = X: residual valuation 2 is not above 2·v(2Y) = 2
        let poly = BivariatePoly::from_terms(three, &[(0, 2, 1), (3, 0, -1)]);
        assert!(matches!(
            newton_root(&poly, &PowerSeries::x(three, 2), 20),
            Err(Error::NewtonInapplicable(_))
        ));
        // Y^3 + X: the Y-derivative is identically zero in characteristic 3
        let inseparable = BivariatePoly::from_terms(three, &[(0, 3, 1), (1, 0, 1)]);
        assert!(matches!(
            newton_root(&inseparable, &PowerSeries::x(three, 2), 20),
            Err(Error::NewtonInapplicable(_))
        ));
    }

    #[test]
    fn lifts_through_a_vanishing_derivative() {
        // Y^2 - X^2 - X^3 over F_3 at Y = X: v(P_Y) = 1, v(P) = 3
        let three = Prime::new(3).unwrap();
        let poly = BivariatePoly::from_terms(three, &[(0, 2, 1), (2, 0, -1), (3, 0, -1)]);
        let root = newton_root(&poly, &PowerSeries::x(three, 2), 60).unwrap();
        assert!(residual(&poly, &root).unwrap().is_zero());
        assert_eq!(&root.coeffs()[..3], &[0, 1, 2]);
    }
}
