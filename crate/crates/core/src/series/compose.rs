//! Composition `f(g(X))` and compositional inversion.

use super::PowerSeries;
use crate::error::{Error, Result};

/// `f ∘ g` modulo `X^N`, `N = min(order f, order g)`, by the baby-step
/// giant-step scheme: `√N` products for powers of `g` plus `O(N^2)` scalar
/// work for the block sums.
pub fn compose(f: &PowerSeries, g: &PowerSeries) -> Result<PowerSeries> {
    let prime = f.modulus();
    if prime != g.modulus() {
        return Err(Error::ModulusMismatch(prime.get(), g.modulus().get()));
    }
    if g.order() > 0 && g.coeffs()[0] != 0 {
        return Err(Error::CompositionUndefined);
    }
    let n = f.order().min(g.order());
    if n == 0 {
        return Ok(PowerSeries::zero(prime, 0));
    }
    let g = g.truncate(n);
    let step = ((n as f64).sqrt().ceil() as usize).max(1);
    let mut powers = Vec::with_capacity(step + 1);
    powers.push(PowerSeries::one(prime, n));
    for j in 1..=step {
        let next = powers[j - 1].mul_to(&g, n);
        powers.push(next);
    }
    let pm = prime.get() as u64;
    let fc = f.coeffs();
    let blocks = n.div_ceil(step);
    let block_sum = |i: usize| -> PowerSeries {
        let mut acc = vec![0u64; n];
        for j in 0..step {
            let idx = i * step + j;
            if idx >= n {
                break;
            }
            let c = fc[idx] as u64;
            if c == 0 {
                continue;
            }
            // G^j vanishes below X^j
            for (a, &x) in acc[j..].iter_mut().zip(&powers[j].coeffs()[j..]) {
                *a += c * x as u64;
            }
            if j % 1024 == 1023 {
                acc.iter_mut().for_each(|a| *a %= pm);
            }
        }
        PowerSeries::new(prime, acc.into_iter().map(|a| (a % pm) as u32).collect())
    };
    let giant = &powers[step];
    let mut result = block_sum(blocks - 1);
    for i in (0..blocks - 1).rev() {
        result = result.mul_to(giant, n).add(&block_sum(i))?;
    }
    Ok(result)
}

/// The compositional inverse `G` with `f(G) = G(f) = X`, by Newton iteration
/// `G <- G - (f(G) - X) / f'(G)` using [`compose`].
pub fn comp_inverse_ref(f: &PowerSeries) -> Result<PowerSeries> {
    let prime = f.modulus();
    let n = f.order();
    if n < 2 {
        return Err(Error::NotCompositionallyInvertible("series known to fewer than two terms"));
    }
    if f.coeffs()[0] != 0 {
        return Err(Error::NotCompositionallyInvertible("constant term is nonzero"));
    }
    if f.coeffs()[1] == 0 {
        return Err(Error::NotCompositionallyInvertible("linear coefficient is zero"));
    }
    let a1_inv = prime.inv(f.coeffs()[1])?;
    let fd = f.derivative();
    let mut g = PowerSeries::new(prime, vec![0, a1_inv]);
    let mut m = 2;
    while m < n {
        let m2 = (2 * m).min(n);
        let gm = g.resized(m2);
        let err = compose(&f.truncate(m2), &gm)?.sub(&PowerSeries::x(prime, m2))?;
        let h = err.shift_down(m)?;
        let d = compose(&fd.truncate(m2 - m), &gm.truncate(m2 - m))?;
        let q = h.div(&d)?;
        let mut coeffs = gm.into_coeffs();
        for (c, &x) in coeffs[m..].iter_mut().zip(q.coeffs()) {
            *c = prime.sub(*c, x);
        }
        g = PowerSeries::new(prime, coeffs);
        m = m2;
    }
    Ok(g.resized(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Prime;

    /// Horner with schoolbook products.
    fn naive_compose(f: &PowerSeries, g: &PowerSeries) -> Vec<u32> {
        let p = f.modulus();
        let n = f.order().min(g.order());
        let mut acc = vec![0u32; n];
        for &c in f.coeffs()[..n].iter().rev() {
            let mut next = vec![0u32; n];
            for (i, &a) in acc.iter().enumerate() {
                for (j, &b) in g.coeffs().iter().enumerate().take(n - i) {
                    next[i + j] = p.add(next[i + j], p.mul(a, b));
                }
            }
            next[0] = p.add(next[0], c);
            acc = next;
        }
        acc
    }

    /// Degree-by-degree search for the inverse: the only other route.
    fn brute_inverse(f: &PowerSeries) -> Vec<u32> {
        let p = f.modulus();
        let n = f.order();
        let mut g = vec![0u32; n];
        g[1] = p.inv(f.coeffs()[1]).unwrap();
        for k in 2..n {
            let hit = (0..p.get()).find(|&t| {
                g[k] = t;
                let gs = PowerSeries::new(p, g[..=k].to_vec());
                naive_compose(&f.truncate(k + 1), &gs)[k] == 0
            });
            g[k] = hit.expect("some value solves the degree-k equation");
        }
        g
    }

    fn sample(p: Prime, n: usize, seed: u64) -> PowerSeries {
        let mut s = seed;
        let mut c: Vec<u32> = (0..n)
            .map(|_| {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((s >> 33) % p.get() as u64) as u32
            })
            .collect();
        c[0] = 0;
        if n > 1 && c[1] == 0 {
            c[1] = 1;
        }
        PowerSeries::new(p, c)
    }

    #[test]
    fn compose_matches_horner() {
        for &pv in &[2u64, 3, 5, 7] {
            let p = Prime::new(pv).unwrap();
            for (n, seed) in [(1usize, 1u64), (7, 2), (40, 3), (130, 4)] {
                let f = sample(p, n + 3, seed);
                let g = sample(p, n, seed + 100);
                assert_eq!(compose(&f, &g).unwrap().coeffs(), &naive_compose(&f, &g)[..]);
            }
        }
    }

    #[test]
    fn identity_and_precondition() {
        let p = Prime::new(3).unwrap();
        let g = sample(p, 30, 9);
        assert_eq!(compose(&PowerSeries::x(p, 30), &g).unwrap(), g);
        let bad = PowerSeries::one(p, 30);
        assert_eq!(compose(&g, &bad), Err(Error::CompositionUndefined));
        assert!(comp_inverse_ref(&bad).is_err());
        let x = PowerSeries::x(p, 16);
        assert_eq!(comp_inverse_ref(&x).unwrap(), x);
    }

    #[test]
    fn inverse_matches_degree_by_degree_search() {
        for &pv in &[2u64, 3, 5] {
            let p = Prime::new(pv).unwrap();
            for seed in 0..4 {
                let f = sample(p, 33, seed);
                assert_eq!(comp_inverse_ref(&f).unwrap().coeffs(), &brute_inverse(&f)[..]);
            }
        }
    }

    #[test]
    fn inverse_is_two_sided() {
        let p = Prime::new(5).unwrap();
        let f = sample(p, 700, 42);
        let g = comp_inverse_ref(&f).unwrap();
        assert_eq!(compose(&f, &g).unwrap(), PowerSeries::x(p, 700));
        assert_eq!(compose(&g, &f).unwrap(), PowerSeries::x(p, 700));
    }
}
