//! Exact kernel closure driven by an algebraic equation.
//!
//! For a root `S` of a monic, separable `P(X, Y)` of degree `d` over `F_p`,
//! every element of the kernel of a series `Z` in `F_p(X)(S)` can be written
//! as `Z = Σ_j B_j(X) S^j / (X·Δ)` with polynomial `B_j`, where `Δ` is the
//! determinant expressing `1, S, …, S^(d-1)` through `1, S^p, …, S^(p(d-1))`.
//! Writing `Z = Σ_m G_m (S^m / (XΔ))^p` and using
//! `Λ_r(F·G^p) = Λ_r(F)·G`, where `Λ_r(Σ f_n X^n) = Σ f_(pn+r) X^n`,
//! gives the transition on digit `r` as a map on numerator tuples.

use std::collections::{HashMap, VecDeque};

use super::{Dfao, State};
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::ntt;
use crate::series::{BivariatePoly, PowerSeries};

type Poly = Vec<u32>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn add(p: Prime, a: &[u32], b: &[u32]) -> Poly {
    let mut out = vec![0u32; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        *o = p.add(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0));
    }
    trim(out)
}

fn mul(p: Prime, a: &[u32], b: &[u32]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    trim(ntt::convolve(a, b, p, a.len() + b.len() - 1))
}

fn neg(p: Prime, a: &[u32]) -> Poly {
    a.iter().map(|&x| p.neg(x)).collect()
}

fn cartier(p: Prime, f: &[u32], r: u32) -> Poly {
    trim(f.iter().skip(r as usize).step_by(p.get() as usize).copied().collect())
}

/// Arithmetic in `F_p[X][Y] / (P)` for monic `P`.
struct Quotient {
    p: Prime,
    d: usize,
    /// `Y^d = Σ_j red[j] Y^j`
    red: Vec<Poly>,
}

impl Quotient {
    fn mul(&self, a: &[Poly], b: &[Poly]) -> Vec<Poly> {
        let p = self.p;
        let mut prod: Vec<Poly> = vec![Vec::new(); 2 * self.d - 1];
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                let t = mul(p, ai, bj);
                prod[i + j] = add(p, &prod[i + j], &t);
            }
        }
        for k in (self.d..prod.len()).rev() {
            let top = std::mem::take(&mut prod[k]);
            if top.is_empty() {
                continue;
            }
            for (j, rj) in self.red.iter().enumerate() {
                let t = mul(p, &top, rj);
                prod[k - self.d + j] = add(p, &prod[k - self.d + j], &t);
            }
        }
        prod.truncate(self.d);
        prod
    }
}

/// Determinant of the submatrix on `rows` and `cols` (equal lengths), by
/// row expansion over subsets of columns.
fn det(p: Prime, a: &[Vec<Poly>], rows: &[usize], cols: &[usize]) -> Poly {
    let n = rows.len();
    debug_assert_eq!(n, cols.len());
    if n == 0 {
        return vec![1];
    }
    let mut table: HashMap<u32, Poly> = HashMap::new();
    table.insert(0, vec![1]);
    for &r in rows {
        let mut next: HashMap<u32, Poly> = HashMap::new();
        for (&mask, sub) in &table {
            if sub.is_empty() {
                continue;
            }
            for (ci, &c) in cols.iter().enumerate() {
                if mask & (1 << ci) != 0 {
                    continue;
                }
                // expanding along row t: sign from the position of ci among chosen columns
                let above = (mask >> ci).count_ones() as usize;
                let term = mul(p, &a[r][c], sub);
                let term = if above % 2 == 1 { neg(p, &term) } else { term };
                let e = next.entry(mask | (1 << ci)).or_default();
                *e = add(p, e, &term);
            }
        }
        table = next;
    }
    table.remove(&((1u32 << n) - 1)).unwrap_or_default()
}

/// The automaton of `Z = Σ_j numer[j](X) S^j / X`, where `S` is the root of
/// `poly` (monic in `Y`) whose first terms are `root`.
///
/// Reachable numerator tuples are enumerated breadth first, then minimized.
/// Fails if more than `max_states` tuples are reached.
pub fn kernel_from_equation(
    poly: &BivariatePoly,
    root: &PowerSeries,
    numer: &[Vec<i64>],
    max_states: usize,
) -> Result<Dfao> {
    let p = poly.modulus();
    let d = poly.degree_y().ok_or_else(|| Error::Invalid("zero polynomial".into()))? as usize;
    if d == 0 || poly.y_coefficient(d as u32) != [1] {
        return Err(Error::Invalid("equation must be monic in Y".into()));
    }
    if numer.len() > d {
        return Err(Error::Invalid("numerator has more terms than the equation degree".into()));
    }
    let red: Vec<Poly> = (0..d).map(|j| trim(neg(p, &poly.y_coefficient(j as u32)))).collect();
    let q = Quotient { p, d, red };

    // columns: S^(p m) in the basis 1, S, ..., S^(d-1)
    let mut y: Vec<Poly> = vec![Vec::new(); d];
    if d > 1 {
        y[1] = vec![1];
    } else {
        y = q.mul(&[vec![0, 1]], &[vec![1]]);
    }
    let mut yp = vec![Vec::new(); d];
    yp[0] = vec![1];
    for _ in 0..p.get() {
        yp = q.mul(&yp, &y);
    }
    let mut frob_pows: Vec<Vec<Poly>> = Vec::with_capacity(d);
    let mut cur: Vec<Poly> = vec![Vec::new(); d];
    cur[0] = vec![1];
    for _ in 0..d {
        frob_pows.push(cur.clone());
        cur = q.mul(&cur, &yp);
    }
    // A[m][j] = coefficient of S^j in S^(p m); S^(p m) = Σ_j A[m][j] S^j
    let a: Vec<Vec<Poly>> = frob_pows.iter().map(|v| v.iter().map(|c| trim(c.clone())).collect()).collect();
    // (S^(p m))_m = A (S^j)_j, so S^j = Σ_m N[j][m] / Δ · S^(p m) with N = adj(A).
    let all: Vec<usize> = (0..d).collect();
    let delta = det(p, &a, &all, &all);
    if delta.is_empty() {
        return Err(Error::Invalid("powers of the root are dependent; equation is not separable or irreducible".into()));
    }
    let mut adj = vec![vec![Vec::new(); d]; d];
    for j in 0..d {
        for m in 0..d {
            // adj(A)[j][m] = (-1)^(j+m) · minor of A without row m and column j
            let rows: Vec<usize> = (0..d).filter(|&r| r != m).collect();
            let cols: Vec<usize> = (0..d).filter(|&c| c != j).collect();
            let minor = det(p, &a, &rows, &cols);
            adj[j][m] = if (j + m) % 2 == 1 { neg(p, &minor) } else { minor };
        }
    }
    // G[j][m] = X^(p-1) Δ^(p-2) N[j][m]
    let mut k: Poly = vec![0; p.get() as usize - 1];
    k.push(1);
    for _ in 0..p.get() - 2 {
        k = mul(p, &k, &delta);
    }
    let g: Vec<Vec<Poly>> = adj.iter().map(|row| row.iter().map(|e| mul(p, &k, e)).collect()).collect();

    // outputs: constant term of N / (X Δ)
    let denom = {
        let mut x_delta = vec![0];
        x_delta.extend_from_slice(&delta);
        x_delta
    };
    let w = denom.iter().position(|&c| c != 0).expect("nonzero denominator");
    if root.order() <= w {
        return Err(Error::OracleTooShort { have: root.order(), need: w + 1 });
    }
    let s = root.truncate(w + 1);
    let mut s_pows = vec![PowerSeries::one(p, w + 1)];
    for j in 1..d {
        s_pows.push(s_pows[j - 1].mul(&s)?);
    }
    let inv_lead = p.inv(denom[w])?;
    let output = |b: &[Poly]| -> Result<u32> {
        let mut low = vec![0u32; w + 1];
        for (bj, sj) in b.iter().zip(&s_pows) {
            for (i, &c) in bj.iter().enumerate().take(w + 1) {
                for t in 0..=(w - i) {
                    low[i + t] = p.add(low[i + t], p.mul(c, sj.coeffs()[t]));
                }
            }
        }
        if low[..w].iter().any(|&c| c != 0) {
            return Err(Error::InvalidMachine("kernel element is not a power series".into()));
        }
        Ok(p.mul(low[w], inv_lead))
    };

    let start: Vec<Poly> = (0..d)
        .map(|j| {
            let nj = numer.get(j).map(|v| v.iter().map(|&c| p.reduce(c)).collect::<Poly>()).unwrap_or_default();
            mul(p, &trim(nj), &delta)
        })
        .collect();
    let mut index: HashMap<Vec<Poly>, usize> = HashMap::new();
    let mut tuples: Vec<Vec<Poly>> = Vec::new();
    let mut queue = VecDeque::new();
    index.insert(start.clone(), 0);
    tuples.push(start);
    queue.push_back(0usize);
    let mut next: Vec<Vec<usize>> = Vec::new();
    while let Some(i) = queue.pop_front() {
        let b = tuples[i].clone();
        // H_m = Σ_j B_j G[j][m]
        let h: Vec<Poly> = (0..d)
            .map(|m| (0..d).fold(Vec::new(), |acc, j| add(p, &acc, &mul(p, &b[j], &g[j][m]))))
            .collect();
        let mut row = Vec::with_capacity(p.get() as usize);
        for r in 0..p.get() {
            let child: Vec<Poly> = h.iter().map(|hm| cartier(p, hm, r)).collect();
            let id = match index.get(&child) {
                Some(&id) => id,
                None => {
                    if tuples.len() >= max_states {
                        return Err(Error::NotAutomatic(max_states));
                    }
                    let id = tuples.len();
                    index.insert(child.clone(), id);
                    tuples.push(child);
                    queue.push_back(id);
                    id
                }
            };
            row.push(id);
        }
        if next.len() <= i {
            next.resize(i + 1, Vec::new());
        }
        next[i] = row;
    }
    let states = tuples
        .iter()
        .zip(next)
        .map(|(b, next)| Ok(State { labels: Vec::new(), out: output(b)?, next }))
        .collect::<Result<Vec<_>>>()?;
    let mut raw = Dfao::from_states(p.get(), p, 0, states, 0)?;
    raw.relabel();
    Ok(raw.minimize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::catalog::Equation;
    use crate::series::newton_root;

    #[test]
    fn telescoping_series_machine() {
        // Y^2 + Y + X = 0 over F_2: coefficient 1 exactly at powers of two
        let two = Prime::new(2).unwrap();
        let poly = BivariatePoly::from_terms(two, &[(0, 2, 1), (0, 1, 1), (1, 0, 1)]);
        let root = newton_root(&poly, &PowerSeries::x(two, 2), 64).unwrap();
        let a = kernel_from_equation(&poly, &root, &[vec![], vec![0, 1]], 100).unwrap();
        for n in 0..5000u128 {
            assert_eq!(a.evaluate(n).value() == 1, n.is_power_of_two(), "n = {n}");
        }
    }

    #[test]
    fn s3_machine_matches_terms() {
        let three = Prime::new(3).unwrap();
        let eq = Equation::Shifted(three);
        let root = newton_root(&eq.poly(), &eq.seed(), 20_000).unwrap();
        let a = kernel_from_equation(&eq.poly(), &root, &[vec![], vec![0, 1]], 10_000).unwrap();
        assert_eq!(a.first_mismatch(root.coeffs(), 20_000).unwrap(), None);
    }

    #[test]
    fn rejects_non_monic() {
        let two = Prime::new(2).unwrap();
        let poly = Equation::InverseZeroed.poly();
        let root = PowerSeries::x(two, 10);
        assert!(kernel_from_equation(&poly, &root, &[vec![], vec![0, 1]], 10).is_err());
    }
}
