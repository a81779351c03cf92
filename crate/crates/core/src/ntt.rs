//! Convolution of residue vectors modulo a small prime.
//!
//! Products are computed exactly over the integers with a number-theoretic
//! transform in one or two NTT-friendly primes (CRT recombination), then
//! reduced mod `p`. The result is bit-identical to schoolbook convolution.

use crate::field::Prime;

const SCHOOLBOOK_CUTOFF: usize = 48;

/// 7·2^26 + 1, primitive root 3.
const P_A: u32 = 469_762_049;
/// 5·2^25 + 1, primitive root 3.
const P_B: u32 = 167_772_161;

#[inline]
fn pow_mod<const P: u32>(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    b %= P as u64;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P as u64;
        }
        b = b * b % P as u64;
        e >>= 1;
    }
    r
}

/// In-place cyclic NTT of power-of-two length. `rt` holds the twiddle
/// table built by [`roots`] and `rs` the matching Shoup quotients
/// `floor(w·2^32 / P)`, so each butterfly needs no division.
fn ntt<const P: u32>(a: &mut [u32], rt: &[u32], rs: &[u32]) {
    let n = a.len();
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            a.swap(i, j);
        }
    }
    let mut k = 1;
    while k < n {
        let tw = &rt[k..2 * k];
        let ts = &rs[k..2 * k];
        for block in a.chunks_exact_mut(2 * k) {
            let (lo, hi) = block.split_at_mut(k);
            for (((x, y), &w), &ws) in lo.iter_mut().zip(hi.iter_mut()).zip(tw).zip(ts) {
                let q = ((ws as u64 * *y as u64) >> 32) as u32;
                let z = w.wrapping_mul(*y).wrapping_sub(q.wrapping_mul(P));
                let z = if z >= P { z - P } else { z };
                let u = *x;
                *y = if u >= z { u - z } else { u + P - z };
                let s = u + z;
                *x = if s >= P { s - P } else { s };
            }
        }
        k <<= 1;
    }
}

/// Twiddles laid out so that `rt[k + j] = w_{2k}^j` for each stage `k`,
/// together with their Shoup quotients.
fn roots<const P: u32>(n: usize) -> (Vec<u32>, Vec<u32>) {
    let mut rt = vec![0u32; n.max(2)];
    rt[1] = 1;
    let mut k = 2;
    let mut s = 2u32;
    while k < n {
        let z = pow_mod::<P>(3, ((P - 1) >> s) as u64);
        for i in k..2 * k {
            rt[i] = if i & 1 == 1 { (rt[i / 2] as u64 * z % P as u64) as u32 } else { rt[i / 2] };
        }
        k <<= 1;
        s += 1;
    }
    let rs = rt.iter().map(|&w| (((w as u64) << 32) / P as u64) as u32).collect();
    (rt, rs)
}

/// Exact cyclic-free convolution modulo the NTT prime `P`.
fn conv_in<const P: u32>(a: &[u32], b: &[u32], out_len: usize) -> Vec<u32> {
    let need = a.len() + b.len() - 1;
    let n = need.next_power_of_two();
    assert!(n.trailing_zeros() <= (P - 1).trailing_zeros(), "transform length {n} too large for modulus {P}");
    let (rt, rs) = roots::<P>(n);
    let mut fa = vec![0u32; n];
    for (d, &s) in fa.iter_mut().zip(a) {
        *d = s % P;
    }
    ntt::<P>(&mut fa, &rt, &rs);
    let same = std::ptr::eq(a, b);
    if same {
        for x in fa.iter_mut() {
            *x = (*x as u64 * *x as u64 % P as u64) as u32;
        }
    } else {
        let mut fb = vec![0u32; n];
        for (d, &s) in fb.iter_mut().zip(b) {
            *d = s % P;
        }
        ntt::<P>(&mut fb, &rt, &rs);
        for (x, y) in fa.iter_mut().zip(&fb) {
            *x = (*x as u64 * *y as u64 % P as u64) as u32;
        }
    }
    // inverse transform: reverse, forward NTT, scale by n^{-1}
    fa[1..].reverse();
    ntt::<P>(&mut fa, &rt, &rs);
    let inv_n = pow_mod::<P>(n as u64, P as u64 - 2);
    fa.truncate(out_len.min(need));
    for x in fa.iter_mut() {
        *x = (*x as u64 * inv_n % P as u64) as u32;
    }
    fa
}

/// Reference quadratic convolution, truncated to `out_len` terms.
pub fn schoolbook(a: &[u32], b: &[u32], p: Prime, out_len: usize) -> Vec<u32> {
    let m = p.get() as u64;
    let mut acc = vec![0u64; out_len.min((a.len() + b.len()).saturating_sub(1))];
    // (p-1)^2 < 2^32, so 2^31 products can be accumulated before reducing
    for (i, &x) in a.iter().enumerate() {
        if x == 0 || i >= acc.len() {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(acc.len() - i) {
            let t = &mut acc[i + j];
            *t += x as u64 * y as u64;
            if *t >= 1 << 63 {
                *t %= m;
            }
        }
    }
    acc.into_iter().map(|v| (v % m) as u32).collect()
}

/// Product of two residue vectors mod `p`, keeping `out_len` coefficients.
pub fn convolve(a: &[u32], b: &[u32], p: Prime, out_len: usize) -> Vec<u32> {
    let a = &a[..a.len().min(out_len)];
    let b = &b[..b.len().min(out_len)];
    if a.is_empty() || b.is_empty() || out_len == 0 {
        return vec![0; out_len.min(a.len() + b.len()).saturating_sub(1)];
    }
    let shorter = a.len().min(b.len());
    if shorter <= SCHOOLBOOK_CUTOFF {
        return schoolbook(a, b, p, out_len);
    }
    let pm = p.get() as u64;
    let bound = shorter as u128 * ((pm - 1) * (pm - 1)) as u128;
    let same = std::ptr::eq(a.as_ptr(), b.as_ptr()) && a.len() == b.len();
    let b = if same { a } else { b };
    if bound < P_A as u128 {
        let mut r = conv_in::<P_A>(a, b, out_len);
        for x in r.iter_mut() {
            *x = (*x as u64 % pm) as u32;
        }
        return r;
    }
    assert!(bound < P_A as u128 * P_B as u128, "convolution exceeds two-prime CRT range");
    let ra = conv_in::<P_A>(a, b, out_len);
    let rb = conv_in::<P_B>(a, b, out_len);
    let inv_a_mod_b = pow_mod::<P_B>(P_A as u64, P_B as u64 - 2);
    ra.iter()
        .zip(&rb)
        .map(|(&x, &y)| {
            // Garner: v = x + P_A * ((y - x) * P_A^{-1} mod P_B)
            let t = (y as u64 + P_B as u64 - x as u64 % P_B as u64) % P_B as u64 * inv_a_mod_b % P_B as u64;
            let v = x as u128 + P_A as u128 * t as u128;
            (v % pm as u128) as u32
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lcg(seed: &mut u64) -> u32 {
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (*seed >> 33) as u32
    }

    #[test]
    fn matches_schoolbook_single_prime() {
        let p = Prime::new(5).unwrap();
        let mut seed = 7;
        for (la, lb) in [(100, 300), (512, 512), (1000, 77), (49, 49)] {
            let a: Vec<u32> = (0..la).map(|_| lcg(&mut seed) % 5).collect();
            let b: Vec<u32> = (0..lb).map(|_| lcg(&mut seed) % 5).collect();
            let n = la + lb - 1;
            assert_eq!(convolve(&a, &b, p, n), schoolbook(&a, &b, p, n));
            assert_eq!(convolve(&a, &b, p, 60), schoolbook(&a, &b, p, 60));
        }
    }

    #[test]
    fn matches_schoolbook_two_primes() {
        let p = Prime::new(65521).unwrap();
        let mut seed = 11;
        let a: Vec<u32> = (0..700).map(|_| lcg(&mut seed) % 65521).collect();
        let b: Vec<u32> = (0..900).map(|_| lcg(&mut seed) % 65521).collect();
        assert_eq!(convolve(&a, &b, p, 1599), schoolbook(&a, &b, p, 1599));
    }

    #[test]
    fn squaring_path() {
        let p = Prime::new(3).unwrap();
        let a: Vec<u32> = (0..300u32).map(|i| (i * i + 1) % 3).collect();
        assert_eq!(convolve(&a, &a, p, 599), schoolbook(&a, &a, p, 599));
    }
}
