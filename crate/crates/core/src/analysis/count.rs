//! Exact letter counts below a bound by dynamic programming over digits.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::dfao::Dfao;
use crate::field::digits_lsd;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountResult {
    #[serde(serialize_with = "decimal")]
    pub bound: BigUint,
    pub letter: u32,
    #[serde(serialize_with = "decimal")]
    pub count: BigUint,
}

fn decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

/// For every output letter, the number of `n < bound` mapped to it.
///
/// An `n < N` agrees with `N` on the digits above some position `i`, has a
/// smaller digit at `i` and anything below. The low part is a distribution
/// over states after `i` free digits; the fixed high part is a map on states.
pub fn count_outputs(a: &Dfao, bound: u128) -> Vec<BigUint> {
    let p = a.radix();
    let n = a.len();
    let top = digits_lsd(bound, p);
    let digits = top.digits();
    let len = digits.len();
    // high[i][q]: state after reading digits i+1.. of the bound from q
    let mut high = vec![(0..n).collect::<Vec<usize>>(); len];
    for i in (0..len.saturating_sub(1)).rev() {
        high[i] = (0..n).map(|q| high[i + 1][a.next(q, digits[i + 1])]).collect();
    }
    let mut counts = vec![BigUint::zero(); a.modulus().get() as usize];
    let mut dist = vec![BigUint::zero(); n];
    dist[a.initial()] = BigUint::from(1u32);
    for i in 0..len {
        for (q, c) in dist.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for d in 0..digits[i] {
                let end = high[i][a.next(q, d)];
                counts[a.out(end) as usize] += c;
            }
        }
        let mut step = vec![BigUint::zero(); n];
        for (q, c) in dist.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for d in 0..p {
                step[a.next(q, d)] += c;
            }
        }
        dist = step;
    }
    counts
}

pub fn count_letter(a: &Dfao, letter: u32, bound: u128) -> CountResult {
    let count = count_outputs(a, bound).into_iter().nth(letter as usize).unwrap_or_default();
    CountResult { bound: BigUint::from(bound), letter, count }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Prime;
    use proptest::prelude::*;

    fn brute(a: &Dfao, bound: u128) -> Vec<BigUint> {
        let mut c = vec![BigUint::zero(); a.modulus().get() as usize];
        for n in 0..bound {
            c[a.evaluate(n).value() as usize] += 1u32;
        }
        c
    }

    fn rudin() -> Dfao {
        let two = Prime::new(2).unwrap();
        Dfao::from_table(2, two, 0, vec![1, 1, 0, 0], vec![vec![0, 1], vec![0, 2], vec![3, 1], vec![3, 2]]).unwrap()
    }

    #[test]
    fn digit_sums_are_balanced_on_full_blocks() {
        let three = Prime::new(3).unwrap();
        let a = Dfao::from_table(3, three, 0, vec![0, 1, 2], vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        for m in 1..30u32 {
            let c = count_outputs(&a, 3u128.pow(m));
            let third = BigUint::from(3u128.pow(m - 1));
            assert!(c.iter().all(|x| *x == third));
        }
        // beyond 2^64
        let c = count_letter(&a, 1, 3u128.pow(60));
        assert_eq!(c.count, BigUint::from(3u128.pow(59)));
    }

    #[test]
    fn empty_range() {
        let a = rudin();
        assert!(count_outputs(&a, 0).iter().all(Zero::is_zero));
    }

    proptest! {
        #[test]
        fn matches_brute_force(bound in 0u128..5000) {
            let a = rudin();
            prop_assert_eq!(count_outputs(&a, bound), brute(&a, bound));
        }
    }
}
