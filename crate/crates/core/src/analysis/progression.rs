//! Machines for arithmetic subsequences `n ↦ a(m·n + c)` with `m = p^j`.

use std::collections::HashMap;
use std::collections::VecDeque;

use crate::dfao::Dfao;
use crate::error::{Error, Result};
use crate::field::{digits_lsd, FieldElement};

/// Number of leading indices checked against direct evaluation.
const SELF_CHECK: u64 = 10_000;

/// `n ↦ a(m·n + c)`; indices with `m·n + c < 0` are undefined.
#[derive(Debug, Clone)]
pub struct Progression {
    pub machine: Dfao,
    pub multiplier: u64,
    pub offset: i64,
    /// Least `n` with `m·n + c ≥ 0`.
    pub defined_from: u64,
}

impl Progression {
    pub fn evaluate(&self, n: u64) -> Result<FieldElement> {
        if n < self.defined_from {
            return Err(Error::UndefinedIndex(format!(
                "{}·{n} + {} is negative",
                self.multiplier, self.offset
            )));
        }
        Ok(self.machine.evaluate(n as u128))
    }
}

/// `m` as `p^j`, if it is one.
pub fn log_radix(m: u64, p: u32) -> Option<u32> {
    let mut j = 0;
    let mut x = 1u64;
    while x < m {
        x = x.checked_mul(p as u64)?;
        j += 1;
    }
    (x == m).then_some(j)
}

/// Compose `a` with the LSD-first transducer that shifts by `j` digits and
/// adds `c` (carry or borrow states), then minimize.
///
/// Product states `(q, t)` hold the state of `a` and the pending carry `t`;
/// the output of `(q, t)` with `t ≥ 0` is the output after flushing `t`.
/// States with `t < 0` at the end of the input belong to undefined indices
/// and get output 0.
pub fn progression_automaton(a: &Dfao, m: u64, c: i64) -> Result<Progression> {
    let p = a.radix();
    let j = log_radix(m, p).ok_or_else(|| Error::Invalid(format!("multiplier {m} is not a power of {p}")))?;
    let pm = m as i128;
    let defined_from = if c >= 0 { 0 } else { ((-(c as i128) + pm - 1) / pm) as u64 };
    let c_low = (c as i128).rem_euclid(pm) as u128;
    let c_high = (c as i128).div_euclid(pm) as i64;
    // low j digits of m·n + c are those of c mod m
    let mut low = digits_lsd(c_low, p).padded(j as usize).digits().to_vec();
    low.truncate(j as usize);
    let q1 = a.run_from(a.initial(), &low);

    let flush = |q: usize, t: i64| -> u32 {
        if t < 0 {
            0
        } else {
            a.out(a.run_from(q, digits_lsd(t as u128, p).digits()))
        }
    };
    let mut index: HashMap<(usize, i64), usize> = HashMap::new();
    let mut states = vec![(q1, c_high)];
    index.insert((q1, c_high), 0);
    let mut next: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let (q, t) = states[i];
        let mut row = Vec::with_capacity(p as usize);
        for x in 0..p {
            let s = t + x as i64;
            let key = (a.next(q, s.rem_euclid(p as i64) as u32), s.div_euclid(p as i64));
            let id = *index.entry(key).or_insert_with(|| {
                states.push(key);
                queue.push_back(states.len() - 1);
                states.len() - 1
            });
            row.push(id);
        }
        if next.len() <= i {
            next.resize(i + 1, Vec::new());
        }
        next[i] = row;
    }
    let outs = states.iter().map(|&(q, t)| flush(q, t)).collect();
    let machine = Dfao::from_table(p, a.modulus(), 0, outs, next)?.minimize();
    let prog = Progression { machine, multiplier: m, offset: c, defined_from };
    for n in prog.defined_from..prog.defined_from + SELF_CHECK {
        let idx = (m as u128) * n as u128;
        let idx = if c >= 0 { idx + c as u128 } else { idx - (-(c as i128)) as u128 };
        if prog.machine.evaluate(n as u128) != a.evaluate(idx) {
            return Err(Error::InvalidMachine(format!("progression machine disagrees with direct evaluation at n = {n}")));
        }
    }
    Ok(prog)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Prime;
    use proptest::prelude::*;

    fn thue(p: u32) -> Dfao {
        let next = (0..p as usize).map(|q| (0..p as usize).map(|d| (q + d) % p as usize).collect()).collect();
        Dfao::from_table(p, Prime::new(p as u64).unwrap(), 0, (0..p).collect(), next).unwrap()
    }

    #[test]
    fn identity_progression() {
        let a = thue(3);
        let prog = progression_automaton(&a, 1, 0).unwrap();
        assert_eq!(prog.machine, a.minimize());
    }

    #[test]
    fn rejects_non_powers() {
        assert!(progression_automaton(&thue(3), 6, 1).is_err());
        assert_eq!(log_radix(81, 3), Some(4));
        assert_eq!(log_radix(1, 3), Some(0));
    }

    #[test]
    fn negative_offsets_are_undefined_below_the_threshold() {
        let prog = progression_automaton(&thue(2), 4, -5).unwrap();
        assert_eq!(prog.defined_from, 2);
        assert!(matches!(prog.evaluate(1), Err(Error::UndefinedIndex(_))));
        assert_eq!(prog.evaluate(2).unwrap().value(), (3u32).count_ones() % 2);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn agrees_with_direct_evaluation(p in prop::sample::select(vec![2u32, 3, 5]), j in 0u32..3, c in -40i64..40) {
            let a = thue(p);
            let m = (p as u64).pow(j);
            let prog = progression_automaton(&a, m, c).unwrap();
            for n in prog.defined_from..prog.defined_from + 300 {
                let idx = (m as i64 * n as i64 + c) as u128;
                prop_assert_eq!(prog.evaluate(n).unwrap(), a.evaluate(idx));
            }
        }
    }
}
