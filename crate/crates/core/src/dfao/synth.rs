//! Kernel closure: build the automaton of a sequence from its first terms.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::hash::{Hash, Hasher};

use super::{Dfao, KernelLabel, State};
use crate::error::{Error, Result};
use crate::field::Prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SynthesisOptions {
    /// Terms `0..term_budget` of the oracle are read.
    pub term_budget: usize,
    /// Signature depth for shallow kernel levels.
    pub depth: usize,
    /// Smallest signature depth accepted before giving up.
    pub min_depth: usize,
    pub max_states: usize,
    /// The result is verified against the oracle on `n < verify_below`.
    pub verify_below: u64,
}

/// Budget override for `p = 5`.
pub const BUDGET_ENV: &str = "SEQINV_BUDGET";

impl SynthesisOptions {
    /// Defaults: 2^21 terms for `p ≤ 3`, 4·10^6 for `p = 5` (or the value of
    /// `SEQINV_BUDGET`), 2^21 otherwise.
    pub fn for_prime(p: Prime) -> Self {
        let term_budget = match p.get() {
            0..=3 => 1 << 21,
            5 => std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(4_000_000),
            _ => 1 << 21,
        };
        SynthesisOptions { term_budget, depth: 4096, min_depth: 64, max_states: 20_000, verify_below: 100_000 }
    }

    pub fn with_budget(mut self, term_budget: usize) -> Self {
        self.term_budget = term_budget;
        self
    }

    fn check(&self) -> Result<()> {
        if self.min_depth == 0 || self.min_depth > self.depth || self.max_states == 0 {
            return Err(Error::Invalid(format!("bad synthesis options {self:?}")));
        }
        if self.verify_below > self.term_budget as u64 {
            return Err(Error::Invalid("verification depth exceeds the term budget".into()));
        }
        Ok(())
    }
}

struct Closure<'a> {
    terms: &'a [u32],
    p: u64,
    opts: &'a SynthesisOptions,
    /// representative label, stride `p^k`, signature depth
    reps: Vec<(KernelLabel, u64, usize)>,
    labels: Vec<Vec<KernelLabel>>,
    buckets: HashMap<u64, Vec<usize>>,
}

impl Closure<'_> {
    fn depth(&self, l: u64, stride: u64) -> usize {
        let t = self.terms.len() as u64;
        if l >= t {
            return 0;
        }
        (((t - 1 - l) / stride + 1) as usize).min(self.opts.depth)
    }

    fn key(&self, l: u64, stride: u64) -> u64 {
        let mut h = DefaultHasher::new();
        for j in 0..self.opts.min_depth as u64 {
            self.terms[(l + stride * j) as usize].hash(&mut h);
        }
        h.finish()
    }

    fn find_or_insert(&mut self, label: KernelLabel, queue: &mut VecDeque<usize>) -> Result<usize> {
        let (k, l) = label;
        let stride = self.p.checked_pow(k).unwrap_or(u64::MAX);
        let depth = self.depth(l, stride);
        if depth < self.opts.min_depth {
            return Err(Error::InsufficientTerms { k, l, depth, min_depth: self.opts.min_depth });
        }
        let key = self.key(l, stride);
        if let Some(bucket) = self.buckets.get(&key) {
            for &s in bucket {
                let ((_, ls), ss, ds) = self.reps[s];
                let common = depth.min(ds) as u64;
                let same = (0..common)
                    .all(|j| self.terms[(l + stride * j) as usize] == self.terms[(ls + ss * j) as usize]);
                if same {
                    self.labels[s].push(label);
                    return Ok(s);
                }
            }
        }
        if self.reps.len() >= self.opts.max_states {
            return Err(Error::NotAutomatic(self.opts.max_states));
        }
        let id = self.reps.len();
        self.reps.push((label, stride, depth));
        self.labels.push(vec![label]);
        self.buckets.entry(key).or_default().push(id);
        queue.push_back(id);
        Ok(id)
    }
}

/// Synthesize the minimal LSD-first automaton of the sequence whose first
/// terms are `terms`, then verify it below `opts.verify_below`.
///
/// Labels `(k, l)` are explored breadth first from `(0, 0)`; the children of
/// `(k, l)` are `(k+1, l + d·p^k)`. Two labels are identified when their
/// subsequences agree on the first `min(D_k, D_k')` terms, where `D_k` is
/// the signature depth capped by `opts.depth` and by the term budget.
pub fn synthesize(terms: &[u32], modulus: Prime, opts: &SynthesisOptions) -> Result<Dfao> {
    opts.check()?;
    if terms.len() < opts.term_budget {
        return Err(Error::OracleTooShort { have: terms.len(), need: opts.term_budget });
    }
    let mut c = Closure {
        terms: &terms[..opts.term_budget],
        p: modulus.get() as u64,
        opts,
        reps: Vec::new(),
        labels: Vec::new(),
        buckets: HashMap::new(),
    };
    let mut queue = VecDeque::new();
    let mut next: Vec<Vec<usize>> = Vec::new();
    c.find_or_insert((0, 0), &mut queue)?;
    while let Some(s) = queue.pop_front() {
        let ((k, l), stride, _) = c.reps[s];
        let mut row = Vec::with_capacity(c.p as usize);
        for d in 0..c.p {
            let child = stride
                .checked_mul(d)
                .and_then(|x| x.checked_add(l))
                .ok_or(Error::InsufficientTerms { k: k + 1, l: u64::MAX, depth: 0, min_depth: opts.min_depth })?;
            row.push(c.find_or_insert((k + 1, child), &mut queue)?);
        }
        if next.len() <= s {
            next.resize(s + 1, Vec::new());
        }
        next[s] = row;
    }
    let states = c
        .reps
        .iter()
        .zip(c.labels)
        .zip(next)
        .map(|((&((_, l), _, _), mut labels), next)| {
            labels.sort_unstable();
            State { labels, out: terms[l as usize], next }
        })
        .collect();
    let raw = Dfao::from_states(modulus.get(), modulus, 0, states, 0)?;
    let mut a = raw.minimize();
    a.certify(terms, opts.verify_below)?;
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{c_terms, rudin_terms, thue_terms, Method, SequenceId};

    fn small(budget: usize) -> SynthesisOptions {
        SynthesisOptions { term_budget: budget, depth: 512, min_depth: 64, max_states: 1000, verify_below: budget as u64 }
    }

    #[test]
    fn digit_sum_machines() {
        for p in [2u64, 3, 5, 7] {
            let p = Prime::new(p).unwrap();
            let t = thue_terms(p, 1 << 16);
            let a = synthesize(&t.values, p, &small(1 << 16)).unwrap();
            assert_eq!(a.len(), p.get() as usize);
            assert!(a.is_padding_invariant());
            assert!(a.kernel_law_holds());
        }
    }

    #[test]
    fn rudin_machine_has_four_states() {
        let r = rudin_terms(SequenceId::Rudin, 1 << 16).unwrap();
        let a = synthesize(&r.values, Prime::new(2).unwrap(), &small(1 << 16)).unwrap();
        assert_eq!(a.len(), 4);
    }

    #[test]
    fn c2_machine_merges_4n1_with_4n2() {
        let two = Prime::new(2).unwrap();
        let c = c_terms(two, 1 << 16, Method::Newton).unwrap();
        let a = synthesize(&c.values, two, &small(1 << 16)).unwrap();
        assert_eq!(a.len(), 8);
        let q = a.state_of((2, 1)).unwrap();
        assert_eq!(a.state_of((2, 2)), Some(q));
        assert_eq!(a.states()[q].representative(), (2, 1));
        assert!(a.kernel_law_holds());
        let again = synthesize(&c.values, two, &small(1 << 16)).unwrap();
        assert_eq!(a, again);
    }

    #[test]
    fn budget_errors() {
        let three = Prime::new(3).unwrap();
        let c = c_terms(three, 2000, Method::Newton).unwrap();
        let opts = SynthesisOptions { verify_below: 1000, ..small(2000) };
        assert!(matches!(synthesize(&c.values, three, &opts), Err(Error::InsufficientTerms { .. })));
        let c = c_terms(three, 1 << 16, Method::Newton).unwrap();
        let opts = SynthesisOptions { max_states: 5, ..small(1 << 16) };
        assert_eq!(synthesize(&c.values, three, &opts), Err(Error::NotAutomatic(5)));
        assert!(matches!(synthesize(&c.values[..100], three, &small(1 << 16)), Err(Error::OracleTooShort { .. })));
    }
}
