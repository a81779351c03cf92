//! Deterministic finite automata with output reading base-`b` digits least
//! significant first.
//!
//! Every state carries the set of kernel labels `(k, l)` it was identified
//! with: the state reached from the initial one by the `k` digits of `l`
//! (padded) generates `n ↦ a(b^k n + l)`.

mod cartier;
pub mod export;
mod machines;
mod minimize;
mod synth;

pub use cartier::kernel_from_equation;
pub use machines::{equation_machine, kernel_machine, Certified, Construction};
pub use synth::{synthesize, SynthesisOptions, BUDGET_ENV};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::field::{digits_lsd, FieldElement, Prime};

/// A kernel label `(k, l)` with `l < b^k`.
pub type KernelLabel = (u32, u64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct State {
    /// Sorted; the first entry is the displayed representative.
    pub labels: Vec<KernelLabel>,
    pub out: u32,
    pub next: Vec<usize>,
}

impl State {
    pub fn representative(&self) -> KernelLabel {
        self.labels.first().copied().unwrap_or((0, 0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfao {
    radix: u32,
    modulus: Prime,
    initial: usize,
    states: Vec<State>,
    certified_below: u64,
}

impl Dfao {
    /// Build from an output table and a transition table, deriving labels
    /// by breadth-first search from `initial`. Unreachable states keep an
    /// empty label set.
    pub fn from_table(radix: u32, modulus: Prime, initial: usize, outs: Vec<u32>, next: Vec<Vec<usize>>) -> Result<Self> {
        if outs.len() != next.len() {
            return Err(Error::InvalidMachine("output and transition tables differ in length".into()));
        }
        let states = outs
            .into_iter()
            .zip(next)
            .map(|(out, next)| State { labels: Vec::new(), out, next })
            .collect();
        let mut a = Dfao { radix, modulus, initial, states, certified_below: 0 };
        a.validate()?;
        a.relabel();
        Ok(a)
    }

    /// Assemble a machine whose labels are already known.
    pub fn from_states(radix: u32, modulus: Prime, initial: usize, states: Vec<State>, certified_below: u64) -> Result<Self> {
        let a = Dfao { radix, modulus, initial, states, certified_below };
        a.validate()?;
        Ok(a)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.states.len();
        if self.radix < 2 {
            return Err(Error::InvalidMachine(format!("radix {} below 2", self.radix)));
        }
        if self.initial >= n {
            return Err(Error::InvalidMachine(format!("initial state {} out of range", self.initial)));
        }
        for (i, s) in self.states.iter().enumerate() {
            if s.next.len() != self.radix as usize {
                return Err(Error::InvalidMachine(format!("state {i} has {} transitions", s.next.len())));
            }
            if let Some(&t) = s.next.iter().find(|&&t| t >= n) {
                return Err(Error::InvalidMachine(format!("state {i} points to missing state {t}")));
            }
            if s.out >= self.modulus.get() {
                return Err(Error::InvalidMachine(format!("state {i} output {} not reduced", s.out)));
            }
        }
        Ok(())
    }

    pub fn radix(&self) -> u32 {
        self.radix
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    #[inline]
    pub fn next(&self, q: usize, d: u32) -> usize {
        self.states[q].next[d as usize]
    }

    #[inline]
    pub fn out(&self, q: usize) -> u32 {
        self.states[q].out
    }

    /// Largest `M` such that the machine was checked against its oracle on `n < M`.
    pub fn certified_below(&self) -> u64 {
        self.certified_below
    }

    pub fn set_certified_below(&mut self, m: u64) {
        self.certified_below = m;
    }

    /// The state containing `label`, if it is tracked.
    pub fn state_of(&self, label: KernelLabel) -> Option<usize> {
        self.states.iter().position(|s| s.labels.binary_search(&label).is_ok())
    }

    /// State reached from `q` after reading `digits` in order.
    pub fn run_from(&self, q: usize, digits: &[u32]) -> usize {
        digits.iter().fold(q, |s, &d| self.next(s, d))
    }

    pub fn state_after(&self, n: u128) -> usize {
        self.run_from(self.initial, digits_lsd(n, self.radix).digits())
    }

    pub fn evaluate(&self, n: u128) -> FieldElement {
        FieldElement::new(self.out(self.state_after(n)) as i64, self.modulus)
    }

    /// First `n < bound` where the machine disagrees with `terms`.
    pub fn first_mismatch(&self, terms: &[u32], bound: u64) -> Result<Option<u64>> {
        if (terms.len() as u64) < bound {
            return Err(Error::OracleTooShort { have: terms.len(), need: bound as usize });
        }
        Ok((0..bound).find(|&n| self.out(self.state_after(n as u128)) != terms[n as usize]))
    }

    /// Check against `terms` for `n < bound`; on success record the depth.
    pub fn certify(&mut self, terms: &[u32], bound: u64) -> Result<()> {
        match self.first_mismatch(terms, bound)? {
            Some(n) => Err(Error::SynthesisUnverified(n)),
            None => {
                self.certified_below = self.certified_below.max(bound);
                Ok(())
            }
        }
    }

    /// `out(next(q, 0)) = out(q)` for all states.
    pub fn is_padding_invariant(&self) -> bool {
        (0..self.len()).all(|q| self.out(self.next(q, 0)) == self.out(q))
    }

    /// For every tracked label `(k, l)` of `q` whose children are tracked,
    /// the child `(k+1, l + d·b^k)` belongs to `next(q, d)`.
    pub fn kernel_law_holds(&self) -> bool {
        let b = self.radix as u64;
        for (q, s) in self.states.iter().enumerate() {
            for &(k, l) in &s.labels {
                let Some(scale) = b.checked_pow(k) else { continue };
                for d in 0..self.radix {
                    let child = (k + 1, l + d as u64 * scale);
                    if let Some(owner) = self.state_of(child) {
                        if owner != self.next(q, d) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Recompute labels: walk the label tree breadth first, expanding a
    /// label only when it is the first to reach its state.
    pub(crate) fn relabel(&mut self) {
        for s in &mut self.states {
            s.labels.clear();
        }
        let b = self.radix as u64;
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::new();
        seen[self.initial] = true;
        self.states[self.initial].labels.push((0, 0));
        queue.push_back((self.initial, 0u32, 0u64));
        while let Some((q, k, l)) = queue.pop_front() {
            let Some(scale) = b.checked_pow(k) else { continue };
            for d in 0..self.radix {
                let t = self.next(q, d);
                let child = (k + 1, l + d as u64 * scale);
                self.states[t].labels.push(child);
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back((t, child.0, child.1));
                }
            }
        }
        for s in &mut self.states {
            s.labels.sort_unstable();
            s.labels.dedup();
        }
    }

    /// Minimal machine computing the same function, states in breadth-first
    /// order from the initial state (digits ascending), unreachable states
    /// dropped. Label sets of merged states are united.
    pub fn minimize(&self) -> Dfao {
        minimize::minimize(self)
    }

    /// Machine over `b^j` digits, each read as `j` base-`b` digits (least
    /// significant first), minimized.
    pub fn power_alphabet(&self, j: u32) -> Result<Dfao> {
        if j == 0 {
            return Err(Error::Invalid("block length must be at least 1".into()));
        }
        if j == 1 {
            return Ok(self.minimize());
        }
        let radix = self
            .radix
            .checked_pow(j)
            .filter(|&r| r <= 1 << 16)
            .ok_or_else(|| Error::Invalid(format!("alphabet {}^{j} too large", self.radix)))?;
        let next: Vec<Vec<usize>> = (0..self.len())
            .map(|q| {
                (0..radix)
                    .map(|big| {
                        let mut s = q;
                        let mut v = big;
                        for _ in 0..j {
                            s = self.next(s, v % self.radix);
                            v /= self.radix;
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        let outs = self.states.iter().map(|s| s.out).collect();
        let mut a = Dfao::from_table(radix, self.modulus, self.initial, outs, next)?.minimize();
        a.certified_below = self.certified_below;
        Ok(a)
    }

    /// A copy with one state's output changed (for fault-injection tests).
    pub fn with_output(&self, q: usize, out: u32) -> Dfao {
        let mut a = self.clone();
        a.states[q].out = out % self.modulus.get();
        a
    }
}
