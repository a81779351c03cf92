//! Families of inputs `α·wᵏ·β` and their outputs for every `k ≥ 0`.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::uniform_reach;
use crate::dfao::Dfao;
use crate::error::{Error, Result};
use crate::field::{digits_lsd, DigitString};

/// The LSD-first words `prefix · pumpᵏ · suffix`, `k ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordFamily {
    pub prefix: DigitString,
    pub pump: DigitString,
    pub suffix: DigitString,
}

impl WordFamily {
    pub fn new(prefix: DigitString, pump: DigitString, suffix: DigitString) -> Result<Self> {
        let base = prefix.base();
        if pump.base() != base || suffix.base() != base {
            return Err(Error::Invalid("family words use different bases".into()));
        }
        if pump.is_empty() {
            return Err(Error::Invalid("pumped word is empty".into()));
        }
        Ok(WordFamily { prefix, pump, suffix })
    }

    /// The numbers written `head · pumpᵏ · tail` most significant digit first,
    /// e.g. `msd(5, "1002", "2", "44")` for `100 2^(k+1) 44`.
    pub fn msd(base: u32, head: &str, pump: &str, tail: &str) -> Result<Self> {
        let rev = |s: &str| DigitString::parse_word(&s.chars().rev().collect::<String>(), base);
        Self::new(rev(tail)?, rev(pump)?, rev(head)?)
    }

    /// The numbers `a·base^(e·k + s) + b`, `k ≥ 0`. Requires `|b| ≤ base^s`
    /// and, for negative `b`, `a ≥ 1`.
    pub fn affine(base: u32, a: u64, e: u32, s: u32, b: i64) -> Result<Self> {
        if e == 0 {
            return Err(Error::Invalid("exponent step must be positive".into()));
        }
        let bs = (base as u128).checked_pow(s).ok_or_else(|| Error::Invalid("offset width too large".into()))?;
        let low = |v: u128| digits_lsd(v, base).padded(s as usize);
        let (prefix, fill, top) = if b >= 0 {
            if b as u128 >= bs {
                return Err(Error::Invalid(format!("offset {b} does not fit in {s} digits")));
            }
            (low(b as u128), 0, a as u128)
        } else {
            if b.unsigned_abs() as u128 > bs || a == 0 {
                return Err(Error::Invalid(format!("offset {b} needs borrowing beyond {s} digits")));
            }
            (low(bs - b.unsigned_abs() as u128), base - 1, a as u128 - 1)
        };
        let pump = DigitString::from_digits(vec![fill; e as usize], base)?;
        Self::new(prefix, pump, digits_lsd(top, base))
    }

    pub fn base(&self) -> u32 {
        self.prefix.base()
    }

    pub fn word(&self, k: usize) -> DigitString {
        let mut d = self.prefix.digits().to_vec();
        for _ in 0..k {
            d.extend_from_slice(self.pump.digits());
        }
        d.extend_from_slice(self.suffix.digits());
        DigitString::from_digits(d, self.base()).expect("digits below base")
    }

    pub fn value(&self, k: usize) -> u128 {
        self.word(k).value()
    }
}

/// Outputs of a family for all `k`: listed for `k < preperiod`, then
/// repeating with `period`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyVerdict {
    pub preperiod: usize,
    pub period: usize,
    pub initial: Vec<u32>,
    pub cycle: Vec<u32>,
}

impl FamilyVerdict {
    pub fn output(&self, k: usize) -> u32 {
        if k < self.preperiod {
            self.initial[k]
        } else {
            self.cycle[(k - self.preperiod) % self.period]
        }
    }

    /// The common output if it does not depend on `k`.
    pub fn constant(&self) -> Option<u32> {
        let first = self.initial.first().or(self.cycle.first()).copied()?;
        self.initial.iter().chain(&self.cycle).all(|&o| o == first).then_some(first)
    }
}

pub fn family_eval(a: &Dfao, f: &WordFamily) -> Result<FamilyVerdict> {
    family_eval_from(a, a.initial(), f)
}

/// The states after `α·wᵏ` form an eventually periodic sequence; its
/// preperiod and period settle the outputs for every `k`.
pub fn family_eval_from(a: &Dfao, q: usize, f: &WordFamily) -> Result<FamilyVerdict> {
    if f.base() != a.radix() {
        return Err(Error::Invalid(format!("family in base {} for a base-{} machine", f.base(), a.radix())));
    }
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut outs = Vec::new();
    let mut x = a.run_from(q, f.prefix.digits());
    let (mu, lambda) = loop {
        if let Some(&first) = seen.get(&x) {
            break (first, outs.len() - first);
        }
        seen.insert(x, outs.len());
        outs.push(a.out(a.run_from(x, f.suffix.digits())));
        x = a.run_from(x, f.pump.digits());
    };
    let cycle = outs.split_off(mu);
    Ok(FamilyVerdict { preperiod: mu, period: lambda, initial: outs, cycle })
}

/// Outputs reached by reading `head` (LSD-first) after any word, i.e. over
/// every state. A single letter means `a(head·p^k + m)` is that letter for
/// all `k` and `m < p^k`.
pub fn block_outputs(a: &Dfao, head: u64) -> BTreeSet<u32> {
    let w = digits_lsd(head as u128, a.radix());
    uniform_reach(a, &w).into_iter().map(|q| a.out(q)).collect()
}
