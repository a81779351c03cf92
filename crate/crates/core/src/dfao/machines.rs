//! Certified automata for the named sequences.

use std::fmt;

use serde::Serialize;

use super::{kernel_from_equation, synthesize, Dfao, SynthesisOptions};
use crate::error::{Error, Result};
use crate::sequences::{terms, SequenceId};
use crate::series::catalog::Equation;
use crate::series::newton_root;

/// How a machine was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Construction {
    /// Kernel closure over oracle terms.
    Oracle,
    /// Closure over the defining equation, taken after the oracle closure
    /// failed for the recorded reason.
    Equation { oracle_error: String },
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Oracle => f.write_str("oracle kernel closure"),
            Construction::Equation { oracle_error } => {
                write!(f, "equation closure (oracle closure failed: {oracle_error})")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct Certified {
    pub id: SequenceId,
    pub machine: Dfao,
    pub construction: Construction,
}

/// Automaton of `s^(p)` or `c^(p)` from `Y^(p+1) - Y^2 - Y + X = 0`,
/// uncertified.
pub fn equation_machine(id: SequenceId, max_states: usize) -> Result<Dfao> {
    let (p, numer) = match id {
        SequenceId::S(p) => (p, vec![vec![], vec![0, 1]]),
        // C = (X - S) / X
        SequenceId::C(p) => (p, vec![vec![0, 1], vec![-1]]),
        other => return Err(Error::UnknownSequence(format!("no equation closure for {other}"))),
    };
    let eq = Equation::Shifted(p);
    let root = newton_root(&eq.poly(), &eq.seed(), 256)?;
    kernel_from_equation(&eq.poly(), &root, &numer, max_states)
}

/// Synthesize the machine of `id` from its oracle. For `s^(p)` and `c^(p)`,
/// an oracle closure that runs out of terms or states falls back to the
/// equation closure; either way the result is certified against the oracle
/// below `opts.verify_below`.
pub fn kernel_machine(id: SequenceId, opts: &SynthesisOptions) -> Result<Certified> {
    let oracle = terms(id, opts.term_budget)?;
    let p = id.modulus();
    match synthesize(&oracle.values, p, opts) {
        Ok(machine) => Ok(Certified { id, machine, construction: Construction::Oracle }),
        Err(e @ (Error::InsufficientTerms { .. } | Error::NotAutomatic(_)))
            if matches!(id, SequenceId::S(_) | SequenceId::C(_)) =>
        {
            let mut machine = equation_machine(id, opts.max_states.max(200_000))?;
            machine.certify(&oracle.values, opts.verify_below)?;
            Ok(Certified { id, machine, construction: Construction::Equation { oracle_error: e.to_string() } })
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Prime;

    #[test]
    fn both_closures_agree_for_small_primes() {
        for p in [2u64, 3] {
            let p = Prime::new(p).unwrap();
            let id = SequenceId::C(p);
            let opts = SynthesisOptions::for_prime(p).with_budget(1 << 18);
            let oracle = kernel_machine(id, &opts).unwrap();
            assert_eq!(oracle.construction, Construction::Oracle);
            let eq = equation_machine(id, 10_000).unwrap();
            assert_eq!(eq.len(), oracle.machine.len());
            for (a, b) in eq.states().iter().zip(oracle.machine.states()) {
                assert_eq!((a.out, &a.next), (b.out, &b.next));
            }
        }
    }

    #[test]
    fn falls_back_when_terms_run_out() {
        let p = Prime::new(3).unwrap();
        let mut opts = SynthesisOptions::for_prime(p).with_budget(4096);
        opts.verify_below = 4096;
        let got = kernel_machine(SequenceId::C(p), &opts).unwrap();
        assert!(matches!(got.construction, Construction::Equation { .. }));
        assert_eq!(got.machine.len(), 28);
        assert!(kernel_machine(SequenceId::U, &opts).is_err());
    }
}
