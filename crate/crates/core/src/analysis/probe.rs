//! Empirical checks of open claims about `c^(p)`. Everything here is
//! reported, never asserted.

use serde::Serialize;

use super::{is_synchronizing, max_runs, structure_report, ComponentKind, RunStats, StructureReport};
use crate::dfao::{kernel_machine, Dfao, SynthesisOptions};
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::sequences::{c_terms, Method, SequenceId};

/// Offsets `i` with `c_{pn+i}` claimed to vanish: `(p+1)/2 ..= p-2`.
pub fn vanishing_offsets(p: Prime) -> Vec<u64> {
    let p = p.get() as u64;
    if p <= 3 {
        return Vec::new();
    }
    ((p + 1) / 2..=p - 2).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct OffsetProbe {
    pub offsets: Vec<u64>,
    pub checked_below: u64,
    /// First few `(n, i)` with `c_{pn+i} ≠ 0`.
    pub counterexamples: Vec<(u64, u64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunProbe {
    /// `(p+3)/2`.
    pub bound: usize,
    pub runs: RunStats,
    /// Letters `1..p` whose longest run exceeds the bound.
    pub exceeding: Vec<u32>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum MachineProbe {
    Available {
        states: usize,
        construction: String,
        synchronizing: bool,
        level_sizes: Vec<Vec<usize>>,
        matches_template: bool,
    },
    Unavailable { reason: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub p: u32,
    pub vanishing: OffsetProbe,
    pub runs: RunProbe,
    pub machine: MachineProbe,
}

/// Initial state / two `p`-cycles / one further component / absorbing sink.
/// The third level is usually the large component; for small `p` it may be
/// a cycle.
pub fn matches_template(r: &StructureReport, p: usize) -> bool {
    let kinds: Vec<(usize, ComponentKind)> = r.components.iter().map(|c| (c.level, c.kind)).collect();
    let cycle = ComponentKind::Cycle { length: p };
    r.downward
        && kinds.len() == 5
        && kinds[0] == (0, ComponentKind::Initial)
        && kinds[1] == (1, cycle)
        && kinds[2] == (1, cycle)
        && kinds[3].0 == 2
        && matches!(kinds[3].1, ComponentKind::Large | ComponentKind::Cycle { .. })
        && kinds[4] == (3, ComponentKind::AbsorbingSink)
}

/// Check the vanishing offsets for `n < below`, run maxima over the first
/// `run_terms` terms, and, when `machine_opts` is given and a machine is
/// obtained within them, its structure.
pub fn probe_conjectures(
    p: Prime,
    below: u64,
    run_terms: usize,
    machine_opts: Option<&SynthesisOptions>,
) -> Result<ProbeReport> {
    if p.get() <= 3 {
        return Err(Error::Invalid("the probes concern primes above 3".into()));
    }
    let pu = p.get() as u64;
    let need = (run_terms as u64).max(pu * below + pu) as usize;
    let c = c_terms(p, need, Method::Newton)?;
    let offsets = vanishing_offsets(p);
    let mut counterexamples = Vec::new();
    'scan: for n in 0..below {
        for &i in &offsets {
            if c.values[(pu * n + i) as usize] != 0 {
                counterexamples.push((n, i));
                if counterexamples.len() >= 10 {
                    break 'scan;
                }
            }
        }
    }
    let vanishing = OffsetProbe { offsets, checked_below: below, counterexamples };

    let bound = (p.get() as usize + 3) / 2;
    let stats = max_runs(&c.values[..run_terms], p.get());
    let exceeding = (1..p.get()).filter(|&l| stats.letter(l) > bound).collect();
    let runs = RunProbe { bound, runs: stats, exceeding };

    let machine = match machine_opts {
        None => MachineProbe::Unavailable { reason: "machine construction not requested".into() },
        Some(opts) => match kernel_machine(SequenceId::C(p), opts) {
            Ok(cert) => describe(&cert.machine, cert.construction.to_string(), p),
            Err(e) => MachineProbe::Unavailable { reason: e.to_string() },
        },
    };
    Ok(ProbeReport { p: p.get(), vanishing, runs, machine })
}

fn describe(a: &Dfao, construction: String, p: Prime) -> MachineProbe {
    let r = structure_report(a);
    MachineProbe::Available {
        states: a.len(),
        construction,
        synchronizing: is_synchronizing(a).is_synchronizing(),
        level_sizes: r.level_sizes(),
        matches_template: matches_template(&r, p.get() as usize),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offset_ranges() {
        let offs = |p| vanishing_offsets(Prime::new(p).unwrap());
        assert_eq!(offs(5), [3]);
        assert_eq!(offs(7), [4, 5]);
        assert_eq!(offs(11), [6, 7, 8, 9]);
        assert!(offs(3).is_empty());
    }

    #[test]
    fn small_probe_for_five() {
        let r = probe_conjectures(Prime::new(5).unwrap(), 2000, 10_000, None).unwrap();
        assert!(r.vanishing.counterexamples.is_empty());
        assert_eq!(r.runs.bound, 4);
        assert!(r.runs.exceeding.is_empty());
        assert!(matches!(r.machine, MachineProbe::Unavailable { .. }));
        assert!(probe_conjectures(Prime::new(3).unwrap(), 10, 10, None).is_err());
    }
}
