//! JSON and Graphviz DOT forms of a machine.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Dfao, KernelLabel, State};
use crate::error::{Error, Result};
use crate::field::Prime;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct MachineJson {
    #[serde(default = "default_version")]
    version: u32,
    /// Input alphabet size.
    p: u32,
    /// Output field; equals `p` unless the alphabet was recoded.
    #[serde(default)]
    field: Option<u32>,
    initial: usize,
    #[serde(default)]
    certified_below: u64,
    states: Vec<StateJson>,
}

fn default_version() -> u32 {
    FORMAT_VERSION
}

#[derive(Serialize, Deserialize)]
struct StateJson {
    id: usize,
    k: u32,
    l: u64,
    out: u32,
    next: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    labels: Vec<KernelLabel>,
}

impl Dfao {
    pub fn to_json(&self) -> String {
        let states = self
            .states
            .iter()
            .enumerate()
            .map(|(id, s)| {
                let (k, l) = s.representative();
                StateJson { id, k, l, out: s.out, next: s.next.clone(), labels: s.labels.clone() }
            })
            .collect();
        let m = MachineJson {
            version: FORMAT_VERSION,
            p: self.radix,
            field: Some(self.modulus.get()),
            initial: self.initial,
            certified_below: self.certified_below,
            states,
        };
        serde_json::to_string_pretty(&m).expect("machine serializes")
    }

    pub fn from_json(text: &str) -> Result<Dfao> {
        let m: MachineJson = serde_json::from_str(text)
            .map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
        if m.version != FORMAT_VERSION {
            return Err(Error::InvalidMachine(format!("unsupported format version {}", m.version)));
        }
        let modulus = Prime::new(m.field.unwrap_or(m.p) as u64)?;
        let mut states = Vec::with_capacity(m.states.len());
        for (i, s) in m.states.into_iter().enumerate() {
            if s.id != i {
                return Err(Error::InvalidMachine(format!("state ids must be 0..n in order, found {} at {i}", s.id)));
            }
            let mut labels = if s.labels.is_empty() { vec![(s.k, s.l)] } else { s.labels };
            labels.sort_unstable();
            labels.dedup();
            states.push(State { labels, out: s.out, next: s.next });
        }
        Dfao::from_states(m.p, modulus, m.initial, states, m.certified_below)
    }

    /// One node per state labelled `(k,l)/out`; parallel edges share one
    /// arrow whose label lists the digits.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph dfao {\n  rankdir=LR;\n");
        let _ = writeln!(
            s,
            "  graph [radix={}, field={}, certified_below={}];",
            self.radix,
            self.modulus.get(),
            self.certified_below
        );
        let _ = writeln!(s, "  start [shape=point];\n  start -> q{};", self.initial);
        for (i, st) in self.states.iter().enumerate() {
            let (k, l) = st.representative();
            let _ = writeln!(s, "  q{i} [label=\"({k},{l})/{}\"];", st.out);
        }
        for (i, st) in self.states.iter().enumerate() {
            let mut groups: BTreeMap<usize, Vec<String>> = BTreeMap::new();
            for (d, &t) in st.next.iter().enumerate() {
                groups.entry(t).or_default().push(d.to_string());
            }
            let mut edges: Vec<(usize, Vec<String>)> = groups.into_iter().collect();
            edges.sort_by_key(|(_, ds)| ds[0].parse::<u32>().unwrap_or(0));
            for (t, ds) in edges {
                let _ = writeln!(s, "  q{i} -> q{t} [label=\"{}\"];", ds.join(","));
            }
        }
        s.push_str("}\n");
        s
    }

    /// Parse the output of [`Dfao::to_dot`]. Only representatives survive
    /// the round trip, not whole label sets.
    pub fn from_dot(text: &str) -> Result<Dfao> {
        let err = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
        let mut radix = None;
        let mut field = None;
        let mut certified = 0u64;
        let mut initial = None;
        let mut nodes: BTreeMap<usize, (KernelLabel, u32)> = BTreeMap::new();
        let mut edges: Vec<(usize, usize, Vec<u32>)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line_no = no + 1;
            let line = raw.trim().trim_end_matches(';').trim();
            if line.is_empty() || line.starts_with("digraph") || line == "}" || line.starts_with("rankdir") {
                continue;
            }
            if let Some(attrs) = line.strip_prefix("graph [").and_then(|r| r.strip_suffix(']')) {
                for kv in attrs.split(',') {
                    let (k, v) = kv.split_once('=').ok_or_else(|| err(line_no, "bad graph attribute"))?;
                    let v: u64 = v.trim().parse().map_err(|_| err(line_no, "bad graph attribute value"))?;
                    match k.trim() {
                        "radix" => radix = Some(v as u32),
                        "field" => field = Some(v),
                        "certified_below" => certified = v,
                        _ => {}
                    }
                }
                continue;
            }
            if line.starts_with("start [") {
                continue;
            }
            if let Some(rest) = line.strip_prefix("start -> q") {
                initial = Some(rest.trim().parse::<usize>().map_err(|_| err(line_no, "bad initial edge"))?);
                continue;
            }
            let (head, label) = match line.split_once("[label=\"") {
                Some((h, l)) => (h.trim(), l.trim_end_matches(']').trim_end_matches('"')),
                None => return Err(err(line_no, "unrecognized line")),
            };
            let node_id = |t: &str| -> Result<usize> {
                t.trim().strip_prefix('q').and_then(|n| n.parse().ok()).ok_or_else(|| err(line_no, "bad node name"))
            };
            if let Some((a, b)) = head.split_once("->") {
                let digits = label
                    .split(',')
                    .map(|d| d.trim().parse::<u32>().map_err(|_| err(line_no, "bad edge digit")))
                    .collect::<Result<Vec<_>>>()?;
                edges.push((node_id(a)?, node_id(b)?, digits));
            } else {
                let (kl, out) = label.rsplit_once('/').ok_or_else(|| err(line_no, "node label must be (k,l)/out"))?;
                let kl = kl.trim_start_matches('(').trim_end_matches(')');
                let (k, l) = kl.split_once(',').ok_or_else(|| err(line_no, "node label must be (k,l)/out"))?;
                let k = k.trim().parse().map_err(|_| err(line_no, "bad k"))?;
                let l = l.trim().parse().map_err(|_| err(line_no, "bad l"))?;
                let out = out.trim().parse().map_err(|_| err(line_no, "bad output"))?;
                nodes.insert(node_id(head)?, ((k, l), out));
            }
        }
        let radix = radix.ok_or_else(|| err(0, "missing radix attribute"))?;
        let modulus = Prime::new(field.unwrap_or(radix as u64))?;
        let n = nodes.len();
        if nodes.keys().copied().ne(0..n) {
            return Err(err(0, "nodes must be q0..q(n-1)"));
        }
        let mut next = vec![vec![usize::MAX; radix as usize]; n];
        for (a, b, ds) in edges {
            for d in ds {
                let slot = next
                    .get_mut(a)
                    .and_then(|row| row.get_mut(d as usize))
                    .ok_or_else(|| err(0, "edge out of range"))?;
                *slot = b;
            }
        }
        if next.iter().flatten().any(|&t| t == usize::MAX) {
            return Err(err(0, "transition function is not total"));
        }
        let states = nodes
            .into_values()
            .zip(next)
            .map(|((label, out), next)| State { labels: vec![label], out, next })
            .collect();
        Dfao::from_states(radix, modulus, initial.ok_or_else(|| err(0, "missing start edge"))?, states, certified)
    }
}
