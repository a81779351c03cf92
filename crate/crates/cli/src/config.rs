//! Run configuration from a plain `key = value` file.

use std::path::PathBuf;

use anyhow::{bail, Context};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    /// Term budget for oracle synthesis with `p ≤ 3`.
    pub term_budget: usize,
    /// Term budget for `p = 5`; `SEQINV_BUDGET` overrides the default.
    pub term_budget_p5: usize,
    /// Machines are certified against their oracles below this index.
    pub verify_below: u64,
    /// Terms scanned for run lengths.
    pub scan_terms: usize,
    /// Terms compared between independent oracles.
    pub cross_terms: usize,
    /// Precision of the residual and composition checks.
    pub residual_order: usize,
    pub composition_order: usize,
    /// Brute-force range for statements.
    pub brute_below: u64,
    /// Longest word tried by the shortest synchronizing word search.
    pub sync_max_len: usize,
    /// Count ranges: `9^m` for `m ≤ count_c3`, `2^k` multiples for `k ≤ count_u`, `k ≤ count_v`.
    pub count_c3: u32,
    pub count_u: u32,
    pub count_v: u32,
    pub probe_below: u64,
    pub oeis_dir: PathBuf,
    pub out_dir: PathBuf,
    pub csv: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        let p5 = std::env::var(seqinv_core::dfao::BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(4_000_000);
        RunConfig {
            term_budget: 1 << 21,
            term_budget_p5: p5,
            verify_below: 100_000,
            scan_terms: 1_000_000,
            cross_terms: 5000,
            residual_order: 4096,
            composition_order: 2000,
            brute_below: 10_000,
            sync_max_len: 6,
            count_c3: 12,
            count_u: 20,
            count_v: 18,
            probe_below: 100_000,
            oeis_dir: PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/oeis")),
            out_dir: PathBuf::from("out"),
            csv: false,
        }
    }
}

impl RunConfig {
    /// Apply `key = value` lines over the defaults; `#` starts a comment.
    pub fn parse(text: &str) -> anyhow::Result<RunConfig> {
        let mut c = RunConfig::default();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("line {}: expected `key = value`", no + 1);
            };
            let (key, value) = (key.trim(), value.trim());
            let ctx = || format!("line {}: bad value for `{key}`", no + 1);
            match key {
                "term_budget" => c.term_budget = value.parse().with_context(ctx)?,
                "term_budget_p5" => c.term_budget_p5 = value.parse().with_context(ctx)?,
                "verify_below" => c.verify_below = value.parse().with_context(ctx)?,
                "scan_terms" => c.scan_terms = value.parse().with_context(ctx)?,
                "cross_terms" => c.cross_terms = value.parse().with_context(ctx)?,
                "residual_order" => c.residual_order = value.parse().with_context(ctx)?,
                "composition_order" => c.composition_order = value.parse().with_context(ctx)?,
                "brute_below" => c.brute_below = value.parse().with_context(ctx)?,
                "sync_max_len" => c.sync_max_len = value.parse().with_context(ctx)?,
                "count_c3" => c.count_c3 = value.parse().with_context(ctx)?,
                "count_u" => c.count_u = value.parse().with_context(ctx)?,
                "count_v" => c.count_v = value.parse().with_context(ctx)?,
                "probe_below" => c.probe_below = value.parse().with_context(ctx)?,
                "oeis_dir" => c.oeis_dir = PathBuf::from(value),
                "out_dir" => c.out_dir = PathBuf::from(value),
                "csv" => c.csv = value.parse().with_context(ctx)?,
                _ => bail!("line {}: unknown key `{key}`", no + 1),
            }
        }
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        let positive = [
            ("term_budget", self.term_budget as u64),
            ("term_budget_p5", self.term_budget_p5 as u64),
            ("verify_below", self.verify_below),
            ("scan_terms", self.scan_terms as u64),
            ("cross_terms", self.cross_terms as u64),
            ("residual_order", self.residual_order as u64),
            ("composition_order", self.composition_order as u64),
            ("brute_below", self.brute_below),
        ];
        for (name, v) in positive {
            if v == 0 {
                bail!("`{name}` must be positive");
            }
        }
        if self.verify_below > self.term_budget as u64 {
            bail!("`verify_below` exceeds `term_budget`");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_and_comments() {
        let c = RunConfig::parse("# small run\nscan_terms = 1000\ncsv=true  # trailing\n\n").unwrap();
        assert_eq!(c.scan_terms, 1000);
        assert!(c.csv);
        assert_eq!(c.verify_below, RunConfig::default().verify_below);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(RunConfig::parse("scan_terms").is_err());
        assert!(RunConfig::parse("nope = 1").is_err());
        assert!(RunConfig::parse("scan_terms = -1").is_err());
        assert!(RunConfig::parse("scan_terms = 0").is_err());
        assert!(RunConfig::parse("verify_below = 10\nterm_budget = 5").is_err());
    }
}
