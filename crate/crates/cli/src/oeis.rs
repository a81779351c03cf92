//! OEIS b-files: `index value` per line, `#` comments.

use std::path::Path;

use anyhow::{bail, Context};
use seqinv_core::sequences::TermBlock;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub source: String,
    /// `(index, value)` with consecutive indices.
    pub entries: Vec<(u64, i64)>,
}

pub fn parse_bfile(text: &str, source: &str) -> anyhow::Result<BFile> {
    let mut entries: Vec<(u64, i64)> = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(i), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            bail!("{source}:{}: expected `index value`, got `{line}`", no + 1);
        };
        let i: u64 = i.parse().with_context(|| format!("{source}:{}: bad index `{i}`", no + 1))?;
        let v: i64 = v.parse().with_context(|| format!("{source}:{}: bad value `{v}`", no + 1))?;
        if let Some(&(last, _)) = entries.last() {
            if i != last + 1 {
                bail!("{source}:{}: gap or disorder, index {i} follows {last}", no + 1);
            }
        }
        entries.push((i, v));
    }
    Ok(BFile { source: source.to_string(), entries })
}

pub fn read_bfile(path: &Path) -> anyhow::Result<BFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_bfile(&text, &path.display().to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: u64,
    pub expected: i64,
    pub found: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OeisComparison {
    pub source: String,
    /// Leading entries that agree.
    pub agreed: usize,
    pub entries: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl OeisComparison {
    pub fn full_agreement(&self) -> bool {
        self.first_mismatch.is_none() && self.entries > 0
    }
}

/// Compare every b-file entry with the term of the same index; indices past
/// the end of the block count as mismatches.
pub fn compare_oeis(b: &BFile, t: &TermBlock) -> OeisComparison {
    let mut agreed = 0;
    let mut first_mismatch = None;
    for &(i, v) in &b.entries {
        let found = usize::try_from(i).ok().and_then(|i| t.values.get(i)).copied();
        if found.map(i64::from) == Some(v) {
            agreed += 1;
        } else {
            first_mismatch = Some(Mismatch { index: i, expected: v, found });
            break;
        }
    }
    OeisComparison { source: b.source.clone(), agreed, entries: b.entries.len(), first_mismatch }
}

#[cfg(test)]
mod tests {
    use super::*;
    use seqinv_core::field::Prime;
    use seqinv_core::sequences::{thue_terms, Method, SequenceId};

    #[test]
    fn parses_plain_and_commented_files() {
        let b = parse_bfile("0 0\n1 1\n2 1", "t").unwrap();
        assert_eq!(b.entries, [(0, 0), (1, 1), (2, 1)]);
        let b = parse_bfile("# A000000\n#\n\n5 -3\n6 4\n", "t").unwrap();
        assert_eq!(b.entries, [(5, -3), (6, 4)]);
    }

    #[test]
    fn rejects_gaps_and_junk() {
        let err = parse_bfile("0 0\n2 1", "t").unwrap_err().to_string();
        assert!(err.contains(":2:"), "{err}");
        assert!(parse_bfile("0 0 0", "t").is_err());
        assert!(parse_bfile("x 1", "t").is_err());
    }

    #[test]
    fn comparison_reports_first_mismatch() {
        let t = thue_terms(Prime::new(3).unwrap(), 30);
        let text: String = t.values.iter().enumerate().map(|(i, v)| format!("{i} {v}\n")).collect();
        let b = parse_bfile(&text, "t3").unwrap();
        assert!(compare_oeis(&b, &t).full_agreement());
        let mut shifted = t.clone();
        shifted.values.remove(0);
        let c = compare_oeis(&b, &shifted);
        assert_eq!(c.agreed, 0);
        assert_eq!(c.first_mismatch.unwrap().index, 0);
        let short = TermBlock { id: SequenceId::Thue(Prime::new(3).unwrap()), method: Method::DigitDefinition, values: t.values[..10].to_vec() };
        assert_eq!(compare_oeis(&b, &short).agreed, 10);
    }
}
