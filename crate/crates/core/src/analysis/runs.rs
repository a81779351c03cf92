//! Longest runs of equal and of nonzero terms.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Run {
    pub length: usize,
    /// Start of the first run of this length, if any run exists.
    pub first_at: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunStats {
    pub scanned: usize,
    /// Indexed by letter.
    pub letters: Vec<Run>,
    pub nonzero: Run,
}

impl RunStats {
    pub fn letter(&self, c: u32) -> usize {
        self.letters.get(c as usize).map_or(0, |r| r.length)
    }
}

fn longest(values: &[u32], pred: impl Fn(u32) -> bool) -> Run {
    let mut best = Run { length: 0, first_at: None };
    let mut start = 0;
    let mut len = 0;
    for (i, &v) in values.iter().enumerate() {
        if pred(v) {
            if len == 0 {
                start = i;
            }
            len += 1;
            if len > best.length {
                best = Run { length: len, first_at: Some(start) };
            }
        } else {
            len = 0;
        }
    }
    best
}

/// Run maxima over `values` for every letter below `modulus`.
pub fn max_runs(values: &[u32], modulus: u32) -> RunStats {
    RunStats {
        scanned: values.len(),
        letters: (0..modulus).map(|c| longest(values, |v| v == c)).collect(),
        nonzero: longest(values, |v| v != 0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_example() {
        let r = max_runs(&[1, 1, 0, 2, 2, 2, 1, 0, 0], 3);
        assert_eq!(r.letters[0], Run { length: 2, first_at: Some(7) });
        assert_eq!(r.letters[1], Run { length: 2, first_at: Some(0) });
        assert_eq!(r.letter(2), 3);
        assert_eq!(r.nonzero, Run { length: 4, first_at: Some(3) });
    }

    #[test]
    fn constant_zero_block() {
        let r = max_runs(&[0; 100], 2);
        assert_eq!(r.letter(0), 100);
        assert_eq!(r.letter(1), 0);
        assert_eq!(r.nonzero.length, 0);
        assert_eq!(r.nonzero.first_at, None);
    }
}
