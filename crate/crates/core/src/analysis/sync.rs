//! Synchronizing words.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::dfao::Dfao;
use crate::field::DigitString;

/// `{ δ*(q, w) : q ∈ Q }` over all states, reachable or not.
pub fn uniform_reach(a: &Dfao, w: &DigitString) -> BTreeSet<usize> {
    (0..a.len()).map(|q| a.run_from(q, w.digits())).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SyncCertificate {
    /// Some word, not necessarily shortest, sending every state to `target`.
    Synchronizing { word: String, target: usize },
    /// Two states that no word sends to the same state.
    NonMergeable { left: usize, right: usize },
}

impl SyncCertificate {
    pub fn is_synchronizing(&self) -> bool {
        matches!(self, SyncCertificate::Synchronizing { .. })
    }
}

/// Index of the unordered pair `{i, j}`, `i < j`, in a triangular array.
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// For every pair of states, the first digit of a shortest word merging it,
/// or `None` when no word merges it. Computed by backward search from the
/// diagonal over the pair graph.
struct PairMerge {
    step: Vec<Option<u32>>,
}

impl PairMerge {
    fn new(a: &Dfao) -> Self {
        let n = a.len();
        let pairs = n * n.saturating_sub(1) / 2;
        let radix = a.radix() as usize;
        let succ = |i: usize, j: usize, d: u32| -> Option<usize> {
            let (x, y) = (a.next(i, d), a.next(j, d));
            match x.cmp(&y) {
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Less => Some(pair_index(x, y)),
                std::cmp::Ordering::Greater => Some(pair_index(y, x)),
            }
        };
        // predecessor lists in compressed form
        let mut start = vec![0u32; pairs + 1];
        let mut step: Vec<Option<u32>> = vec![None; pairs];
        let mut queue = VecDeque::new();
        for j in 1..n {
            for i in 0..j {
                for d in 0..radix as u32 {
                    match succ(i, j, d) {
                        Some(t) => start[t + 1] += 1,
                        None => {
                            let me = pair_index(i, j);
                            if step[me].is_none() {
                                step[me] = Some(d);
                                queue.push_back(me);
                            }
                        }
                    }
                }
            }
        }
        for t in 0..pairs {
            start[t + 1] += start[t];
        }
        let mut fill = start.clone();
        let mut preds = vec![(0u32, 0u8); start[pairs] as usize];
        for j in 1..n {
            for i in 0..j {
                for d in 0..radix as u32 {
                    if let Some(t) = succ(i, j, d) {
                        preds[fill[t] as usize] = (pair_index(i, j) as u32, d as u8);
                        fill[t] += 1;
                    }
                }
            }
        }
        while let Some(t) = queue.pop_front() {
            for &(s, d) in &preds[start[t] as usize..start[t + 1] as usize] {
                let s = s as usize;
                if step[s].is_none() {
                    step[s] = Some(d as u32);
                    queue.push_back(s);
                }
            }
        }
        PairMerge { step }
    }

    fn word(&self, a: &Dfao, mut i: usize, mut j: usize) -> Option<Vec<u32>> {
        let mut w = Vec::new();
        while i != j {
            let (lo, hi) = (i.min(j), i.max(j));
            let d = self.step[pair_index(lo, hi)]?;
            w.push(d);
            i = a.next(i, d);
            j = a.next(j, d);
        }
        Some(w)
    }
}

/// Exact test by pair merging. A synchronizing machine comes with a word
/// built by repeatedly merging two states of the current image.
pub fn is_synchronizing(a: &Dfao) -> SyncCertificate {
    let n = a.len();
    if n <= 1 {
        return SyncCertificate::Synchronizing { word: String::new(), target: a.initial() };
    }
    let pm = PairMerge::new(a);
    for j in 1..n {
        for i in 0..j {
            if pm.step[pair_index(i, j)].is_none() {
                return SyncCertificate::NonMergeable { left: i, right: j };
            }
        }
    }
    let mut image: Vec<usize> = (0..n).collect();
    let mut word = Vec::new();
    while image.len() > 1 {
        let w = pm.word(a, image[0], image[1]).expect("all pairs merge");
        image = image.iter().map(|&q| a.run_from(q, &w)).collect::<BTreeSet<_>>().into_iter().collect();
        word.extend(w);
    }
    let word = DigitString::from_digits(word, a.radix()).expect("digits below radix");
    SyncCertificate::Synchronizing { word: word.to_string(), target: image[0] }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShortestSync {
    /// Length of the words, or `None` if there is none up to the bound.
    pub length: Option<usize>,
    pub words: Vec<String>,
    /// The state each word synchronizes to, in the order of `words`.
    pub targets: Vec<usize>,
}

/// All synchronizing words of the least length `≤ max_len`, by exhaustive
/// search in lexicographic order.
pub fn shortest_sync_words(a: &Dfao, max_len: usize) -> ShortestSync {
    let all: Vec<usize> = (0..a.len()).collect();
    for len in 0..=max_len {
        let mut words = Vec::new();
        let mut targets = Vec::new();
        let mut prefix = Vec::with_capacity(len);
        search(a, &all, len, &mut prefix, &mut words, &mut targets);
        if !words.is_empty() {
            return ShortestSync { length: Some(len), words, targets };
        }
    }
    ShortestSync { length: None, words: Vec::new(), targets: Vec::new() }
}

fn search(a: &Dfao, image: &[usize], left: usize, prefix: &mut Vec<u32>, words: &mut Vec<String>, targets: &mut Vec<usize>) {
    if left == 0 {
        if image.len() == 1 {
            let w = DigitString::from_digits(prefix.clone(), a.radix()).expect("digits below radix");
            words.push(w.to_string());
            targets.push(image[0]);
        }
        return;
    }
    for d in 0..a.radix() {
        let mut next: Vec<usize> = image.iter().map(|&q| a.next(q, d)).collect();
        next.sort_unstable();
        next.dedup();
        prefix.push(d);
        search(a, &next, left - 1, prefix, words, targets);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Prime;

    fn machine(radix: u32, outs: Vec<u32>, next: Vec<Vec<usize>>) -> Dfao {
        Dfao::from_table(radix, Prime::new(radix as u64).unwrap(), 0, outs, next).unwrap()
    }

    /// Černý's automaton on 4 states: digit 0 rotates, digit 1 merges 3 into 0.
    fn cerny4() -> Dfao {
        machine(2, vec![0, 1, 1, 1], vec![vec![1, 0], vec![2, 1], vec![3, 2], vec![0, 0]])
    }

    #[test]
    fn cerny_bound_is_attained() {
        let a = cerny4();
        let cert = is_synchronizing(&a);
        let SyncCertificate::Synchronizing { word, target } = cert else { panic!("should synchronize") };
        let w = DigitString::parse_word(&word, 2).unwrap();
        assert_eq!(uniform_reach(&a, &w), BTreeSet::from([target]));
        let s = shortest_sync_words(&a, 10);
        assert_eq!(s.length, Some(9));
        assert_eq!(s.words.len(), 1);
    }

    #[test]
    fn permutation_machine_never_merges() {
        let a = machine(2, vec![0, 1], vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(is_synchronizing(&a), SyncCertificate::NonMergeable { left: 0, right: 1 });
        assert_eq!(shortest_sync_words(&a, 6).length, None);
    }

    #[test]
    fn trivial_cases() {
        let one = machine(2, vec![0], vec![vec![0, 0]]);
        assert_eq!(is_synchronizing(&one), SyncCertificate::Synchronizing { word: String::new(), target: 0 });
        let a = cerny4();
        let empty = DigitString::from_digits(vec![], 2).unwrap();
        assert_eq!(uniform_reach(&a, &empty).len(), a.len());
    }

    #[test]
    fn reach_is_singleton_exactly_for_found_words() {
        let a = cerny4();
        let s = shortest_sync_words(&a, 9);
        for bits in 0..(1u32 << 9) {
            let w = DigitString::from_digits((0..9).map(|i| (bits >> i) & 1).collect(), 2).unwrap();
            let single = uniform_reach(&a, &w).len() == 1;
            assert_eq!(single, s.words.contains(&w.to_string()));
        }
    }
}
