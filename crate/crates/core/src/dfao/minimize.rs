//! Moore partition refinement.

use std::collections::{HashMap, VecDeque};

use super::{Dfao, State};

pub(super) fn minimize(a: &Dfao) -> Dfao {
    let n = a.len();
    let radix = a.radix as usize;
    let mut class = vec![0usize; n];
    let mut count = {
        let mut ids = HashMap::new();
        for q in 0..n {
            let next_id = ids.len();
            class[q] = *ids.entry(a.out(q)).or_insert(next_id);
        }
        ids.len()
    };
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::with_capacity(count * 2);
        let mut refined = vec![0usize; n];
        let mut key = Vec::with_capacity(radix + 1);
        for q in 0..n {
            key.clear();
            key.push(class[q]);
            key.extend(a.states[q].next.iter().map(|&t| class[t]));
            let next_id = ids.len();
            refined[q] = *ids.entry(key.clone()).or_insert(next_id);
        }
        let new_count = ids.len();
        class = refined;
        if new_count == count {
            break;
        }
        count = new_count;
    }

    // renumber classes breadth first from the initial state
    let mut member = vec![usize::MAX; count];
    for q in 0..n {
        if member[class[q]] == usize::MAX {
            member[class[q]] = q;
        }
    }
    let mut order = vec![usize::MAX; count];
    let mut seq = Vec::with_capacity(count);
    let mut queue = VecDeque::new();
    order[class[a.initial]] = 0;
    seq.push(class[a.initial]);
    queue.push_back(class[a.initial]);
    while let Some(c) = queue.pop_front() {
        for &t in &a.states[member[c]].next {
            let tc = class[t];
            if order[tc] == usize::MAX {
                order[tc] = seq.len();
                seq.push(tc);
                queue.push_back(tc);
            }
        }
    }
    let mut states: Vec<State> = seq
        .iter()
        .map(|&c| {
            let m = &a.states[member[c]];
            State { labels: Vec::new(), out: m.out, next: m.next.iter().map(|&t| order[class[t]]).collect() }
        })
        .collect();
    for q in 0..n {
        let id = order[class[q]];
        if id != usize::MAX {
            states[id].labels.extend_from_slice(&a.states[q].labels);
        }
    }
    for s in &mut states {
        s.labels.sort_unstable();
        s.labels.dedup();
    }
    Dfao { radix: a.radix, modulus: a.modulus, initial: 0, states, certified_below: a.certified_below }
}
