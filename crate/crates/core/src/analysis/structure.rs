//! Strongly connected structure of the transition graph.

use std::collections::VecDeque;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;

use crate::dfao::Dfao;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ComponentKind {
    /// Contains the initial state.
    Initial,
    /// One state mapped to itself by every digit.
    AbsorbingSink,
    /// States on one directed cycle; every state has a single successor
    /// inside the component.
    Cycle { length: usize },
    /// The unique largest component.
    Large,
    Other,
}

#[derive(Debug, Clone, Serialize)]
pub struct Component {
    pub states: Vec<usize>,
    pub kind: ComponentKind,
    /// Longest path from the initial component in the condensation.
    pub level: usize,
    /// Output letters of the states, when they all agree.
    pub uniform_output: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    /// In increasing order of level, then of least state.
    pub components: Vec<Component>,
    /// Condensation edges between component indices.
    pub edges: Vec<(usize, usize)>,
    /// Every edge of the condensation goes to a strictly higher level.
    pub downward: bool,
}

impl StructureReport {
    /// Sizes grouped by level, e.g. `[[1], [5, 5], [2224], [1]]`.
    pub fn level_sizes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for c in &self.components {
            if out.len() <= c.level {
                out.resize(c.level + 1, Vec::new());
            }
            out[c.level].push(c.states.len());
        }
        out
    }

    pub fn sinks(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| c.kind == ComponentKind::AbsorbingSink)
    }
}

pub fn structure_report(a: &Dfao) -> StructureReport {
    let n = a.len();
    let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, n * a.radix() as usize);
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for q in 0..n {
        for d in 0..a.radix() {
            g.update_edge(nodes[q], nodes[a.next(q, d)], ());
        }
    }
    let mut sccs: Vec<Vec<usize>> =
        tarjan_scc(&g).into_iter().map(|c| {
            let mut v: Vec<usize> = c.into_iter().map(|x| x.index()).collect();
            v.sort_unstable();
            v
        }).collect();
    sccs.sort_by_key(|c| c[0]);
    let mut comp_of = vec![0usize; n];
    for (i, c) in sccs.iter().enumerate() {
        for &q in c {
            comp_of[q] = i;
        }
    }
    let m = sccs.len();
    let mut edges = Vec::new();
    let mut out_edges = vec![Vec::new(); m];
    for q in 0..n {
        for d in 0..a.radix() {
            let (x, y) = (comp_of[q], comp_of[a.next(q, d)]);
            if x != y && !out_edges[x].contains(&y) {
                out_edges[x].push(y);
                edges.push((x, y));
            }
        }
    }
    edges.sort_unstable();

    // longest-path levels over a topological order from the initial component
    let mut indeg = vec![0usize; m];
    for &(_, y) in &edges {
        indeg[y] += 1;
    }
    let mut level = vec![0usize; m];
    let mut queue: VecDeque<usize> = (0..m).filter(|&c| indeg[c] == 0).collect();
    while let Some(c) = queue.pop_front() {
        for &y in &out_edges[c] {
            level[y] = level[y].max(level[c] + 1);
            indeg[y] -= 1;
            if indeg[y] == 0 {
                queue.push_back(y);
            }
        }
    }
    let downward = edges.iter().all(|&(x, y)| level[x] < level[y]);

    let largest = {
        let max = sccs.iter().map(Vec::len).max().unwrap_or(0);
        let count = sccs.iter().filter(|c| c.len() == max).count();
        (count == 1 && max > 1).then_some(max)
    };
    let initial = comp_of[a.initial()];
    let mut components: Vec<Component> = sccs
        .into_iter()
        .enumerate()
        .map(|(i, states)| {
            let inside = |q: usize| comp_of[q] == i;
            let kind = if states.len() == 1 && (0..a.radix()).all(|d| a.next(states[0], d) == states[0]) {
                ComponentKind::AbsorbingSink
            } else if i == initial {
                ComponentKind::Initial
            } else if Some(states.len()) == largest {
                ComponentKind::Large
            } else if states.len() > 1
                && states.iter().all(|&q| {
                    let mut succ: Vec<usize> = (0..a.radix()).map(|d| a.next(q, d)).filter(|&t| inside(t)).collect();
                    succ.sort_unstable();
                    succ.dedup();
                    succ.len() == 1
                })
            {
                ComponentKind::Cycle { length: states.len() }
            } else {
                ComponentKind::Other
            };
            let first = a.out(states[0]);
            let uniform_output = states.iter().all(|&q| a.out(q) == first).then_some(first);
            Component { states, kind, level: level[i], uniform_output }
        })
        .collect();
    // renumber components by (level, least state) and remap edges
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| (components[i].level, components[i].states[0]));
    let mut rank = vec![0usize; m];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(x, y)| (rank[x], rank[y])).collect();
    edges.sort_unstable();
    let mut sorted = Vec::with_capacity(m);
    for &i in &order {
        sorted.push(std::mem::replace(
            &mut components[i],
            Component { states: Vec::new(), kind: ComponentKind::Other, level: 0, uniform_output: None },
        ));
    }
    StructureReport { components: sorted, edges, downward }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    /// `side[q]` is 0 or 1; every transition changes side.
    pub side: Vec<u8>,
    pub sizes: [usize; 2],
    /// Size of the side holding the initial state.
    pub initial_side: usize,
}

/// A 2-colouring of all states such that every transition crosses sides.
pub fn transition_bipartite(a: &Dfao) -> Option<Bipartition> {
    let n = a.len();
    let mut adj = vec![Vec::new(); n];
    for q in 0..n {
        for d in 0..a.radix() {
            let t = a.next(q, d);
            adj[q].push(t);
            adj[t].push(q);
        }
    }
    let mut side = vec![u8::MAX; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(q) = queue.pop_front() {
            for &t in &adj[q] {
                if side[t] == u8::MAX {
                    side[t] = 1 - side[q];
                    queue.push_back(t);
                } else if side[t] == side[q] {
                    return None;
                }
            }
        }
    }
    // put the initial state on side 0
    if side[a.initial()] == 1 {
        for s in &mut side {
            *s = 1 - *s;
        }
    }
    let ones = side.iter().filter(|&&s| s == 1).count();
    let sizes = [n - ones, ones];
    Some(Bipartition { side, sizes, initial_side: sizes[0] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Prime;

    fn machine(outs: Vec<u32>, next: Vec<Vec<usize>>) -> Dfao {
        Dfao::from_table(2, Prime::new(2).unwrap(), 0, outs, next).unwrap()
    }

    #[test]
    fn levels_of_a_chain() {
        // 0 -> {1,2} cycle -> 3 sink
        let a = machine(vec![0, 1, 1, 0], vec![vec![1, 1], vec![2, 3], vec![1, 3], vec![3, 3]]);
        let r = structure_report(&a);
        assert_eq!(r.level_sizes(), vec![vec![1], vec![2], vec![1]]);
        assert_eq!(r.components[0].kind, ComponentKind::Initial);
        assert_eq!(r.components[1].kind, ComponentKind::Large);
        assert_eq!(r.components[2].kind, ComponentKind::AbsorbingSink);
        assert_eq!(r.components[2].uniform_output, Some(0));
        assert!(r.downward);
    }

    #[test]
    fn two_cycles_are_recognized() {
        let a = machine(
            vec![0, 1, 1, 0, 0, 0],
            vec![vec![1, 3], vec![2, 2], vec![1, 5], vec![4, 4], vec![3, 5], vec![5, 5]],
        );
        let r = structure_report(&a);
        let kinds: Vec<_> = r.components.iter().map(|c| c.kind).collect();
        assert_eq!(
            kinds,
            [ComponentKind::Initial, ComponentKind::Cycle { length: 2 }, ComponentKind::Cycle { length: 2 }, ComponentKind::AbsorbingSink]
        );
    }

    #[test]
    fn single_state_is_a_sink() {
        let a = machine(vec![1], vec![vec![0, 0]]);
        let r = structure_report(&a);
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.components[0].kind, ComponentKind::AbsorbingSink);
    }

    #[test]
    fn bipartite_checks() {
        let swap = machine(vec![0, 1], vec![vec![1, 1], vec![0, 0]]);
        let b = transition_bipartite(&swap).unwrap();
        assert_eq!(b.sizes, [1, 1]);
        let looped = machine(vec![0, 1], vec![vec![0, 1], vec![1, 0]]);
        assert!(transition_bipartite(&looped).is_none());
    }
}
