//! Maximum cardinality matching (Edmonds' blossom algorithm).

use std::collections::VecDeque;

use super::{bits, Graph};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchingStatus {
    Perfect,
    NearPerfect,
    Neither,
}

/// Mate of each vertex in some maximum matching.
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let mut blossom = Blossom::new(g);
    for v in 0..g.n() {
        if blossom.mate[v] == NONE {
            let mut end = blossom.find_augmenting(v);
            while end != NONE {
                let pv = blossom.parent[end];
                let next = blossom.mate[pv];
                blossom.mate[end] = pv;
                blossom.mate[pv] = end;
                end = next;
            }
        }
    }
    blossom
        .mate
        .into_iter()
        .map(|m| (m != NONE).then_some(m))
        .collect()
}

pub fn matching_status(g: &Graph) -> MatchingStatus {
    let matched = maximum_matching(g).iter().filter(|m| m.is_some()).count();
    let n = g.n();
    if matched == n {
        MatchingStatus::Perfect
    } else if matched + 1 == n {
        MatchingStatus::NearPerfect
    } else {
        MatchingStatus::Neither
    }
}

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting(&mut self, root: usize) -> usize {
        let n = self.g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for to in bits(self.g.neighbors(v)) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    queue.push_back(m);
                }
            }
        }
        NONE
    }
}
