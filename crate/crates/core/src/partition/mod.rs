//! Generic exact RP and AP deciders for small graphs.

mod ap;
mod rp;

use crate::graph::{bits, Graph};

pub use ap::{is_ap, ApSolver, ApVerdict};
pub use rp::{first_failing_size, is_rp, RpSolver, RpVerdict, SplitDiagnosis};

/// Order limits for the exponential solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverBudget {
    pub rp_max_n: usize,
    pub ap_max_n: usize,
    pub memo_cap: usize,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            rp_max_n: 13,
            ap_max_n: 11,
            memo_cap: 1 << 24,
        }
    }
}

impl SolverBudget {
    /// Same cap for both solvers.
    pub fn with_max_n(n: usize) -> Self {
        SolverBudget {
            rp_max_n: n,
            ap_max_n: n,
            ..Self::default()
        }
    }
}

/// Non-decreasing positive parts summing to `total`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return None;
        }
        parts.sort_unstable();
        Some(IntegerPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> usize {
        *self.parts.last().expect("nonempty")
    }
}

impl std::fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Partitions of `n` by number of parts, then lexicographically.
pub struct Partitions {
    n: usize,
    max_parts: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = IntegerPartition;

    fn next(&mut self) -> Option<IntegerPartition> {
        let cur = self.current.take()?;
        let out = IntegerPartition { parts: cur.clone() };
        self.current = lex_successor(self.n, &cur).or_else(|| {
            let k = cur.len() + 1;
            (k <= self.max_parts.min(self.n)).then(|| {
                let mut first = vec![1; k];
                first[k - 1] = self.n - (k - 1);
                first
            })
        });
        Some(out)
    }
}

/// Next non-decreasing sequence of the same length and sum.
fn lex_successor(n: usize, cur: &[usize]) -> Option<Vec<usize>> {
    let k = cur.len();
    let mut prefix_sum: usize = cur.iter().sum::<usize>() - cur[k - 1];
    for i in (0..k.saturating_sub(1)).rev() {
        prefix_sum -= cur[i];
        let v = cur[i] + 1;
        let slots = k - i - 1;
        let rest = n - prefix_sum - v;
        if rest >= slots * v {
            let mut next = cur[..i].to_vec();
            next.extend(std::iter::repeat_n(v, slots));
            next.push(rest - (slots - 1) * v);
            return Some(next);
        }
    }
    None
}

/// Every integer partition of `n` exactly once, optionally capped in length.
pub fn enumerate_integer_partitions(n: usize, max_parts: Option<usize>) -> Partitions {
    Partitions {
        n,
        max_parts: max_parts.unwrap_or(n),
        current: (n >= 1 && max_parts != Some(0)).then(|| vec![n]),
    }
}

/// Connected vertex subsets of `within` with exactly `size` vertices.
///
/// Each subset is grown from its minimum vertex by adding neighbours; a
/// candidate that is skipped is banned for the rest of that branch, so each
/// subset is produced once.
pub(crate) fn connected_subsets(g: &Graph, within: u64, size: usize) -> Vec<u64> {
    fn grow(
        g: &Graph,
        allowed: u64,
        set: u64,
        ext: u64,
        banned: u64,
        size: usize,
        out: &mut Vec<u64>,
    ) {
        if set.count_ones() as usize == size {
            out.push(set);
            return;
        }
        let mut ext = ext;
        let mut banned = banned;
        while ext != 0 {
            let u = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let next = set | 1 << u;
            let next_ext = (ext | (g.neighbors(u) & allowed)) & !next & !banned;
            grow(g, allowed, next, next_ext, banned, size, out);
            banned |= 1 << u;
        }
    }
    let mut out = Vec::new();
    if size == 0 {
        return out;
    }
    for anchor in bits(within) {
        let allowed = within & !((2u64 << anchor).wrapping_sub(1));
        if (allowed.count_ones() as usize) + 1 < size {
            break;
        }
        grow(
            g,
            allowed,
            1 << anchor,
            g.neighbors(anchor) & allowed,
            0,
            size,
            &mut out,
        );
    }
    out
}
