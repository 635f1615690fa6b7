use crate::error::{Error, Result};
use crate::graph::Graph;

/// Membership rule for the third arm `c` in one row of the RP tripode
/// table, which lists triples `(1, b, c)` with `b <= c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArmRule {
    Even,
    /// `c mod 3` is one of the listed residues.
    Mod3(&'static [usize]),
    Set(&'static [usize]),
}

impl ArmRule {
    pub fn contains(&self, c: usize) -> bool {
        match self {
            ArmRule::Even => c.is_multiple_of(2),
            ArmRule::Mod3(r) => r.contains(&(c % 3)),
            ArmRule::Set(s) => s.contains(&c),
        }
    }
}

/// Rows `(b, rule)` of the table of RP tripodes `T(1, b, c)`.
pub const TRIPODE_TABLE: [(usize, ArmRule); 6] = [
    (1, ArmRule::Even),
    (2, ArmRule::Mod3(&[0, 1])),
    (3, ArmRule::Even),
    (4, ArmRule::Set(&[5, 6, 8, 10, 13, 18])),
    (5, ArmRule::Set(&[6])),
    (6, ArmRule::Set(&[7, 8, 10, 12, 14])),
];

/// Whether the sorted triple is RP according to the closed form.
pub fn tripode_is_rp(a: usize, b: usize, c: usize) -> bool {
    let mut t = [a, b, c];
    t.sort_unstable();
    let [a, b, c] = t;
    if (a, b, c) == (2, 4, 6) {
        return true;
    }
    a == 1
        && TRIPODE_TABLE
            .iter()
            .any(|&(row, rule)| row == b && rule.contains(c))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeReason {
    Path,
    /// Sorted arm lengths of a tripode matching a table row.
    TripodeTable {
        a: usize,
        b: usize,
        c: usize,
    },
    Sporadic246,
    /// A tripode outside the table, or a tree with a vertex of degree at
    /// least 4 or two branch vertices.
    Excluded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeRpVerdict {
    pub is_rp: bool,
    pub reason: TreeReason,
}

pub(crate) fn is_tree(g: &Graph) -> bool {
    g.edge_count() + 1 == g.n() && g.is_connected()
}

/// Sorted arm orders of a tripode; `None` if the tree is not one.
pub fn tripode_arms(g: &Graph) -> Option<[usize; 3]> {
    let degrees = g.degrees();
    if degrees.iter().any(|&d| d > 3) || degrees.iter().filter(|&&d| d == 3).count() != 1 {
        return None;
    }
    let center = degrees.iter().position(|&d| d == 3)?;
    let mut arms = [0usize; 3];
    for (slot, start) in arms.iter_mut().zip(crate::graph::bits(g.neighbors(center))) {
        let mut prev = center;
        let mut cur = start;
        *slot = 1;
        while degrees[cur] == 2 {
            let next = (g.neighbors(cur) & !(1 << prev)).trailing_zeros() as usize;
            prev = cur;
            cur = next;
            *slot += 1;
        }
    }
    arms.sort_unstable();
    Some(arms)
}

/// Closed-form RP verdict for trees.
pub fn tree_is_rp(g: &Graph) -> Result<TreeRpVerdict> {
    if !is_tree(g) {
        return Err(Error::NotTree);
    }
    if g.degrees().iter().all(|&d| d <= 2) {
        return Ok(TreeRpVerdict {
            is_rp: true,
            reason: TreeReason::Path,
        });
    }
    let Some([a, b, c]) = tripode_arms(g) else {
        return Ok(TreeRpVerdict {
            is_rp: false,
            reason: TreeReason::Excluded,
        });
    };
    let reason = if (a, b, c) == (2, 4, 6) {
        TreeReason::Sporadic246
    } else if tripode_is_rp(a, b, c) {
        TreeReason::TripodeTable { a, b, c }
    } else {
        TreeReason::Excluded
    };
    Ok(TreeRpVerdict {
        is_rp: reason != TreeReason::Excluded,
        reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_path, build_tripode};

    #[test]
    fn closed_form_examples() {
        let v = tree_is_rp(&build_tripode(1, 4, 13).unwrap()).unwrap();
        assert_eq!(v.reason, TreeReason::TripodeTable { a: 1, b: 4, c: 13 });
        assert!(!tree_is_rp(&build_tripode(1, 5, 7).unwrap()).unwrap().is_rp);
        assert_eq!(
            tree_is_rp(&build_path(9).unwrap()).unwrap().reason,
            TreeReason::Path
        );
        assert_eq!(
            tree_is_rp(&build_tripode(6, 2, 4).unwrap()).unwrap().reason,
            TreeReason::Sporadic246
        );
        let k14 = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(tree_is_rp(&k14).unwrap().reason, TreeReason::Excluded);
        let cycle = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tree_is_rp(&cycle), Err(Error::NotTree));
    }

    #[test]
    fn arms_are_recovered() {
        assert_eq!(
            tripode_arms(&build_tripode(3, 1, 2).unwrap()),
            Some([1, 2, 3])
        );
        assert!(tripode_is_rp(2, 1, 1));
        assert!(!tripode_is_rp(1, 1, 3));
    }
}
