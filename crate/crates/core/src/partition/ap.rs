use std::collections::{BTreeMap, HashSet};

use super::{connected_subsets, enumerate_integer_partitions, IntegerPartition, SolverBudget};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, VertexSet};

#[derive(Debug, Clone)]
pub struct ApVerdict {
    pub verdict: bool,
    /// One realisation per integer partition, present when the verdict holds.
    pub witness_partitions: Option<BTreeMap<IntegerPartition, Vec<VertexSet>>>,
    /// First integer partition without a realisation.
    pub failing: Option<IntegerPartition>,
}

/// Backtracking search for partitions of a vertex set into connected parts
/// of prescribed sizes, largest part first.
pub struct ApSolver<'g> {
    g: &'g Graph,
    /// `(remaining vertices, remaining parts descending)` known to fail.
    failed: HashSet<(u64, Vec<u8>)>,
    memo_cap: usize,
}

impl<'g> ApSolver<'g> {
    pub fn new(g: &'g Graph, budget: SolverBudget) -> Result<Self> {
        if g.n() > budget.ap_max_n {
            return Err(Error::Budget {
                what: "AP solver",
                n: g.n(),
                max: budget.ap_max_n,
            });
        }
        Ok(ApSolver {
            g,
            failed: HashSet::new(),
            memo_cap: budget.memo_cap,
        })
    }

    /// Connected parts of `mask` with the sizes of `partition`, if any.
    pub fn realize(
        &mut self,
        mask: u64,
        partition: &IntegerPartition,
    ) -> Result<Option<Vec<VertexSet>>> {
        if partition.total() != mask.count_ones() as usize {
            return Err(Error::Invalid(format!(
                "partition {partition} does not sum to {}",
                mask.count_ones()
            )));
        }
        let parts: Vec<u8> = partition.parts().iter().rev().map(|&p| p as u8).collect();
        let n = self.g.n();
        Ok(self.search(mask, &parts)?.map(|sets| {
            sets.into_iter()
                .map(|m| VertexSet::from_bits(n, m).expect("subset of the graph"))
                .collect()
        }))
    }

    fn search(&mut self, mask: u64, parts: &[u8]) -> Result<Option<Vec<u64>>> {
        if parts.len() == 1 {
            return Ok(self.g.is_connected_mask(mask).then(|| vec![mask]));
        }
        if parts[0] == 1 {
            return Ok(Some(bits(mask).map(|v| 1u64 << v).collect()));
        }
        let key = (mask, parts.to_vec());
        if self.failed.contains(&key) {
            return Ok(None);
        }
        let smallest = *parts.last().expect("nonempty") as usize;
        for side in connected_subsets(self.g, mask, parts[0] as usize) {
            let rest = mask & !side;
            if self
                .g
                .component_masks(rest)
                .iter()
                .any(|c| (c.count_ones() as usize) < smallest)
            {
                continue;
            }
            if let Some(mut found) = self.search(rest, &parts[1..])? {
                found.insert(0, side);
                return Ok(Some(found));
            }
        }
        if self.failed.len() >= self.memo_cap {
            return Err(Error::MemoCap(self.memo_cap));
        }
        self.failed.insert(key);
        Ok(None)
    }
}

/// Decides whether every integer partition of `n` is realisable by
/// connected parts. Partitions are tried by descending largest part.
pub fn is_ap(g: &Graph, budget: SolverBudget) -> Result<ApVerdict> {
    let mut solver = ApSolver::new(g, budget)?;
    let mut partitions: Vec<IntegerPartition> = enumerate_integer_partitions(g.n(), None).collect();
    partitions.sort_by_key(|p| std::cmp::Reverse(p.largest()));
    let mut witnesses = BTreeMap::new();
    for p in partitions {
        match solver.realize(g.all(), &p)? {
            Some(sets) => {
                witnesses.insert(p, sets);
            }
            None => {
                return Ok(ApVerdict {
                    verdict: false,
                    witness_partitions: None,
                    failing: Some(p),
                })
            }
        }
    }
    Ok(ApVerdict {
        verdict: true,
        witness_partitions: Some(witnesses),
        failing: None,
    })
}
