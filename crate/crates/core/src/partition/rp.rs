use std::collections::HashMap;

use super::{connected_subsets, SolverBudget};
use crate::certificate::{RpCertificate, SplitEntry};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, PathTable};

#[derive(Debug, Clone)]
enum Node {
    NotRp,
    Singleton,
    Path,
    /// Entry `a - 1` is the side of size `a`.
    Split(Vec<u64>),
}

#[derive(Debug, Clone)]
pub struct RpVerdict {
    pub verdict: bool,
    pub certificate: Option<RpCertificate>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitDiagnosis {
    Rp,
    Disconnected,
    /// Smallest `a` with no `(a, n - a)` partition into RP parts.
    FailsAt(usize),
}

/// Memoised RP decision over induced subgraphs of one root graph.
///
/// For each split size `a` (ascending) the connected subsets of size `a` are
/// tried in growth order; the complement must be connected before either
/// side is solved, and the smaller side is solved first.
pub struct RpSolver<'g> {
    g: &'g Graph,
    table: PathTable<'g>,
    memo: HashMap<u64, Node>,
    memo_cap: usize,
}

impl<'g> RpSolver<'g> {
    pub fn new(g: &'g Graph, budget: SolverBudget) -> Result<Self> {
        if g.n() > budget.rp_max_n {
            return Err(Error::Budget {
                what: "RP solver",
                n: g.n(),
                max: budget.rp_max_n,
            });
        }
        Ok(RpSolver {
            g,
            table: PathTable::new(g)?,
            memo: HashMap::new(),
            memo_cap: budget.memo_cap,
        })
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// RP verdict for the subgraph induced by `mask`.
    pub fn is_rp_mask(&mut self, mask: u64) -> Result<bool> {
        if let Some(node) = self.memo.get(&mask) {
            return Ok(!matches!(node, Node::NotRp));
        }
        let node = if mask.count_ones() == 1 {
            Node::Singleton
        } else if !self.g.is_connected_mask(mask) {
            Node::NotRp
        } else if self.table.traceable(mask) {
            Node::Path
        } else {
            self.search(mask)?
        };
        if self.memo.len() >= self.memo_cap {
            return Err(Error::MemoCap(self.memo_cap));
        }
        let rp = !matches!(node, Node::NotRp);
        self.memo.insert(mask, node);
        Ok(rp)
    }

    fn search(&mut self, mask: u64) -> Result<Node> {
        let m = mask.count_ones() as usize;
        let mut sides = Vec::with_capacity(m / 2);
        for a in 1..=m / 2 {
            match self.find_split(mask, a)? {
                Some(side) => sides.push(side),
                None => return Ok(Node::NotRp),
            }
        }
        Ok(Node::Split(sides))
    }

    fn find_split(&mut self, mask: u64, a: usize) -> Result<Option<u64>> {
        for side in connected_subsets(self.g, mask, a) {
            let rest = mask & !side;
            if !self.g.is_connected_mask(rest) {
                continue;
            }
            if self.is_rp_mask(side)? && self.is_rp_mask(rest)? {
                return Ok(Some(side));
            }
        }
        Ok(None)
    }

    /// Smallest failing split size of the subgraph induced by `mask`.
    pub fn diagnose(&mut self, mask: u64) -> Result<SplitDiagnosis> {
        if !self.g.is_connected_mask(mask) {
            return Ok(SplitDiagnosis::Disconnected);
        }
        if self.is_rp_mask(mask)? {
            return Ok(SplitDiagnosis::Rp);
        }
        let m = mask.count_ones() as usize;
        for a in 1..=m / 2 {
            if self.find_split(mask, a)?.is_none() {
                return Ok(SplitDiagnosis::FailsAt(a));
            }
        }
        unreachable!("a non-RP connected graph has a failing split size")
    }

    /// Elementary certificate for an RP subgraph; `None` when not RP.
    pub fn certificate(&mut self, mask: u64) -> Result<Option<RpCertificate>> {
        if !self.is_rp_mask(mask)? {
            return Ok(None);
        }
        Ok(Some(self.build(mask)))
    }

    fn build(&self, mask: u64) -> RpCertificate {
        match &self.memo[&mask] {
            Node::NotRp => unreachable!("parts of recorded splits are RP"),
            Node::Singleton => RpCertificate::Singleton {
                vertex: mask.trailing_zeros() as usize,
            },
            Node::Path => RpCertificate::Path {
                order: self.table.path(mask).expect("traceable"),
            },
            Node::Split(sides) => RpCertificate::Split {
                vertices: bits(mask).collect(),
                entries: sides
                    .iter()
                    .enumerate()
                    .map(|(i, &side)| SplitEntry {
                        a: i + 1,
                        part: bits(side).collect(),
                        cert_a: self.build(side),
                        cert_b: self.build(mask & !side),
                    })
                    .collect(),
            },
        }
    }
}

/// Decides whether `g` is RP; on success returns an elementary certificate.
pub fn is_rp(g: &Graph, budget: SolverBudget) -> Result<RpVerdict> {
    let mut solver = RpSolver::new(g, budget)?;
    if g.n() == 0 {
        return Err(Error::VertexCount(0));
    }
    let certificate = solver.certificate(g.all())?;
    Ok(RpVerdict {
        verdict: certificate.is_some(),
        certificate,
    })
}

pub fn first_failing_size(g: &Graph, budget: SolverBudget) -> Result<SplitDiagnosis> {
    RpSolver::new(g, budget)?.diagnose(g.all())
}
