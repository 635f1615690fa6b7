//! Hamiltonian paths and cycles by subset dynamic programming.

use super::{bits, Graph};
use crate::error::{Error, Result};

/// Largest order accepted by the subset DP.
pub const HAMILTON_MAX_N: usize = 24;

/// For every vertex subset of a root graph, the set of vertices at which a
/// Hamiltonian path of the induced subgraph can end.
pub struct PathTable<'g> {
    graph: &'g Graph,
    ends: Vec<u32>,
}

impl<'g> PathTable<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        let n = graph.n();
        if n > HAMILTON_MAX_N {
            return Err(Error::Budget {
                what: "Hamiltonian path DP",
                n,
                max: HAMILTON_MAX_N,
            });
        }
        let size = 1usize << n;
        let mut ends = vec![0u32; size];
        for v in 0..n {
            ends[1 << v] = 1 << v;
        }
        for mask in 1..size {
            if mask & (mask - 1) == 0 {
                continue;
            }
            let mut e = 0u32;
            for v in bits(mask as u64) {
                let rest = mask ^ (1 << v);
                if ends[rest] as u64 & graph.neighbors(v) != 0 {
                    e |= 1 << v;
                }
            }
            ends[mask] = e;
        }
        Ok(PathTable { graph, ends })
    }

    #[inline]
    pub fn traceable(&self, mask: u64) -> bool {
        self.ends[mask as usize] != 0
    }

    /// A Hamiltonian path of `G[mask]`, if one exists.
    pub fn path(&self, mask: u64) -> Option<Vec<usize>> {
        let mut rest = mask;
        let mut end = self.ends[rest as usize];
        if end == 0 {
            return None;
        }
        let mut order = Vec::with_capacity(mask.count_ones() as usize);
        loop {
            let v = end.trailing_zeros() as usize;
            order.push(v);
            rest ^= 1 << v;
            if rest == 0 {
                break;
            }
            end = self.ends[rest as usize] & self.graph.neighbors(v) as u32;
        }
        order.reverse();
        Some(order)
    }
}

/// A Hamiltonian path of `g`, if one exists.
pub fn hamiltonian_path(g: &Graph) -> Result<Option<Vec<usize>>> {
    Ok(PathTable::new(g)?.path(g.all()))
}

pub fn is_traceable(g: &Graph) -> Result<bool> {
    Ok(PathTable::new(g)?.traceable(g.all()))
}

/// Spanning cycle test; graphs on fewer than three vertices have none.
pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > HAMILTON_MAX_N {
        return Err(Error::Budget {
            what: "Hamiltonian cycle DP",
            n,
            max: HAMILTON_MAX_N,
        });
    }
    if n < 3 {
        return Ok(false);
    }
    // ends[m] for masks over vertices 1..n: paths starting at vertex 0.
    let size = 1usize << (n - 1);
    let mut ends = vec![0u32; size];
    for v in 1..n {
        if g.has_edge(0, v) {
            ends[1 << (v - 1)] = 1 << (v - 1);
        }
    }
    for mask in 1..size {
        if mask & (mask - 1) == 0 {
            continue;
        }
        let mut e = 0u32;
        for w in bits(mask as u64) {
            let rest = mask ^ (1 << w);
            if (ends[rest] as u64) << 1 & g.neighbors(w + 1) != 0 {
                e |= 1 << w;
            }
        }
        ends[mask] = e;
    }
    Ok((ends[size - 1] as u64) << 1 & g.neighbors(0) != 0)
}
