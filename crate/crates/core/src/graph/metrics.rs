use num_rational::Ratio;

use super::{bits, full_mask, Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order for the exhaustive toughness scan.
pub const TOUGHNESS_MAX_N: usize = 24;

/// A minimising cut for toughness: `|S| / c(G - S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Toughness {
    pub value: Ratio<usize>,
    pub cut: VertexSet,
    pub components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricsReport {
    pub alpha: usize,
    /// Absent for complete graphs.
    pub sigma: Option<usize>,
    /// Absent for complete graphs.
    pub kappa: Option<usize>,
    /// Absent for complete graphs.
    pub toughness: Option<Toughness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OreChecks {
    pub implies_traceable: bool,
    pub implies_hamiltonian: bool,
}

pub fn metrics(g: &Graph) -> Result<MetricsReport> {
    Ok(MetricsReport {
        alpha: independence_number(g),
        sigma: min_degree_sum(g),
        kappa: vertex_connectivity(g),
        toughness: toughness(g)?,
    })
}

pub fn independence_number(g: &Graph) -> usize {
    fn go(g: &Graph, mask: u64, best: &mut usize, size: usize) {
        if mask == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + mask.count_ones() as usize <= *best {
            return;
        }
        let mut pick = None;
        let mut pick_deg = 0;
        let mut forced = None;
        for v in bits(mask) {
            let d = (g.neighbors(v) & mask).count_ones();
            if d <= 1 {
                forced = Some(v);
                break;
            }
            if pick.is_none() || d > pick_deg {
                pick = Some(v);
                pick_deg = d;
            }
        }
        if let Some(v) = forced {
            // a vertex of degree <= 1 lies in some maximum independent set
            go(g, mask & !(1 << v) & !g.neighbors(v), best, size + 1);
            return;
        }
        let v = pick.expect("nonempty mask");
        go(g, mask & !(1 << v) & !g.neighbors(v), best, size + 1);
        go(g, mask & !(1 << v), best, size);
    }
    let mut best = 0;
    go(g, g.all(), &mut best, 0);
    best
}

/// `min d(u) + d(v)` over non-adjacent pairs; absent for complete graphs.
pub fn min_degree_sum(g: &Graph) -> Option<usize> {
    let deg = g.degrees();
    let mut best: Option<usize> = None;
    for u in 0..g.n() {
        for v in bits(g.all() & !g.neighbors(u) & !full_mask(u + 1)) {
            let s = deg[u] + deg[v];
            best = Some(best.map_or(s, |b| b.min(s)));
        }
    }
    best
}

pub fn sigma_ore_checks(g: &Graph) -> Result<OreChecks> {
    let sigma = min_degree_sum(g).ok_or(Error::Complete)?;
    let n = g.n();
    Ok(OreChecks {
        implies_traceable: sigma + 1 >= n,
        implies_hamiltonian: sigma >= n,
    })
}

/// Minimum size of a disconnecting vertex set; absent for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> Option<usize> {
    if g.is_complete() {
        return None;
    }
    if !g.is_connected() {
        return Some(0);
    }
    let mut best = g.n() - 2;
    for u in 0..g.n() {
        for v in bits(g.all() & !g.neighbors(u) & !full_mask(u + 1)) {
            best = best.min(local_connectivity(g, u, v, best));
            if best == 0 {
                return Some(0);
            }
        }
    }
    Some(best)
}

/// Internally disjoint u-v paths for non-adjacent `u`, `v`, capped at `cap`.
fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    // Split each vertex w into w_in = 2w and w_out = 2w + 1.
    let n = g.n();
    let nodes = 2 * n;
    let big = n as i32 + 1;
    let mut cap_m = vec![0i32; nodes * nodes];
    for w in 0..n {
        let c = if w == s || w == t { big } else { 1 };
        cap_m[(2 * w) * nodes + 2 * w + 1] = c;
        for x in bits(g.neighbors(w)) {
            cap_m[(2 * w + 1) * nodes + 2 * x] = big;
        }
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    let mut prev = vec![usize::MAX; nodes];
    while flow < cap {
        prev.iter_mut().for_each(|p| *p = usize::MAX);
        prev[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for b in 0..nodes {
                if prev[b] == usize::MAX && cap_m[a * nodes + b] > 0 {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut b = sink;
        while b != source {
            let a = prev[b];
            cap_m[a * nodes + b] -= 1;
            cap_m[b * nodes + a] += 1;
            b = a;
        }
        flow += 1;
    }
    flow
}

/// Exhaustive toughness; absent for complete graphs. Ties keep the first
/// minimiser in ascending mask order.
pub fn toughness(g: &Graph) -> Result<Option<Toughness>> {
    if g.is_complete() {
        return Ok(None);
    }
    let n = g.n();
    if n > TOUGHNESS_MAX_N {
        return Err(Error::Budget {
            what: "toughness scan",
            n,
            max: TOUGHNESS_MAX_N,
        });
    }
    let all = g.all();
    let mut best: Option<(usize, usize, u64)> = None;
    for s in 0..all {
        let c = g.count_components(all & !s);
        if c < 2 {
            continue;
        }
        let size = s.count_ones() as usize;
        let better = match best {
            None => true,
            Some((bs, bc, _)) => size * bc < bs * c,
        };
        if better {
            best = Some((size, c, s));
            if size == 0 {
                break;
            }
        }
    }
    Ok(best.map(|(size, c, s)| Toughness {
        value: Ratio::new(size, c),
        cut: VertexSet::from_bits(n, s).expect("subset of vertices"),
        components: c,
    }))
}
