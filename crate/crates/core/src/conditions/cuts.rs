use itertools::Itertools;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order for which cut scans may take every subset size.
pub const SCAN_MAX_N: usize = 20;
/// Cut size that is always allowed, whatever the order.
pub const SCAN_FREE_CUT: usize = 4;
/// Largest order for the exhaustive toughness-bound scan.
pub const BOUND_MAX_N: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModCutReport {
    pub k: usize,
    pub cut: VertexSet,
    /// Sum of the component orders of `G - S` modulo `k`, over `k - 1`.
    pub w_k: Ratio<usize>,
    /// `|S| + (n mod k) / (k - 1)`.
    pub bound: Ratio<usize>,
    pub satisfied: bool,
}

fn report(n: usize, cut: VertexSet, sizes: &[usize], k: usize) -> ModCutReport {
    let residues: usize = sizes.iter().map(|s| s % k).sum();
    let w_k = Ratio::new(residues, k - 1);
    let bound = Ratio::from_integer(cut.len()) + Ratio::new(n % k, k - 1);
    ModCutReport {
        k,
        cut,
        satisfied: bound >= w_k,
        w_k,
        bound,
    }
}

fn component_sizes(g: &Graph, cut: u64) -> Vec<usize> {
    g.component_masks(g.all() & !cut)
        .into_iter()
        .map(|c| c.count_ones() as usize)
        .collect()
}

/// Evaluates the mod-`k` cut inequality for one cut. A violation shows that
/// `g` is neither AP nor RP.
pub fn mod_cut_check(g: &Graph, cut: &VertexSet, k: usize) -> Result<ModCutReport> {
    if k < 2 {
        return Err(Error::Invalid(format!(
            "modulus must be at least 2, got {k}"
        )));
    }
    if cut.parent_n() != g.n() {
        return Err(Error::Invalid(
            "cut belongs to a graph of another order".into(),
        ));
    }
    if cut.len() == g.n() {
        return Err(Error::NothingLeft);
    }
    Ok(report(g.n(), *cut, &component_sizes(g, cut.bits()), k))
}

fn scan_budget(g: &Graph, max_cut: usize) -> Result<usize> {
    if g.n() > SCAN_MAX_N && max_cut > SCAN_FREE_CUT {
        return Err(Error::Budget {
            what: "cut scan beyond free cut size",
            n: g.n(),
            max: SCAN_MAX_N,
        });
    }
    Ok(max_cut.min(g.n() - 1))
}

/// Cuts of size `0..=max` in size order, lexicographic within a size.
fn cuts(n: usize, max: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=max).flat_map(move |size| (0..n).combinations(size))
}

fn mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

/// The inequality multiplied through by `k - 1`.
fn violates(n: usize, cut_len: usize, sizes: &[usize], k: usize) -> bool {
    let residues: usize = sizes.iter().map(|s| s % k).sum();
    residues > cut_len * (k - 1) + n % k
}

/// First violation of the mod-`k` cut inequality, ordered by `k`, then cut
/// size, then lexicographically.
pub fn mod_cut_scan(g: &Graph, max_cut: usize) -> Result<Option<ModCutReport>> {
    let max = scan_budget(g, max_cut)?;
    let n = g.n();
    // (k, cut, component sizes) of the earliest violation seen so far
    let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
    for cut in cuts(n, max) {
        let sizes = component_sizes(g, mask(&cut));
        let limit = best.as_ref().map_or(n, |b| b.0 - 1);
        if let Some(k) = (2..=limit).find(|&k| violates(n, cut.len(), &sizes, k)) {
            best = Some((k, cut, sizes));
            if k == 2 {
                break;
            }
        }
    }
    Ok(best.map(|(k, cut, sizes)| report(n, VertexSet::new(n, cut).expect("in range"), &sizes, k)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToughnessBoundReport {
    pub consistent: bool,
    /// A cut contradicting the claim that `g` is RP.
    pub witness: Option<(VertexSet, usize)>,
    /// Entry `s` is the largest component count left by a cut of size `s`.
    pub max_components: Vec<usize>,
}

/// Scans every cut for `c(G - S) >= 3|S|` with `|S| >= 2`, or `c >= 4` with
/// `|S| = 1`; either rules out RP.
pub fn toughness_bound_check(g: &Graph, rp_claimed: bool) -> Result<ToughnessBoundReport> {
    let n = g.n();
    if n > BOUND_MAX_N {
        return Err(Error::Budget {
            what: "toughness bound scan",
            n,
            max: BOUND_MAX_N,
        });
    }
    let mut max_components = vec![0usize; n];
    let mut witness: Option<(u64, usize)> = None;
    let all = g.all();
    for cut in 1..all {
        let s = cut.count_ones() as usize;
        let c = g.count_components(all & !cut);
        if c > max_components[s] {
            max_components[s] = c;
        }
        let bad = if s == 1 { c >= 4 } else { c >= 3 * s };
        if rp_claimed && bad && witness.is_none_or(|(w, _)| s < w.count_ones() as usize) {
            witness = Some((cut, c));
        }
    }
    max_components[0] = g.count_components(all);
    Ok(ToughnessBoundReport {
        consistent: witness.is_none(),
        witness: witness.map(|(m, c)| (VertexSet::from_bits(n, m).expect("in range"), c)),
        max_components,
    })
}

/// A cut `S` with `c(G - S) >= |S| + k`, which rules out a spanning
/// subdivision of `K_{1,k}`. Cuts are tried by size, then lexicographically.
pub fn spider_obstruction(g: &Graph, k: usize, max_cut: usize) -> Result<Option<VertexSet>> {
    if k < 2 {
        return Err(Error::Invalid(format!("k must be at least 2, got {k}")));
    }
    let max = scan_budget(g, max_cut)?;
    Ok(cuts(g.n(), max)
        .find(|cut| g.count_components(g.all() & !mask(cut)) >= cut.len() + k)
        .map(|cut| VertexSet::new(g.n(), cut).expect("in range")))
}
