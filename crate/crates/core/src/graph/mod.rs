//! Dense simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` row per vertex, so vertex subsets are
//! plain bit masks and most subgraph queries reduce to word operations.

mod hamilton;
mod matching;
mod metrics;

use std::fmt;

use crate::error::{Error, Result};

pub use hamilton::{hamiltonian_path, is_hamiltonian, is_traceable, PathTable, HAMILTON_MAX_N};
pub use matching::{matching_status, maximum_matching, MatchingStatus};
pub use metrics::{
    independence_number, metrics, min_degree_sum, sigma_ore_checks, toughness, vertex_connectivity,
    MetricsReport, OreChecks, Toughness, TOUGHNESS_MAX_N,
};

pub const MAX_VERTICES: usize = 64;

/// Bit mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in ascending order.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A subset of the vertices of some parent graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
    parent_n: usize,
}

impl VertexSet {
    pub fn new(parent_n: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v >= parent_n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: parent_n,
                });
            }
            bits |= 1 << v;
        }
        Ok(VertexSet { bits, parent_n })
    }

    pub fn from_bits(parent_n: usize, bits: u64) -> Result<Self> {
        if parent_n > MAX_VERTICES || bits & !full_mask(parent_n) != 0 {
            return Err(Error::Invalid(format!(
                "bits {bits:#x} exceed parent order {parent_n}"
            )));
        }
        Ok(VertexSet { bits, parent_n })
    }

    pub fn empty(parent_n: usize) -> Self {
        VertexSet { bits: 0, parent_n }
    }

    pub fn all(parent_n: usize) -> Self {
        VertexSet {
            bits: full_mask(parent_n),
            parent_n,
        }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn parent_n(&self) -> usize {
        self.parent_n
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.bits >> v & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        bits(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        VertexSet {
            bits: full_mask(self.parent_n) & !self.bits,
            parent_n: self.parent_n,
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Simple undirected graph with bit-row adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if !(1..=MAX_VERTICES).contains(&n) {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            edge_count: 0,
        })
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        g.edge_count = n * (n - 1) / 2;
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u] >> v & 1 == 0 {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            self.edge_count += 1;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Mask of all vertices.
    pub fn all(&self) -> u64 {
        full_mask(self.n)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * (self.n - 1) / 2
    }

    /// Subgraph induced by `s`, relabelled by ascending original index.
    pub fn induced(&self, s: &VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        self.check_set(s)?;
        Ok(self.induced_mask(s.bits()))
    }

    pub(crate) fn induced_mask(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = bits(mask).collect();
        let mut g = Graph::empty(verts.len()).expect("nonempty subset");
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).expect("in range");
                }
            }
        }
        g
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.bits() & !self.all() != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: 63 - s.bits().leading_zeros() as usize,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Components of `G - removed`, ordered by their minimum vertex.
    pub fn components(&self, removed: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_set(removed)?;
        let rest = self.all() & !removed.bits();
        if rest == 0 {
            return Err(Error::NothingLeft);
        }
        Ok(self
            .component_masks(rest)
            .into_iter()
            .map(|bits| VertexSet {
                bits,
                parent_n: self.n,
            })
            .collect())
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_mask(self.all())
    }

    /// Vertices reachable from `start` inside `within`.
    #[inline]
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    #[inline]
    pub(crate) fn is_connected_mask(&self, within: u64) -> bool {
        within != 0 && self.reach(within.trailing_zeros() as usize, within) == within
    }

    pub(crate) fn component_masks(&self, within: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = within;
        while rest != 0 {
            let c = self.reach(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    #[inline]
    pub(crate) fn count_components(&self, within: u64) -> usize {
        let mut rest = within;
        let mut count = 0;
        while rest != 0 {
            rest &= !self.reach(rest.trailing_zeros() as usize, rest);
            count += 1;
        }
        count
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Invalid("permutation length mismatch".into()));
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// True when every edge of `other` is an edge of `self` (same vertex set).
    pub fn contains_spanning(&self, other: &Graph) -> bool {
        self.n == other.n && (0..self.n).all(|v| other.adj[v] & !self.adj[v] == 0)
    }

    /// Parses the edge-list text format: `n <count>` then one `u v` pair per line.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens = tokens_with_columns(raw);
            match graph.as_mut() {
                None => {
                    let (col, head) = tokens[0];
                    if head != "n" || tokens.len() != 2 {
                        return Err(Error::parse(line_no, col, "expected header `n <count>`"));
                    }
                    let (col, count) = tokens[1];
                    let n: usize = count.parse().map_err(|_| {
                        Error::parse(line_no, col, "vertex count is not an integer")
                    })?;
                    graph = Some(
                        Graph::empty(n).map_err(|e| Error::parse(line_no, col, e.to_string()))?,
                    );
                }
                Some(g) => {
                    if tokens.len() != 2 {
                        let col = tokens.get(2).map_or(tokens[0].0, |t| t.0);
                        return Err(Error::parse(line_no, col, "expected `u v`"));
                    }
                    let mut ends = [0usize; 2];
                    for (slot, &(col, tok)) in ends.iter_mut().zip(&tokens) {
                        *slot = tok.parse().map_err(|_| {
                            Error::parse(line_no, col, format!("`{tok}` is not a vertex"))
                        })?;
                    }
                    g.add_edge(ends[0], ends[1])
                        .map_err(|e| Error::parse(line_no, tokens[0].0, e.to_string()))?;
                }
            }
        }
        graph.ok_or_else(|| Error::parse(1, 1, "missing header `n <count>`"))
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (1, 0)]).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(p4, path(4));
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert_eq!(Graph::empty(0), Err(Error::VertexCount(0)));
        assert_eq!(Graph::empty(65), Err(Error::VertexCount(65)));
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn induced_subgraphs() {
        let p4 = path(4);
        let s = VertexSet::new(4, [0, 1]).unwrap();
        assert_eq!(p4.induced(&s).unwrap(), Graph::complete(2).unwrap());
        let s = VertexSet::new(4, [0, 2]).unwrap();
        assert_eq!(p4.induced(&s).unwrap(), Graph::empty(2).unwrap());
        let k4 = Graph::complete(4).unwrap();
        let s = VertexSet::new(4, [1, 2, 3]).unwrap();
        assert_eq!(k4.induced(&s).unwrap(), Graph::complete(3).unwrap());
        assert_eq!(p4.induced(&VertexSet::empty(4)), Err(Error::EmptySet));
        assert_eq!(p4.induced(&VertexSet::all(4)).unwrap(), p4);
    }

    #[test]
    fn components_by_minimum_vertex() {
        let p4 = path(4);
        let comps = p4.components(&VertexSet::new(4, [1]).unwrap()).unwrap();
        assert_eq!(
            comps.iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
            vec![vec![0], vec![2, 3]]
        );
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let comps = star.components(&VertexSet::new(4, [0]).unwrap()).unwrap();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(c5.components(&VertexSet::empty(5)).unwrap().len(), 1);
        assert_eq!(c5.components(&VertexSet::all(5)), Err(Error::NothingLeft));
    }

    #[test]
    fn connectivity() {
        assert!(path(4).is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn edge_list_text_format() {
        let text = "# a path\nn 4\n0 1\n\n1 2\n# trailing\n2 3\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g, path(4));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);

        let err = Graph::parse_edge_list("n 3\n0 x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 3,
                message: "`x` is not a vertex".into()
            }
        );
        assert!(matches!(
            Graph::parse_edge_list("0 1\n"),
            Err(Error::Parse {
                line: 1,
                column: 1,
                ..
            })
        ));
        assert!(matches!(
            Graph::parse_edge_list("n 3\n  1 1\n"),
            Err(Error::Parse {
                line: 2,
                column: 3,
                ..
            })
        ));
    }
}
