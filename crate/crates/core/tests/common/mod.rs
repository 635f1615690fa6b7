#![allow(dead_code)]

use std::collections::HashSet;

use proptest::prelude::*;
use rpgraph::Graph;

/// Graphs on `lo..=hi` vertices with independently chosen edges.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

pub fn connected_graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    graphs(lo, hi).prop_filter("connected", |g| g.is_connected())
}

/// Random tree from a Pruefer sequence.
pub fn trees(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(0..n, n.saturating_sub(2)).prop_map(move |seq| {
            let mut degree = vec![1usize; n];
            for &v in &seq {
                degree[v] += 1;
            }
            let mut g = Graph::empty(n).unwrap();
            for &v in &seq {
                let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
                g.add_edge(leaf, v).unwrap();
                degree[leaf] -= 1;
                degree[v] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
            if rest.len() == 2 {
                g.add_edge(rest[0], rest[1]).unwrap();
            }
            g
        })
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn pair_index(u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    v * (v - 1) / 2 + u
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One graph per isomorphism class on exactly `n` vertices.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let mut classes: Vec<Vec<(usize, usize)>> = vec![vec![]];
    for m in 2..=n {
        let perms = all_permutations(m);
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &classes {
            for nb in 0u64..1 << (m - 1) {
                let mut edges = base.clone();
                edges.extend((0..m - 1).filter(|&u| nb >> u & 1 == 1).map(|u| (u, m - 1)));
                let code = perms
                    .iter()
                    .map(|p| {
                        edges
                            .iter()
                            .fold(0u64, |c, &(u, v)| c | 1 << pair_index(p[u], p[v]))
                    })
                    .min()
                    .unwrap();
                if seen.insert(code) {
                    next.push(edges);
                }
            }
        }
        classes = next;
    }
    classes
        .into_iter()
        .map(|e| Graph::from_edges(n, e).unwrap())
        .collect()
}
