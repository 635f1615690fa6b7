use super::tree::tree_is_rp;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const SPANNING_TREE_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTreeResult {
    pub exists: bool,
    pub tree: Option<Graph>,
}

/// Searches the spanning trees of `g` for an RP one.
///
/// Edges are decided in order, each either kept (merging two components) or
/// deleted. RP trees are paths or tripodes, so branches that give a vertex
/// degree 4 or create a second branch vertex are cut, as are deletions that
/// disconnect what remains.
pub fn has_rp_spanning_tree(g: &Graph) -> Result<SpanningTreeResult> {
    let n = g.n();
    if n > SPANNING_TREE_MAX_N {
        return Err(Error::Budget {
            what: "spanning tree search",
            n,
            max: SPANNING_TREE_MAX_N,
        });
    }
    if !g.is_connected() {
        return Ok(SpanningTreeResult {
            exists: false,
            tree: None,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut search = Search {
        n,
        edges: &edges,
        chosen: Vec::with_capacity(n - 1),
        degree: vec![0; n],
        branch_vertices: 0,
    };
    let tree = search.run(0, &(0..n).collect::<Vec<_>>())?;
    Ok(SpanningTreeResult {
        exists: tree.is_some(),
        tree,
    })
}

struct Search<'e> {
    n: usize,
    edges: &'e [(usize, usize)],
    chosen: Vec<(usize, usize)>,
    degree: Vec<usize>,
    branch_vertices: usize,
}

fn find(parent: &[usize], mut v: usize) -> usize {
    while parent[v] != v {
        v = parent[v];
    }
    v
}

impl Search<'_> {
    /// Whether the chosen edges plus `edges[from..]` still connect the graph.
    fn connectable(&self, parent: &[usize], from: usize) -> bool {
        let mut p = parent.to_vec();
        let mut parts = (0..self.n).filter(|&v| p[v] == v).count();
        for &(u, v) in &self.edges[from..] {
            let (ru, rv) = (find(&p, u), find(&p, v));
            if ru != rv {
                p[ru] = rv;
                parts -= 1;
            }
        }
        parts == 1
    }

    fn run(&mut self, i: usize, parent: &[usize]) -> Result<Option<Graph>> {
        if self.chosen.len() + 1 == self.n {
            let tree = Graph::from_edges(self.n, self.chosen.iter().copied())?;
            return Ok(tree_is_rp(&tree)?.is_rp.then_some(tree));
        }
        if i == self.edges.len() {
            return Ok(None);
        }
        let (u, v) = self.edges[i];
        let (ru, rv) = (find(parent, u), find(parent, v));
        if ru != rv {
            let new_branches = [u, v].iter().filter(|&&w| self.degree[w] == 2).count();
            let fits = self.degree[u] < 3
                && self.degree[v] < 3
                && self.branch_vertices + new_branches <= 1;
            if fits {
                let mut p = parent.to_vec();
                p[ru] = rv;
                self.degree[u] += 1;
                self.degree[v] += 1;
                self.branch_vertices += new_branches;
                self.chosen.push((u, v));
                let found = self.run(i + 1, &p)?;
                self.chosen.pop();
                self.branch_vertices -= new_branches;
                self.degree[u] -= 1;
                self.degree[v] -= 1;
                if found.is_some() {
                    return Ok(found);
                }
            }
        }
        if self.connectable(parent, i + 1) {
            return self.run(i + 1, parent);
        }
        Ok(None)
    }
}
