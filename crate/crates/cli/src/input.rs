//! Graph arguments and environment settings shared by the subcommands.

use std::path::Path;

use rpgraph::constructions::{build, build_corollary_family, ConstructionResult, Family};
use rpgraph::partition::SolverBudget;
use rpgraph::{Error, Graph, Result, VertexSet};

/// Environment variable overriding the largest order the exact solvers
/// accept.
pub const BUDGET_ENV: &str = "RP_BUDGET_N";

pub fn budget_from_env() -> Result<SolverBudget> {
    match std::env::var(BUDGET_ENV) {
        Err(_) => Ok(SolverBudget::default()),
        Ok(v) => {
            v.trim().parse().map(SolverBudget::with_max_n).map_err(|_| {
                Error::Invalid(format!("{BUDGET_ENV} must be a vertex count, got `{v}`"))
            })
        }
    }
}

/// A graph read from the command line, with whatever the family builder
/// knows about it.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub built: ConstructionResult,
    /// Designated cut for members of the `H(s,j)` family.
    pub cut: Option<VertexSet>,
}

impl LoadedGraph {
    pub fn graph(&self) -> &Graph {
        &self.built.graph
    }
}

/// Reads `arg` as an edge-list file if such a file exists, and as a family
/// expression otherwise.
pub fn load_graph(arg: &str) -> Result<LoadedGraph> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read `{arg}`: {e}")))?;
        return Ok(LoadedGraph {
            built: ConstructionResult {
                graph: Graph::parse_edge_list(&text)?,
                certificate: None,
                provenance: None,
            },
            cut: None,
        });
    }
    let family: Family = arg.parse()?;
    if let Family::Corollary { s, j } = family {
        let mut h = build_corollary_family(s, j)?;
        h.result.provenance = Some(family);
        return Ok(LoadedGraph {
            built: h.result,
            cut: Some(h.cut),
        });
    }
    Ok(LoadedGraph {
        built: build(&family)?,
        cut: None,
    })
}

/// Parses a comma-separated vertex list such as `0,1,5`.
pub fn parse_vertex_list(n: usize, text: &str) -> Result<VertexSet> {
    let mut vertices = Vec::new();
    for (i, tok) in text.split(',').enumerate() {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        vertices.push(tok.parse::<usize>().map_err(|_| Error::Parse {
            line: 1,
            column: text.split(',').take(i).map(|t| t.len() + 1).sum::<usize>() + 1,
            message: format!("expected a vertex, found `{tok}`"),
        })?);
    }
    VertexSet::new(n, vertices)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions_and_files() {
        let g = load_graph("T(1,1,2)").unwrap();
        assert_eq!(g.graph().n(), 5);
        assert!(g.built.certificate.is_none());
        assert!(load_graph("K1(1,1,2)").unwrap().built.certificate.is_some());
        let h = load_graph("H(2,1)").unwrap();
        assert_eq!(h.cut.unwrap().len(), 2);

        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("p3.txt");
        std::fs::write(&file, "n 3\n0 1\n1 2\n").unwrap();
        let g = load_graph(file.to_str().unwrap()).unwrap();
        assert_eq!(g.graph().edge_count(), 2);
        assert!(matches!(load_graph("T(1,1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_vertex_list(4, "0, 2").unwrap().to_vec(), vec![0, 2]);
        let err = parse_vertex_list(4, "0,x").unwrap_err();
        assert!(matches!(err, Error::Parse { column: 3, .. }), "{err}");
        assert!(parse_vertex_list(4, "7").is_err());
    }
}
