mod common;

use proptest::prelude::*;
use rpgraph::conditions::{has_rp_spanning_tree, mod_cut_scan, spider_obstruction, tree_is_rp};
use rpgraph::constructions::build_balloon;
use rpgraph::graph::is_traceable;
use rpgraph::partition::{is_rp, SolverBudget};
use rpgraph::{Graph, VertexSet};

use common::{connected_graphs, graphs_up_to_iso, trees};

fn max_excess(g: &Graph) -> isize {
    (0..g.all())
        .map(|cut| {
            let s = VertexSet::from_bits(g.n(), cut).unwrap();
            g.components(&s).unwrap().len() as isize - s.len() as isize
        })
        .max()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn closed_form_matches_solver_on_trees(t in trees(1, 13)) {
        let generic = is_rp(&t, SolverBudget::default()).unwrap().verdict;
        prop_assert_eq!(tree_is_rp(&t).unwrap().is_rp, generic, "{}", t.to_edge_list());
    }

    #[test]
    fn rp_graphs_pass_the_mod_cut_scan(g in connected_graphs(2, 10)) {
        if is_rp(&g, SolverBudget::default()).unwrap().verdict {
            prop_assert_eq!(mod_cut_scan(&g, g.n()).unwrap(), None);
        }
    }

    #[test]
    fn spanning_rp_tree_limits_cuts(g in connected_graphs(2, 9)) {
        let r = has_rp_spanning_tree(&g).unwrap();
        if let Some(t) = &r.tree {
            prop_assert!(g.contains_spanning(t));
            prop_assert!(tree_is_rp(t).unwrap().is_rp);
            prop_assert!(max_excess(&g) <= 2);
        }
    }

    #[test]
    fn spider_witness_rules_out_paths(g in connected_graphs(2, 10)) {
        if spider_obstruction(&g, 2, g.n()).unwrap().is_some() {
            prop_assert!(!is_traceable(&g).unwrap());
        }
    }
}

#[test]
fn all_small_trees_match_the_solver() {
    for n in 1..=7 {
        for g in graphs_up_to_iso(n) {
            if g.edge_count() + 1 == n && g.is_connected() {
                let generic = is_rp(&g, SolverBudget::default()).unwrap().verdict;
                assert_eq!(
                    tree_is_rp(&g).unwrap().is_rp,
                    generic,
                    "{}",
                    g.to_edge_list()
                );
            }
        }
    }
}

#[test]
fn rp_balloons_limit_cuts() {
    fn paths(k: usize, left: usize, lo: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for b in lo..=left {
            prefix.push(b);
            paths(k, left - b, b, prefix, out);
            prefix.pop();
        }
    }
    let mut rp = 0;
    for k in 2..=5 {
        let mut all = Vec::new();
        paths(k, 11, 1, &mut Vec::new(), &mut all);
        for p in all {
            let g = build_balloon(&p).unwrap();
            if is_rp(&g, SolverBudget::default()).unwrap().verdict {
                rp += 1;
                assert!(max_excess(&g) <= 4, "B{p:?}");
            }
        }
    }
    assert!(rp > 0);
}
