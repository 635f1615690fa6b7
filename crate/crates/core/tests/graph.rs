mod common;

use proptest::prelude::*;
use rpgraph::graph::{
    is_hamiltonian, is_traceable, matching_status, sigma_ore_checks, toughness, MatchingStatus,
};
use rpgraph::{Graph, VertexSet};

use common::{connected_graphs, graphs, permutation};

proptest! {
    #[test]
    fn components_partition_the_rest(g in graphs(1, 12), removed in any::<u64>()) {
        let removed = VertexSet::from_bits(g.n(), removed & g.all()).unwrap();
        if removed.len() == g.n() {
            prop_assert!(g.components(&removed).is_err());
            return Ok(());
        }
        let parts = g.components(&removed).unwrap();
        let mut union = 0u64;
        for p in &parts {
            prop_assert_eq!(union & p.bits(), 0);
            union |= p.bits();
            prop_assert!(g.induced(p).unwrap().is_connected());
        }
        prop_assert_eq!(union, g.all() & !removed.bits());
    }

    #[test]
    fn induced_on_everything_is_the_graph(g in graphs(1, 12)) {
        prop_assert_eq!(g.induced(&VertexSet::all(g.n())).unwrap(), g);
    }

    #[test]
    fn spanning_structures_nest(g in graphs(1, 9)) {
        let traceable = is_traceable(&g).unwrap();
        if traceable {
            prop_assert!(g.is_connected());
        }
        if is_hamiltonian(&g).unwrap() {
            prop_assert!(traceable);
        }
    }

    #[test]
    fn ore_conditions_hold(g in connected_graphs(2, 9)) {
        prop_assume!(!g.is_complete());
        let ore = sigma_ore_checks(&g).unwrap();
        if ore.implies_traceable {
            prop_assert!(is_traceable(&g).unwrap());
        }
        if ore.implies_hamiltonian {
            prop_assert!(is_hamiltonian(&g).unwrap());
        }
    }

    #[test]
    fn toughness_witness_achieves_value(g in connected_graphs(2, 10)) {
        match toughness(&g).unwrap() {
            None => prop_assert!(g.is_complete()),
            Some(t) => {
                let c = g.components(&t.cut).unwrap().len();
                prop_assert!(c >= 2);
                prop_assert_eq!(c, t.components);
                prop_assert_eq!(t.value, num_rational::Ratio::new(t.cut.len(), c));
                // no disconnecting cut does better
                for cut in 1..g.all() {
                    let s = VertexSet::from_bits(g.n(), cut).unwrap();
                    let c = g.components(&s).unwrap().len();
                    if c >= 2 {
                        prop_assert!(num_rational::Ratio::new(s.len(), c) >= t.value);
                    }
                }
            }
        }
    }

    #[test]
    fn relabelling_keeps_edge_count(g in graphs(1, 12).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), permutation(n))
    })) {
        let (g, p) = g;
        let h = g.relabel(&p).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count());
        for (u, v) in g.edges() {
            prop_assert!(h.has_edge(p[u], p[v]));
        }
    }

    #[test]
    fn edge_list_round_trip(g in graphs(1, 12)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }
}

#[test]
fn paths_are_matchable() {
    for n in 1..20 {
        let g = Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap();
        let want = if n % 2 == 0 {
            MatchingStatus::Perfect
        } else {
            MatchingStatus::NearPerfect
        };
        assert_eq!(matching_status(&g), want, "P{n}");
    }
}
