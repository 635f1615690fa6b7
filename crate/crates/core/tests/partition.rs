mod common;

use proptest::prelude::*;
use rpgraph::constructions::build_complete_multipartite;
use rpgraph::graph::{independence_number, is_traceable, vertex_connectivity};
use rpgraph::partition::{
    enumerate_integer_partitions, first_failing_size, is_ap, is_rp, ApSolver, SolverBudget,
    SplitDiagnosis,
};
use rpgraph::{verify_certificate, RpCertificate};

use common::{connected_graphs, graphs, graphs_up_to_iso, permutation};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_certificates_verify(g in graphs(1, 10)) {
        let v = is_rp(&g, SolverBudget::default()).unwrap();
        match &v.certificate {
            Some(cert) => {
                prop_assert!(v.verdict);
                let check = verify_certificate(&g, cert);
                prop_assert!(check.valid, "{:?}", check.failure_reason);
            }
            None => {
                prop_assert!(!v.verdict);
                let d = first_failing_size(&g, SolverBudget::default()).unwrap();
                prop_assert_ne!(d, SplitDiagnosis::Rp);
            }
        }
        if is_traceable(&g).unwrap() {
            prop_assert!(v.verdict);
        }
    }

    #[test]
    fn rp_is_isomorphism_invariant(g in connected_graphs(2, 10).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), permutation(n))
    })) {
        let (g, p) = g;
        let h = g.relabel(&p).unwrap();
        let b = SolverBudget::default();
        prop_assert_eq!(is_rp(&g, b).unwrap().verdict, is_rp(&h, b).unwrap().verdict);
    }

    #[test]
    fn single_field_changes_are_rejected(g in connected_graphs(3, 8), pick in any::<prop::sample::Index>(), to in 0usize..8) {
        let Some(cert) = is_rp(&g, SolverBudget::default()).unwrap().certificate else {
            return Ok(());
        };
        let mut sites = Vec::new();
        collect_sites(&cert, &mut Vec::new(), &mut sites);
        let site = &sites[pick.index(sites.len())];
        let mutant = change(&cert, site, to % g.n());
        prop_assume!(mutant != cert);
        prop_assert!(!verify_certificate(&g, &mutant).valid);
    }
}

/// Route to one vertex field: child steps then a position.
type Site = Vec<usize>;

fn children(cert: &RpCertificate) -> Vec<&RpCertificate> {
    match cert {
        RpCertificate::Split { entries, .. } => entries
            .iter()
            .flat_map(|e| [&e.cert_a, &e.cert_b])
            .collect(),
        RpCertificate::Join { children }
        | RpCertificate::Replacement {
            components: children,
            ..
        } => children.iter().collect(),
        _ => Vec::new(),
    }
}

fn collect_sites(cert: &RpCertificate, route: &mut Vec<usize>, out: &mut Vec<Site>) {
    let fields = match cert {
        RpCertificate::Singleton { .. } => 1,
        RpCertificate::Path { order } => order.len(),
        RpCertificate::Split { entries, .. } => entries.iter().map(|e| e.part.len()).sum(),
        _ => 0,
    };
    for i in 0..fields {
        let mut s = route.clone();
        s.push(usize::MAX - i);
        out.push(s);
    }
    for (i, c) in children(cert).into_iter().enumerate() {
        route.push(i);
        collect_sites(c, route, out);
        route.pop();
    }
}

fn change(cert: &RpCertificate, site: &[usize], to: usize) -> RpCertificate {
    let mut out = cert.clone();
    let mut node = &mut out;
    for &step in &site[..site.len() - 1] {
        node = match node {
            RpCertificate::Split { entries, .. } => {
                let e = &mut entries[step / 2];
                if step % 2 == 0 {
                    &mut e.cert_a
                } else {
                    &mut e.cert_b
                }
            }
            RpCertificate::Join { children }
            | RpCertificate::Replacement {
                components: children,
                ..
            } => &mut children[step],
            _ => unreachable!(),
        };
    }
    let i = usize::MAX - site[site.len() - 1];
    match node {
        RpCertificate::Singleton { vertex } => *vertex = to,
        RpCertificate::Path { order } => order[i] = to,
        RpCertificate::Split { entries, .. } => {
            let mut i = i;
            for e in entries.iter_mut() {
                if i < e.part.len() {
                    e.part[i] = to;
                    break;
                }
                i -= e.part.len();
            }
        }
        _ => unreachable!(),
    }
    out
}

#[test]
fn implication_chain_on_small_graphs() {
    let b = SolverBudget::default();
    for n in 1..=6 {
        for g in graphs_up_to_iso(n).into_iter().filter(|g| g.is_connected()) {
            let rp = is_rp(&g, b).unwrap().verdict;
            let ap = is_ap(&g, b).unwrap().verdict;
            if is_traceable(&g).unwrap() {
                assert!(rp, "{}", g.to_edge_list());
            }
            if rp {
                assert!(ap, "{}", g.to_edge_list());
            }
            if ap {
                assert_ne!(
                    rpgraph::graph::matching_status(&g),
                    rpgraph::graph::MatchingStatus::Neither
                );
            }
        }
    }
}

#[test]
fn complete_multipartite_criterion() {
    fn parts(n: usize, lo: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            if prefix.len() >= 2 {
                out.push(prefix.clone());
            }
            return;
        }
        for p in lo..=n {
            prefix.push(p);
            parts(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    for n in 2..=9 {
        let mut all = Vec::new();
        parts(n, 1, &mut Vec::new(), &mut all);
        for p in all {
            let g = build_complete_multipartite(&p).unwrap();
            let rp = is_rp(&g, SolverBudget::default()).unwrap().verdict;
            assert_eq!(rp, independence_number(&g) <= n.div_ceil(2), "KM{p:?}");
        }
    }
}

#[test]
fn k_connected_graphs_realize_every_k_partition() {
    let b = SolverBudget::default();
    for n in 2..=7 {
        for g in graphs_up_to_iso(n) {
            let kappa = vertex_connectivity(&g).unwrap_or(n - 1);
            if kappa < 2 {
                continue;
            }
            let mut solver = ApSolver::new(&g, b).unwrap();
            for k in 2..=kappa {
                for p in enumerate_integer_partitions(n, Some(k)).filter(|p| p.parts().len() == k) {
                    assert!(
                        solver.realize(g.all(), &p).unwrap().is_some(),
                        "{} {p}",
                        g.to_edge_list()
                    );
                }
            }
        }
    }
}
