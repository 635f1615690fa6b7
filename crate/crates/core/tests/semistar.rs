use proptest::prelude::*;
use rpgraph::partition::{is_rp, SolverBudget};
use rpgraph::semistar::{check_signature_certificate, SignatureSolver};
use rpgraph::{SemistarEntries, Signature};

fn entries(
    max_center: u32,
    max_leaves: usize,
    max_leaf: u32,
) -> impl Strategy<Value = SemistarEntries> {
    (
        0..=max_center,
        prop::collection::vec(0..=max_leaf, 0..=max_leaves),
    )
        .prop_map(|(c, l)| SemistarEntries::new(c, l))
        .prop_filter("nonempty", |e| e.order() > 0)
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent(e in entries(4, 7, 6)) {
        let sig = e.canonical();
        prop_assert_eq!(SemistarEntries::from(&sig).canonical(), sig.clone());
        prop_assert_eq!(sig.to_string().parse::<Signature>().unwrap(), sig.clone());
        prop_assert_eq!(e.to_string().parse::<SemistarEntries>().unwrap(), e.clone());
        prop_assert!(sig.leaves().windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(!sig.leaves().contains(&0));
        prop_assert_eq!(sig.order(), e.order());
    }

    #[test]
    fn verdict_ignores_order_and_zero_padding(
        e in entries(3, 5, 4).prop_filter("small", |e| e.order() <= 10),
        shuffle in any::<prop::sample::Index>(),
        zeros in 0usize..3,
    ) {
        let mut leaves = e.leaves.clone();
        if !leaves.is_empty() {
            let r = shuffle.index(leaves.len());
            leaves.rotate_left(r);
            leaves.reverse();
        }
        leaves.extend(std::iter::repeat_n(0, zeros));
        let other = SemistarEntries::new(e.center, leaves);
        prop_assert_eq!(other.canonical(), e.canonical());
        let b = SolverBudget::default();
        let a = is_rp(&e.realize().unwrap(), b).unwrap().verdict;
        prop_assert_eq!(a, is_rp(&other.realize().unwrap(), b).unwrap().verdict);
        prop_assert_eq!(a, SignatureSolver::new().is_rp(&e.canonical()));
    }

    #[test]
    fn solver_certificates_check(e in entries(4, 7, 6)) {
        let sig = e.canonical();
        let v = SignatureSolver::new().decide(&sig);
        prop_assert_eq!(v.verdict, v.certificate.is_some());
        if let Some(cert) = v.certificate {
            prop_assert_eq!(check_signature_certificate(&sig, &cert), Ok(()));
            let text = serde_json::to_string(&cert).unwrap();
            prop_assert_eq!(serde_json::from_str::<rpgraph::semistar::SignatureCertificate>(&text).unwrap(), cert);
        }
    }
}

/// Multisets of `k` leaves with entries in `1..=max`.
fn leaf_sets(k: usize, max: u32) -> Vec<Vec<u32>> {
    fn go(k: usize, lo: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for v in lo..=max {
            prefix.push(v);
            go(k, v, max, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, 1, max, &mut Vec::new(), &mut out);
    out
}

#[test]
fn leaf_count_respects_cut_bound() {
    let mut solver = SignatureSolver::new();
    for (center, max_leaf) in [(1u32, 6u32), (2, 4), (3, 2)] {
        let limit = if center == 1 {
            3
        } else {
            3 * center as usize - 1
        };
        for k in limit + 1..=limit + 2 {
            for leaves in leaf_sets(k, max_leaf) {
                let sig = Signature::new(center, leaves);
                assert!(!solver.is_rp(&sig), "{sig}");
            }
        }
    }
}

#[test]
fn certificate_with_missing_size_is_rejected() {
    let sig: Signature = "K2(1,1)".parse().unwrap();
    let mut solver = SignatureSolver::new();
    let cert = solver.certificate(&"K1(1,1,2)".parse().unwrap()).unwrap();
    assert!(check_signature_certificate(&"K1(1,1,2)".parse().unwrap(), &cert).is_ok());
    let mut broken = cert.clone();
    for node in broken.nodes.values_mut() {
        if let rpgraph::semistar::SigCertNode::Split { splits } = node {
            splits.pop();
        }
    }
    assert!(check_signature_certificate(&"K1(1,1,2)".parse().unwrap(), &broken).is_err());
    assert!(solver.is_rp(&sig));
}
