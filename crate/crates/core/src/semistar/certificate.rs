use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::solver::children;
use super::Signature;

/// One split of a signature node: `x[0]` centre vertices and `x[i]` vertices
/// of the `i`-th leaf (canonical order) go to the side of size `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigSplit {
    pub a: u32,
    pub x: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SigCertNode {
    /// The signature is a single clique.
    Clique,
    /// The signature has at most `b0 + 1` leaves and is therefore traceable.
    Path,
    Split {
        splits: Vec<SigSplit>,
    },
}

/// RP witness for a signature, stored as a table of nodes keyed by canonical
/// signature. Children of a split are looked up by their canonical form, so
/// shared sub-signatures are stored once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureCertificate {
    pub root: Signature,
    pub nodes: BTreeMap<Signature, SigCertNode>,
}

pub fn verify_signature_certificate(sig: &Signature, cert: &SignatureCertificate) -> bool {
    check_signature_certificate(sig, cert).is_ok()
}

/// Arithmetic check of a signature certificate; the error names the first
/// offending node.
pub fn check_signature_certificate(
    sig: &Signature,
    cert: &SignatureCertificate,
) -> Result<(), String> {
    if &cert.root != sig {
        return Err(format!(
            "certificate root {} does not match {sig}",
            cert.root
        ));
    }
    let mut done = HashMap::new();
    check_node(sig, cert, &mut done)
}

fn check_node(
    sig: &Signature,
    cert: &SignatureCertificate,
    done: &mut HashMap<Signature, ()>,
) -> Result<(), String> {
    if done.contains_key(sig) {
        return Ok(());
    }
    let node = cert
        .nodes
        .get(sig)
        .ok_or_else(|| format!("no node for {sig}"))?;
    match node {
        SigCertNode::Clique if !sig.is_clique() => return Err(format!("{sig} is not a clique")),
        SigCertNode::Path if !sig.is_traceable() => {
            return Err(format!("{sig} has more than b0+1 leaves"))
        }
        SigCertNode::Clique | SigCertNode::Path => {}
        SigCertNode::Split { splits } => {
            if !sig.is_connected() {
                return Err(format!("{sig} is disconnected"));
            }
            let n = sig.order();
            let half = n / 2;
            let mut seen = vec![false; half as usize + 1];
            for sp in splits {
                if sp.a == 0 || sp.a > half {
                    return Err(format!("{sig}: split size {} outside 1..={half}", sp.a));
                }
                if std::mem::replace(&mut seen[sp.a as usize], true) {
                    return Err(format!("{sig}: split size {} repeated", sp.a));
                }
                if sp.x.len() != sig.leaf_count() + 1 {
                    return Err(format!("{sig}: split vector has wrong length"));
                }
                let within = sp.x[0] <= sig.center()
                    && sp.x[1..].iter().zip(sig.leaves()).all(|(&x, &b)| x <= b);
                if !within {
                    return Err(format!("{sig}: split vector {:?} exceeds entries", sp.x));
                }
                if sp.x.iter().sum::<u32>() != sp.a {
                    return Err(format!(
                        "{sig}: split vector {:?} does not sum to {}",
                        sp.x, sp.a
                    ));
                }
                let (a_sig, b_sig) = children(sig, &sp.x);
                check_node(&a_sig, cert, done)?;
                check_node(&b_sig, cert, done)?;
            }
            if let Some(a) = (1..=half).find(|&a| !seen[a as usize]) {
                return Err(format!("{sig}: no split of size {a}"));
            }
        }
    }
    done.insert(sig.clone(), ());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semistar::signature_is_rp;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn clique_leaf() {
        let s = sig("K0(4)");
        let cert = SignatureCertificate {
            root: s.clone(),
            nodes: BTreeMap::from([(s.clone(), SigCertNode::Clique)]),
        };
        assert!(verify_signature_certificate(&s, &cert));
        let bad = sig("K1(1,1)");
        let cert = SignatureCertificate {
            root: bad.clone(),
            nodes: BTreeMap::from([(bad.clone(), SigCertNode::Clique)]),
        };
        assert!(!verify_signature_certificate(&bad, &cert));
    }

    #[test]
    fn missing_split_size_is_rejected() {
        let s = sig("K2(1,1,2,6,3)");
        let mut cert = signature_is_rp(&s).certificate.unwrap();
        assert!(verify_signature_certificate(&s, &cert));
        if let Some(SigCertNode::Split { splits }) = cert.nodes.get_mut(&s) {
            splits.pop();
        }
        let err = check_signature_certificate(&s, &cert).unwrap_err();
        assert!(err.contains("no split of size 7"), "{err}");
    }

    #[test]
    fn tampered_vector_is_rejected() {
        let s = sig("K2(1,2,2,3,4)");
        let mut cert = signature_is_rp(&s).certificate.unwrap();
        if let Some(SigCertNode::Split { splits }) = cert.nodes.get_mut(&s) {
            splits[2].x[0] += 1;
        }
        assert!(!verify_signature_certificate(&s, &cert));
    }

    #[test]
    fn root_mismatch() {
        let s = sig("K2(1,1)");
        let cert = signature_is_rp(&s).certificate.unwrap();
        assert!(!verify_signature_certificate(&sig("K2(1,2)"), &cert));
    }
}
