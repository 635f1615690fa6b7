//! Minimal RP semistars for a fixed centre size and leaf count.
//!
//! Candidates are processed by total order, so every RP proper subsignature
//! of a candidate is decided before the candidate itself. A candidate that
//! dominates an already found minimal signature is skipped without being
//! solved; nothing is inferred about supersignatures from RP-ness.

use super::{Signature, SignatureSolver};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSetResult {
    pub center: u32,
    pub k: usize,
    pub bound: u32,
    pub minimal_signatures: Vec<Signature>,
    /// True when every boxed vector with an entry at the bound dominates a
    /// found minimal signature: then no minimal signature lies outside the
    /// box and the list is complete.
    pub exhaustive_below_bound: bool,
    pub candidates: usize,
    pub solved: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minimality {
    pub is_minimal: bool,
    pub witness: Option<Signature>,
    pub candidates: usize,
}

/// Entrywise `small <= large` on sorted leaf vectors of equal length.
pub(crate) fn dominated_by(small: &[u32], large: &[u32]) -> bool {
    small.len() == large.len() && small.iter().zip(large).all(|(s, l)| s <= l)
}

/// Non-decreasing vectors with `1 <= v[i] <= caps[i]`, ordered by sum then
/// lexicographically.
fn sorted_vectors(caps: &[u32]) -> Vec<Vec<u32>> {
    fn go(caps: &[u32], prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let i = prefix.len();
        if i == caps.len() {
            out.push(prefix.clone());
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1);
        for v in lo..=caps[i] {
            prefix.push(v);
            go(caps, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(caps, &mut Vec::with_capacity(caps.len()), &mut out);
    out.sort_by(|a, b| {
        let sa: u32 = a.iter().sum();
        let sb: u32 = b.iter().sum();
        sa.cmp(&sb).then_with(|| a.cmp(b))
    });
    out
}

impl SignatureSolver {
    pub fn enumerate_minimal(
        &mut self,
        center: u32,
        k: usize,
        bound: u32,
    ) -> Result<MinimalSetResult> {
        if bound == 0 || k == 0 {
            return Err(Error::Invalid(
                "bound and leaf count must be positive".into(),
            ));
        }
        let candidates = sorted_vectors(&vec![bound; k]);
        let mut minimal: Vec<Vec<u32>> = Vec::new();
        let mut solved = 0;
        for v in &candidates {
            if minimal.iter().any(|m| dominated_by(m, v)) {
                continue;
            }
            solved += 1;
            if self.is_rp(&Signature::new(center, v.iter().copied())) {
                minimal.push(v.clone());
            }
        }
        let exhaustive = candidates
            .iter()
            .filter(|v| v[k - 1] == bound)
            .all(|v| minimal.iter().any(|m| dominated_by(m, v)));
        Ok(MinimalSetResult {
            center,
            k,
            bound,
            minimal_signatures: minimal
                .into_iter()
                .map(|m| Signature::new(center, m))
                .collect(),
            exhaustive_below_bound: exhaustive,
            candidates: candidates.len(),
            solved,
        })
    }

    /// Tests every dominated signature with the same centre and leaf count;
    /// the witness is the first RP one by total order.
    pub fn check_minimality(&mut self, sig: &Signature) -> Result<Minimality> {
        if !self.is_rp(sig) {
            return Err(Error::NotRp(sig.to_string()));
        }
        let candidates: Vec<Vec<u32>> = sorted_vectors(sig.leaves())
            .into_iter()
            .filter(|v| v.as_slice() != sig.leaves())
            .collect();
        let count = candidates.len();
        for v in candidates {
            let cand = Signature::new(sig.center(), v);
            if self.is_rp(&cand) {
                return Ok(Minimality {
                    is_minimal: false,
                    witness: Some(cand),
                    candidates: count,
                });
            }
        }
        Ok(Minimality {
            is_minimal: true,
            witness: None,
            candidates: count,
        })
    }
}

pub fn enumerate_minimal_rp_semistars(
    center: u32,
    k: usize,
    bound: u32,
) -> Result<MinimalSetResult> {
    SignatureSolver::new().enumerate_minimal(center, k, bound)
}

pub fn check_minimality(sig: &Signature) -> Result<Minimality> {
    SignatureSolver::new().check_minimality(sig)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_order() {
        let v = sorted_vectors(&[2, 3]);
        assert_eq!(
            v,
            vec![vec![1, 1], vec![1, 2], vec![1, 3], vec![2, 2], vec![2, 3]]
        );
        assert!(dominated_by(&[1, 1, 2], &[1, 2, 2]));
        assert!(!dominated_by(&[1, 3], &[2, 2]));
    }

    #[test]
    fn unique_minimal_one_three() {
        let r = enumerate_minimal_rp_semistars(1, 3, 6).unwrap();
        assert_eq!(r.minimal_signatures, vec![Signature::new(1, [1, 1, 2])]);
        assert!(r.exhaustive_below_bound);
    }

    #[test]
    fn non_minimal_witness() {
        let m = check_minimality(&Signature::new(2, [1, 1, 2, 6, 1])).unwrap();
        assert!(!m.is_minimal);
        assert_eq!(m.witness, Some(Signature::new(2, [1, 1, 1, 2, 4])));
        assert!(matches!(
            check_minimality(&Signature::new(1, [1, 1, 3])),
            Err(Error::NotRp(_))
        ));
    }

    #[test]
    fn clique_with_zero_centre() {
        // every smaller clique is an RP proper subgraph
        let m = check_minimality(&Signature::new(0, [5])).unwrap();
        assert!(!m.is_minimal);
        assert_eq!(m.witness, Some(Signature::new(0, [1])));
        assert!(
            check_minimality(&Signature::new(0, [1]))
                .unwrap()
                .is_minimal
        );
    }
}
