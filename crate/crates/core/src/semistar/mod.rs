//! Semistars `K_{b0}(b1,...,bk)`: a centre clique joined to disjoint leaf cliques.
//!
//! Induced subgraphs of a semistar are again semistars, so RP-ness can be
//! decided over integer vectors instead of vertex sets. [`Signature`] is the
//! canonical (sorted, zero-free) form used as memo key; [`SemistarEntries`]
//! keeps a positional entry list for templates and table rows.

mod certificate;
mod minimal;
mod solver;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub use certificate::{
    check_signature_certificate, verify_signature_certificate, SigCertNode, SigSplit,
    SignatureCertificate,
};
pub use minimal::{check_minimality, enumerate_minimal_rp_semistars, MinimalSetResult, Minimality};
pub use solver::{signature_is_rp, SignatureSolver, SignatureVerdict};

/// Canonical semistar signature: leaves sorted ascending with zeros removed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    center: u32,
    leaves: Vec<u32>,
}

impl Signature {
    pub fn new(center: u32, leaves: impl IntoIterator<Item = u32>) -> Self {
        let mut leaves: Vec<u32> = leaves.into_iter().filter(|&b| b > 0).collect();
        leaves.sort_unstable();
        Signature { center, leaves }
    }

    pub fn center(&self) -> u32 {
        self.center
    }

    pub fn leaves(&self) -> &[u32] {
        &self.leaves
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn order(&self) -> u32 {
        self.center + self.leaves.iter().sum::<u32>()
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && (self.center >= 1 || self.leaves.len() <= 1)
    }

    /// A single clique block (possibly joined to the centre).
    pub fn is_clique(&self) -> bool {
        self.order() > 0 && self.leaves.len() <= 1
    }

    /// Spanning path exists iff consecutive leaf cliques can be bridged by
    /// distinct centre vertices.
    pub fn is_traceable(&self) -> bool {
        self.is_connected() && self.leaves.len() <= self.center as usize + 1
    }

    /// Concrete graph: centre vertices first, then leaf cliques in order.
    pub fn realize(&self) -> Result<Graph> {
        SemistarEntries::from(self).realize()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_syntax(f, self.center, &self.leaves)
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(s.parse::<SemistarEntries>()?.canonical())
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Signature {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Positional entry list `(b0; b1,...,bk)`, zeros and order preserved.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemistarEntries {
    pub center: u32,
    pub leaves: Vec<u32>,
}

impl SemistarEntries {
    pub fn new(center: u32, leaves: impl IntoIterator<Item = u32>) -> Self {
        SemistarEntries {
            center,
            leaves: leaves.into_iter().collect(),
        }
    }

    pub fn canonical(&self) -> Signature {
        Signature::new(self.center, self.leaves.iter().copied())
    }

    pub fn order(&self) -> u32 {
        self.center + self.leaves.iter().sum::<u32>()
    }

    /// Entries as one vector `[b0, b1, ..., bk]`.
    pub fn entries(&self) -> Vec<u32> {
        std::iter::once(self.center)
            .chain(self.leaves.iter().copied())
            .collect()
    }

    pub fn realize(&self) -> Result<Graph> {
        let n = self.order() as usize;
        if n > MAX_VERTICES {
            return Err(Error::Budget {
                what: "semistar realisation",
                n,
                max: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n)?;
        let b0 = self.center as usize;
        for u in 0..b0 {
            for v in u + 1..n {
                g.add_edge(u, v)?;
            }
        }
        let mut start = b0;
        for &b in &self.leaves {
            let end = start + b as usize;
            for u in start..end {
                for v in u + 1..end {
                    g.add_edge(u, v)?;
                }
            }
            start = end;
        }
        Ok(g)
    }
}

impl From<&Signature> for SemistarEntries {
    fn from(sig: &Signature) -> Self {
        SemistarEntries::new(sig.center, sig.leaves.iter().copied())
    }
}

impl fmt::Display for SemistarEntries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_syntax(f, self.center, &self.leaves)
    }
}

impl fmt::Debug for SemistarEntries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SemistarEntries {
    type Err = Error;

    /// Parses `K<b0>(<b1>,...,<bk>)`; spaces around entries are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = crate::constructions::Lexer::new(s);
        let entries = p.semistar()?;
        p.finish()?;
        Ok(entries)
    }
}

fn write_syntax(f: &mut fmt::Formatter<'_>, center: u32, leaves: &[u32]) -> fmt::Result {
    write!(f, "K{center}(")?;
    for (i, b) in leaves.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{b}")?;
    }
    write!(f, ")")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let s: Signature = "K2(6,1,0,2,1)".parse().unwrap();
        assert_eq!(s.to_string(), "K2(1,1,2,6)");
        assert_eq!(s.order(), 12);
        let again: Signature = s.to_string().parse().unwrap();
        assert_eq!(again, s);
        let raw: SemistarEntries = "K1(1,1,2,0,0)".parse().unwrap();
        assert_eq!(raw.leaves, vec![1, 1, 2, 0, 0]);
        assert_eq!(raw.canonical().to_string(), "K1(1,1,2)");
        assert_eq!(raw.to_string(), "K1(1,1,2,0,0)");
        assert!(" K2( 1 , 2 )".parse::<Signature>().is_ok());
        assert!("K2(1,2".parse::<Signature>().is_err());
        assert!("K(1)".parse::<Signature>().is_err());
        assert!("K2(1)x".parse::<Signature>().is_err());
    }

    #[test]
    fn connectivity_and_cliques() {
        assert!(Signature::new(0, [7]).is_clique());
        assert!(!Signature::new(0, [1, 2]).is_connected());
        assert!(Signature::new(3, []).is_clique());
        assert!(Signature::new(2, [4]).is_clique());
        assert!(Signature::new(1, [1, 1]).is_traceable());
        assert!(!Signature::new(1, [1, 1, 1]).is_traceable());
    }

    #[test]
    fn realisation() {
        let g = Signature::new(1, [1, 1, 2]).realize().unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(0), 4);
        assert_eq!(
            Signature::new(0, [3]).realize().unwrap(),
            Graph::complete(3).unwrap()
        );
        // b0(b0-1)/2 + b0 * sum(bi) + sum bi(bi-1)/2 = 1 + 4 + 0
        let g = Signature::new(2, [1, 1]).realize().unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(Signature::new(2, [1, 1, 2, 6, 60]).realize().is_err());
    }
}
