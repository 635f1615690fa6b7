//! Builders for the named graph families and the two RP-preserving
//! combinators: sequential join and semistar replacement.
//!
//! Vertex labels are fixed per builder:
//! - `P<n>`, `C<n>`: `0, 1, ..., n-1` along the path or cycle.
//! - `KM(p1,...,pt)`: part `i` is a consecutive block, in the given order.
//! - `T(a,b,c)`: centre `0`, then the arms in order, each listed outwards
//!   from the centre.
//! - `B(b1,...,bk)`: `u = 0`, `v = 1`, then each path in order from the end
//!   adjacent to `u` to the end adjacent to `v`.
//! - `K<b0>(b1,...,bk)`, joins and replacements: blocks in the given order.

mod expr;

pub use expr::Family;
pub(crate) use expr::Lexer;

use crate::certificate::{verify_certificate, RpCertificate, SplitEntry};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::semistar::{signature_is_rp, SemistarEntries};

/// A built graph, an optional RP certificate that verifies against it, and
/// the family expression it came from when there is one.
#[derive(Debug, Clone)]
pub struct ConstructionResult {
    pub graph: Graph,
    pub certificate: Option<RpCertificate>,
    pub provenance: Option<Family>,
}

/// A member of the `H(s,j)` family with its designated cut.
#[derive(Debug, Clone)]
pub struct CorollaryGraph {
    pub result: ConstructionResult,
    /// `s` vertices whose removal leaves `2s + 1` components.
    pub cut: VertexSet,
}

fn check_order(n: usize, what: &'static str) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Budget {
            what,
            n,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

pub fn build_path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Invalid(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    let mut g = build_path(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

pub fn build_complete_multipartite(part_sizes: &[usize]) -> Result<Graph> {
    if part_sizes.is_empty() || part_sizes.contains(&0) {
        return Err(Error::Invalid("part sizes must be positive".into()));
    }
    let n: usize = part_sizes.iter().sum();
    check_order(n, "complete multipartite graph")?;
    let mut g = Graph::empty(n)?;
    let mut start = 0;
    for &p in part_sizes {
        for u in start..start + p {
            for v in start + p..n {
                g.add_edge(u, v)?;
            }
        }
        start += p;
    }
    Ok(g)
}

pub fn build_tripode(a: usize, b: usize, c: usize) -> Result<Graph> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Invalid("tripode arms must be positive".into()));
    }
    let n = a + b + c + 1;
    check_order(n, "tripode")?;
    let mut g = Graph::empty(n)?;
    let mut next = 1;
    for arm in [a, b, c] {
        let mut prev = 0;
        for _ in 0..arm {
            g.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

/// Zero-length paths are rejected; `u` and `v` stay nonadjacent.
pub fn build_balloon(paths: &[usize]) -> Result<Graph> {
    if paths.is_empty() {
        return Err(Error::Invalid("a balloon needs at least one path".into()));
    }
    if paths.contains(&0) {
        return Err(Error::Invalid(
            "balloon paths must have positive order".into(),
        ));
    }
    let n = paths.iter().sum::<usize>() + 2;
    check_order(n, "balloon")?;
    let mut g = Graph::empty(n)?;
    let mut start = 2;
    for &b in paths {
        g.add_edge(0, start)?;
        for i in start + 1..start + b {
            g.add_edge(i - 1, i)?;
        }
        g.add_edge(start + b - 1, 1)?;
        start += b;
    }
    Ok(g)
}

fn clique_certificate(offset: usize, n: usize) -> RpCertificate {
    if n == 1 {
        RpCertificate::Singleton { vertex: offset }
    } else {
        RpCertificate::Path {
            order: (offset..offset + n).collect(),
        }
    }
}

fn plain(graph: Graph) -> ConstructionResult {
    ConstructionResult {
        graph,
        certificate: None,
        provenance: None,
    }
}

fn traceable(graph: Graph, order: Vec<usize>) -> ConstructionResult {
    let certificate = Some(if order.len() == 1 {
        RpCertificate::Singleton { vertex: order[0] }
    } else {
        RpCertificate::Path { order }
    });
    ConstructionResult {
        graph,
        certificate,
        provenance: None,
    }
}

/// `G_1 + ... + G_t`: disjoint union plus every edge between consecutive
/// blocks. With one valid certificate per part the result carries a join
/// certificate.
pub fn sequential_join(
    parts: &[Graph],
    certs: Option<&[RpCertificate]>,
) -> Result<ConstructionResult> {
    if parts.is_empty() {
        return Err(Error::Invalid("a join needs at least one part".into()));
    }
    let n: usize = parts.iter().map(Graph::n).sum();
    check_order(n, "sequential join")?;
    if let Some(certs) = certs {
        if certs.len() != parts.len() {
            return Err(Error::Invalid(format!(
                "{} certificates for {} parts",
                certs.len(),
                parts.len()
            )));
        }
        for (i, (g, c)) in parts.iter().zip(certs).enumerate() {
            if let Some(reason) = verify_certificate(g, c).failure_reason {
                return Err(Error::Invalid(format!("certificate of part {i}: {reason}")));
            }
        }
    }
    let mut g = Graph::empty(n)?;
    let mut offsets = Vec::with_capacity(parts.len());
    let mut start = 0;
    for (i, p) in parts.iter().enumerate() {
        for (u, v) in p.edges() {
            g.add_edge(start + u, start + v)?;
        }
        if i > 0 {
            let prev = offsets[i - 1];
            for u in prev..start {
                for v in start..start + p.n() {
                    g.add_edge(u, v)?;
                }
            }
        }
        offsets.push(start);
        start += p.n();
    }
    let certificate = certs.map(|certs| RpCertificate::Join {
        children: certs
            .iter()
            .zip(&offsets)
            .map(|(c, &off)| c.shifted(off))
            .collect(),
    });
    Ok(ConstructionResult {
        graph: g,
        certificate,
        provenance: None,
    })
}

/// `G_0 + (G_1 ∪ ... ∪ G_k)` for an RP template `K<b0>(b1,...,bk)`, with
/// `components[i]` matched to the `i`-th entry of the template as written.
pub fn build_replacement(
    template: &SemistarEntries,
    components: &[ConstructionResult],
) -> Result<ConstructionResult> {
    let entries = template.entries();
    if components.len() != entries.len() {
        return Err(Error::Invalid(format!(
            "template {template} needs {} components, got {}",
            entries.len(),
            components.len()
        )));
    }
    for (i, (c, &b)) in components.iter().zip(&entries).enumerate() {
        if c.graph.n() != b as usize {
            return Err(Error::Invalid(format!(
                "component {i} has order {} but the template entry is {b}",
                c.graph.n()
            )));
        }
    }
    check_order(template.order() as usize, "replacement graph")?;
    let verdict = signature_is_rp(&template.canonical());
    let Some(signature_certificate) = verdict.certificate else {
        return Err(Error::NotRp(template.to_string()));
    };
    let mut certs = Vec::with_capacity(components.len());
    for (i, c) in components.iter().enumerate() {
        let cert = c
            .certificate
            .as_ref()
            .ok_or_else(|| Error::Invalid(format!("component {i} has no RP certificate")))?;
        if let Some(reason) = verify_certificate(&c.graph, cert).failure_reason {
            return Err(Error::Invalid(format!(
                "certificate of component {i}: {reason}"
            )));
        }
        certs.push(cert);
    }
    let n = template.order() as usize;
    let b0 = template.center as usize;
    let mut g = Graph::empty(n)?;
    let mut shifted = Vec::with_capacity(components.len());
    let mut start = 0;
    for (c, cert) in components.iter().zip(certs) {
        for (u, v) in c.graph.edges() {
            g.add_edge(start + u, start + v)?;
        }
        shifted.push(cert.shifted(start));
        start += c.graph.n();
    }
    for u in 0..b0 {
        for v in b0..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(ConstructionResult {
        graph: g,
        certificate: Some(RpCertificate::Replacement {
            template: template.clone(),
            signature_certificate,
            components: shifted,
        }),
        provenance: None,
    })
}

/// Largest `j` for which `H(1,j)` gets an explicit certificate; the tree
/// grows exponentially in the arm length.
pub const TRIPODE_CERT_MAX_J: usize = 12;

/// Elementary certificate for the tripode with leaves `l1`, `l2`, centre
/// `center` and an even-length third arm listed outwards.
fn tripode_certificate(l1: usize, l2: usize, center: usize, arm: &[usize]) -> RpCertificate {
    let c = arm.len();
    debug_assert!(c.is_multiple_of(2));
    if c == 0 {
        return RpCertificate::Path {
            order: vec![l1, center, l2],
        };
    }
    let mut vertices: Vec<usize> = [l1, l2, center]
        .into_iter()
        .chain(arm.iter().copied())
        .collect();
    vertices.sort_unstable();
    let sorted = |v: &[usize]| {
        let mut v = v.to_vec();
        v.sort_unstable();
        v
    };
    let entries = (1..=(c + 3) / 2)
        .map(|a| {
            let (part, cert_a, cert_b) = if a == 1 {
                let mut rest = vec![l2, center];
                rest.extend_from_slice(arm);
                (
                    vec![l1],
                    RpCertificate::Singleton { vertex: l1 },
                    RpCertificate::Path { order: rest },
                )
            } else if a % 2 == 1 {
                let (head, tail) = arm.split_at(a - 3);
                let mut part = vec![l1, l2, center];
                part.extend_from_slice(head);
                (
                    sorted(&part),
                    tripode_certificate(l1, l2, center, head),
                    RpCertificate::Path {
                        order: tail.to_vec(),
                    },
                )
            } else {
                let (head, tail) = arm.split_at(c - a);
                (
                    sorted(tail),
                    RpCertificate::Path {
                        order: tail.to_vec(),
                    },
                    tripode_certificate(l1, l2, center, head),
                )
            };
            SplitEntry {
                a,
                part,
                cert_a,
                cert_b,
            }
        })
        .collect();
    RpCertificate::Split { vertices, entries }
}

/// `H(1,j) = T(1,1,2j)`, `H(2,j) = K2(1,1,2,6,j)` and
/// `H(s+2,j) = K2 + (K1 ∪ K1 ∪ K2 ∪ K6 ∪ H(s,j))`, each with a cut of size
/// `s` leaving `2s + 1` components.
pub fn build_corollary_family(s: usize, j: usize) -> Result<CorollaryGraph> {
    if s == 0 || j == 0 {
        return Err(Error::Invalid("H(s,j) needs s >= 1 and j >= 1".into()));
    }
    let n = if s % 2 == 1 {
        2 * j + 3 + 12 * (s / 2)
    } else {
        j + 12 + 12 * (s / 2 - 1)
    };
    check_order(n, "H(s,j)")?;
    let (mut current, mut cut) = if s % 2 == 1 {
        if j > TRIPODE_CERT_MAX_J {
            return Err(Error::Budget {
                what: "tripode certificate arm half-length",
                n: j,
                max: TRIPODE_CERT_MAX_J,
            });
        }
        let graph = build_tripode(1, 1, 2 * j)?;
        let arm: Vec<usize> = (3..3 + 2 * j).collect();
        let certificate = Some(tripode_certificate(1, 2, 0, &arm));
        (
            ConstructionResult {
                graph,
                certificate,
                provenance: None,
            },
            vec![0usize],
        )
    } else {
        let template = SemistarEntries::new(2, [1, 1, 2, 6, j as u32]);
        let components: Vec<ConstructionResult> = template
            .entries()
            .iter()
            .map(|&b| from_clique(b as usize))
            .collect::<Result<_>>()?;
        (build_replacement(&template, &components)?, vec![0, 1])
    };
    let mut level = 2 - s % 2;
    while level < s {
        let inner_n = current.graph.n();
        let template = SemistarEntries::new(2, [1, 1, 2, 6, inner_n as u32]);
        let mut components: Vec<ConstructionResult> = [2usize, 1, 1, 2, 6]
            .iter()
            .map(|&b| from_clique(b))
            .collect::<Result<_>>()?;
        components.push(current);
        current = build_replacement(&template, &components)?;
        let offset = 12;
        cut = [0, 1]
            .into_iter()
            .chain(cut.iter().map(|&v| v + offset))
            .collect();
        level += 2;
    }
    current.provenance = Some(Family::Corollary { s, j });
    let cut = VertexSet::new(current.graph.n(), cut)?;
    Ok(CorollaryGraph {
        result: current,
        cut,
    })
}

fn from_clique(b: usize) -> Result<ConstructionResult> {
    Ok(ConstructionResult {
        graph: Graph::complete(b)?,
        certificate: Some(clique_certificate(0, b)),
        provenance: None,
    })
}

/// Builds the graph named by a family expression.
///
/// Paths, cycles and cliques carry path certificates; RP semistars, joins
/// of certified parts, replacements and `H(s,j)` carry theorem-backed
/// certificates; the remaining families carry none.
pub fn build(family: &Family) -> Result<ConstructionResult> {
    let mut out = match family {
        Family::Path(n) => traceable(build_path(*n)?, (0..*n).collect()),
        Family::Cycle(n) => traceable(build_cycle(*n)?, (0..*n).collect()),
        Family::Clique(n) => traceable(Graph::complete(*n)?, (0..*n).collect()),
        Family::Empty(n) => {
            let g = Graph::empty(*n)?;
            if *n == 1 {
                traceable(g, vec![0])
            } else {
                plain(g)
            }
        }
        Family::CompleteMultipartite(p) => plain(build_complete_multipartite(p)?),
        Family::Tripode(a, b, c) => plain(build_tripode(*a, *b, *c)?),
        Family::Balloon(b) => plain(build_balloon(b)?),
        Family::Semistar(entries) => {
            let graph = entries.realize()?;
            if entries.entries().contains(&0) {
                plain(graph)
            } else {
                let components: Vec<ConstructionResult> = entries
                    .entries()
                    .iter()
                    .map(|&b| from_clique(b as usize))
                    .collect::<Result<_>>()?;
                match build_replacement(entries, &components) {
                    Ok(r) => r,
                    Err(Error::NotRp(_)) => plain(graph),
                    Err(e) => return Err(e),
                }
            }
        }
        Family::Join(parts) => {
            let built: Vec<ConstructionResult> = parts.iter().map(build).collect::<Result<_>>()?;
            let graphs: Vec<Graph> = built.iter().map(|b| b.graph.clone()).collect();
            let certs: Option<Vec<RpCertificate>> =
                built.iter().map(|b| b.certificate.clone()).collect();
            sequential_join(&graphs, certs.as_deref())?
        }
        Family::Replacement {
            template,
            components,
        } => {
            let built: Vec<ConstructionResult> =
                components.iter().map(build).collect::<Result<_>>()?;
            build_replacement(template, &built)?
        }
        Family::Corollary { s, j } => build_corollary_family(*s, *j)?.result,
    };
    out.provenance = Some(family.clone());
    Ok(out)
}
