//! RP certificates: witness trees, their independent verifier, and the JSON
//! file format.
//!
//! A certificate file is a JSON object `{"version": 1, "certificate": NODE}`
//! where `NODE` is one of
//!
//! ```text
//! {"kind": "singleton", "vertex": 3}
//! {"kind": "path", "order": [0, 2, 1]}
//! {"kind": "split", "vertices": [0, 1, 2, 3],
//!  "entries": [{"a": 1, "part": [0], "cert_a": NODE, "cert_b": NODE}, ...]}
//! {"kind": "join", "children": [NODE, ...]}
//! {"kind": "replacement", "template": {"center": 1, "leaves": [1, 1, 2]},
//!  "signature_certificate": {"root": "K1(1,1,2)", "nodes": {...}},
//!  "components": [NODE, ...]}
//! ```
//!
//! Vertex sets are sorted arrays of distinct vertex indices of the root graph.

use serde::{Deserialize, Deserializer, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::semistar::{check_signature_certificate, SemistarEntries, SignatureCertificate};

/// One `(a, n - a)` partition inside a split node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitEntry {
    pub a: usize,
    pub part: Vec<usize>,
    pub cert_a: RpCertificate,
    pub cert_b: RpCertificate,
}

/// Witness that the subgraph induced by the covered vertices is RP.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RpCertificate {
    Singleton {
        vertex: usize,
    },
    /// A Hamiltonian path of the covered vertices.
    Path {
        order: Vec<usize>,
    },
    /// One entry for every `a` in `1..=n/2`.
    Split {
        vertices: Vec<usize>,
        entries: Vec<SplitEntry>,
    },
    /// Children in sequential-join order; consecutive blocks are fully joined.
    Join {
        children: Vec<RpCertificate>,
    },
    /// `components[0]` replaces the centre clique, `components[i]` the
    /// `i`-th leaf clique of the template, positionally.
    Replacement {
        template: SemistarEntries,
        signature_certificate: SignatureCertificate,
        components: Vec<RpCertificate>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    /// Only singleton, path and split nodes.
    Elementary,
    /// Uses join or replacement nodes.
    TheoremBacked,
}

impl std::fmt::Display for Tier {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Tier::Elementary => "elementary",
            Tier::TheoremBacked => "theorem_backed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateCheck {
    pub valid: bool,
    pub tier: Tier,
    pub failure_reason: Option<String>,
}

impl RpCertificate {
    pub fn tier(&self) -> Tier {
        match self {
            RpCertificate::Singleton { .. } | RpCertificate::Path { .. } => Tier::Elementary,
            RpCertificate::Split { entries, .. } => {
                if entries.iter().all(|e| {
                    e.cert_a.tier() == Tier::Elementary && e.cert_b.tier() == Tier::Elementary
                }) {
                    Tier::Elementary
                } else {
                    Tier::TheoremBacked
                }
            }
            RpCertificate::Join { .. } | RpCertificate::Replacement { .. } => Tier::TheoremBacked,
        }
    }

    /// Vertices listed by the node, in no particular order.
    pub fn covered(&self) -> Vec<usize> {
        match self {
            RpCertificate::Singleton { vertex } => vec![*vertex],
            RpCertificate::Path { order } => order.clone(),
            RpCertificate::Split { vertices, .. } => vertices.clone(),
            RpCertificate::Join { children } => children.iter().flat_map(|c| c.covered()).collect(),
            RpCertificate::Replacement { components, .. } => {
                components.iter().flat_map(|c| c.covered()).collect()
            }
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + match self {
            RpCertificate::Singleton { .. } | RpCertificate::Path { .. } => 0,
            RpCertificate::Split { entries, .. } => entries
                .iter()
                .map(|e| e.cert_a.size() + e.cert_b.size())
                .sum(),
            RpCertificate::Join { children } => children.iter().map(|c| c.size()).sum(),
            RpCertificate::Replacement { components, .. } => {
                components.iter().map(|c| c.size()).sum()
            }
        }
    }

    /// Renames every vertex through `f`; vertex sets are re-sorted.
    pub fn map_vertices(&self, f: &impl Fn(usize) -> usize) -> RpCertificate {
        let set = |v: &[usize]| {
            let mut out: Vec<usize> = v.iter().map(|&x| f(x)).collect();
            out.sort_unstable();
            out
        };
        match self {
            RpCertificate::Singleton { vertex } => RpCertificate::Singleton { vertex: f(*vertex) },
            RpCertificate::Path { order } => RpCertificate::Path {
                order: order.iter().map(|&v| f(v)).collect(),
            },
            RpCertificate::Split { vertices, entries } => RpCertificate::Split {
                vertices: set(vertices),
                entries: entries
                    .iter()
                    .map(|e| SplitEntry {
                        a: e.a,
                        part: set(&e.part),
                        cert_a: e.cert_a.map_vertices(f),
                        cert_b: e.cert_b.map_vertices(f),
                    })
                    .collect(),
            },
            RpCertificate::Join { children } => RpCertificate::Join {
                children: children.iter().map(|c| c.map_vertices(f)).collect(),
            },
            RpCertificate::Replacement {
                template,
                signature_certificate,
                components,
            } => RpCertificate::Replacement {
                template: template.clone(),
                signature_certificate: signature_certificate.clone(),
                components: components.iter().map(|c| c.map_vertices(f)).collect(),
            },
        }
    }

    /// Adds `offset` to every vertex.
    pub fn shifted(&self, offset: usize) -> RpCertificate {
        self.map_vertices(&|v| v + offset)
    }
}

/// Checks `cert` against `g` without consulting any solver.
pub fn verify_certificate(g: &Graph, cert: &RpCertificate) -> CertificateCheck {
    let tier = cert.tier();
    let outcome = check(g, cert).and_then(|mask| {
        if mask == g.all() {
            Ok(())
        } else {
            Err(format!(
                "certificate covers {} of {} vertices",
                mask.count_ones(),
                g.n()
            ))
        }
    });
    CertificateCheck {
        valid: outcome.is_ok(),
        tier,
        failure_reason: outcome.err(),
    }
}

fn vertex_bit(g: &Graph, v: usize) -> std::result::Result<u64, String> {
    if v < g.n() {
        Ok(1 << v)
    } else {
        Err(format!("vertex {v} out of range for {} vertices", g.n()))
    }
}

/// Mask of a sorted, duplicate-free vertex list.
fn sorted_set(g: &Graph, vs: &[usize], what: &str) -> std::result::Result<u64, String> {
    if vs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(format!("{what} is not a sorted set of distinct vertices"));
    }
    vs.iter().try_fold(0u64, |m, &v| Ok(m | vertex_bit(g, v)?))
}

fn fully_joined(g: &Graph, x: u64, y: u64) -> bool {
    bits(x).all(|u| g.neighbors(u) & y == y)
}

/// Validates a node and returns the set it covers.
fn check(g: &Graph, cert: &RpCertificate) -> std::result::Result<u64, String> {
    match cert {
        RpCertificate::Singleton { vertex } => vertex_bit(g, *vertex),
        RpCertificate::Path { order } => {
            if order.is_empty() {
                return Err("empty path".into());
            }
            let mut mask = 0u64;
            for &v in order {
                let b = vertex_bit(g, v)?;
                if mask & b != 0 {
                    return Err(format!("path repeats vertex {v}"));
                }
                mask |= b;
            }
            if let Some(w) = order.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
                return Err(format!(
                    "non-adjacent consecutive pair ({}, {})",
                    w[0], w[1]
                ));
            }
            Ok(mask)
        }
        RpCertificate::Split { vertices, entries } => {
            let mask = sorted_set(g, vertices, "split vertex list")?;
            if mask == 0 {
                return Err("empty split node".into());
            }
            if !g.is_connected_mask(mask) {
                return Err("split node induces a disconnected subgraph".into());
            }
            let half = vertices.len() / 2;
            let mut seen = vec![false; half + 1];
            for e in entries {
                if e.a == 0 || e.a > half {
                    return Err(format!("split size {} outside 1..={half}", e.a));
                }
                if std::mem::replace(&mut seen[e.a], true) {
                    return Err(format!("split size {} appears twice", e.a));
                }
                let part = sorted_set(g, &e.part, "split part")?;
                if part & !mask != 0 {
                    return Err(format!("part for a={} leaves the node", e.a));
                }
                if e.part.len() != e.a {
                    return Err(format!("part for a={} has {} vertices", e.a, e.part.len()));
                }
                let got_a = check(g, &e.cert_a)?;
                if got_a != part {
                    return Err(format!("cert_a for a={} does not cover the part", e.a));
                }
                let got_b = check(g, &e.cert_b)?;
                if got_b != mask & !part {
                    return Err(format!(
                        "cert_b for a={} does not cover the complement",
                        e.a
                    ));
                }
            }
            if let Some(a) = (1..=half).find(|&a| !seen[a]) {
                return Err(format!("no split of size {a}"));
            }
            Ok(mask)
        }
        RpCertificate::Join { children } => {
            if children.is_empty() {
                return Err("join with no children".into());
            }
            let mut mask = 0u64;
            let mut prev: Option<u64> = None;
            for c in children {
                let m = check(g, c)?;
                if m & mask != 0 {
                    return Err("join children overlap".into());
                }
                if let Some(p) = prev {
                    if !fully_joined(g, p, m) {
                        return Err("consecutive join blocks are not fully adjacent".into());
                    }
                }
                mask |= m;
                prev = Some(m);
            }
            Ok(mask)
        }
        RpCertificate::Replacement {
            template,
            signature_certificate,
            components,
        } => {
            check_signature_certificate(&template.canonical(), signature_certificate)
                .map_err(|e| format!("template certificate: {e}"))?;
            let entries = template.entries();
            if components.len() != entries.len() {
                return Err(format!(
                    "replacement has {} components for {} template entries",
                    components.len(),
                    entries.len()
                ));
            }
            let mut mask = 0u64;
            let mut center = 0u64;
            for (i, (c, &b)) in components.iter().zip(&entries).enumerate() {
                let m = check(g, c)?;
                if m.count_ones() != b {
                    return Err(format!(
                        "component {i} has order {} but the template entry is {b}",
                        m.count_ones()
                    ));
                }
                if m & mask != 0 {
                    return Err("replacement components overlap".into());
                }
                if i == 0 {
                    center = m;
                } else if !fully_joined(g, center, m) {
                    return Err(format!(
                        "centre component is not fully joined to component {i}"
                    ));
                }
                mask |= m;
            }
            Ok(mask)
        }
    }
}

#[derive(Serialize)]
struct CertificateFile<'a> {
    version: u32,
    certificate: &'a RpCertificate,
}

pub const CERTIFICATE_VERSION: u32 = 1;

/// Pretty-printed versioned JSON.
pub fn certificate_to_json(cert: &RpCertificate) -> String {
    serde_json::to_string_pretty(&CertificateFile {
        version: CERTIFICATE_VERSION,
        certificate: cert,
    })
    .expect("certificates always serialize")
}

/// Parses a versioned certificate file. Syntax errors carry line and column;
/// schema errors carry the path of the offending node.
pub fn certificate_from_json(text: &str) -> Result<RpCertificate> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    let root = object(&value, "$")?;
    only_fields(root, "$", &["version", "certificate"])?;
    let version = field(root, "$", "version").and_then(|v| uint(v, "$.version"))?;
    if version != CERTIFICATE_VERSION as usize {
        return Err(Error::Invalid(format!(
            "unsupported certificate version {version} (expected {CERTIFICATE_VERSION})"
        )));
    }
    node(field(root, "$", "certificate")?, "$.certificate")
}

impl<'de> Deserialize<'de> for RpCertificate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let value = Value::deserialize(d)?;
        node(&value, "$").map_err(serde::de::Error::custom)
    }
}

fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.to_string(),
        message: message.into(),
    }
}

fn object<'v>(v: &'v Value, path: &str) -> Result<&'v Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| schema(path, "expected an object"))
}

fn field<'v>(obj: &'v Map<String, Value>, path: &str, name: &str) -> Result<&'v Value> {
    obj.get(name)
        .ok_or_else(|| schema(path, format!("missing field `{name}`")))
}

fn only_fields(obj: &Map<String, Value>, path: &str, allowed: &[&str]) -> Result<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(schema(path, format!("unknown field `{k}`"))),
        None => Ok(()),
    }
}

fn uint(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn uints(v: &Value, path: &str) -> Result<Vec<usize>> {
    let items = v
        .as_array()
        .ok_or_else(|| schema(path, "expected an array"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, x)| uint(x, &format!("{path}[{i}]")))
        .collect()
}

fn nodes(v: &Value, path: &str) -> Result<Vec<RpCertificate>> {
    let items = v
        .as_array()
        .ok_or_else(|| schema(path, "expected an array"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, x)| node(x, &format!("{path}[{i}]")))
        .collect()
}

/// Typed sub-document decoded by serde, with the inner path appended.
fn typed<T: serde::de::DeserializeOwned>(v: &Value, path: &str) -> Result<T> {
    serde_path_to_error::deserialize(v.clone()).map_err(|e| {
        let inner = e.path().to_string();
        let full = if inner == "." {
            path.to_string()
        } else {
            format!("{path}.{inner}")
        };
        schema(&full, e.into_inner().to_string())
    })
}

fn node(v: &Value, path: &str) -> Result<RpCertificate> {
    let obj = object(v, path)?;
    let kind = field(obj, path, "kind")?
        .as_str()
        .ok_or_else(|| schema(&format!("{path}.kind"), "expected a string"))?;
    let sub = |name: &str| format!("{path}.{name}");
    match kind {
        "singleton" => {
            only_fields(obj, path, &["kind", "vertex"])?;
            Ok(RpCertificate::Singleton {
                vertex: uint(field(obj, path, "vertex")?, &sub("vertex"))?,
            })
        }
        "path" => {
            only_fields(obj, path, &["kind", "order"])?;
            Ok(RpCertificate::Path {
                order: uints(field(obj, path, "order")?, &sub("order"))?,
            })
        }
        "split" => {
            only_fields(obj, path, &["kind", "vertices", "entries"])?;
            let vertices = uints(field(obj, path, "vertices")?, &sub("vertices"))?;
            let items = field(obj, path, "entries")?
                .as_array()
                .ok_or_else(|| schema(&sub("entries"), "expected an array"))?;
            let mut entries = Vec::with_capacity(items.len());
            for (i, item) in items.iter().enumerate() {
                let p = format!("{path}.entries[{i}]");
                let e = object(item, &p)?;
                only_fields(e, &p, &["a", "part", "cert_a", "cert_b"])?;
                entries.push(SplitEntry {
                    a: uint(field(e, &p, "a")?, &format!("{p}.a"))?,
                    part: uints(field(e, &p, "part")?, &format!("{p}.part"))?,
                    cert_a: node(field(e, &p, "cert_a")?, &format!("{p}.cert_a"))?,
                    cert_b: node(field(e, &p, "cert_b")?, &format!("{p}.cert_b"))?,
                });
            }
            Ok(RpCertificate::Split { vertices, entries })
        }
        "join" => {
            only_fields(obj, path, &["kind", "children"])?;
            Ok(RpCertificate::Join {
                children: nodes(field(obj, path, "children")?, &sub("children"))?,
            })
        }
        "replacement" => {
            only_fields(
                obj,
                path,
                &["kind", "template", "signature_certificate", "components"],
            )?;
            Ok(RpCertificate::Replacement {
                template: typed(field(obj, path, "template")?, &sub("template"))?,
                signature_certificate: typed(
                    field(obj, path, "signature_certificate")?,
                    &sub("signature_certificate"),
                )?,
                components: nodes(field(obj, path, "components")?, &sub("components"))?,
            })
        }
        other => Err(schema(
            &sub("kind"),
            format!("unknown kind `{other}`; expected singleton, path, split, join or replacement"),
        )),
    }
}
