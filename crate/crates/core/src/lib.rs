//! Exact decision procedures, certificates and constructions for
//! arbitrarily partitionable (AP) and recursively partitionable (RP) graphs.

pub mod certificate;
pub mod conditions;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod partition;
pub mod semistar;

pub use certificate::{verify_certificate, CertificateCheck, RpCertificate, Tier};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use partition::SolverBudget;
pub use semistar::{SemistarEntries, Signature};
