//! Residual-finiteness certificates for Artin groups.
//!
//! Given a Coxeter graph, [`certify`] looks for an admissible partition of
//! the generators whose quotient graph is a forest or is even and
//! triangle-free, and whose cells have residually finite Artin groups. A hit
//! is expanded into a [`Certificate`] built from three rules (known base
//! families, free products over connected components, and amalgams along
//! retractions) that [`verify`] re-checks independently.
//!
//! ```
//! use artin_rf::{certify, verify, CoxeterGraph, DEFAULT_BUDGET};
//!
//! let g = CoxeterGraph::new(["a", "b", "c"], [("a", "b", 3), ("b", "c", 5)]).unwrap();
//! let cert = certify(&g, &[], DEFAULT_BUDGET).unwrap().certificate.unwrap();
//! assert!(verify(&g, &cert, &[]).overall);
//! ```

pub mod certificate;
pub mod corpus;
mod error;
pub mod format;
mod graph;
pub mod partition;
mod presentation;
pub mod recognizers;
pub mod search;
mod vertex_set;

pub use certificate::{
    certify, check_retraction, verify, Certificate, CertifyOutcome, RetractionWitness, VerifyReport,
};
pub use error::{BuildError, GraphError, PartitionError, RetractionError};
pub use graph::CoxeterGraph;
pub use partition::{enumerate_admissible, is_admissible, quotient, Partition, QuotientEdgeIndex};
pub use presentation::{alternating_word, Presentation, Relation, Word};
pub use recognizers::{base_rf, Axiom, BaseKind, BaseTag};
pub use search::{find_certifying_partition, Condition, DEFAULT_BUDGET};
pub use vertex_set::{VertexSet, MAX_VERTICES};
