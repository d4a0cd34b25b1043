//! Residual-finiteness certificates.
//!
//! A certificate is a tree over subsets of the root graph's vertices. Every
//! node claims that the Artin group generated by its `subject` is residually
//! finite, justified by one of three rules:
//!
//! * `base`: the subject falls in a family whose Artin groups are known to be
//!   residually finite (see [`recognizers`](crate::recognizers)).
//! * `free_product`: the children are exactly the connected components of the
//!   subject, so the group is their free product.
//! * `amalgam`: the subject splits as `x1 ∪ x2` with `x1 ∩ x2 = x0` and no edge
//!   between `x1 \ x0` and `x2 \ x0`, so the group is `A_x1 *_{A_x0} A_x2`;
//!   both factors retract onto `A_x0` via the recorded witnesses, which
//!   makes them semidirect products over it, and such amalgams of residually
//!   finite groups are residually finite.
//!
//! Certificates are persisted as pretty-printed JSON:
//!
//! ```json
//! {
//!   "format": "artin-rf-certificate/1",
//!   "root": {
//!     "kind": "amalgam",
//!     "subject": ["a", "b", "c"],
//!     "x1": ["a", "b"],
//!     "x2": ["b", "c"],
//!     "x0": ["b"],
//!     "witness1": { "kind": "fold_to", "target": "b", "domain": ["a", "b"] },
//!     "witness2": { "kind": "fold_to", "target": "b", "domain": ["b", "c"] },
//!     "children": [ { "kind": "base", ... }, { "kind": "base", ... } ]
//!   }
//! }
//! ```
//!
//! Vertex sets are sorted arrays of names. Field order is fixed, so
//! serializing a parsed certificate reproduces the input byte for byte.

mod build;
mod retraction;
mod verify;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::recognizers::BaseTag;

pub use build::{
    build_even_tf, build_forest, build_from_plan, build_two_cell, build_vertex_amalgam, certify,
    CertifyOutcome,
};
pub use retraction::check_retraction;
pub use verify::{conditions, verify, TraceEntry, VerifyReport};

/// Sorted set of vertex names.
pub type Subject = BTreeSet<String>;

pub const FORMAT_TAG: &str = "artin-rf-certificate/1";

/// Generator-level homomorphism from `A_domain` back onto a parabolic
/// subgroup, witnessing a semidirect product splitting.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RetractionWitness {
    /// Every generator of the domain goes to `target`.
    FoldTo { target: String, domain: Subject },
    /// `victims` go to the identity; the other generators are fixed.
    Kill { victims: Subject, domain: Subject },
}

impl RetractionWitness {
    pub fn domain(&self) -> &Subject {
        match self {
            RetractionWitness::FoldTo { domain, .. } | RetractionWitness::Kill { domain, .. } => {
                domain
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Certificate {
    Base {
        subject: Subject,
        tag: BaseTag,
    },
    FreeProduct {
        subject: Subject,
        children: Vec<Certificate>,
    },
    Amalgam {
        subject: Subject,
        x1: Subject,
        x2: Subject,
        x0: Subject,
        witness1: RetractionWitness,
        witness2: RetractionWitness,
        children: Vec<Certificate>,
    },
}

impl Certificate {
    pub fn subject(&self) -> &Subject {
        match self {
            Certificate::Base { subject, .. }
            | Certificate::FreeProduct { subject, .. }
            | Certificate::Amalgam { subject, .. } => subject,
        }
    }

    pub fn children(&self) -> &[Certificate] {
        match self {
            Certificate::Base { .. } => &[],
            Certificate::FreeProduct { children, .. } | Certificate::Amalgam { children, .. } => {
                children
            }
        }
    }

    pub fn children_mut(&mut self) -> &mut [Certificate] {
        match self {
            Certificate::Base { .. } => &mut [],
            Certificate::FreeProduct { children, .. } | Certificate::Amalgam { children, .. } => {
                children
            }
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Certificate::Base { .. } => "base",
            Certificate::FreeProduct { .. } => "free_product",
            Certificate::Amalgam { .. } => "amalgam",
        }
    }

    /// Pre-order walk with node paths (`root`, `root.0`, `root.0.1`, ...).
    pub fn walk(&self) -> Vec<(String, &Certificate)> {
        fn go<'c>(c: &'c Certificate, path: String, out: &mut Vec<(String, &'c Certificate)>) {
            out.push((path.clone(), c));
            for (i, ch) in c.children().iter().enumerate() {
                go(ch, format!("{path}.{i}"), out);
            }
        }
        let mut out = Vec::new();
        go(self, "root".into(), &mut out);
        out
    }

    /// Mutable access to the node at a path produced by [`walk`](Self::walk).
    pub fn node_mut(&mut self, path: &str) -> Option<&mut Certificate> {
        let mut parts = path.split('.');
        if parts.next() != Some("root") {
            return None;
        }
        let mut cur = self;
        for p in parts {
            let i: usize = p.parse().ok()?;
            cur = cur.children_mut().get_mut(i)?;
        }
        Some(cur)
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children()
            .iter()
            .map(Certificate::node_count)
            .sum::<usize>()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    format: String,
    root: Certificate,
}

#[derive(Debug, Error)]
pub enum CertificateFormatError {
    #[error("certificate schema error: {0}")]
    Schema(#[from] serde_json::Error),
    #[error("unsupported certificate format `{0}` (expected `{FORMAT_TAG}`)")]
    Version(String),
}

pub fn to_text(cert: &Certificate) -> String {
    let doc = Document {
        format: FORMAT_TAG.to_owned(),
        root: cert.clone(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("certificates always serialize");
    s.push('\n');
    s
}

pub fn from_text(text: &str) -> Result<Certificate, CertificateFormatError> {
    let doc: Document = serde_json::from_str(text)?;
    if doc.format != FORMAT_TAG {
        return Err(CertificateFormatError::Version(doc.format));
    }
    Ok(doc.root)
}
