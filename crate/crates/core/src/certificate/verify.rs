//! Independent certificate checker.
//!
//! Uses only the graph model, the base recognizers and the retraction check;
//! nothing from the partition search or the builders.

use std::fmt;

use crate::recognizers::{check_tag, Axiom};
use crate::{CoxeterGraph, VertexSet};

use super::retraction::retraction_defect;
use super::{Certificate, RetractionWitness, Subject};

/// Condition names that appear in verification traces.
pub mod conditions {
    pub const ROOT_COVERAGE: &str = "root-coverage";
    pub const SUBJECT_KNOWN: &str = "subject-known";
    pub const BASE_RECOGNIZER: &str = "base-recognizer";
    pub const FREE_PRODUCT_COMPONENTS: &str = "free-product-components";
    pub const AMALGAM_ARITY: &str = "amalgam-arity";
    pub const AMALGAM_COVER: &str = "amalgam-cover";
    pub const AMALGAM_INTERSECTION: &str = "amalgam-intersection";
    pub const AMALGAM_NO_CROSS_EDGES: &str = "amalgam-no-cross-edges";
    pub const AMALGAM_CHILD_SUBJECTS: &str = "amalgam-child-subjects";
    pub const RETRACTION_1: &str = "check_retraction(witness1)";
    pub const RETRACTION_2: &str = "check_retraction(witness2)";
    pub const TRUSTED_AMALGAM: &str = "trusted:split-amalgam-residually-finite";
    pub const TRUSTED_PARABOLIC: &str = "trusted:parabolic-subgroups";
}

use conditions::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub path: String,
    pub condition: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub overall: bool,
    pub trace: Vec<TraceEntry>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &TraceEntry> {
        self.trace.iter().filter(|e| !e.passed)
    }

    pub fn failed_condition(&self, condition: &str) -> bool {
        self.failures().any(|e| e.condition == condition)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.trace {
            let mark = if e.passed { "PASS" } else { "FAIL" };
            write!(f, "{mark} {} {}", e.path, e.condition)?;
            if !e.detail.is_empty() {
                write!(f, ": {}", e.detail)?;
            }
            writeln!(f)?;
        }
        write!(f, "overall: {}", if self.overall { "PASS" } else { "FAIL" })
    }
}

struct Checker<'a> {
    g: &'a CoxeterGraph,
    axioms: &'a [Axiom],
    trace: Vec<TraceEntry>,
}

fn show(s: &Subject) -> String {
    format!("{{{}}}", s.iter().cloned().collect::<Vec<_>>().join(","))
}

impl Checker<'_> {
    fn record(&mut self, path: &str, condition: &str, passed: bool, detail: impl Into<String>) {
        self.trace.push(TraceEntry {
            path: path.to_owned(),
            condition: condition.to_owned(),
            passed,
            detail: detail.into(),
        });
    }

    /// Resolves names, recording a failure for unknown ones.
    fn resolve(&mut self, path: &str, what: &str, names: &Subject) -> Option<VertexSet> {
        match self.g.set_of(names) {
            Ok(set) => Some(set),
            Err(e) => {
                self.record(path, SUBJECT_KNOWN, false, format!("{what}: {e}"));
                None
            }
        }
    }

    fn node(&mut self, path: &str, c: &Certificate) {
        if let Some(subject) = self.resolve(path, "subject", c.subject()) {
            match c {
                Certificate::Base { tag, .. } => {
                    let sub = self.g.induced(subject);
                    match check_tag(&sub, tag, self.axioms) {
                        Ok(()) => self.record(
                            path,
                            BASE_RECOGNIZER,
                            true,
                            format!("{}: {}", tag.kind, tag.detail),
                        ),
                        Err(why) => self.record(path, BASE_RECOGNIZER, false, why),
                    }
                }
                Certificate::FreeProduct { children, .. } => {
                    let mut expected: Vec<Subject> = self
                        .g
                        .components_within(subject)
                        .into_iter()
                        .map(|comp| self.g.names_of(comp))
                        .collect();
                    let mut got: Vec<Subject> =
                        children.iter().map(|ch| ch.subject().clone()).collect();
                    expected.sort();
                    got.sort();
                    let ok = expected == got;
                    let detail = format!(
                        "components {} vs children {}",
                        expected.iter().map(show).collect::<Vec<_>>().join(" "),
                        got.iter().map(show).collect::<Vec<_>>().join(" ")
                    );
                    self.record(path, FREE_PRODUCT_COMPONENTS, ok, detail);
                }
                Certificate::Amalgam {
                    x1,
                    x2,
                    x0,
                    witness1,
                    witness2,
                    children,
                    ..
                } => self.amalgam(path, subject, [x1, x2, x0], [witness1, witness2], children),
            }
        }
        for (i, ch) in c.children().iter().enumerate() {
            self.node(&format!("{path}.{i}"), ch);
        }
    }

    fn amalgam(
        &mut self,
        path: &str,
        subject: VertexSet,
        [n1, n2, n0]: [&Subject; 3],
        [w1, w2]: [&RetractionWitness; 2],
        children: &[Certificate],
    ) {
        let arity_ok = children.len() == 2;
        self.record(
            path,
            AMALGAM_ARITY,
            arity_ok,
            format!("{} children", children.len()),
        );
        let (Some(x1), Some(x2), Some(x0)) = (
            self.resolve(path, "x1", n1),
            self.resolve(path, "x2", n2),
            self.resolve(path, "x0", n0),
        ) else {
            return;
        };

        let cover = x1.union(x2) == subject;
        self.record(
            path,
            AMALGAM_COVER,
            cover,
            format!("x1 ∪ x2 = {}", show(&self.g.names_of(x1.union(x2)))),
        );
        let meet = x1.intersection(x2) == x0;
        self.record(
            path,
            AMALGAM_INTERSECTION,
            meet,
            format!("x1 ∩ x2 = {}", show(&self.g.names_of(x1.intersection(x2)))),
        );

        let (only1, only2) = (x1.difference(x0), x2.difference(x0));
        let stray: Vec<String> = self
            .g
            .edges()
            .filter(|&(v, w, _)| {
                (only1.contains(v) && only2.contains(w)) || (only1.contains(w) && only2.contains(v))
            })
            .map(|(v, w, m)| format!("{}-{}:{}", self.g.name(v), self.g.name(w), m))
            .collect();
        self.record(
            path,
            AMALGAM_NO_CROSS_EDGES,
            stray.is_empty(),
            if stray.is_empty() {
                String::new()
            } else {
                format!("stray edges {}", stray.join(" "))
            },
        );

        if arity_ok {
            let ok = children[0].subject() == n1 && children[1].subject() == n2;
            self.record(path, AMALGAM_CHILD_SUBJECTS, ok, "");
        }

        for (cond, sub, w) in [(RETRACTION_1, x1, w1), (RETRACTION_2, x2, w2)] {
            match retraction_defect(self.g, sub, x0, w) {
                Ok(None) => self.record(path, cond, true, describe(w)),
                Ok(Some(why)) => self.record(path, cond, false, why),
                Err(e) => self.record(path, cond, false, e.to_string()),
            }
        }
    }
}

fn describe(w: &RetractionWitness) -> String {
    match w {
        RetractionWitness::FoldTo { target, .. } => format!("fold onto {target}"),
        RetractionWitness::Kill { victims, .. } => format!("kill {}", show(victims)),
    }
}

/// Re-checks every side condition of `cert` against `g`.
pub fn verify(g: &CoxeterGraph, cert: &Certificate, axioms: &[Axiom]) -> VerifyReport {
    let mut checker = Checker {
        g,
        axioms,
        trace: Vec::new(),
    };
    checker.record(
        "assumptions",
        TRUSTED_AMALGAM,
        true,
        "G1 *_L G2 is residually finite when G1, G2 are residually finite and both retract onto L",
    );
    checker.record(
        "assumptions",
        TRUSTED_PARABOLIC,
        true,
        "A_X is the Artin group of the full subgraph on X, so A_x1 ∩ A_x2 = A_x0",
    );
    let all: Subject = g.names().iter().cloned().collect();
    let covered = cert.subject() == &all;
    checker.record(
        "root",
        ROOT_COVERAGE,
        covered,
        if covered {
            String::new()
        } else {
            format!(
                "root subject {} != vertex set {}",
                show(cert.subject()),
                show(&all)
            )
        },
    );
    checker.node("root", cert);
    let overall = checker.trace.iter().all(|e| e.passed);
    VerifyReport {
        overall,
        trace: checker.trace,
    }
}
