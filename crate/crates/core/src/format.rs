//! Line-oriented graph text format and DOT export.
//!
//! ```text
//! # comments and blank lines are ignored
//! name: optional-name
//! vertices: a b c
//! edge: a b 3
//! edge: b c 4
//! ```
//!
//! Exactly one `vertices:` directive must precede the `edge:` directives.
//! The `name:` directive is required for axiom files and optional otherwise.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::GraphError;
use crate::partition::QuotientEdgeIndex;
use crate::recognizers::Axiom;
use crate::{CoxeterGraph, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the error concerns the file as a whole.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// A parsed graph file, with its optional `name:`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub name: Option<String>,
    pub graph: CoxeterGraph,
}

pub fn parse_document(text: &str) -> Result<GraphDocument, ParseError> {
    let mut name: Option<String> = None;
    let mut vertices: Option<(usize, Vec<String>)> = None;
    let mut edges: Vec<(usize, String, String, u32)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((directive, rest)) = line.split_once(':') else {
            return Err(ParseError::at(
                lineno,
                format!("expected `directive: ...`, got `{line}`"),
            ));
        };
        let args: Vec<&str> = rest.split_whitespace().collect();
        match directive.trim() {
            "name" => {
                if name.is_some() {
                    return Err(ParseError::at(lineno, "duplicate `name:` directive"));
                }
                let [n] = args.as_slice() else {
                    return Err(ParseError::at(lineno, "`name:` takes exactly one token"));
                };
                name = Some((*n).to_owned());
            }
            "vertices" => {
                if vertices.is_some() {
                    return Err(ParseError::at(lineno, "duplicate `vertices:` directive"));
                }
                if !edges.is_empty() {
                    return Err(ParseError::at(lineno, "`vertices:` must precede `edge:`"));
                }
                vertices = Some((lineno, args.iter().map(|s| (*s).to_owned()).collect()));
            }
            "edge" => {
                if vertices.is_none() {
                    return Err(ParseError::at(lineno, "`edge:` before `vertices:`"));
                }
                let [s, t, m] = args.as_slice() else {
                    return Err(ParseError::at(lineno, "`edge:` takes `<s> <t> <label>`"));
                };
                let m: u32 = m.parse().map_err(|_| {
                    ParseError::at(lineno, format!("label `{m}` is not an integer"))
                })?;
                edges.push((lineno, (*s).to_owned(), (*t).to_owned(), m));
            }
            other => {
                return Err(ParseError::at(
                    lineno,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }

    let Some((vline, names)) = vertices else {
        return Err(ParseError::at(0, "missing `vertices:` directive"));
    };
    // Validate edge by edge so that errors carry the offending line.
    let base = CoxeterGraph::edgeless(names).map_err(|e| ParseError::at(vline, e.to_string()))?;
    let mut seen: Vec<(String, String, u32)> = Vec::with_capacity(edges.len());
    for (lineno, s, t, m) in edges {
        seen.push((s, t, m));
        if let Err(e) = CoxeterGraph::new(
            base.names().iter().cloned(),
            seen.iter().map(|(s, t, m)| (s, t, *m)),
        ) {
            return Err(ParseError::at(lineno, e.to_string()));
        }
    }
    let graph = CoxeterGraph::new(
        base.names().iter().cloned(),
        seen.iter().map(|(s, t, m)| (s, t, *m)),
    )
    .map_err(|e: GraphError| ParseError::at(0, e.to_string()))?;
    Ok(GraphDocument { name, graph })
}

pub fn parse_graph(text: &str) -> Result<CoxeterGraph, ParseError> {
    parse_document(text).map(|d| d.graph)
}

pub fn parse_axiom(text: &str) -> Result<Axiom, ParseError> {
    let doc = parse_document(text)?;
    let name = doc
        .name
        .ok_or_else(|| ParseError::at(0, "axiom file needs a `name:` directive"))?;
    Ok(Axiom::new(name, doc.graph))
}

/// Canonical text form. `parse_graph(&emit_graph(g)) == g`.
pub fn emit_graph(g: &CoxeterGraph) -> String {
    emit_inner(None, g)
}

pub fn emit_axiom(a: &Axiom) -> String {
    emit_inner(Some(&a.name), &a.graph)
}

fn emit_inner(name: Option<&str>, g: &CoxeterGraph) -> String {
    let mut out = String::new();
    if let Some(n) = name {
        let _ = writeln!(out, "name: {n}");
    }
    out.push_str("vertices:");
    for n in g.names() {
        out.push(' ');
        out.push_str(n);
    }
    out.push('\n');
    for (v, w, m) in g.edges() {
        let _ = writeln!(out, "edge: {} {} {}", g.name(v), g.name(w), m);
    }
    out
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT rendering with `label=m` on every edge.
pub fn graph_to_dot(g: &CoxeterGraph) -> String {
    let mut out = String::from("graph coxeter {\n");
    for n in g.names() {
        let _ = writeln!(out, "  {};", dot_id(n));
    }
    for (v, w, m) in g.edges() {
        let _ = writeln!(
            out,
            "  {} -- {} [label={}];",
            dot_id(g.name(v)),
            dot_id(g.name(w)),
            m
        );
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of a quotient `Γ/𝒫`. Nodes are labelled with their cells;
/// each edge carries the label of its witness edge and names it in `tooltip`.
pub fn quotient_to_dot(g: &CoxeterGraph, p: &Partition, index: &QuotientEdgeIndex) -> String {
    let mut out = String::from("graph quotient {\n");
    let id = |i: usize| dot_id(g.name(p.cells()[i].first().expect("cells are nonempty")));
    for (i, &c) in p.cells().iter().enumerate() {
        let names: Vec<&str> = c.iter().map(|v| g.name(v)).collect();
        let _ = writeln!(
            out,
            "  {} [label={}];",
            id(i),
            dot_id(&format!("{{{}}}", names.join(",")))
        );
    }
    for (&(i, j), &(s, t, m)) in &index.edges {
        let _ = writeln!(
            out,
            "  {} -- {} [label={}, tooltip={}];",
            id(i),
            id(j),
            m,
            dot_id(&format!("{} - {}", g.name(s), g.name(t)))
        );
    }
    out.push_str("}\n");
    out
}
