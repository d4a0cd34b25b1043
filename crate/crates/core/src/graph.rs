//! Coxeter graphs and their structural predicates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::GraphError;
use crate::presentation::{alternating_word, Presentation, Relation};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A finite Coxeter graph.
///
/// Vertices are opaque string identifiers kept in lexicographic order, so
/// vertex index `i` always refers to the `i`-th smallest name. A pair of
/// distinct vertices either carries a finite label `m >= 2` or no edge at
/// all, which encodes `m = ∞`. Diagonal entries (`m = 1`) are implicit.
///
/// Values are immutable; every decomposition returns a fresh graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    names: Vec<String>,
    adjacency: Vec<VertexSet>,
    labels: BTreeMap<(usize, usize), u32>,
}

fn check_name(name: &str) -> Result<(), GraphError> {
    let bad = name.is_empty()
        || name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '#' | ',' | '|' | '{' | '}' | ':'));
    if bad {
        Err(GraphError::InvalidVertexName(name.to_owned()))
    } else {
        Ok(())
    }
}

impl CoxeterGraph {
    /// Builds and validates a graph. Edge order does not matter, and a pair
    /// may be listed twice (in either orientation) as long as the labels agree.
    pub fn new<V, S, E, T>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T, u32)>,
        T: AsRef<str>,
    {
        let mut names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        for name in &names {
            check_name(name)?;
        }
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0].clone()));
        }
        if names.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(names.len()));
        }
        let lookup = |v: &str| {
            names
                .binary_search_by(|n| n.as_str().cmp(v))
                .map_err(|_| GraphError::UnknownVertex(v.to_owned()))
        };

        let mut labels = BTreeMap::new();
        for (s, t, m) in edges {
            let (s, t) = (s.as_ref(), t.as_ref());
            let i = lookup(s)?;
            let j = lookup(t)?;
            if i == j {
                return Err(GraphError::SelfLoop(s.to_owned()));
            }
            if m < 2 {
                return Err(GraphError::LabelTooSmall {
                    s: s.to_owned(),
                    t: t.to_owned(),
                    m,
                });
            }
            let key = (i.min(j), i.max(j));
            if let Some(&prev) = labels.get(&key) {
                if prev != m {
                    return Err(GraphError::ConflictingLabels {
                        s: names[key.0].clone(),
                        t: names[key.1].clone(),
                        first: prev,
                        second: m,
                    });
                }
            }
            labels.insert(key, m);
        }
        Ok(Self::from_parts(names, labels))
    }

    /// Graph with the given vertices and every label `∞`.
    pub fn edgeless<V, S>(vertices: V) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::new(vertices, std::iter::empty::<(&str, &str, u32)>())
    }

    fn from_parts(names: Vec<String>, labels: BTreeMap<(usize, usize), u32>) -> Self {
        let mut adjacency = vec![VertexSet::EMPTY; names.len()];
        for &(i, j) in labels.keys() {
            adjacency[i].insert(j);
            adjacency[j].insert(i);
        }
        CoxeterGraph {
            names,
            adjacency,
            labels,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Vertex names in index order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.names.len())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    /// Finite label of the pair, `None` for `∞` (and for `v == w`).
    pub fn label(&self, v: usize, w: usize) -> Option<u32> {
        self.labels.get(&(v.min(w), v.max(w))).copied()
    }

    pub fn label_by_name(&self, s: &str, t: &str) -> Option<u32> {
        self.label(self.index_of(s)?, self.index_of(t)?)
    }

    /// Edges `(v, w, m)` with `v < w`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.labels.iter().map(|(&(v, w), &m)| (v, w, m))
    }

    /// Number of edges with one endpoint in `a` and the other in `b`.
    /// The sets are expected to be disjoint.
    pub fn edges_between(&self, a: VertexSet, b: VertexSet) -> usize {
        a.iter()
            .map(|v| self.adjacency[v].intersection(b).len())
            .sum()
    }

    pub fn set_of<I, T>(&self, names: I) -> Result<VertexSet, GraphError>
    where
        I: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        names
            .into_iter()
            .map(|n| {
                self.index_of(n.as_ref())
                    .ok_or_else(|| GraphError::UnknownVertex(n.as_ref().to_owned()))
            })
            .collect()
    }

    pub fn names_of(&self, set: VertexSet) -> BTreeSet<String> {
        set.iter().map(|v| self.names[v].clone()).collect()
    }

    /// Full subgraph spanned by the named vertices.
    pub fn full_subgraph<I, T>(&self, names: I) -> Result<CoxeterGraph, GraphError>
    where
        I: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        Ok(self.induced(self.set_of(names)?))
    }

    /// Full subgraph spanned by a subset of this graph's vertex indices.
    /// Indices of the result follow the ascending order of `set`.
    pub fn induced(&self, set: VertexSet) -> CoxeterGraph {
        let keep: Vec<usize> = set.iter().collect();
        let mut position = vec![usize::MAX; self.names.len()];
        for (new, &old) in keep.iter().enumerate() {
            position[old] = new;
        }
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let labels = self
            .labels
            .iter()
            .filter(|(&(v, w), _)| set.contains(v) && set.contains(w))
            .map(|(&(v, w), &m)| ((position[v], position[w]), m))
            .collect();
        Self::from_parts(names, labels)
    }

    /// Copy of this graph with the label of one pair replaced
    /// (`None` removes the edge).
    pub fn with_label(&self, s: &str, t: &str, m: Option<u32>) -> Result<Self, GraphError> {
        let i = self
            .index_of(s)
            .ok_or_else(|| GraphError::UnknownVertex(s.to_owned()))?;
        let j = self
            .index_of(t)
            .ok_or_else(|| GraphError::UnknownVertex(t.to_owned()))?;
        if i == j {
            return Err(GraphError::SelfLoop(s.to_owned()));
        }
        let mut labels = self.labels.clone();
        let key = (i.min(j), i.max(j));
        match m {
            Some(m) if m < 2 => {
                return Err(GraphError::LabelTooSmall {
                    s: s.to_owned(),
                    t: t.to_owned(),
                    m,
                })
            }
            Some(m) => {
                labels.insert(key, m);
            }
            None => {
                labels.remove(&key);
            }
        }
        Ok(Self::from_parts(self.names.clone(), labels))
    }

    /// Applies a renaming to every vertex, keeping labels.
    pub fn renamed<F>(&self, mut rename: F) -> Result<Self, GraphError>
    where
        F: FnMut(&str) -> String,
    {
        let new_names: Vec<String> = self.names.iter().map(|n| rename(n)).collect();
        let edges: Vec<(String, String, u32)> = self
            .edges()
            .map(|(v, w, m)| (new_names[v].clone(), new_names[w].clone(), m))
            .collect();
        Self::new(new_names, edges)
    }

    /// Connected components, each ordered by its least vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.all())
    }

    /// Connected components of the full subgraph spanned by `within`,
    /// ordered by least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut remaining = within;
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next.union(self.adjacency[v]);
                }
                frontier = next.intersection(within).difference(comp);
                comp = comp.union(frontier);
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Names of the connected components; same order as
    /// [`connected_components`](Self::connected_components).
    pub fn component_names(&self) -> Vec<BTreeSet<String>> {
        self.connected_components()
            .into_iter()
            .map(|c| self.names_of(c))
            .collect()
    }

    /// Every finite label is even. Vacuously true without edges.
    pub fn is_even(&self) -> bool {
        self.labels.values().all(|m| m % 2 == 0)
    }

    /// No three vertices pairwise joined by edges.
    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|(v, w, _)| self.adjacency[v].intersection(self.adjacency[w]).is_empty())
    }

    /// Underlying unlabelled graph is acyclic.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.vertex_count()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Standard Artin presentation: one generator per vertex and one relation
    /// `Π(s,t:m) = Π(t,s:m)` per finite-labelled edge, with `s < t`.
    pub fn artin_presentation(&self) -> Presentation {
        let relations = self
            .edges()
            .map(|(v, w, m)| {
                let (s, t) = (&self.names[v], &self.names[w]);
                Relation {
                    lhs: alternating_word(s, t, m),
                    rhs: alternating_word(t, s, m),
                }
            })
            .collect();
        Presentation {
            generators: self.names.clone(),
            relations,
        }
    }
}

impl fmt::Debug for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterGraph {{ vertices: {:?}, edges: [", self.names)?;
        for (k, (v, w, m)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}:{}", self.names[v], self.names[w], m)?;
        }
        write!(f, "] }}")
    }
}
