//! Partitions of the generator set, admissibility, and quotient graphs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::PartitionError;
use crate::{CoxeterGraph, VertexSet};

/// A set of nonempty, pairwise-disjoint vertex cells.
///
/// Kept in canonical form: cells ordered by least vertex. The partitioned set
/// is the union of the cells ([`support`](Self::support)); most operations
/// expect it to be the whole vertex set of the graph at hand, and the
/// certificate builders also accept partitions of a subset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    cells: Vec<VertexSet>,
}

impl Partition {
    pub fn new(mut cells: Vec<VertexSet>) -> Result<Self, PartitionError> {
        let mut seen = VertexSet::EMPTY;
        for &c in &cells {
            if c.is_empty() {
                return Err(PartitionError::NotAPartition("empty cell".into()));
            }
            if !c.is_disjoint(seen) {
                return Err(PartitionError::NotAPartition("cells overlap".into()));
            }
            seen = seen.union(c);
        }
        cells.sort_by_key(|c| c.first());
        Ok(Partition { cells })
    }

    /// Every vertex of `set` in its own cell.
    pub fn singletons(set: VertexSet) -> Self {
        Partition {
            cells: set.iter().map(VertexSet::singleton).collect(),
        }
    }

    /// One cell holding all of `set` (no cells if `set` is empty).
    pub fn whole(set: VertexSet) -> Self {
        let cells = if set.is_empty() { vec![] } else { vec![set] };
        Partition { cells }
    }

    pub fn from_names<C, I, T>(g: &CoxeterGraph, cells: C) -> Result<Self, PartitionError>
    where
        C: IntoIterator<Item = I>,
        I: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let sets = cells
            .into_iter()
            .map(|c| g.set_of(c))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(sets)
    }

    /// Parses the literal syntax `{a,b|c|d,e}`.
    pub fn parse_literal(g: &CoxeterGraph, text: &str) -> Result<Self, PartitionError> {
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| PartitionError::Syntax(format!("expected `{{...}}`, got `{text}`")))?;
        if inner.trim().is_empty() {
            return Self::new(vec![]);
        }
        let mut cells = Vec::new();
        for cell in inner.split('|') {
            let names: Vec<&str> = cell.split(',').map(str::trim).collect();
            if names.iter().any(|n| n.is_empty()) {
                return Err(PartitionError::Syntax(format!(
                    "empty name in cell `{cell}`"
                )));
            }
            let set = g.set_of(&names)?;
            if set.len() != names.len() {
                return Err(PartitionError::NotAPartition(format!(
                    "repeated vertex in `{cell}`"
                )));
            }
            cells.push(set);
        }
        Self::new(cells)
    }

    pub fn to_literal(&self, g: &CoxeterGraph) -> String {
        let mut out = String::from("{");
        for (k, c) in self.cells.iter().enumerate() {
            if k > 0 {
                out.push('|');
            }
            let names: Vec<&str> = c.iter().map(|v| g.name(v)).collect();
            let _ = write!(out, "{}", names.join(","));
        }
        out.push('}');
        out
    }

    pub fn cells(&self) -> &[VertexSet] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn support(&self) -> VertexSet {
        self.cells
            .iter()
            .fold(VertexSet::EMPTY, |acc, &c| acc.union(c))
    }

    pub fn is_singletons(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// Sub-partition made of the cells at the given positions.
    pub fn select(&self, positions: impl IntoIterator<Item = usize>) -> Partition {
        let mut cells: Vec<VertexSet> = positions.into_iter().map(|i| self.cells[i]).collect();
        cells.sort_by_key(|c| c.first());
        Partition { cells }
    }

    /// This partition plus one extra cell, which must be disjoint from it.
    pub fn with_cell(&self, cell: VertexSet) -> Result<Partition, PartitionError> {
        let mut cells = self.cells.clone();
        cells.push(cell);
        Partition::new(cells)
    }
}

/// Witness edges of a quotient graph, keyed by cell positions `(i, j)` with
/// `i < j`. Each value is `(s, t, m)` with `s` in cell `i` and `t` in cell `j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuotientEdgeIndex {
    pub edges: BTreeMap<(usize, usize), (usize, usize, u32)>,
}

impl QuotientEdgeIndex {
    /// Witness edge between two cells, oriented so the first endpoint lies in
    /// cell `i`.
    pub fn witness(&self, i: usize, j: usize) -> Option<(usize, usize, u32)> {
        if i < j {
            self.edges.get(&(i, j)).copied()
        } else {
            self.edges.get(&(j, i)).map(|&(s, t, m)| (t, s, m))
        }
    }
}

fn check_admissible_cells(g: &CoxeterGraph, cells: &[VertexSet]) -> Result<(), PartitionError> {
    for (i, &x) in cells.iter().enumerate() {
        for &y in &cells[i + 1..] {
            if g.edges_between(x, y) > 1 {
                let name = |c: VertexSet| Partition { cells: vec![c] }.to_literal(g);
                return Err(PartitionError::NotAdmissible(name(x), name(y)));
            }
        }
    }
    Ok(())
}

fn check_covers(g: &CoxeterGraph, p: &Partition) -> Result<(), PartitionError> {
    if p.support() != g.all() {
        return Err(PartitionError::NotAPartition(
            "cells do not cover the vertex set".into(),
        ));
    }
    Ok(())
}

/// At most one edge of `g` between any two distinct cells.
pub fn is_admissible(g: &CoxeterGraph, p: &Partition) -> Result<bool, PartitionError> {
    check_covers(g, p)?;
    Ok(check_admissible_cells(g, p.cells()).is_ok())
}

/// Quotient `Γ/𝒫` of the full subgraph spanned by `p.support()`.
///
/// Quotient vertex `i` is cell `i`, named after its least vertex. Fails if
/// some pair of cells is joined by more than one edge.
pub fn quotient_of_support(
    g: &CoxeterGraph,
    p: &Partition,
) -> Result<(CoxeterGraph, QuotientEdgeIndex), PartitionError> {
    check_admissible_cells(g, p.cells())?;
    let cells = p.cells();
    let names: Vec<String> = cells
        .iter()
        .map(|c| g.name(c.first().expect("cells are nonempty")).to_owned())
        .collect();
    let mut index = QuotientEdgeIndex::default();
    let mut edges = Vec::new();
    for (i, &x) in cells.iter().enumerate() {
        for (j, &y) in cells.iter().enumerate().skip(i + 1) {
            for s in x {
                if let Some(t) = g.neighbors(s).intersection(y).first() {
                    let m = g.label(s, t).expect("adjacent");
                    index.edges.insert((i, j), (s, t, m));
                    edges.push((names[i].clone(), names[j].clone(), m));
                }
            }
        }
    }
    let quotient = CoxeterGraph::new(names, edges)?;
    Ok((quotient, index))
}

/// `Γ/𝒫` for a partition of the whole vertex set.
pub fn quotient(
    g: &CoxeterGraph,
    p: &Partition,
) -> Result<(CoxeterGraph, QuotientEdgeIndex), PartitionError> {
    check_covers(g, p)?;
    quotient_of_support(g, p)
}

/// Streams every admissible partition of `g` once, in restricted growth
/// string order: vertex `k` goes into one of the cells opened by vertices
/// `0..k` or into a new one. An assignment is abandoned as soon as the cell
/// receiving the new vertex has two edges to some other cell, since adding
/// vertices never removes cross edges.
pub fn enumerate_admissible(g: &CoxeterGraph) -> AdmissiblePartitions<'_> {
    AdmissiblePartitions {
        g,
        assignment: Vec::with_capacity(g.vertex_count()),
        cells: Vec::new(),
        next_choice: vec![0; g.vertex_count() + 1],
        done: false,
        nodes_visited: 0,
    }
}

pub struct AdmissiblePartitions<'g> {
    g: &'g CoxeterGraph,
    assignment: Vec<usize>,
    cells: Vec<VertexSet>,
    next_choice: Vec<usize>,
    done: bool,
    nodes_visited: u64,
}

impl AdmissiblePartitions<'_> {
    /// Partial assignments explored so far.
    pub fn nodes_visited(&self) -> u64 {
        self.nodes_visited
    }

    fn fits(&self, v: usize, c: usize) -> bool {
        let grown = self.cells.get(c).copied().unwrap_or_default().with(v);
        self.cells
            .iter()
            .enumerate()
            .all(|(d, &other)| d == c || self.g.edges_between(grown, other) <= 1)
    }

    fn place(&mut self, v: usize, c: usize) {
        if c == self.cells.len() {
            self.cells.push(VertexSet::singleton(v));
        } else {
            self.cells[c].insert(v);
        }
        self.assignment.push(c);
        self.next_choice[v + 1] = 0;
    }

    /// Removes the last placed vertex; returns false at the root.
    fn unplace(&mut self) -> bool {
        let Some(c) = self.assignment.pop() else {
            return false;
        };
        let v = self.assignment.len();
        self.cells[c].remove(v);
        if self.cells[c].is_empty() {
            self.cells.pop();
        }
        true
    }
}

impl Iterator for AdmissiblePartitions<'_> {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let n = self.g.vertex_count();
        loop {
            let v = self.assignment.len();
            if v == n {
                let out = Partition {
                    cells: self.cells.clone(),
                };
                if !self.unplace() {
                    self.done = true;
                }
                return Some(out);
            }
            let c = self.next_choice[v];
            if c > self.cells.len() {
                if !self.unplace() {
                    self.done = true;
                    return None;
                }
                continue;
            }
            self.next_choice[v] = c + 1;
            self.nodes_visited += 1;
            if self.fits(v, c) {
                self.place(v, c);
            }
        }
    }
}
