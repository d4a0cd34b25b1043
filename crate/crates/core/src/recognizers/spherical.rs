//! Spherical-type recognition by matching against the finite classification.

use std::fmt;

use crate::{CoxeterGraph, VertexSet};

/// Irreducible finite Coxeter types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    /// Dihedral type with label `m >= 4`; `m = 3` is reported as `A(2)`.
    I2(u32),
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E(n) => write!(f, "E{n}"),
            FiniteType::F4 => write!(f, "F4"),
            FiniteType::H(n) => write!(f, "H{n}"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Decomposes `g` into irreducible finite types, or `None` when the Coxeter
/// group of `g` is infinite.
///
/// A missing edge is a label `∞`, so a spherical graph must be complete. The
/// irreducible pieces are then the components of the diagram that keeps only
/// labels `>= 3` (label-2 pairs commute and split the group as a product).
pub fn spherical_decomposition(g: &CoxeterGraph) -> Option<Vec<FiniteType>> {
    let n = g.vertex_count();
    if g.edge_count() != n * n.saturating_sub(1) / 2 {
        return None;
    }
    let diagram: Vec<VertexSet> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&w| g.label(v, w).is_some_and(|m| m >= 3))
                .collect()
        })
        .collect();

    let mut remaining = g.all();
    let mut types = Vec::new();
    while let Some(start) = remaining.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let reach = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc.union(diagram[v]));
            frontier = reach.difference(comp);
            comp = comp.union(frontier);
        }
        remaining = remaining.difference(comp);
        types.push(classify_irreducible(g, &diagram, comp)?);
    }
    types.sort();
    Some(types)
}

pub fn is_spherical(g: &CoxeterGraph) -> bool {
    spherical_decomposition(g).is_some()
}

fn classify_irreducible(
    g: &CoxeterGraph,
    diagram: &[VertexSet],
    comp: VertexSet,
) -> Option<FiniteType> {
    let k = comp.len();
    if k == 1 {
        return Some(FiniteType::A(1));
    }
    let degree = |v: usize| diagram[v].intersection(comp).len();
    let mut edges = Vec::new();
    for v in comp {
        for w in diagram[v].intersection(comp) {
            if v < w {
                edges.push((v, w, g.label(v, w)?));
            }
        }
    }
    if edges.len() != k - 1 {
        return None; // diagram cycle
    }
    let max_degree = comp.iter().map(degree).max().unwrap_or(0);
    let heavy: Vec<_> = edges.iter().filter(|e| e.2 > 3).collect();

    match heavy.as_slice() {
        [] => {
            if max_degree <= 2 {
                return Some(FiniteType::A(k));
            }
            let branches: Vec<usize> = comp.iter().filter(|&v| degree(v) >= 3).collect();
            let [center] = branches.as_slice() else {
                return None;
            };
            if degree(*center) != 3 {
                return None;
            }
            let mut arms: Vec<usize> = diagram[*center]
                .intersection(comp)
                .iter()
                .map(|first| arm_length(diagram, comp, *center, first))
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Some(FiniteType::D(k)),
                [1, 2, 2] => Some(FiniteType::E(6)),
                [1, 2, 3] => Some(FiniteType::E(7)),
                [1, 2, 4] => Some(FiniteType::E(8)),
                _ => None,
            }
        }
        [&(v, w, m)] => {
            if max_degree > 2 {
                return None;
            }
            if k == 2 {
                return Some(FiniteType::I2(m));
            }
            let at_end = degree(v) == 1 || degree(w) == 1;
            match m {
                4 if at_end => Some(FiniteType::B(k)),
                4 if k == 4 => Some(FiniteType::F4),
                5 if at_end && (k == 3 || k == 4) => Some(FiniteType::H(k)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Number of vertices on the path leaving `center` through `first`.
fn arm_length(diagram: &[VertexSet], comp: VertexSet, center: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (center, first, 1);
    loop {
        let next = diagram[cur].intersection(comp).without(prev);
        match next.first() {
            Some(n) if next.len() == 1 => {
                prev = cur;
                cur = n;
                len += 1;
            }
            _ => return len,
        }
    }
}
