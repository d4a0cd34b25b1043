//! Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting).

use crate::{CoxeterGraph, VertexSet};

/// All maximal cliques of the finite-label graph of `g`, in discovery order.
/// The empty graph has the single maximal clique `∅`.
pub fn maximal_cliques(g: &CoxeterGraph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    expand(g, VertexSet::EMPTY, g.all(), VertexSet::EMPTY, &mut out);
    out
}

fn expand(
    g: &CoxeterGraph,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| g.neighbors(u).intersection(p).len())
        .expect("p is non-empty");
    for v in p.difference(g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        expand(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}
