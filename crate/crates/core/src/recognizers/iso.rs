//! Label-preserving isomorphism search for user axioms.

use crate::CoxeterGraph;

/// Sorted incident labels; `0` stands for a missing edge.
fn signature(g: &CoxeterGraph, v: usize) -> Vec<u32> {
    let mut sig: Vec<u32> = (0..g.vertex_count())
        .filter(|&w| w != v)
        .map(|w| g.label(v, w).unwrap_or(0))
        .collect();
    sig.sort_unstable();
    sig
}

/// Finds a bijection `map` from the vertices of `a` to those of `b` with
/// `a.label(v, w) == b.label(map[v], map[w])` for all pairs.
pub fn find_isomorphism(a: &CoxeterGraph, b: &CoxeterGraph) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let sig_a: Vec<_> = (0..n).map(|v| signature(a, v)).collect();
    let sig_b: Vec<_> = (0..n).map(|v| signature(b, v)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, &sig_a, &sig_b, 0, &mut map, &mut used).then_some(map)
}

fn extend(
    a: &CoxeterGraph,
    b: &CoxeterGraph,
    sig_a: &[Vec<u32>],
    sig_b: &[Vec<u32>],
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == map.len() {
        return true;
    }
    for w in 0..map.len() {
        if used[w] || sig_a[v] != sig_b[w] {
            continue;
        }
        if (0..v).any(|u| a.label(u, v) != b.label(map[u], w)) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, sig_a, sig_b, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}

pub fn is_isomorphic(a: &CoxeterGraph, b: &CoxeterGraph) -> bool {
    find_isomorphism(a, b).is_some()
}
