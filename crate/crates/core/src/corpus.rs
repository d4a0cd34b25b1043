//! Seeded random graph generators for test corpora.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{CoxeterGraph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusKind {
    /// Random forests, labels uniform in `2..=7`.
    Forest,
    /// Random triangle-free graphs with labels in `{2, 4, 6}`.
    EvenTriangleFree,
    /// Each pair joined with probability 0.4, labels uniform in `2..=6`.
    Random,
}

impl FromStr for CorpusKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "forest" => Ok(CorpusKind::Forest),
            "even-tf" => Ok(CorpusKind::EvenTriangleFree),
            "random" => Ok(CorpusKind::Random),
            other => Err(format!(
                "unknown corpus kind `{other}` (forest, even-tf, random)"
            )),
        }
    }
}

impl fmt::Display for CorpusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CorpusKind::Forest => "forest",
            CorpusKind::EvenTriangleFree => "even-tf",
            CorpusKind::Random => "random",
        })
    }
}

/// `v0 .. v{n-1}`, zero-padded so lexicographic order is numeric order.
pub fn vertex_names(n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("v{i:0width$}")).collect()
}

fn assemble(n: usize, edges: Vec<(usize, usize, u32)>) -> CoxeterGraph {
    let names = vertex_names(n);
    let named: Vec<(&str, &str, u32)> = edges
        .iter()
        .map(|&(v, w, m)| (names[v].as_str(), names[w].as_str(), m))
        .collect();
    CoxeterGraph::new(names.iter().cloned(), named).expect("generated graphs are valid")
}

/// Each vertex after the first attaches to a uniformly chosen earlier vertex,
/// or (with probability 0.1) starts a new tree.
pub fn random_forest<R: Rng>(n: usize, rng: &mut R) -> CoxeterGraph {
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(0.9) {
            let parent = rng.gen_range(0..v);
            edges.push((parent, v, rng.gen_range(2..=7)));
        }
    }
    // shuffle the attachment order so leaves are not always the high indices
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges = edges
        .into_iter()
        .map(|(v, w, m)| (perm[v], perm[w], m))
        .collect();
    assemble(n, edges)
}

/// Two random colour classes; pairs across the classes are joined with
/// probability 0.5 and pairs inside a class with probability 0.15, skipping
/// any edge that would close a triangle.
pub fn random_even_triangle_free<R: Rng>(n: usize, rng: &mut R) -> CoxeterGraph {
    let colour: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut adjacency = vec![VertexSet::EMPTY; n];
    let mut edges = Vec::new();
    for v in 0..n {
        for w in v + 1..n {
            let p = if colour[v] != colour[w] { 0.5 } else { 0.15 };
            if rng.gen_bool(p) && adjacency[v].is_disjoint(adjacency[w]) {
                adjacency[v].insert(w);
                adjacency[w].insert(v);
                edges.push((v, w, *[2, 4, 6].choose(rng).expect("nonempty")));
            }
        }
    }
    assemble(n, edges)
}

pub fn random_graph<R: Rng>(n: usize, rng: &mut R) -> CoxeterGraph {
    let mut edges = Vec::new();
    for v in 0..n {
        for w in v + 1..n {
            if rng.gen_bool(0.4) {
                edges.push((v, w, rng.gen_range(2..=6)));
            }
        }
    }
    assemble(n, edges)
}

pub fn generate<R: Rng>(kind: CorpusKind, n: usize, rng: &mut R) -> CoxeterGraph {
    match kind {
        CorpusKind::Forest => random_forest(n, rng),
        CorpusKind::EvenTriangleFree => random_even_triangle_free(n, rng),
        CorpusKind::Random => random_graph(n, rng),
    }
}

/// `count` graphs on `n` vertices each, fully determined by `seed`.
pub fn corpus(kind: CorpusKind, n: usize, count: usize, seed: u64) -> Vec<CoxeterGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| generate(kind, n, &mut rng)).collect()
}
