//! Gram-matrix finiteness test, kept as an independent cross-check of
//! [`is_spherical`](super::is_spherical).

use std::f64::consts::PI;

use crate::CoxeterGraph;

/// Row-major symmetric matrix with unit diagonal and
/// `entry(s, t) = -cos(π / m_{s,t})`, where `m = ∞` gives `-1`.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    pub size: usize,
    pub entries: Vec<f64>,
}

impl GramMatrix {
    pub fn of(g: &CoxeterGraph) -> Self {
        let n = g.vertex_count();
        let mut entries = vec![0.0; n * n];
        for v in 0..n {
            for w in 0..n {
                entries[v * n + w] = if v == w {
                    1.0
                } else {
                    match g.label(v, w) {
                        None => -1.0,
                        Some(2) => 0.0,
                        Some(m) => -(PI / f64::from(m)).cos(),
                    }
                };
            }
        }
        GramMatrix { size: n, entries }
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.entries[r * self.size + c]
    }

    /// Leading principal minors `det(M[..k, ..k])` for `k = 1..=size`,
    /// computed by elimination without pivoting. Stops early (returning a
    /// shorter list) at the first minor that is not above `floor`, since
    /// later pivots are undefined from there.
    pub fn leading_minors(&self, floor: f64) -> Vec<f64> {
        let n = self.size;
        let mut a = self.entries.clone();
        let mut minors = Vec::with_capacity(n);
        let mut det = 1.0;
        for k in 0..n {
            let pivot = a[k * n + k];
            det *= pivot;
            minors.push(det);
            if det <= floor {
                break;
            }
            for r in k + 1..n {
                let factor = a[r * n + k] / pivot;
                for c in k..n {
                    a[r * n + c] -= factor * a[k * n + c];
                }
            }
        }
        minors
    }
}

/// Sylvester's criterion with a tolerance: every leading principal minor of
/// the Gram matrix must exceed `tol`.
pub fn gram_positive_definite(g: &CoxeterGraph, tol: f64) -> bool {
    assert!(tol > 0.0, "tolerance must be positive");
    let gram = GramMatrix::of(g);
    let minors = gram.leading_minors(tol);
    minors.len() == gram.size && minors.iter().all(|&d| d > tol)
}
