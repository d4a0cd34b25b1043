//! Certificate construction.
//!
//! Each builder takes a partition of some vertex subset (its support) plus a
//! callback producing certificates for the cells, and expands the
//! decomposition down to `base`, `free_product` and `amalgam` nodes. Child
//! certificates are built first and then glued, so the tree shape follows the
//! recursion directly.
//!
//! Ties are always broken by least vertex index (equivalently least name).

use crate::error::BuildError;
use crate::partition::{quotient_of_support, Partition};
use crate::recognizers::{base_rf, Axiom};
use crate::search::{find_certifying_partition, CellPlan, CertifyingPartition, Condition};
use crate::{CoxeterGraph, VertexSet};

use super::{Certificate, RetractionWitness, Subject};

/// Produces a certificate for a cell of the partition being expanded.
pub type CellCertifier<'a> = dyn FnMut(VertexSet) -> Result<Certificate, BuildError> + 'a;

fn names(g: &CoxeterGraph, set: VertexSet) -> Subject {
    g.names_of(set)
}

/// Base leaf for at most two vertices.
fn small_base(g: &CoxeterGraph, set: VertexSet) -> Certificate {
    debug_assert!(set.len() <= 2);
    let tag =
        base_rf(&g.induced(set), &[]).expect("graphs with at most two vertices are base cases");
    Certificate::Base {
        subject: names(g, set),
        tag,
    }
}

/// Singleton cells are certified directly; anything larger goes to the
/// caller's certifier.
fn cell(
    g: &CoxeterGraph,
    c: VertexSet,
    certify_cells: &mut CellCertifier<'_>,
) -> Result<Certificate, BuildError> {
    if c.len() == 1 {
        Ok(small_base(g, c))
    } else {
        certify_cells(c)
    }
}

/// Glues pieces that pairwise meet exactly in `{s}` and have no edges
/// between them outside `s`, as nested amalgams over `⟨s⟩`. The last piece
/// becomes `x2` of the outermost node and the rest recurse in `x1`.
fn fold_over_vertex(
    g: &CoxeterGraph,
    s: usize,
    pieces: Vec<(VertexSet, Certificate)>,
) -> Certificate {
    let x0 = VertexSet::singleton(s);
    let mut iter = pieces.into_iter();
    let (mut acc_set, mut acc) = iter.next().expect("at least one piece");
    for (set, cert) in iter {
        let subject = acc_set.union(set);
        acc = Certificate::Amalgam {
            subject: names(g, subject),
            x1: names(g, acc_set),
            x2: names(g, set),
            x0: names(g, x0),
            witness1: RetractionWitness::FoldTo {
                target: g.name(s).to_owned(),
                domain: names(g, acc_set),
            },
            witness2: RetractionWitness::FoldTo {
                target: g.name(s).to_owned(),
                domain: names(g, set),
            },
            children: vec![acc, cert],
        };
        acc_set = subject;
    }
    acc
}

/// Free product of pairwise non-adjacent parts. When the parts are exactly
/// the connected components of their union this is a `free_product` node;
/// otherwise (some part is itself disconnected) the parts are glued by
/// amalgams over the trivial subgroup, each side retracting onto it by
/// killing every generator.
fn free_product(g: &CoxeterGraph, mut parts: Vec<(VertexSet, Certificate)>) -> Certificate {
    parts.sort_by_key(|(set, _)| set.first());
    if parts.len() == 1 {
        return parts.pop().expect("one part").1;
    }
    let union = parts
        .iter()
        .fold(VertexSet::EMPTY, |acc, (s, _)| acc.union(*s));
    let comps = g.components_within(union);
    if comps.len() == parts.len() && comps.iter().zip(&parts).all(|(c, (s, _))| c == s) {
        return Certificate::FreeProduct {
            subject: names(g, union),
            children: parts.into_iter().map(|(_, c)| c).collect(),
        };
    }
    let mut iter = parts.into_iter();
    let (mut acc_set, mut acc) = iter.next().expect("at least two parts");
    for (set, cert) in iter {
        let subject = acc_set.union(set);
        acc = Certificate::Amalgam {
            subject: names(g, subject),
            x1: names(g, acc_set),
            x2: names(g, set),
            x0: Subject::new(),
            witness1: RetractionWitness::Kill {
                victims: names(g, acc_set),
                domain: names(g, acc_set),
            },
            witness2: RetractionWitness::Kill {
                victims: names(g, set),
                domain: names(g, set),
            },
            children: vec![acc, cert],
        };
        acc_set = subject;
    }
    acc
}

/// Splits `g` at vertex `s`: with `Y_1, ..., Y_l` the components of the
/// graph minus `s`, the group is an iterated amalgam of the `A_{Y_i ∪ {s}}`
/// over `⟨s⟩ ≅ Z`, each factor folding onto `s`. Produces `l - 1` amalgam
/// nodes; for `l <= 1` the whole graph goes to `certify_child`.
pub fn build_vertex_amalgam(
    g: &CoxeterGraph,
    s: &str,
    certify_child: &mut CellCertifier<'_>,
) -> Result<Certificate, BuildError> {
    let v = g
        .index_of(s)
        .ok_or_else(|| crate::GraphError::UnknownVertex(s.to_owned()))?;
    let comps = g.components_within(g.all().without(v));
    if comps.len() <= 1 {
        return certify_child(g.all());
    }
    let pieces = comps
        .into_iter()
        .map(|c| {
            let piece = c.with(v);
            certify_child(piece).map(|cert| (piece, cert))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(fold_over_vertex(g, v, pieces))
}

/// Partitions with at most two cells.
///
/// Two cells `X`, `Y` joined by the single edge `s - t` (`s ∈ X`) give
/// `A = A_X *_{⟨s⟩} A_{Y ∪ {s}}`, and `A_{Y ∪ {s}} = A_Y *_{⟨t⟩} A_{s,t}`;
/// singleton cells collapse the corresponding step.
pub fn build_two_cell(
    g: &CoxeterGraph,
    p: &Partition,
    certify_cells: &mut CellCertifier<'_>,
) -> Result<Certificate, BuildError> {
    match p.cells() {
        [] => Ok(small_base(g, VertexSet::EMPTY)),
        &[x] => cell(g, x, certify_cells),
        &[x, y] => match g.edges_between(x, y) {
            0 => {
                let cx = cell(g, x, certify_cells)?;
                let cy = cell(g, y, certify_cells)?;
                Ok(free_product(g, vec![(x, cx), (y, cy)]))
            }
            1 => {
                let s = x
                    .iter()
                    .find(|&v| !g.neighbors(v).is_disjoint(y))
                    .expect("one cross edge");
                let t = g
                    .neighbors(s)
                    .intersection(y)
                    .first()
                    .expect("one cross edge");
                let st = VertexSet::singleton(s).with(t);
                let over_t =
                    |certify_cells: &mut CellCertifier<'_>| -> Result<Certificate, BuildError> {
                        let cy = cell(g, y, certify_cells)?;
                        Ok(fold_over_vertex(
                            g,
                            t,
                            vec![(y, cy), (st, small_base(g, st))],
                        ))
                    };
                Ok(match (x.len(), y.len()) {
                    (1, 1) => small_base(g, st),
                    (1, _) => over_t(certify_cells)?,
                    (_, 1) => {
                        let cx = cell(g, x, certify_cells)?;
                        fold_over_vertex(g, s, vec![(x, cx), (st, small_base(g, st))])
                    }
                    _ => {
                        let cx = cell(g, x, certify_cells)?;
                        let cy = over_t(certify_cells)?;
                        fold_over_vertex(g, s, vec![(x, cx), (y.with(s), cy)])
                    }
                })
            }
            n => Err(BuildError::Precondition(format!(
                "cells are joined by {n} edges"
            ))),
        },
        cells => Err(BuildError::Precondition(format!(
            "two-cell builder given {} cells",
            cells.len()
        ))),
    }
}

/// Quotient even and triangle-free. With at least three cells there are two
/// non-adjacent cells `X`, `Y`; then `A = A_{S∖X} *_{A_{S∖(X∪Y)}} A_{S∖Y}`,
/// where the left factor retracts by killing `Y` and the right by killing
/// `X` (this needs every label at `X` and `Y` to be even).
pub fn build_even_tf(
    g: &CoxeterGraph,
    p: &Partition,
    certify_cells: &mut CellCertifier<'_>,
) -> Result<Certificate, BuildError> {
    let (q, _) = quotient_of_support(g, p)?;
    if !(q.is_even() && q.is_triangle_free()) {
        return Err(BuildError::Precondition(
            "quotient is not even and triangle-free".into(),
        ));
    }
    if p.len() <= 2 {
        return build_two_cell(g, p, certify_cells);
    }
    let n = p.len();
    let (i, j) = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| q.label(i, j).is_none())
        .ok_or(BuildError::NoNonAdjacentPair(n))?;
    let (x, y) = (p.cells()[i], p.cells()[j]);
    let subject = p.support();
    let x1 = subject.difference(x);
    let x2 = subject.difference(y);
    let x0 = x1.intersection(x2);
    let c1 = build_even_tf(g, &p.select((0..n).filter(|&k| k != i)), certify_cells)?;
    let c2 = build_even_tf(g, &p.select((0..n).filter(|&k| k != j)), certify_cells)?;
    Ok(Certificate::Amalgam {
        subject: names(g, subject),
        x1: names(g, x1),
        x2: names(g, x2),
        x0: names(g, x0),
        witness1: RetractionWitness::Kill {
            victims: names(g, y),
            domain: names(g, x1),
        },
        witness2: RetractionWitness::Kill {
            victims: names(g, x),
            domain: names(g, x2),
        },
        children: vec![c1, c2],
    })
}

/// Quotient a forest. Components of the quotient give a free product. On a
/// tree with at least three cells, take the first cell `X` of valence at
/// least two, its first neighbour `Y`, and the edge `s - t` joining them
/// (`s ∈ X`). Cutting the tree edge `X - Y` leaves the `X` side `V` and the
/// `Y` side `U'`; with `U = U' ∪ {s}` the group is `A_V *_{⟨s⟩} A_U`. Both
/// sides are again forest quotients with fewer cells (`U` gets `{s}` as an
/// extra singleton cell).
pub fn build_forest(
    g: &CoxeterGraph,
    p: &Partition,
    certify_cells: &mut CellCertifier<'_>,
) -> Result<Certificate, BuildError> {
    let (q, index) = quotient_of_support(g, p)?;
    if !q.is_forest() {
        return Err(BuildError::Precondition("quotient is not a forest".into()));
    }
    let trees = q.connected_components();
    if trees.len() >= 2 {
        let parts = trees
            .into_iter()
            .map(|tree| {
                let sub = p.select(tree);
                build_forest(g, &sub, certify_cells).map(|c| (sub.support(), c))
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(free_product(g, parts));
    }
    if p.len() <= 2 {
        return build_two_cell(g, p, certify_cells);
    }

    let x = (0..p.len())
        .find(|&i| q.neighbors(i).len() >= 2)
        .expect("a tree on three or more vertices has an inner vertex");
    let y = q.neighbors(x).first().expect("x has neighbours");
    let (s, _t, _m) = index
        .witness(x, y)
        .expect("adjacent cells have a witness edge");

    let y_side = q
        .components_within(q.all().without(x))
        .into_iter()
        .find(|c| c.contains(y))
        .expect("y survives removing x");
    let x_side = q
        .components_within(q.all().without(y))
        .into_iter()
        .find(|c| c.contains(x))
        .expect("x survives removing y");

    let v_part = p.select(x_side);
    let u_part = p.select(y_side).with_cell(VertexSet::singleton(s))?;
    let cv = build_forest(g, &v_part, certify_cells)?;
    let cu = build_forest(g, &u_part, certify_cells)?;
    Ok(fold_over_vertex(
        g,
        s,
        vec![(v_part.support(), cv), (u_part.support(), cu)],
    ))
}

/// Expands a search plan into a full certificate.
pub fn build_from_plan(
    g: &CoxeterGraph,
    plan: &CertifyingPartition,
) -> Result<Certificate, BuildError> {
    let mut cells = |c: VertexSet| -> Result<Certificate, BuildError> {
        match plan.plan_for(c) {
            Some(CellPlan::Base(tag)) => Ok(Certificate::Base {
                subject: names(g, c),
                tag: tag.clone(),
            }),
            Some(CellPlan::Recursive(sub)) => build_from_plan(g, sub),
            None => Err(BuildError::UncertifiedCell(
                Partition::whole(c).to_literal(g),
            )),
        }
    };
    match plan.condition {
        Condition::Forest => build_forest(g, &plan.partition, &mut cells),
        Condition::EvenTriangleFree => build_even_tf(g, &plan.partition, &mut cells),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyOutcome {
    /// `None` means "unknown", never "not residually finite".
    pub certificate: Option<Certificate>,
    pub budget_exhausted: bool,
    pub partitions_examined: u64,
}

/// Searches for a certifying partition and expands it into a certificate.
pub fn certify(
    g: &CoxeterGraph,
    axioms: &[Axiom],
    budget: u64,
) -> Result<CertifyOutcome, BuildError> {
    let outcome = find_certifying_partition(g, axioms, budget);
    let certificate = outcome
        .plan
        .as_ref()
        .map(|plan| build_from_plan(g, plan))
        .transpose()?;
    Ok(CertifyOutcome {
        certificate,
        budget_exhausted: outcome.budget_exhausted,
        partitions_examined: outcome.partitions_examined,
    })
}
