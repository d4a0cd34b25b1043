use crate::error::RetractionError;
use crate::presentation::alternating_word;
use crate::{CoxeterGraph, VertexSet};

use super::RetractionWitness;

/// Image of each generator under a witness: `Some(v)` for a generator,
/// `None` for the identity.
fn image_map(
    g: &CoxeterGraph,
    sub: VertexSet,
    w: &RetractionWitness,
) -> Result<Vec<Option<usize>>, RetractionError> {
    let mut image: Vec<Option<usize>> = (0..g.vertex_count()).map(Some).collect();
    match w {
        RetractionWitness::FoldTo { target, .. } => {
            let s = g
                .index_of(target)
                .ok_or_else(|| crate::GraphError::UnknownVertex(target.clone()))?;
            if !sub.contains(s) {
                return Err(RetractionError::DomainMismatch);
            }
            for v in sub {
                image[v] = Some(s);
            }
        }
        RetractionWitness::Kill { victims, .. } => {
            let victims = g.set_of(victims)?;
            if !victims.is_subset(sub) {
                return Err(RetractionError::DomainMismatch);
            }
            for v in victims {
                image[v] = None;
            }
        }
    }
    Ok(image)
}

/// Checks that `w` defines a retraction of `A_sub` onto `A_target`:
///
/// 1. it fixes every generator of `target` (an error otherwise),
/// 2. it sends every generator of `sub` into `target` or to the identity,
/// 3. every relation `Π(u,v:m) = Π(v,u:m)` of the full subgraph on `sub`
///    either lands on a defining relation `Π(u',v':m) = Π(v',u':m)` of
///    `A_target` (distinct images joined by an `m` edge), or becomes an
///    equality of words in the free monoid once letters are substituted and
///    identity letters deleted.
///
/// Condition 3 makes the generator map a homomorphism; with 1 and 2 it is a
/// retraction of the inclusion `A_target -> A_sub`.
pub fn check_retraction(
    g: &CoxeterGraph,
    sub: VertexSet,
    target: VertexSet,
    w: &RetractionWitness,
) -> Result<bool, RetractionError> {
    retraction_defect(g, sub, target, w).map(|d| d.is_none())
}

/// Like [`check_retraction`], but explains a negative answer.
pub(crate) fn retraction_defect(
    g: &CoxeterGraph,
    sub: VertexSet,
    target: VertexSet,
    w: &RetractionWitness,
) -> Result<Option<String>, RetractionError> {
    if g.set_of(w.domain())? != sub {
        return Err(RetractionError::DomainMismatch);
    }
    if !target.is_subset(sub) {
        return Err(RetractionError::TargetOutsideDomain);
    }
    let image = image_map(g, sub, w)?;
    if let Some(v) = target.iter().find(|&v| image[v] != Some(v)) {
        return Err(RetractionError::TargetNotFixed(g.name(v).to_owned()));
    }
    if let Some(v) = sub
        .iter()
        .find(|&v| image[v].is_some_and(|u| !target.contains(u)))
    {
        return Ok(Some(format!("`{}` is sent outside the target", g.name(v))));
    }
    let substitute = |word: Vec<String>| -> Vec<usize> {
        word.iter()
            .filter_map(|letter| image[g.index_of(letter).expect("letters are vertices")])
            .collect()
    };
    for (u, v, m) in g.edges() {
        if !(sub.contains(u) && sub.contains(v)) {
            continue;
        }
        if let (Some(iu), Some(iv)) = (image[u], image[v]) {
            if iu != iv && g.label(iu, iv) == Some(m) {
                continue;
            }
        }
        let (a, b) = (g.name(u), g.name(v));
        let lhs = substitute(alternating_word(a, b, m));
        let rhs = substitute(alternating_word(b, a, m));
        if lhs != rhs {
            let show = |w: &[usize]| {
                if w.is_empty() {
                    "1".to_owned()
                } else {
                    w.iter().map(|&x| g.name(x)).collect::<Vec<_>>().join(" ")
                }
            };
            return Ok(Some(format!(
                "relation on {a}-{b} (m = {m}) becomes {} = {}",
                show(&lhs),
                show(&rhs)
            )));
        }
    }
    Ok(None)
}
