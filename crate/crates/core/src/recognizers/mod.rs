//! Recognizers for Artin groups already known to be residually finite.
//!
//! A positive answer from any of these becomes a trusted `Base` leaf of a
//! certificate. The families are: at most two generators, right-angled,
//! spherical type, even of FC type, and graphs matching a user-supplied axiom.

mod cliques;
mod gram;
mod iso;
mod spherical;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::CoxeterGraph;

pub use cliques::maximal_cliques;
pub use gram::{gram_positive_definite, GramMatrix};
pub use iso::{find_isomorphism, is_isomorphic};
pub use spherical::{is_spherical, spherical_decomposition, FiniteType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BaseKind {
    SizeLeqTwo,
    SphericalType,
    RightAngled,
    #[serde(rename = "EvenFC")]
    EvenFc,
    UserAxiom,
}

impl BaseKind {
    pub const ALL: [BaseKind; 5] = [
        BaseKind::SizeLeqTwo,
        BaseKind::SphericalType,
        BaseKind::RightAngled,
        BaseKind::EvenFc,
        BaseKind::UserAxiom,
    ];
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BaseKind::SizeLeqTwo => "SizeLeqTwo",
            BaseKind::SphericalType => "SphericalType",
            BaseKind::RightAngled => "RightAngled",
            BaseKind::EvenFc => "EvenFC",
            BaseKind::UserAxiom => "UserAxiom",
        };
        f.write_str(s)
    }
}

/// Why a graph's Artin group is taken as residually finite without proof.
///
/// For [`BaseKind::UserAxiom`] the `detail` is the axiom's name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BaseTag {
    pub kind: BaseKind,
    pub detail: String,
}

/// A named graph whose Artin group the user asserts is residually finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axiom {
    pub name: String,
    pub graph: CoxeterGraph,
}

impl Axiom {
    pub fn new(name: impl Into<String>, graph: CoxeterGraph) -> Self {
        Axiom {
            name: name.into(),
            graph,
        }
    }
}

pub fn is_right_angled(g: &CoxeterGraph) -> bool {
    g.edges().all(|(_, _, m)| m == 2)
}

/// Even and of FC type. Only maximal cliques of the finite-label graph are
/// tested: every free-of-infinity subset lies in one, and full subgraphs of
/// spherical graphs are spherical.
pub fn is_even_fc(g: &CoxeterGraph) -> bool {
    g.is_even()
        && maximal_cliques(g)
            .into_iter()
            .all(|c| is_spherical(&g.induced(c)))
}

pub fn matching_axiom<'a>(g: &CoxeterGraph, axioms: &'a [Axiom]) -> Option<&'a Axiom> {
    axioms.iter().find(|a| is_isomorphic(&a.graph, g))
}

fn size_detail(g: &CoxeterGraph) -> String {
    match (g.vertex_count(), g.edges().next()) {
        (0, _) => "trivial group".into(),
        (1, _) => "infinite cyclic group".into(),
        (_, None) => "free group of rank 2".into(),
        (_, Some((_, _, m))) => format!("dihedral Artin group of spherical type I2({m})"),
    }
}

/// First matching family in the order SizeLeqTwo, RightAngled,
/// SphericalType, EvenFC, UserAxiom.
pub fn base_rf(g: &CoxeterGraph, axioms: &[Axiom]) -> Option<BaseTag> {
    let tag = |kind, detail: String| Some(BaseTag { kind, detail });
    if g.vertex_count() <= 2 {
        return tag(BaseKind::SizeLeqTwo, size_detail(g));
    }
    if is_right_angled(g) {
        return tag(BaseKind::RightAngled, "all finite labels equal 2".into());
    }
    if let Some(types) = spherical_decomposition(g) {
        let names: Vec<String> = types.iter().map(ToString::to_string).collect();
        return tag(
            BaseKind::SphericalType,
            format!("finite type {}", names.join(" x ")),
        );
    }
    if is_even_fc(g) {
        return tag(
            BaseKind::EvenFc,
            "even, every free-of-infinity subset spherical".into(),
        );
    }
    matching_axiom(g, axioms).and_then(|a| tag(BaseKind::UserAxiom, a.name.clone()))
}

/// Re-checks a tag against `g` using only the recognizer named by its kind.
pub fn check_tag(g: &CoxeterGraph, tag: &BaseTag, axioms: &[Axiom]) -> Result<(), String> {
    let ok = match tag.kind {
        BaseKind::SizeLeqTwo => g.vertex_count() <= 2,
        BaseKind::SphericalType => is_spherical(g),
        BaseKind::RightAngled => is_right_angled(g),
        BaseKind::EvenFc => is_even_fc(g),
        BaseKind::UserAxiom => {
            let Some(axiom) = axioms.iter().find(|a| a.name == tag.detail) else {
                return Err(format!("no axiom named `{}`", tag.detail));
            };
            is_isomorphic(&axiom.graph, g)
        }
    };
    if ok {
        Ok(())
    } else {
        Err(format!("subject does not satisfy {}", tag.kind))
    }
}
