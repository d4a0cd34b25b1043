use std::collections::BTreeSet;

use artin_rf::certificate::{self, build_vertex_amalgam, Certificate};
use artin_rf::format::{emit_graph, parse_graph};
use artin_rf::partition::quotient_of_support;
use artin_rf::recognizers::{base_rf, is_even_fc, is_isomorphic, is_right_angled};
use artin_rf::{
    certify, enumerate_admissible, find_certifying_partition, quotient, verify, BuildError,
    CoxeterGraph, Partition, VertexSet, DEFAULT_BUDGET,
};
use proptest::prelude::*;

/// Graphs on up to `max_n` vertices; each pair independently absent or
/// labelled in `2..=max_label`.
fn graph_strategy(max_n: usize, max_label: u32) -> impl Strategy<Value = CoxeterGraph> {
    (0..=max_n).prop_flat_map(move |n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(
            prop_oneof![Just(None), (2..=max_label).prop_map(Some)],
            pairs,
        )
        .prop_map(move |labels| {
            let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if let Some(m) = labels[k] {
                        edges.push((names[i].clone(), names[j].clone(), m));
                    }
                    k += 1;
                }
            }
            CoxeterGraph::new(names, edges).unwrap()
        })
    })
}

fn subset_strategy(g: &CoxeterGraph) -> impl Strategy<Value = VertexSet> {
    let n = g.vertex_count() as u32;
    (0u64..(1u64 << n)).prop_map(VertexSet::from_bits)
}

/// Naive set partitions of `0..n`, built from scratch for comparison.
fn brute_partitions(n: usize) -> Vec<Vec<VertexSet>> {
    let mut out = vec![Vec::new()];
    for v in 0..n {
        let mut next = Vec::new();
        for p in out {
            for c in 0..p.len() {
                let mut q: Vec<VertexSet> = p.clone();
                q[c].insert(v);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(VertexSet::singleton(v));
            next.push(q);
        }
        out = next;
    }
    out
}

fn leaves(c: &Certificate) -> Vec<&Certificate> {
    if c.children().is_empty() {
        vec![c]
    } else {
        c.children().iter().flat_map(leaves).collect()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn full_subgraph_composes(g in graph_strategy(7, 6), bits in any::<(u64, u64)>()) {
        let all = g.all().bits();
        let x = VertexSet::from_bits(bits.0 & all);
        let y = VertexSet::from_bits(bits.1 & x.bits());
        let gx = g.induced(x);
        let y_in_gx = gx.set_of(g.names_of(y)).unwrap();
        prop_assert_eq!(gx.induced(y_in_gx), g.induced(y));
    }

    #[test]
    fn components_partition_the_vertices(g in graph_strategy(8, 5)) {
        let comps = g.connected_components();
        let mut seen = VertexSet::EMPTY;
        for &c in &comps {
            prop_assert!(!c.is_empty());
            prop_assert!(c.is_disjoint(seen));
            seen = seen.union(c);
        }
        prop_assert_eq!(seen, g.all());
        for (i, &a) in comps.iter().enumerate() {
            for &b in &comps[i + 1..] {
                prop_assert_eq!(g.edges_between(a, b), 0);
            }
            prop_assert!(g.induced(a).is_connected());
        }
    }

    #[test]
    fn forest_implies_triangle_free(g in graph_strategy(8, 7)) {
        if g.is_forest() {
            prop_assert!(g.is_triangle_free());
        }
    }

    #[test]
    fn presentation_words_alternate(g in graph_strategy(6, 9)) {
        let p = g.artin_presentation();
        prop_assert_eq!(p.relations.len(), g.edge_count());
        for (rel, (v, w, m)) in p.relations.iter().zip(g.edges()) {
            prop_assert_eq!(rel.lhs.len(), m as usize);
            prop_assert_eq!(rel.rhs.len(), m as usize);
            prop_assert_eq!(&rel.lhs[0], g.name(v));
            prop_assert_eq!(&rel.rhs[0], g.name(w));
            for word in [&rel.lhs, &rel.rhs] {
                for pair in word.windows(2) {
                    prop_assert_ne!(&pair[0], &pair[1]);
                }
            }
        }
    }

    #[test]
    fn text_format_round_trip(g in graph_strategy(8, 9)) {
        let text = emit_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_graph(&back), text);
    }

    #[test]
    fn right_angled_implies_even(g in graph_strategy(7, 4)) {
        if is_right_angled(&g) {
            prop_assert!(g.is_even());
        }
    }

    #[test]
    fn even_fc_is_hereditary((g, x) in graph_strategy(7, 6).prop_flat_map(|g| {
        let s = subset_strategy(&g);
        (Just(g), s)
    })) {
        if is_even_fc(&g) {
            prop_assert!(is_even_fc(&g.induced(x)));
        }
    }

    #[test]
    fn base_rf_ignores_names(g in graph_strategy(6, 6), salt in 0usize..1000) {
        let renamed = g.renamed(|n| format!("r{}_{}", (salt * 7 + n.len() * 13) % 97, n.chars().rev().collect::<String>())).unwrap();
        prop_assert!(is_isomorphic(&g, &renamed));
        let kind = |h: &CoxeterGraph| base_rf(h, &[]).map(|t| t.kind);
        prop_assert_eq!(kind(&g), kind(&renamed));
    }

    #[test]
    fn admissible_enumeration_equals_filtered_brute_force(g in graph_strategy(6, 5)) {
        let mut expected: Vec<Partition> = brute_partitions(g.vertex_count())
            .into_iter()
            .filter(|cells| {
                cells.iter().enumerate().all(|(i, &x)| {
                    cells[i + 1..].iter().all(|&y| {
                        g.edges().filter(|&(v, w, _)| (x.contains(v) && y.contains(w)) || (x.contains(w) && y.contains(v))).count() <= 1
                    })
                })
            })
            .map(|cells| Partition::new(cells).unwrap())
            .collect();
        let mut got: Vec<Partition> = enumerate_admissible(&g).collect();
        let distinct: BTreeSet<_> = got.iter().cloned().collect();
        prop_assert_eq!(distinct.len(), got.len());
        expected.sort();
        got.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn quotient_by_singletons_is_identity(g in graph_strategy(8, 7)) {
        let (q, _) = quotient(&g, &Partition::singletons(g.all())).unwrap();
        prop_assert!(is_isomorphic(&q, &g));
        prop_assert_eq!(q, g);
    }

    #[test]
    fn quotient_labels_match_witnesses(g in graph_strategy(6, 7), pick in any::<prop::sample::Index>()) {
        let parts: Vec<Partition> = enumerate_admissible(&g).collect();
        let p = &parts[pick.index(parts.len())];
        let (q, index) = quotient(&g, p).unwrap();
        prop_assert_eq!(q.edge_count(), index.edges.len());
        for (&(i, j), &(s, t, m)) in &index.edges {
            prop_assert!(p.cells()[i].contains(s) && p.cells()[j].contains(t));
            prop_assert_eq!(g.label(s, t), Some(m));
            prop_assert_eq!(q.label(i, j), Some(m));
        }
    }

    #[test]
    fn search_is_deterministic(g in graph_strategy(6, 5)) {
        let a = find_certifying_partition(&g, &[], 2_000);
        let b = find_certifying_partition(&g, &[], 2_000);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn certificates_verify_and_reconstruct(g in graph_strategy(6, 6)) {
        let out = certify(&g, &[], 5_000).unwrap();
        if let Some(cert) = out.certificate {
            let report = verify(&g, &cert, &[]);
            prop_assert!(report.overall, "{}", report);
            let glued: BTreeSet<String> = leaves(&cert).into_iter().flat_map(|l| l.subject().iter().cloned()).collect();
            let all: BTreeSet<String> = g.names().iter().cloned().collect();
            prop_assert_eq!(glued, all);
            let text = certificate::to_text(&cert);
            let back = certificate::from_text(&text).unwrap();
            prop_assert_eq!(&back, &cert);
            prop_assert_eq!(certificate::to_text(&back), text);
        }
    }

    #[test]
    fn vertex_amalgam_has_one_fewer_node_than_components(g in graph_strategy(7, 6), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.vertex_count() > 0);
        let s = pick.index(g.vertex_count());
        let l = g.components_within(g.all().without(s)).len();
        let mut child = |c: VertexSet| -> Result<Certificate, BuildError> {
            Ok(Certificate::Base {
                subject: g.names_of(c),
                tag: artin_rf::BaseTag { kind: artin_rf::BaseKind::UserAxiom, detail: "opaque".into() },
            })
        };
        let cert = build_vertex_amalgam(&g, g.name(s), &mut child).unwrap();
        let amalgams = cert.walk().iter().filter(|(_, c)| matches!(c, Certificate::Amalgam { .. })).count();
        prop_assert_eq!(amalgams, l.saturating_sub(1));
    }
}

#[test]
fn quotient_of_forest_with_connected_cells_checked_on_corpus() {
    // Not a general claim, only a sanity sweep: for forests, any admissible
    // partition with connected cells has a forest quotient.
    use artin_rf::corpus::{corpus, CorpusKind};
    for g in corpus(CorpusKind::Forest, 7, 30, 11) {
        for p in enumerate_admissible(&g) {
            if p.cells().iter().all(|&c| g.induced(c).is_connected()) {
                let (q, _) = quotient_of_support(&g, &p).unwrap();
                assert!(q.is_forest());
            }
        }
    }
}

#[test]
fn default_budget_is_one_million() {
    assert_eq!(DEFAULT_BUDGET, 1_000_000);
}
