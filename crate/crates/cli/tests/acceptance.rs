//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode, Stdio};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use artin_rf::certificate::{self, conditions, Subject};
use artin_rf::corpus::{self, CorpusKind};
use artin_rf::format::emit_graph;
use artin_rf::recognizers::{check_tag, gram_positive_definite, is_spherical};
use artin_rf::{
    certify, check_retraction, enumerate_admissible, quotient, verify, BaseKind, BaseTag,
    Certificate, CoxeterGraph, Partition, RetractionWitness, VertexSet, DEFAULT_BUDGET,
};

const FOREST_LIMIT: Duration = Duration::from_secs(30);
const EVEN_TF_LIMIT: Duration = Duration::from_secs(60);
const GRAM_TOLERANCE: f64 = 1e-9;
const BIN: &str = env!("CARGO_BIN_EXE_artin-rf");

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        passed,
        detail: detail.into(),
    }
}

/// Certifies and verifies every graph; returns (successes, first failure).
fn certify_all(graphs: &[CoxeterGraph]) -> (usize, Option<String>) {
    let mut ok = 0;
    let mut first = None;
    for g in graphs {
        match certify(g, &[], DEFAULT_BUDGET) {
            Ok(out) => match out.certificate {
                Some(c) if verify(g, &c, &[]).overall => ok += 1,
                Some(_) => {
                    first.get_or_insert_with(|| format!("certificate rejected for {g:?}"));
                }
                None => {
                    first.get_or_insert_with(|| format!("unknown for {g:?}"));
                }
            },
            Err(e) => {
                first.get_or_insert_with(|| format!("build error {e} for {g:?}"));
            }
        }
    }
    (ok, first)
}

fn seeded_family(
    kind: CorpusKind,
    sizes: std::ops::RangeInclusive<usize>,
    count: usize,
    seed: u64,
) -> Vec<CoxeterGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            corpus::generate(kind, n, &mut rng)
        })
        .collect()
}

fn suite(
    kind: CorpusKind,
    sizes: std::ops::RangeInclusive<usize>,
    seed: u64,
    limit: Duration,
) -> Verdict {
    let graphs = seeded_family(kind, sizes, 200, seed);
    let start = Instant::now();
    let (ok, first) = certify_all(&graphs);
    let elapsed = start.elapsed();
    let pred_ok = graphs.iter().all(|g| match kind {
        CorpusKind::Forest => g.is_forest(),
        _ => {
            g.is_even() && g.is_triangle_free() && g.edges().all(|(_, _, m)| [2, 4, 6].contains(&m))
        }
    });
    verdict(
        ok == graphs.len() && elapsed < limit && pred_ok,
        format!(
            "{ok}/{} certified and verified in {:.2}s (limit {}s){}",
            graphs.len(),
            elapsed.as_secs_f64(),
            limit.as_secs(),
            first.map(|f| format!("; {f}")).unwrap_or_default()
        ),
    )
}

fn criterion_1() -> Verdict {
    suite(CorpusKind::Forest, 3..=12, 1, FOREST_LIMIT)
}

fn criterion_2() -> Verdict {
    suite(CorpusKind::EvenTriangleFree, 1..=10, 2, EVEN_TF_LIMIT)
}

/// Every set partition of `0..n`, grown one vertex at a time.
fn all_set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut parts: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for v in 0..n {
        let mut next = Vec::new();
        for p in &parts {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(v);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![v]);
            next.push(q);
        }
        parts = next;
    }
    parts
}

fn cross_edges(g: &CoxeterGraph, a: &[usize], b: &[usize]) -> usize {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| g.label(x, y).is_some())
        .count()
}

fn criterion_3() -> Verdict {
    const BELL: [usize; 8] = [1, 1, 2, 5, 15, 52, 203, 877];
    let graphs = seeded_family(CorpusKind::Random, 1..=7, 50, 3);
    let mut total = 0;
    for g in &graphs {
        let n = g.vertex_count();
        let all = all_set_partitions(n);
        if all.len() != BELL[n] {
            return verdict(
                false,
                format!(
                    "oracle produced {} partitions of {n}, Bell is {}",
                    all.len(),
                    BELL[n]
                ),
            );
        }
        let expected: BTreeSet<Vec<Vec<usize>>> = all
            .into_iter()
            .filter(|p| {
                (0..p.len()).all(|i| (i + 1..p.len()).all(|j| cross_edges(g, &p[i], &p[j]) <= 1))
            })
            .map(|mut p| {
                p.sort();
                p
            })
            .collect();
        let listed: Vec<Vec<Vec<usize>>> = enumerate_admissible(g)
            .map(|p| p.cells().iter().map(|c| c.iter().collect()).collect())
            .collect();
        let got: BTreeSet<_> = listed.iter().cloned().collect();
        if got.len() != listed.len() || got != expected {
            return verdict(
                false,
                format!(
                    "mismatch on {g:?}: {} listed, {} expected",
                    listed.len(),
                    expected.len()
                ),
            );
        }
        total += expected.len();
    }
    verdict(
        true,
        format!("50 graphs, {total} admissible partitions, exact set equality"),
    )
}

/// Label-preserving isomorphism by trying every bijection.
fn isomorphic_by_permutation(a: &CoxeterGraph, b: &CoxeterGraph) -> bool {
    fn extend(
        a: &CoxeterGraph,
        b: &CoxeterGraph,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let k = map.len();
        if k == a.vertex_count() {
            return true;
        }
        for t in 0..b.vertex_count() {
            if used[t] || (0..k).any(|i| a.label(i, k) != b.label(map[i], t)) {
                continue;
            }
            map.push(t);
            used[t] = true;
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[t] = false;
        }
        false
    }
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && extend(a, b, &mut Vec::new(), &mut vec![false; b.vertex_count()])
}

fn criterion_4() -> Verdict {
    let graphs = seeded_family(CorpusKind::Random, 1..=9, 100, 4);
    for g in &graphs {
        let (q, _) = match quotient(g, &Partition::singletons(g.all())) {
            Ok(q) => q,
            Err(e) => return verdict(false, format!("quotient failed: {e}")),
        };
        if !isomorphic_by_permutation(&q, g) {
            return verdict(false, format!("quotient of {g:?} is {q:?}"));
        }
    }
    verdict(true, "100 graphs")
}

fn criterion_5() -> Verdict {
    const LABELS: [Option<u32>; 6] = [Some(2), Some(3), Some(4), Some(5), Some(6), None];
    let (mut checked, mut spherical) = (0, 0);
    for n in 1..=4usize {
        let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let combos = LABELS.len().pow(pairs.len() as u32);
        for mut code in 0..combos {
            let mut edges = Vec::new();
            for &(i, j) in &pairs {
                if let Some(m) = LABELS[code % LABELS.len()] {
                    edges.push((names[i].clone(), names[j].clone(), m));
                }
                code /= LABELS.len();
            }
            let g = CoxeterGraph::new(names.clone(), edges).expect("valid graph");
            if !g.is_connected() {
                continue;
            }
            checked += 1;
            let by_type = is_spherical(&g);
            if by_type != gram_positive_definite(&g, GRAM_TOLERANCE) {
                return verdict(
                    false,
                    format!("disagreement on {g:?}: classification says {by_type}"),
                );
            }
            spherical += usize::from(by_type);
        }
    }
    verdict(
        true,
        format!("{checked} connected graphs, {spherical} spherical, tolerance {GRAM_TOLERANCE:e}"),
    )
}

fn criterion_6() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut folds, mut kills_even, mut kills_odd) = (0, 0, 0);
    for case in 0..1000 {
        let n = rng.gen_range(2..=7);
        let names = corpus::vertex_names(n);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((names[i].clone(), names[j].clone(), rng.gen_range(2..=12)));
                }
            }
        }
        let g = CoxeterGraph::new(names, edges).expect("valid graph");

        // FoldTo: any domain, any target inside it.
        let sub = VertexSet::from_bits(rng.gen_range(1..(1u64 << n)));
        let members: Vec<usize> = sub.iter().collect();
        let s = *members.choose(&mut rng).expect("nonempty");
        let fold = RetractionWitness::FoldTo {
            target: g.name(s).to_owned(),
            domain: g.names_of(sub),
        };
        if check_retraction(&g, sub, VertexSet::singleton(s), &fold) != Ok(true) {
            return verdict(
                false,
                format!("case {case}: FoldTo onto {} rejected on {g:?}", g.name(s)),
            );
        }
        folds += 1;

        // Kill across an edge: accepted iff the label is even.
        let edge_list: Vec<(usize, usize, u32)> = g.edges().collect();
        let Some(&(a, b, m)) = edge_list.choose(&mut rng) else {
            continue;
        };
        let (keep, victim) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
        let domain = VertexSet::singleton(keep).with(victim);
        let kill = RetractionWitness::Kill {
            victims: [g.name(victim).to_owned()].into(),
            domain: g.names_of(domain),
        };
        let accepted = check_retraction(&g, domain, VertexSet::singleton(keep), &kill) == Ok(true);
        if accepted != (m % 2 == 0) {
            return verdict(
                false,
                format!("case {case}: Kill across label {m} accepted = {accepted}"),
            );
        }
        if m % 2 == 0 {
            kills_even += 1;
        } else {
            kills_odd += 1;
        }
    }
    verdict(
        true,
        format!("1000 cases: {folds} folds accepted, {kills_even} even kills accepted, {kills_odd} odd kills rejected"),
    )
}

#[derive(Clone, Copy, Debug)]
enum Mutation {
    ParityFlip,
    CrossEdge,
    ComponentSplit,
    BaseRelabel,
}

impl Mutation {
    const ALL: [Mutation; 4] = [
        Mutation::ParityFlip,
        Mutation::CrossEdge,
        Mutation::ComponentSplit,
        Mutation::BaseRelabel,
    ];

    fn expected(self) -> &'static [&'static str] {
        match self {
            Mutation::ParityFlip => &[conditions::RETRACTION_1, conditions::RETRACTION_2],
            Mutation::CrossEdge => &[conditions::AMALGAM_NO_CROSS_EDGES],
            Mutation::ComponentSplit => &[conditions::FREE_PRODUCT_COMPONENTS],
            Mutation::BaseRelabel => &[conditions::BASE_RECOGNIZER],
        }
    }
}

fn set(g: &CoxeterGraph, s: &Subject) -> VertexSet {
    g.set_of(s).expect("valid certificate names")
}

/// A mutated (graph, certificate) pair, or `None` when the certificate has
/// no site for this kind of mutation.
fn mutate(
    g: &CoxeterGraph,
    c: &Certificate,
    kind: Mutation,
    rng: &mut ChaCha8Rng,
) -> Option<(CoxeterGraph, Certificate)> {
    let nodes = c.walk();
    match kind {
        Mutation::ParityFlip => {
            // an edge between a killed and a kept generator of a Kill domain
            let mut sites = Vec::new();
            for (_, node) in &nodes {
                if let Certificate::Amalgam {
                    witness1, witness2, ..
                } = node
                {
                    for w in [witness1, witness2] {
                        if let RetractionWitness::Kill { victims, domain } = w {
                            let victims = set(g, victims);
                            let kept = set(g, domain).difference(victims);
                            for (u, v, m) in g.edges() {
                                if (victims.contains(u) && kept.contains(v))
                                    || (victims.contains(v) && kept.contains(u))
                                {
                                    sites.push((u, v, m));
                                }
                            }
                        }
                    }
                }
            }
            let &(u, v, m) = sites.choose(rng)?;
            let h = g.with_label(g.name(u), g.name(v), Some(m + 1)).ok()?;
            Some((h, c.clone()))
        }
        Mutation::CrossEdge => {
            let mut sites = Vec::new();
            for (_, node) in &nodes {
                if let Certificate::Amalgam { x1, x2, x0, .. } = node {
                    let x0 = set(g, x0);
                    let left = set(g, x1).difference(x0);
                    let right = set(g, x2).difference(x0);
                    for u in left {
                        for v in right {
                            sites.push((u, v));
                        }
                    }
                }
            }
            let &(u, v) = sites.choose(rng)?;
            let h = g
                .with_label(g.name(u), g.name(v), Some(rng.gen_range(2..=7)))
                .ok()?;
            Some((h, c.clone()))
        }
        Mutation::ComponentSplit => {
            let paths: Vec<&String> = nodes
                .iter()
                .filter(|(_, n)| matches!(n, Certificate::FreeProduct { .. }))
                .map(|(p, _)| p)
                .collect();
            let path = (*paths.choose(rng)?).clone();
            let mut m = c.clone();
            let Some(Certificate::FreeProduct { children, .. }) = m.node_mut(&path) else {
                unreachable!("path selected from walk")
            };
            let from = rng.gen_range(0..children.len());
            let to = (from + 1 + rng.gen_range(0..children.len() - 1)) % children.len();
            let moved = children[from]
                .subject()
                .iter()
                .next()
                .expect("nonempty")
                .clone();
            if children[from].subject().len() == 1 {
                children.remove(from);
            } else {
                subject_mut(&mut children[from]).remove(&moved);
                subject_mut(&mut children[to]).insert(moved);
            }
            Some((g.clone(), m))
        }
        Mutation::BaseRelabel => {
            let leaves: Vec<(&String, &Certificate)> = nodes
                .iter()
                .filter(|(_, n)| matches!(n, Certificate::Base { .. }))
                .map(|(p, n)| (p, *n))
                .collect();
            let &(path, leaf) = leaves.choose(rng)?;
            let sub = g.induced(set(g, leaf.subject()));
            let wrong = BaseKind::ALL
                .into_iter()
                .map(|kind| BaseTag {
                    kind,
                    detail: "relabelled".into(),
                })
                .find(|tag| check_tag(&sub, tag, &[]).is_err())
                .expect("user axioms always fail without axioms");
            let mut m = c.clone();
            let Some(Certificate::Base { tag, .. }) = m.node_mut(path) else {
                unreachable!("path selected from walk")
            };
            *tag = wrong;
            Some((g.clone(), m))
        }
    }
}

fn subject_mut(c: &mut Certificate) -> &mut Subject {
    match c {
        Certificate::Base { subject, .. }
        | Certificate::FreeProduct { subject, .. }
        | Certificate::Amalgam { subject, .. } => subject,
    }
}

fn criterion_7() -> Verdict {
    let mut pool = seeded_family(CorpusKind::Forest, 4..=12, 50, 70);
    pool.extend(seeded_family(CorpusKind::EvenTriangleFree, 4..=10, 50, 71));
    let certs: Vec<(CoxeterGraph, Certificate)> = pool
        .into_iter()
        .filter_map(|g| {
            let c = certify(&g, &[], DEFAULT_BUDGET).ok()?.certificate?;
            verify(&g, &c, &[]).overall.then_some((g, c))
        })
        .collect();
    if certs.len() != 100 {
        return verdict(
            false,
            format!("only {} of 100 base certificates are valid", certs.len()),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut per_kind = [0usize; 4];
    for k in 0..500 {
        let kind = Mutation::ALL[k % 4];
        let mut order: Vec<usize> = (0..certs.len()).collect();
        order.shuffle(&mut rng);
        let Some((h, m)) = order
            .into_iter()
            .find_map(|i| mutate(&certs[i].0, &certs[i].1, kind, &mut rng))
        else {
            return verdict(false, format!("no certificate offers a {kind:?} site"));
        };
        let report = verify(&h, &m, &[]);
        if report.overall {
            return verdict(false, format!("mutation {k} ({kind:?}) was accepted"));
        }
        if !kind.expected().iter().any(|c| report.failed_condition(c)) {
            let named: Vec<&str> = report.failures().map(|e| e.condition.as_str()).collect();
            return verdict(
                false,
                format!("mutation {k} ({kind:?}) rejected by {named:?} only"),
            );
        }
        per_kind[k % 4] += 1;
    }
    verdict(
        true,
        format!(
            "500 mutations of 100 certificates rejected with the expected condition (parity {}, cross-edge {}, split {}, relabel {})",
            per_kind[0], per_kind[1], per_kind[2], per_kind[3]
        ),
    )
}

fn criterion_8() -> Verdict {
    let tri = CoxeterGraph::new(
        ["a", "b", "c"],
        [("a", "b", 3), ("b", "c", 3), ("a", "c", 3)],
    )
    .expect("valid");
    let admissible = enumerate_admissible(&tri).count();
    let out = certify(&tri, &[], DEFAULT_BUDGET).expect("search runs");
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("tri.graph");
    std::fs::write(&path, emit_graph(&tri)).expect("write");
    let run = Command::new(BIN)
        .arg("certify")
        .arg(&path)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8_lossy(&run.stdout);
    let passed = admissible == 2
        && out.certificate.is_none()
        && !out.budget_exhausted
        && out.partitions_examined == 2
        && run.status.code() == Some(1)
        && stdout.contains("unknown: no certificate found within budget")
        && stdout.contains("partitions-examined: 2");
    verdict(
        passed,
        format!(
            "{admissible} admissible partitions, {} examined, exit {:?}",
            out.partitions_examined,
            run.status.code()
        ),
    )
}

fn criterion_9() -> Verdict {
    let dir = tempfile::tempdir().expect("temp dir");
    let mut graphs = seeded_family(CorpusKind::Forest, 3..=12, 10, 90);
    graphs.extend(seeded_family(CorpusKind::EvenTriangleFree, 3..=10, 10, 91));
    for (i, g) in graphs.iter().enumerate() {
        let path = dir.path().join(format!("g{i}.graph"));
        std::fs::write(&path, emit_graph(g)).expect("write");
        let outputs: Vec<Vec<u8>> = (0..2)
            .map(|run| {
                let out = dir.path().join(format!("g{i}-{run}.cert"));
                let status = Command::new(BIN)
                    .arg("certify")
                    .arg(&path)
                    .arg("--out")
                    .arg(&out)
                    .stderr(Stdio::null())
                    .status()
                    .expect("binary runs");
                assert!(status.success(), "certify failed on {g:?}");
                std::fs::read(&out).expect("certificate written")
            })
            .collect();
        if outputs[0] != outputs[1] {
            return verdict(
                false,
                format!("certify output differs between runs on {g:?}"),
            );
        }
        let text = String::from_utf8(outputs[0].clone()).expect("utf-8");
        let parsed = match certificate::from_text(&text) {
            Ok(c) => c,
            Err(e) => return verdict(false, format!("written certificate does not parse: {e}")),
        };
        if certificate::to_text(&parsed) != text {
            return verdict(false, format!("serialize/parse/serialize differs on {g:?}"));
        }
    }
    verdict(
        true,
        format!("{} graphs, two CLI runs each, byte-identical", graphs.len()),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("forests certify and verify", criterion_1),
        ("even triangle-free graphs certify and verify", criterion_2),
        ("admissible enumeration equals brute force", criterion_3),
        ("singleton quotient is the input", criterion_4),
        ("type classification agrees with the Gram test", criterion_5),
        ("retraction law for FoldTo and Kill", criterion_6),
        ("single-field mutations are rejected", criterion_7),
        ("triangle (3,3,3) is an honest unknown", criterion_8),
        ("certificates are byte-stable", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        let mark = if v.passed { "PASS" } else { "FAIL" };
        println!("{mark} criterion {}: {name}: {}", i + 1, v.detail);
        failed += usize::from(!v.passed);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
