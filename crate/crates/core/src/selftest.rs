//! Exhaustive and randomized sweeps that check the library against its
//! oracles. Shared by the acceptance test target and `orientkit selftest`.

use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::characterize::catalog::catalog_self_check;
use crate::characterize::{
    decide_with, forbidden_catalog, orient_p3_strong_raft, DecideOptions,
    P3RaftLayout, Witness,
};
use crate::enumerate::{
    all_labeled_graphs, co_chain_graphs, connected_unlabeled_graphs, random_graph,
    unlabeled_graphs,
};
use crate::families::{bull, claw, complete_bipartite, cycle, domino, path};
use crate::graph::{Graph, VertexSet};
use crate::minor::find_induced_minor;
use crate::orientation::{extend_simplicial, extend_true_twin, extend_universal};
use crate::products::{direct, strong, ProductKind};
use crate::recognize::{recognize_2sat, recognize_bruteforce, BRUTE_FORCE_EDGE_BUDGET};
use crate::search::{find_induced_subgraph, is_isomorphic};
use crate::structure::{
    classify_ttf_co_chain, co_chain_partition, is_chordal, is_co_chain_via_forbidden,
    is_p5_c4_c5_claw_bull_free, is_pseudoforest, is_true_twin_free, CoChainTTFClass,
};

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CheckReport {
    fn finish(name: &str, start: Instant, limit: Option<Duration>, failures: Vec<String>, summary: String) -> Self {
        let elapsed = start.elapsed();
        let mut passed = failures.is_empty();
        let mut detail = summary;
        if let Some(limit) = limit {
            if elapsed > limit {
                passed = false;
                detail.push_str(&format!("; exceeded time limit of {}s", limit.as_secs()));
            }
        }
        if !failures.is_empty() {
            detail.push_str(&format!("; {} failure(s), first: {}", failures.len(), failures[0]));
        }
        CheckReport {
            name: name.to_string(),
            passed,
            detail,
            seconds: elapsed.as_secs_f64(),
        }
    }

    /// One line: `PASS name (1.23s): detail`.
    pub fn line(&self) -> String {
        format!(
            "{} {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.seconds,
            self.detail
        )
    }
}

fn oracle_mismatch(g: &Graph) -> Option<String> {
    let fast = recognize_2sat(g);
    let slow = match recognize_bruteforce(g) {
        Ok(r) => r,
        Err(e) => return Some(format!("{g:?}: {e}")),
    };
    if fast.is_yes() != slow.is_yes() {
        return Some(format!("{g:?}: 2-SAT says {}, exhaustive says {}", fast.is_yes(), slow.is_yes()));
    }
    for d in [fast.certificate(), slow.certificate()].into_iter().flatten() {
        if !d.is_one_perfect() || d.base() != g {
            return Some(format!("{g:?}: invalid certificate"));
        }
    }
    None
}

/// Random graph on 6..=8 vertices with at most the brute-force edge budget,
/// resampling denser draws.
fn random_oracle_graph(rng: &mut impl Rng) -> Graph {
    loop {
        let n = rng.gen_range(6..=8);
        let g = random_graph(rng, n);
        if g.edge_count() <= BRUTE_FORCE_EDGE_BUDGET {
            return g;
        }
    }
}

/// 2-SAT recognizer against the exhaustive oracle on every labeled graph with
/// a vertex count in `labeled` and on `samples` random graphs with 6..=8
/// vertices.
pub fn recognizer_agreement(labeled: RangeInclusive<usize>, samples: usize, seed: u64, limit: Option<Duration>) -> CheckReport {
    let start = Instant::now();
    let sizes = if labeled.start() == labeled.end() {
        labeled.start().to_string()
    } else {
        format!("{}-{}", labeled.start(), labeled.end())
    };
    let labeled: Vec<Graph> = labeled.flat_map(all_labeled_graphs).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random: Vec<Graph> = (0..samples).map(|_| random_oracle_graph(&mut rng)).collect();
    let failures: Vec<String> = labeled
        .par_iter()
        .chain(random.par_iter())
        .filter_map(oracle_mismatch)
        .collect();
    let summary = format!(
        "{} labeled graphs on {sizes} vertices and {} random graphs on 6-8 vertices",
        labeled.len(),
        random.len()
    );
    CheckReport::finish("recognizer agreement", start, limit, failures, summary)
}

fn witness_problem(w: &Witness, product: &Graph) -> Option<String> {
    if !w.verify(product) {
        return Some(format!("witness {} does not verify", w.pattern()));
    }
    let p = w.pattern_graph()?;
    match recognize_bruteforce(&p) {
        Ok(r) if !r.is_yes() => None,
        _ => Some(format!("witness pattern {} is 1-p.o.", w.pattern())),
    }
}

/// Every decider against the recognizer on all ordered pairs of unlabeled
/// graphs with `min_n..=max_n` vertices.
pub fn theorem_sweep(min_n: usize, max_n: usize, opts: &DecideOptions, limit: Option<Duration>) -> CheckReport {
    let start = Instant::now();
    let graphs: Vec<Graph> = (min_n..=max_n).flat_map(unlabeled_graphs).collect();
    let mut jobs = Vec::new();
    for kind in ProductKind::ALL {
        for g in &graphs {
            for h in &graphs {
                jobs.push((kind, g, h));
            }
        }
    }
    let results: Vec<(bool, bool, Option<String>)> = jobs
        .par_iter()
        .map(|&(kind, g, h)| {
            let product = kind.apply(g, h);
            let expected = recognize_2sat(&product).is_yes();
            let v = match decide_with(kind, g, h, opts) {
                Ok(v) => v,
                Err(e) => return (false, false, Some(format!("{kind} {g:?} {h:?}: {e}"))),
            };
            let mut problem = None;
            if v.is_1po != expected {
                problem = Some(format!("{kind} {g:?} {h:?}: decider {} vs recognizer {expected}", v.is_1po));
            } else if let Some(d) = &v.certificate {
                if !d.is_one_perfect() || d.base() != &product {
                    problem = Some(format!("{kind} {g:?} {h:?}: bad certificate"));
                }
            } else if v.is_1po {
                problem = Some(format!("{kind} {g:?} {h:?}: missing certificate"));
            }
            if problem.is_none() {
                if let Some(w) = &v.witness {
                    problem = witness_problem(w, &product).map(|p| format!("{kind} {g:?} {h:?}: {p}"));
                }
            }
            (v.is_1po, v.witness.is_some(), problem)
        })
        .collect();
    let yes = results.iter().filter(|r| r.0).count();
    let witnessed = results.iter().filter(|r| r.1).count();
    let failures: Vec<String> = results.into_iter().filter_map(|r| r.2).collect();
    let summary = format!(
        "{} decisions over {} factor graphs on {}-{} vertices ({} yes, {} of {} no-verdicts with a witness)",
        jobs.len(),
        graphs.len(),
        min_n,
        max_n,
        yes,
        witnessed,
        jobs.len() - yes
    );
    CheckReport::finish("theorem sweep", start, limit, failures, summary)
}

/// The explicit `P_3 ⊠ R_n` orientation for `n` in `1..=max_n`, with the
/// out-neighbourhoods compared to the predicted ones for `n <= case_n`.
pub fn raft_construction(max_n: usize, case_n: usize, limit: Option<Duration>) -> CheckReport {
    let start = Instant::now();
    let failures: Vec<String> = (1..=max_n)
        .into_par_iter()
        .filter_map(|n| {
            let d = match orient_p3_strong_raft(n) {
                Ok(d) => d,
                Err(e) => return Some(format!("n = {n}: {e}")),
            };
            if !d.is_one_perfect() {
                return Some(format!("n = {n}: not 1-perfect at {:?}", d.violations()));
            }
            if n <= case_n {
                let layout = P3RaftLayout::new(n).ok()?;
                for v in layout.core() {
                    let predicted = layout.predicted_out_neighborhood(v);
                    if predicted.as_deref() != Some(d.out_neighbors(v).as_slice()) {
                        return Some(format!("n = {n}: vertex {v} has N+ {:?}, predicted {predicted:?}", d.out_neighbors(v)));
                    }
                }
            }
            None
        })
        .collect();
    let summary = format!("n = 1..={max_n} 1-perfect, out-neighbourhood cases checked for n <= {case_n}");
    CheckReport::finish("raft construction", start, limit, failures, summary)
}

/// Three-way agreement of the co-chain tests on connected graphs.
pub fn co_chain_equivalence(max_n: usize) -> CheckReport {
    let start = Instant::now();
    let graphs: Vec<Graph> = (1..=max_n).flat_map(connected_unlabeled_graphs).collect();
    let results: Vec<(bool, Option<String>)> = graphs
        .par_iter()
        .map(|g| {
            let a = co_chain_partition(g).is_some_and(|p| p.verify(g));
            let b = is_p5_c4_c5_claw_bull_free(g);
            let c = is_co_chain_via_forbidden(g);
            let bad = (a != b || b != c).then(|| format!("{g:?}: partition {a}, five-free {b}, three-free {c}"));
            (a, bad)
        })
        .collect();
    let co_chain = results.iter().filter(|r| r.0).count();
    let failures: Vec<String> = results.into_iter().filter_map(|r| r.1).collect();
    let summary = format!("{} connected graphs on <= {max_n} vertices, {co_chain} co-chain", graphs.len());
    CheckReport::finish("co-chain equivalence", start, None, failures, summary)
}

/// Every connected true-twin-free co-chain graph on `<= max_n` vertices is
/// `K_1`, `R_n` or `R_n * K_1`, and rebuilds to an isomorphic graph.
pub fn classification(max_n: usize) -> CheckReport {
    let start = Instant::now();
    let graphs: Vec<Graph> = co_chain_graphs(max_n)
        .into_iter()
        .filter(|g| g.is_connected() && is_true_twin_free(g))
        .collect();
    let results: Vec<(CoChainTTFClass, Option<String>)> = graphs
        .par_iter()
        .map(|g| match classify_ttf_co_chain(g) {
            Ok(CoChainTTFClass::NotCoChainTTF) => (CoChainTTFClass::NotCoChainTTF, Some(format!("{g:?}: unclassified"))),
            Ok(c) => {
                let ok = c.standard_graph().is_some_and(|s| is_isomorphic(&s, g));
                (c, (!ok).then(|| format!("{g:?}: {c:?} does not rebuild")))
            }
            Err(e) => (CoChainTTFClass::NotCoChainTTF, Some(format!("{g:?}: {e}"))),
        })
        .collect();
    let count = |f: fn(&CoChainTTFClass) -> bool| results.iter().filter(|r| f(&r.0)).count();
    let distinct: std::collections::BTreeSet<String> = results.iter().map(|r| format!("{:?}", r.0)).collect();
    let summary = format!(
        "{} generated graphs in {} classes: {} K1, {} rafts, {} raft joins",
        graphs.len(),
        distinct.len(),
        count(|c| matches!(c, CoChainTTFClass::IsK1)),
        count(|c| matches!(c, CoChainTTFClass::IsRaft(_))),
        count(|c| matches!(c, CoChainTTFClass::IsRaftJoinK1(_)))
    );
    let failures: Vec<String> = results.into_iter().filter_map(|r| r.1).collect();
    CheckReport::finish("co-chain classification", start, None, failures, summary)
}

/// The forbidden structures shown in the figures.
pub fn figure_reproductions() -> CheckReport {
    let start = Instant::now();
    let k23 = complete_bipartite(2, 3);
    let mut failures = Vec::new();
    let minors = [
        ("strong(P3,C4)", strong(&path(3), &cycle(4))),
        ("strong(P3,C5)", strong(&path(3), &cycle(5))),
        ("strong(P3,claw)", strong(&path(3), &claw())),
        ("strong(P3,bull)", strong(&path(3), &bull())),
        ("direct(P3,claw)", direct(&path(3), &claw())),
        ("direct(P3,C4)", direct(&path(3), &cycle(4))),
        ("direct(C3,claw)", direct(&cycle(3), &claw())),
    ];
    for (name, host) in &minors {
        match find_induced_minor(host, &k23) {
            Ok(Some(w)) if w.verify(host, &k23) => {}
            Ok(Some(_)) => failures.push(format!("{name}: K2,3 minor witness does not verify")),
            _ => failures.push(format!("{name}: no K2,3 induced minor found")),
        }
    }
    let subgraphs = [
        ("direct(P4,P4)", direct(&path(4), &path(4)), domino(), "domino"),
        ("strong(P4,P4)", strong(&path(4), &path(4)), domino(), "domino"),
        ("direct(C3,C3)", direct(&cycle(3), &cycle(3)), cycle(6).complement(), "co-C6"),
    ];
    for (name, host, pattern, pname) in &subgraphs {
        match find_induced_subgraph(host, pattern) {
            Some(e) if e.verify(host, pattern) => {}
            _ => failures.push(format!("{name}: no induced {pname}")),
        }
    }
    let summary = format!("{} induced minors, {} induced subgraphs", minors.len(), subgraphs.len());
    CheckReport::finish("figure reproductions", start, None, failures, summary)
}

fn cliques(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    (0u64..1 << n)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|s| g.is_clique(s))
        .map(VertexSet::new)
        .collect()
}

/// Extensions of every 1-p.o. graph on `<= max_n` vertices stay 1-perfect;
/// disjoint unions of 1-p.o. graphs on `<= union_n` vertices are 1-p.o.
pub fn closure_suite(max_n: usize, union_n: usize) -> CheckReport {
    let start = Instant::now();
    let certified: Vec<_> = (0..=max_n)
        .flat_map(unlabeled_graphs)
        .filter_map(|g| recognize_2sat(&g).into_certificate())
        .collect();
    let results: Vec<(usize, Option<String>)> = certified
        .par_iter()
        .map(|d| {
            let g = d.base();
            let mut checks = 0;
            for v in 0..g.n() {
                checks += 1;
                if !extend_true_twin(d, v).is_ok_and(|e| e.is_one_perfect()) {
                    return (checks, Some(format!("{g:?}: true twin of {v}")));
                }
            }
            checks += 1;
            if !extend_universal(d).is_ok_and(|e| e.is_one_perfect()) {
                return (checks, Some(format!("{g:?}: universal vertex")));
            }
            for c in cliques(g) {
                checks += 1;
                if !extend_simplicial(d, &c).is_ok_and(|e| e.is_one_perfect()) {
                    return (checks, Some(format!("{g:?}: simplicial vertex on {c:?}")));
                }
            }
            (checks, None)
        })
        .collect();
    let extensions: usize = results.iter().map(|r| r.0).sum();
    let mut failures: Vec<String> = results.into_iter().filter_map(|r| r.1).collect();
    let small: Vec<Graph> = certified
        .iter()
        .map(|d| d.base().clone())
        .filter(|g| g.n() >= 1 && g.n() <= union_n)
        .collect();
    let pairs: Vec<(&Graph, &Graph)> = small.iter().flat_map(|g| small.iter().map(move |h| (g, h))).collect();
    failures.extend(pairs.par_iter().filter_map(|(g, h)| {
        (!recognize_2sat(&g.disjoint_union(h)).is_yes()).then(|| format!("{g:?} + {h:?} not 1-p.o."))
    }).collect::<Vec<_>>());
    let summary = format!(
        "{} 1-p.o. graphs on <= {max_n} vertices, {extensions} extensions, {} disjoint unions",
        certified.len(),
        pairs.len()
    );
    CheckReport::finish("closure suite", start, None, failures, summary)
}

/// Trees, cycles, chordal graphs and pseudoforests are 1-p.o.; the catalog
/// graphs are not.
pub fn known_classes(max_n: usize, max_cycle: usize, catalog: &[(&'static str, Graph)]) -> CheckReport {
    let start = Instant::now();
    let graphs: Vec<Graph> = (1..=max_n).flat_map(unlabeled_graphs).collect();
    let tree = |g: &Graph| g.is_connected() && g.edge_count() + 1 == g.n();
    let results: Vec<(u8, Option<String>)> = graphs
        .par_iter()
        .filter_map(|g| {
            let mut class = 0u8;
            if tree(g) {
                class |= 1;
            }
            if is_chordal(g) {
                class |= 2;
            }
            if is_pseudoforest(g) {
                class |= 4;
            }
            (class != 0).then(|| {
                let bad = (!recognize_2sat(g).is_yes()).then(|| format!("{g:?} not recognized as 1-p.o."));
                (class, bad)
            })
        })
        .collect();
    let count = |bit: u8| results.iter().filter(|r| r.0 & bit != 0).count();
    let mut failures: Vec<String> = results.iter().filter_map(|r| r.1.clone()).collect();
    for k in 3..=max_cycle {
        if !recognize_2sat(&cycle(k)).is_yes() {
            failures.push(format!("C{k} not recognized as 1-p.o."));
        }
    }
    for (name, g) in catalog {
        if recognize_2sat(g).is_yes() {
            failures.push(format!("{name} recognized as 1-p.o."));
        }
    }
    let summary = format!(
        "{} trees, {} chordal graphs, {} pseudoforests on <= {max_n} vertices, cycles C3..C{max_cycle}, {} catalog graphs",
        count(1),
        count(2),
        count(4),
        catalog.len()
    );
    CheckReport::finish("known classes", start, None, failures, summary)
}

/// Each catalog entry is rejected by the exhaustive recognizer.
pub fn catalog_check(catalog: &[(&'static str, Graph)]) -> CheckReport {
    let start = Instant::now();
    let failures: Vec<String> = catalog_self_check(catalog)
        .into_iter()
        .filter(|&(_, yes)| yes)
        .map(|(name, _)| format!("catalog graph {name} is 1-p.o."))
        .collect();
    let names: Vec<&str> = catalog.iter().map(|(n, _)| *n).collect();
    CheckReport::finish("catalog", start, None, failures, format!("entries {names:?}"))
}

/// Small oracle checks, the catalog and the first few raft orientations.
pub fn quick(catalog: &[(&'static str, Graph)]) -> Vec<CheckReport> {
    vec![
        recognizer_agreement(0..=4, 0, 0, None),
        catalog_check(catalog),
        raft_construction(5, 5, None),
    ]
}

/// All acceptance sweeps at full size.
pub fn full(catalog: &[(&'static str, Graph)]) -> Vec<CheckReport> {
    vec![
        recognizer_agreement(5..=5, 10_000, 2024, Some(Duration::from_secs(60))),
        theorem_sweep(2, 5, &DecideOptions::default(), Some(Duration::from_secs(600))),
        raft_construction(50, 10, Some(Duration::from_secs(10))),
        co_chain_equivalence(7),
        classification(12),
        figure_reproductions(),
        closure_suite(6, 4),
        known_classes(8, 40, catalog),
        catalog_check(catalog),
    ]
}

/// The default catalog, for callers that do not substitute their own.
pub fn default_catalog() -> Vec<(&'static str, Graph)> {
    forbidden_catalog()
}
