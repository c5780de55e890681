//! Structural predicates and decompositions consumed by the product
//! characterizations: twins, simplicial vertices, co-chain partitions, rafts,
//! pseudoforests, linear forests, 2-complete components and cographs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{claw, bull, cycle, path};
use crate::graph::{Graph, VertexSet};
use crate::search::{contains_induced, is_free_of, is_isomorphic};

/// Vertices whose open neighbourhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    (0..g.n())
        .filter(|&v| g.is_clique(&g.neighbors(v).collect::<Vec<_>>()))
        .collect()
}

/// A perfect elimination ordering, if `g` is chordal. Built by maximum
/// cardinality search; the reverse visit order is then checked.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited[v] = true;
        visit.push(v);
        for w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    let mut pos = vec![0; n];
    for (i, &v) in visit.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &visit {
        let later: Vec<usize> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        if !g.is_clique(&later) {
            return None;
        }
    }
    Some(visit)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

/// True-twin classes of a graph with one representative per class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinReduction {
    /// Minimum vertex of each class, ascending.
    pub kept: VertexSet,
    /// Classes in the same order as `kept`.
    pub classes: Vec<VertexSet>,
}

impl TwinReduction {
    /// Index into `kept` of the class containing each vertex.
    pub fn class_index(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (i, c) in self.classes.iter().enumerate() {
            for &v in c {
                out[v] = i;
            }
        }
        out
    }

    /// The true-twin-free graph induced on `kept`.
    pub fn reduced(&self, g: &Graph) -> Graph {
        g.induced_by_list(self.kept.as_slice())
    }
}

pub fn true_twin_reduction(g: &Graph) -> TwinReduction {
    let mut class_of = vec![usize::MAX; g.n()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n() {
        if class_of[v] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![v];
        class_of[v] = id;
        for w in g.neighbors(v).filter(|&w| w > v) {
            if class_of[w] == usize::MAX && g.are_true_twins(v, w) {
                class_of[w] = id;
                members.push(w);
            }
        }
        classes.push(members);
    }
    TwinReduction {
        kept: classes.iter().map(|c| c[0]).collect(),
        classes: classes.into_iter().map(VertexSet::new).collect(),
    }
}

pub fn is_true_twin_free(g: &Graph) -> bool {
    true_twin_reduction(g).kept.len() == g.n()
}

/// Two cliques `X`, `Y` partitioning the vertex set, with `X` listed so that
/// `N(x_i) ∩ Y ⊆ N(x_j) ∩ Y` for `i < j`. `Y` is listed the same way
/// (`N(y_i) ∩ X ⊆ N(y_j) ∩ X`), which follows from the `X`-side nesting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoChainPartition {
    pub x_order: Vec<usize>,
    pub y_order: Vec<usize>,
}

impl CoChainPartition {
    pub fn verify(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for &v in self.x_order.iter().chain(&self.y_order) {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if seen.contains(&false) || !g.is_clique(&self.x_order) || !g.is_clique(&self.y_order) {
            return false;
        }
        nested(g, &self.x_order, &self.y_order) && nested(g, &self.y_order, &self.x_order)
    }
}

fn cross(g: &Graph, v: usize, other: &[usize]) -> Vec<usize> {
    other.iter().copied().filter(|&w| g.has_edge(v, w)).collect()
}

/// Consecutive members of `side` have nested neighbourhoods into `other`.
fn nested(g: &Graph, side: &[usize], other: &[usize]) -> bool {
    side.windows(2).all(|w| {
        let b = cross(g, w[1], other);
        cross(g, w[0], other).iter().all(|v| b.contains(v))
    })
}

fn sort_by_cross_degree(g: &Graph, side: &mut [usize], other: &[usize]) {
    side.sort_by_key(|&v| (cross(g, v, other).len(), v));
}

/// A co-chain partition, or `None` if `g` is not co-chain.
///
/// The two cliques are the colour classes of a 2-colouring of the complement.
/// Whether the cross neighbourhoods are nested does not depend on which
/// 2-colouring is chosen (a non-nested pair is an induced `2K_2` of the
/// complement), so one colouring decides the question.
pub fn co_chain_partition(g: &Graph) -> Option<CoChainPartition> {
    let (x, y) = g.complement().bipartition()?;
    let mut x_order = x.as_slice().to_vec();
    let mut y_order = y.as_slice().to_vec();
    sort_by_cross_degree(g, &mut x_order, &y_order);
    sort_by_cross_degree(g, &mut y_order, &x_order);
    let p = CoChainPartition { x_order, y_order };
    nested(g, &p.x_order, &p.y_order).then_some(p)
}

pub fn is_co_chain(g: &Graph) -> bool {
    co_chain_partition(g).is_some()
}

/// `{3K_1, C_4, C_5}`-freeness.
pub fn is_co_chain_via_forbidden(g: &Graph) -> bool {
    is_free_of(g, &[Graph::new(3), cycle(4), cycle(5)])
}

/// `{P_5, C_4, C_5, claw, bull}`-freeness.
pub fn is_p5_c4_c5_claw_bull_free(g: &Graph) -> bool {
    is_free_of(g, &[path(5), cycle(4), cycle(5), claw(), bull()])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoChainTTFClass {
    IsK1,
    IsRaft(usize),
    IsRaftJoinK1(usize),
    NotCoChainTTF,
}

impl CoChainTTFClass {
    /// The standard graph of this class (`K_1`, `R_n`, or `R_n * K_1`).
    pub fn standard_graph(self) -> Option<Graph> {
        match self {
            CoChainTTFClass::IsK1 => Some(Graph::new(1)),
            CoChainTTFClass::IsRaft(n) => Some(raft(n)),
            CoChainTTFClass::IsRaftJoinK1(n) => Some(raft(n).join(&Graph::new(1))),
            CoChainTTFClass::NotCoChainTTF => None,
        }
    }
}

/// Identifies a connected true-twin-free graph as `K_1`, a raft `R_n`
/// (`n >= 1`) or `R_n * K_1` (`n >= 0`), or reports that it is not co-chain.
pub fn classify_ttf_co_chain(g: &Graph) -> Result<CoChainTTFClass> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Precondition("graph must be connected and nonempty".into()));
    }
    if !is_true_twin_free(g) {
        return Err(Error::Precondition("graph has a pair of true twins".into()));
    }
    let Some(p) = co_chain_partition(g) else {
        return Ok(CoChainTTFClass::NotCoChainTTF);
    };
    if p.x_order.is_empty() || p.y_order.is_empty() {
        // a single clique without twins
        return Ok(CoChainTTFClass::IsK1);
    }
    let x_min_empty = cross(g, p.x_order[0], &p.y_order).is_empty();
    let y_min_empty = cross(g, p.y_order[0], &p.x_order).is_empty();
    let (nx, ny) = (p.x_order.len(), p.y_order.len());
    Ok(match (x_min_empty, y_min_empty) {
        (true, true) if nx == ny => CoChainTTFClass::IsRaft(nx - 1),
        (true, false) if nx >= 2 => CoChainTTFClass::IsRaftJoinK1(nx - 2),
        (false, true) if ny >= 2 => CoChainTTFClass::IsRaftJoinK1(ny - 2),
        // both sides would then carry a universal vertex: twins
        _ => CoChainTTFClass::NotCoChainTTF,
    })
}

/// The raft `R_n`: cliques `x_0..x_n` (vertices `0..=n`) and `y_0..y_n`
/// (vertices `n+1..=2n+1`) with `x_i ~ y_j` iff `i + j >= n + 1`.
pub fn raft(n: usize) -> Graph {
    let mut g = Graph::new(2 * (n + 1));
    let y = |j: usize| n + 1 + j;
    for i in 0..=n {
        for j in i + 1..=n {
            g.add_edge(i, j);
            g.add_edge(y(i), y(j));
        }
        for j in 0..=n {
            if i + j > n {
                g.add_edge(i, y(j));
            }
        }
    }
    g
}

/// Embedding of `R_n * K_1` into `R_{n+2}`: `x_i -> x_i`, `y_j -> y_{j+2}`,
/// apex `-> x_{n+2}`. Indices follow the labeling of `raft(n).join(K_1)`.
pub fn raft_join_k1_into_raft(n: usize) -> Vec<usize> {
    let big_y = |j: usize| (n + 2) + 1 + j;
    let mut m: Vec<usize> = (0..=n).collect();
    m.extend((0..=n).map(|j| big_y(j + 2)));
    m.push(n + 2);
    m
}

pub fn is_pseudoforest(g: &Graph) -> bool {
    g.components().iter().all(|c| {
        let edges: usize = c.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        edges <= c.len()
    })
}

pub fn is_pseudotree(g: &Graph) -> bool {
    g.n() > 0 && g.is_connected() && is_pseudoforest(g)
}

/// Every component is a path on at most `k` vertices.
pub fn is_k_linear_forest(g: &Graph, k: usize) -> bool {
    assert!(k >= 1, "k must be positive");
    g.components().iter().all(|c| {
        let edges: usize = c.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        c.len() <= k && edges + 1 == c.len() && c.iter().all(|&v| g.degree(v) <= 2)
    })
}

fn component_graphs(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    g.components()
        .into_iter()
        .map(move |c| g.induced_by_list(c.as_slice()))
}

pub fn components_all_complete(g: &Graph) -> bool {
    component_graphs(g).all(|c| c.is_complete())
}

/// True iff the true-twin reduction of `g` is `K_1` or `P_3`.
pub fn is_2_complete(g: &Graph) -> bool {
    if g.n() == 0 || !g.is_connected() {
        return false;
    }
    let r = true_twin_reduction(g).reduced(g);
    r.n() == 1 || (r.n() == 3 && r.edge_count() == 2)
}

pub fn components_all_2_complete(g: &Graph) -> bool {
    component_graphs(g).all(|c| is_2_complete(&c))
}

pub fn components_all_co_chain(g: &Graph) -> bool {
    component_graphs(g).all(|c| is_co_chain(&c))
}

/// `P_4`-freeness.
pub fn is_cograph(g: &Graph) -> bool {
    !contains_induced(g, &path(4))
}

/// Rebuilds the classified standard form and checks it against `g`.
pub fn classification_round_trips(g: &Graph, class: CoChainTTFClass) -> bool {
    class.standard_graph().is_some_and(|s| is_isomorphic(&s, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::unlabeled_graphs;
    use crate::families::*;
    use crate::products::lexicographic;
    use proptest::prelude::*;

    #[test]
    fn simplicial_examples() {
        for n in 1..=6 {
            let s = simplicial_vertices(&raft(n));
            assert!(s.contains(0) && s.contains(n + 1));
            assert_eq!(simplicial_vertices(&complete(n)).len(), n);
        }
        assert!(simplicial_vertices(&cycle(4)).is_empty());
    }

    #[test]
    fn twin_reduction_examples() {
        let r = true_twin_reduction(&complete(4));
        assert_eq!(r.classes.len(), 1);
        assert_eq!(r.classes[0].len(), 4);
        assert_eq!(true_twin_reduction(&cycle(5)).classes.len(), 5);
        for g in (1..=4).flat_map(unlabeled_graphs) {
            let r = true_twin_reduction(&lexicographic(&g, &complete(2)));
            assert!(!r.classes.is_empty());
            // fibres are twin classes; distinct fibres may merge only if g has twins
            if is_true_twin_free(&g) {
                assert_eq!(r.classes.len(), g.n());
                assert!(r.classes.iter().all(|c| c.len() == 2));
            }
        }
    }

    #[test]
    fn twin_reduction_idempotent_and_consistent() {
        for g in (1..=6).flat_map(unlabeled_graphs) {
            let r = true_twin_reduction(&g);
            let red = r.reduced(&g);
            assert!(is_true_twin_free(&red));
            assert_eq!(true_twin_reduction(&red).kept.len(), red.n());
            let idx = r.class_index(g.n());
            for u in 0..g.n() {
                for v in 0..g.n() {
                    if u != v {
                        assert_eq!(idx[u] == idx[v], g.are_true_twins(u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn co_chain_examples() {
        assert!(co_chain_partition(&cycle(4)).is_none());
        for n in 0..=6 {
            let p = co_chain_partition(&raft(n)).unwrap();
            assert!(p.verify(&raft(n)));
        }
        let k1 = co_chain_partition(&Graph::new(1)).unwrap();
        assert_eq!((k1.x_order, k1.y_order), (vec![0], vec![]));
        assert!(!is_co_chain_via_forbidden(&cycle(5)));
        assert!(is_co_chain_via_forbidden(&path(4)));
        assert!(!is_co_chain_via_forbidden(&claw()));
    }

    #[test]
    fn co_chain_agrees_with_forbidden_characterization() {
        for g in (0..=7).flat_map(unlabeled_graphs) {
            let p = co_chain_partition(&g);
            if let Some(p) = &p {
                assert!(p.verify(&g));
            }
            assert_eq!(p.is_some(), is_co_chain_via_forbidden(&g), "{g:?}");
        }
    }

    #[test]
    fn co_chain_closure() {
        for g in (1..=6).flat_map(unlabeled_graphs).filter(is_co_chain) {
            let universal = g.join(&Graph::new(1));
            assert!(is_co_chain(&universal));
            for v in 0..g.n() {
                let mut t = g.disjoint_union(&Graph::new(1));
                t.add_edge(v, g.n());
                for w in g.neighbors(v) {
                    t.add_edge(w, g.n());
                }
                assert!(is_co_chain(&t));
            }
        }
    }

    #[test]
    fn nesting_step_law() {
        for g in (1..=8)
            .flat_map(unlabeled_graphs)
            .filter(|g| g.is_connected() && is_true_twin_free(g))
        {
            if let Some(p) = co_chain_partition(&g) {
                for (side, other) in [(&p.x_order, &p.y_order), (&p.y_order, &p.x_order)] {
                    for w in side.windows(2) {
                        assert_eq!(
                            cross(&g, w[1], other).len(),
                            cross(&g, w[0], other).len() + 1
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_ttf_co_chain(&path(3)).unwrap(), CoChainTTFClass::IsRaftJoinK1(0));
        assert_eq!(classify_ttf_co_chain(&path(4)).unwrap(), CoChainTTFClass::IsRaft(1));
        assert_eq!(classify_ttf_co_chain(&Graph::new(1)).unwrap(), CoChainTTFClass::IsK1);
        assert_eq!(classify_ttf_co_chain(&cycle(5)).unwrap(), CoChainTTFClass::NotCoChainTTF);
        assert!(classify_ttf_co_chain(&complete(2)).is_err());
        assert!(classify_ttf_co_chain(&Graph::new(2)).is_err());
        for n in 1..=20 {
            assert_eq!(classify_ttf_co_chain(&raft(n)).unwrap(), CoChainTTFClass::IsRaft(n));
        }
        for n in 0..=20 {
            let g = raft(n).join(&Graph::new(1));
            assert_eq!(classify_ttf_co_chain(&g).unwrap(), CoChainTTFClass::IsRaftJoinK1(n));
        }
    }

    #[test]
    fn raft_examples() {
        assert_eq!(raft(0), Graph::new(2));
        assert!(is_isomorphic(&raft(0).join(&Graph::new(1)), &path(3)));
        assert!(is_isomorphic(&raft(1), &path(4)));
        for n in 0..=12usize {
            // brute-force count of cross pairs (i, j) with i + j >= n + 1
            let cross_pairs = (0..=n)
                .flat_map(|i| (0..=n).map(move |j| (i, j)))
                .filter(|(i, j)| i + j > n)
                .count();
            let within = (n + 1) * n / 2;
            assert_eq!(raft(n).edge_count(), 2 * within + cross_pairs);
            assert_eq!(raft(n).edge_count(), 3 * n * (n + 1) / 2);
        }
    }

    #[test]
    fn raft_join_embedding() {
        for n in 0..=8 {
            let small = raft(n).join(&Graph::new(1));
            let big = raft(n + 2);
            let e = crate::search::Embedding {
                mapping: raft_join_k1_into_raft(n),
            };
            assert!(e.verify(&big, &small));
        }
    }

    #[test]
    fn pseudoforest_examples() {
        let mut c5p = cycle(5).disjoint_union(&Graph::new(1));
        c5p.add_edge(0, 5);
        assert!(is_pseudotree(&c5p));
        assert!(!is_pseudoforest(&complete(4)));
        assert!(is_pseudoforest(&path(6).disjoint_union(&claw())));
        assert!(!is_pseudotree(&path(2).disjoint_union(&path(2))));
    }

    #[test]
    fn linear_forest_examples() {
        assert!(is_k_linear_forest(&Graph::new(3), 1));
        assert!(is_k_linear_forest(&Graph::new(1).disjoint_union(&complete(2)), 2));
        assert!(!is_k_linear_forest(&path(5), 4));
        assert!(is_k_linear_forest(&path(5), 5));
        assert!(!is_k_linear_forest(&cycle(3), 3));
        assert!(!is_k_linear_forest(&claw(), 4));
    }

    #[test]
    fn two_complete_examples() {
        assert!(components_all_2_complete(&path(3)));
        assert!(!components_all_2_complete(&path(4)));
        assert!(components_all_complete(&complete(3).disjoint_union(&Graph::new(1))));
        // union of K3 and K4 sharing one vertex
        let mut g = complete(3).disjoint_union(&complete(3));
        g.add_edge(0, 3);
        g.add_edge(0, 4);
        g.add_edge(0, 5);
        let shared = g.induced_by_list(&[0, 1, 2, 3, 4, 5]);
        assert!(is_2_complete(&shared));
    }

    #[test]
    fn two_complete_matches_two_clique_cover() {
        // literal definition: union of two cliques sharing a vertex covering all edges
        fn literal(g: &Graph) -> bool {
            let n = g.n();
            if n == 0 || !g.is_connected() {
                return false;
            }
            for a in 0u32..(1 << n) {
                let sa: Vec<usize> = (0..n).filter(|&v| a >> v & 1 == 1).collect();
                if !g.is_clique(&sa) {
                    continue;
                }
                let rest = ((1u32 << n) - 1) & !a;
                for shared in 0u32..(1 << n) {
                    if shared & a != shared || shared == 0 {
                        continue;
                    }
                    let b = rest | shared;
                    let sb: Vec<usize> = (0..n).filter(|&v| b >> v & 1 == 1).collect();
                    if g.is_clique(&sb)
                        && g.edges().iter().all(|&(u, v)| {
                            (a >> u & a >> v & 1 == 1) || (b >> u & b >> v & 1 == 1)
                        })
                    {
                        return true;
                    }
                }
            }
            false
        }
        for g in (1..=6).flat_map(unlabeled_graphs).filter(|g| g.is_connected()) {
            assert_eq!(is_2_complete(&g), literal(&g), "{g:?}");
        }
    }

    #[test]
    fn cograph_examples() {
        assert!(is_cograph(&complete_bipartite(2, 3)));
        assert!(!is_cograph(&path(4)));
        assert!(!is_cograph(&raft(1)));
    }

    #[test]
    fn chordal_recognition() {
        assert!(is_chordal(&raft(4)));
        assert!(!is_chordal(&cycle(4)));
        assert!(is_chordal(&gem()));
        // chordal <=> no induced cycle of length 4..=7 on graphs with <= 7 vertices
        let holes: Vec<Graph> = (4..=7).map(cycle).collect();
        for g in (1..=7).flat_map(unlabeled_graphs) {
            assert_eq!(is_chordal(&g), is_free_of(&g, &holes));
        }
    }

    proptest! {
        #[test]
        fn raft_is_co_chain(n in 0usize..30) {
            prop_assert!(co_chain_partition(&raft(n)).unwrap().verify(&raft(n)));
        }
    }
}
