//! Exhaustive and random generation of small graphs.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;
use rayon::prelude::*;

use crate::graph::Graph;
use crate::search::is_isomorphic;

/// Largest order for which [`unlabeled_graphs`] is supported.
pub const UNLABELED_LIMIT: usize = 8;

/// Every labeled graph on `n` vertices (`2^(n choose 2)` of them). Bit `k` of
/// the counter is the `k`-th pair in lexicographic order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 32, "too many labeled graphs on {n} vertices");
    (0u64..1 << pairs.len()).map(move |bits| {
        let mut g = Graph::new(n);
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if bits >> k & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

/// Isomorphism invariant used to bucket candidates.
fn invariant(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut v: Vec<_> = (0..g.n())
        .map(|x| {
            let nb: Vec<usize> = g.neighbors(x).collect();
            let nsum: usize = nb.iter().map(|&w| g.degree(w)).sum();
            let tri = nb
                .iter()
                .enumerate()
                .map(|(i, &a)| nb[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
                .sum();
            (nb.len(), nsum, tri)
        })
        .collect();
    v.sort_unstable();
    v
}

fn extend(prev: &[Graph], n: usize) -> Vec<Graph> {
    let mut buckets: HashMap<Vec<(usize, usize, usize)>, Vec<Graph>> = HashMap::new();
    for g in prev {
        for subset in 0u64..1 << (n - 1) {
            let mut h = g.disjoint_union(&Graph::new(1));
            for v in 0..n - 1 {
                if subset >> v & 1 == 1 {
                    h.add_edge(v, n - 1);
                }
            }
            buckets.entry(invariant(&h)).or_default().push(h);
        }
    }
    let mut out: Vec<Graph> = buckets
        .into_par_iter()
        .flat_map_iter(|(_, cands)| {
            let mut reps: Vec<Graph> = Vec::new();
            for c in cands {
                if !reps.iter().any(|r| is_isomorphic(r, &c)) {
                    reps.push(c);
                }
            }
            reps
        })
        .collect();
    out.sort_by_cached_key(|g| (g.edge_count(), crate::format::to_graph6(g)));
    out
}

type Cache = Mutex<Vec<Arc<Vec<Graph>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Arc::new(vec![Graph::new(0)])]))
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// ordered by edge count then graph6 code. Results are cached.
pub fn unlabeled_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= UNLABELED_LIMIT, "unlabeled enumeration supports n <= {UNLABELED_LIMIT}");
    let mut cache = cache().lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() <= n {
        let k = cache.len();
        let next = extend(&cache[k - 1], k);
        cache.push(Arc::new(next));
    }
    cache[n].as_ref().clone()
}

pub fn connected_unlabeled_graphs(n: usize) -> Vec<Graph> {
    unlabeled_graphs(n)
        .into_iter()
        .filter(|g| g.n() > 0 && g.is_connected())
        .collect()
}

/// The co-chain graph with cliques `X` (`d.len()` vertices, listed first) and
/// `Y` (`q` vertices), where `x_i` is adjacent to the last `d[i]` vertices of
/// `Y`.
pub fn co_chain_graph(q: usize, d: &[usize]) -> Graph {
    let p = d.len();
    let mut g = crate::families::complete(p).disjoint_union(&crate::families::complete(q));
    for (i, &k) in d.iter().enumerate() {
        assert!(k <= q);
        for j in q - k..q {
            g.add_edge(i, p + j);
        }
    }
    g
}

/// Every co-chain graph on `1..=max_n` vertices (with repetitions up to
/// isomorphism), from all splits `p + q` and non-decreasing cross-degree
/// sequences.
pub fn co_chain_graphs(max_n: usize) -> Vec<Graph> {
    fn sequences(p: usize, lo: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for k in lo..=q {
            cur.push(k);
            sequences(p, k, q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        for p in 1..=n {
            let q = n - p;
            let mut seqs = Vec::new();
            sequences(p, 0, q, &mut Vec::new(), &mut seqs);
            out.extend(seqs.iter().map(|d| co_chain_graph(q, d)));
        }
    }
    out
}

/// `G(n, 1/2)`.
pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A uniformly random labeled tree via a Prüfer sequence.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    let mut g = Graph::new(n);
    if n < 2 {
        return g;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        g.add_edge(leaf, s);
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1]);
    g
}

/// A random chordal graph: each new vertex is attached to a random clique
/// (possibly empty) of the graph built so far.
pub fn random_chordal(rng: &mut impl Rng, n: usize) -> Graph {
    let mut g = Graph::new(0);
    for v in 0..n {
        let mut clique: Vec<usize> = Vec::new();
        if v > 0 {
            let start = rng.gen_range(0..v);
            clique.push(start);
            for w in 0..v {
                if w != start && rng.gen_bool(0.5) && clique.iter().all(|&c| g.has_edge(c, w)) {
                    clique.push(w);
                }
            }
            if rng.gen_bool(0.15) {
                clique.clear();
            }
        }
        g = g.disjoint_union(&Graph::new(1));
        for c in clique {
            g.add_edge(c, v);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{is_chordal, is_co_chain};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn labeled_counts() {
        assert_eq!(all_labeled_graphs(0).count(), 1);
        assert_eq!(all_labeled_graphs(4).count(), 64);
        assert_eq!(all_labeled_graphs(5).count(), 1024);
    }

    #[test]
    fn unlabeled_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| unlabeled_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
        let connected: Vec<usize> = (1..=7).map(|n| connected_unlabeled_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn co_chain_generator_is_exhaustive() {
        let generated = co_chain_graphs(6);
        assert!(generated.iter().all(is_co_chain));
        for n in 1..=6 {
            for g in unlabeled_graphs(n).into_iter().filter(is_co_chain) {
                assert!(generated.iter().any(|c| is_isomorphic(c, &g)), "{g:?}");
            }
        }
    }

    #[test]
    fn random_generators() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=12 {
            let t = random_tree(&mut rng, n);
            assert!(t.is_connected() && t.edge_count() == n - 1);
            assert!(is_chordal(&random_chordal(&mut rng, n)));
            assert_eq!(random_graph(&mut rng, n).n(), n);
        }
    }
}
