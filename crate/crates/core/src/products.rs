//! The four standard graph products and vertex substitution.
//!
//! Product vertices are labeled row-major: the pair `(u, v)` with
//! `u in V(G)`, `v in V(H)` is vertex `u * |V(H)| + v`. See [`PairIndex`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Lexicographic,
    Direct,
    Strong,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Lexicographic,
        ProductKind::Direct,
        ProductKind::Strong,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Direct => "direct",
            ProductKind::Strong => "strong",
        }
    }

    pub fn apply(self, g: &Graph, h: &Graph) -> Graph {
        match self {
            ProductKind::Cartesian => cartesian(g, h),
            ProductKind::Lexicographic => lexicographic(g, h),
            ProductKind::Direct => direct(g, h),
            ProductKind::Strong => strong(g, h),
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" | "box" => Ok(ProductKind::Cartesian),
            "lex" | "lexicographic" => Ok(ProductKind::Lexicographic),
            "direct" | "tensor" => Ok(ProductKind::Direct),
            "strong" => Ok(ProductKind::Strong),
            other => Err(Error::Precondition(format!("unknown product kind {other:?}"))),
        }
    }
}

/// Bijection `V(G) x V(H) -> 0..g_n*h_n`, `(u, v) -> u * h_n + v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairIndex {
    pub g_n: usize,
    pub h_n: usize,
}

impl PairIndex {
    pub fn new(g: &Graph, h: &Graph) -> Self {
        PairIndex {
            g_n: g.n(),
            h_n: h.n(),
        }
    }

    #[inline]
    pub fn index(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < self.g_n && v < self.h_n);
        u * self.h_n + v
    }

    #[inline]
    pub fn pair(&self, i: usize) -> (usize, usize) {
        (i / self.h_n, i % self.h_n)
    }

    pub fn len(&self) -> usize {
        self.g_n * self.h_n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn product_by(g: &Graph, h: &Graph, adjacent: impl Fn(usize, usize, usize, usize) -> bool) -> Graph {
    let idx = PairIndex::new(g, h);
    let mut out = Graph::new(idx.len());
    for a in 0..idx.len() {
        let (u, v) = idx.pair(a);
        for b in a + 1..idx.len() {
            let (u2, v2) = idx.pair(b);
            if adjacent(u, v, u2, v2) {
                out.add_edge(a, b);
            }
        }
    }
    out
}

/// `G □ H`: equal in one coordinate, adjacent in the other.
pub fn cartesian(g: &Graph, h: &Graph) -> Graph {
    product_by(g, h, |u, v, u2, v2| {
        (u == u2 && h.has_edge(v, v2)) || (v == v2 && g.has_edge(u, u2))
    })
}

/// `G[H]`: adjacent in `G`, or equal in `G` and adjacent in `H`.
pub fn lexicographic(g: &Graph, h: &Graph) -> Graph {
    product_by(g, h, |u, v, u2, v2| {
        g.has_edge(u, u2) || (u == u2 && h.has_edge(v, v2))
    })
}

/// `G x H`: adjacent in both coordinates.
pub fn direct(g: &Graph, h: &Graph) -> Graph {
    product_by(g, h, |u, v, u2, v2| g.has_edge(u, u2) && h.has_edge(v, v2))
}

/// `G ⊠ H`: `N[(u,v)] = N[u] x N[v]`.
pub fn strong(g: &Graph, h: &Graph) -> Graph {
    product_by(g, h, |u, v, u2, v2| {
        (u == u2 || g.has_edge(u, u2)) && (v == v2 || h.has_edge(v, v2))
    })
}

/// Replaces `v` by a copy of `h` fully joined to `N_G(v)`. The remaining
/// vertices of `g` keep their relative order and come first; `h`'s vertices
/// follow in their own order.
pub fn substitution(g: &Graph, v: usize, h: &Graph) -> Result<Graph> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let rest: Vec<usize> = (0..g.n()).filter(|&w| w != v).collect();
    let base = g.induced_by_list(&rest);
    let mut out = base.disjoint_union(h);
    for (i, &w) in rest.iter().enumerate() {
        if g.has_edge(v, w) {
            for x in 0..h.n() {
                out.add_edge(i, rest.len() + x);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{all_labeled_graphs, unlabeled_graphs};
    use crate::families::*;
    use crate::search::{contains_induced, is_isomorphic};

    fn small_graphs(max_n: usize) -> Vec<Graph> {
        (1..=max_n).flat_map(unlabeled_graphs).collect()
    }

    #[test]
    fn cartesian_examples() {
        assert!(is_isomorphic(&cartesian(&path(3), &complete(2)), &domino()));
        assert!(is_isomorphic(
            &cartesian(&complete(3), &complete(2)),
            &cycle(6).complement()
        ));
        for h in small_graphs(4) {
            assert!(is_isomorphic(&cartesian(&complete(1), &h), &h));
        }
    }

    #[test]
    fn lexicographic_examples() {
        for h in small_graphs(4) {
            assert!(is_isomorphic(&lexicographic(&complete(2), &h), &h.join(&h)));
            assert!(is_isomorphic(&lexicographic(&h, &complete(1)), &h));
        }
        assert!(is_isomorphic(
            &lexicographic(&path(3), &Graph::new(2)),
            &complete_bipartite(2, 4)
        ));
        // edgeless G: |V(G)| disjoint copies of H
        let copies = lexicographic(&Graph::new(3), &path(3));
        assert!(is_isomorphic(
            &copies,
            &path(3).disjoint_union(&path(3)).disjoint_union(&path(3))
        ));
    }

    #[test]
    fn direct_examples() {
        for h in small_graphs(5) {
            if h.is_connected() && h.is_bipartite() && h.n() >= 2 {
                assert!(is_isomorphic(&direct(&complete(2), &h), &h.disjoint_union(&h)));
            }
            assert!(direct(&h, &complete(1)).is_edgeless());
        }
        assert_eq!(direct(&complete(2), &complete(2)).components().len(), 2);
    }

    #[test]
    fn strong_examples() {
        for m in 1..=4 {
            for n in 1..=4 {
                assert_eq!(strong(&complete(m), &complete(n)), complete(m * n));
            }
        }
        for g in small_graphs(4) {
            assert!(is_isomorphic(&strong(&g, &complete(1)), &g));
        }
    }

    #[test]
    fn strong_is_disjoint_union_of_cartesian_and_direct() {
        for g in small_graphs(4) {
            for h in small_graphs(4) {
                let s = strong(&g, &h);
                let c = cartesian(&g, &h);
                let d = direct(&g, &h);
                assert_eq!(s.edge_count(), c.edge_count() + d.edge_count());
                for (a, b) in s.edges() {
                    assert!(c.has_edge(a, b) ^ d.has_edge(a, b));
                }
            }
        }
    }

    #[test]
    fn edge_count_laws() {
        for g in small_graphs(4) {
            for h in small_graphs(4) {
                assert_eq!(
                    cartesian(&g, &h).edge_count(),
                    g.n() * h.edge_count() + h.n() * g.edge_count()
                );
                assert_eq!(direct(&g, &h).edge_count(), 2 * g.edge_count() * h.edge_count());
            }
        }
    }

    #[test]
    fn substitution_examples() {
        for g in small_graphs(4) {
            for v in 0..g.n() {
                assert!(is_isomorphic(&substitution(&g, v, &complete(1)).unwrap(), &g));
            }
        }
        assert_eq!(substitution(&complete(2), 0, &complete(2)).unwrap(), complete(3));
        assert!(substitution(&complete(2), 2, &complete(2)).is_err());
        // substituting every vertex by K_m gives G[K_m]
        for g in small_graphs(4) {
            for m in 1..=3 {
                let mut cur = g.clone();
                for _ in 0..g.n() {
                    // the front vertex is always an original vertex
                    cur = substitution(&cur, 0, &complete(m)).unwrap();
                }
                assert!(is_isomorphic(&cur, &lexicographic(&g, &complete(m))));
            }
        }
    }

    #[test]
    fn commutativity() {
        let gs: Vec<Graph> = (1..=4).flat_map(all_labeled_graphs).collect();
        for g in gs.iter().step_by(3) {
            for h in gs.iter().step_by(5) {
                assert!(is_isomorphic(&cartesian(g, h), &cartesian(h, g)));
                assert!(is_isomorphic(&direct(g, h), &direct(h, g)));
                assert!(is_isomorphic(&strong(g, h), &strong(h, g)));
            }
        }
        assert!(!is_isomorphic(
            &lexicographic(&path(3), &complete(2)),
            &lexicographic(&complete(2), &path(3))
        ));
    }

    #[test]
    fn strong_degree_law() {
        for g in small_graphs(4) {
            for h in small_graphs(4) {
                let s = strong(&g, &h);
                let idx = PairIndex::new(&g, &h);
                for i in 0..idx.len() {
                    let (u, v) = idx.pair(i);
                    assert_eq!(s.degree(i), (g.degree(u) + 1) * (h.degree(v) + 1) - 1);
                }
            }
        }
    }

    #[test]
    fn factors_are_induced_fibres() {
        for g in small_graphs(5) {
            for h in small_graphs(3) {
                for p in [cartesian(&g, &h), lexicographic(&g, &h), strong(&g, &h)] {
                    assert!(contains_induced(&p, &g) && contains_induced(&p, &h));
                }
            }
        }
    }

    #[test]
    fn direct_component_law() {
        let connected: Vec<Graph> = (2..=5)
            .flat_map(unlabeled_graphs)
            .filter(|g| g.is_connected())
            .collect();
        for g in &connected {
            for h in &connected {
                let k = g.is_bipartite() as u32 + h.is_bipartite() as u32;
                let expected = if k == 0 { 1 } else { 1usize << (k - 1) };
                assert_eq!(direct(g, h).components().len(), expected, "{g:?} {h:?}");
            }
        }
    }

    #[test]
    fn pair_index_round_trip() {
        let idx = PairIndex { g_n: 3, h_n: 4 };
        for i in 0..idx.len() {
            let (u, v) = idx.pair(i);
            assert_eq!(idx.index(u, v), i);
        }
        assert_eq!("lex".parse::<ProductKind>().unwrap(), ProductKind::Lexicographic);
        assert!("foo".parse::<ProductKind>().is_err());
    }
}
