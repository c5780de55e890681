//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex. Graphs with at most 64
//! vertices use a single machine word per row; larger graphs use as many words
//! as needed, so the same code path serves desk-scale sweeps and the few large
//! constructions (e.g. strong products with big rafts).

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// A simple undirected graph. Equality is labeled equality (same `n`, same
/// edge set); use [`crate::search::is_isomorphic`] for isomorphism.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop {
                    line: i + 1,
                    vertex: u,
                });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds the edge `uv`. Adding an existing edge is a no-op.
    ///
    /// Panics if `u == v` or either endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    /// Sets only the bit for `v` in row `u`, for rows used as a directed
    /// adjacency matrix.
    pub(crate) fn add_arc_raw(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        self.adj[u * self.words + v / 64] &= !(1 << (v % 64));
        self.adj[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Raw adjacency row of `v` as bitset words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Adjacency row as a single word. Only meaningful when `n <= 64`.
    #[inline]
    pub fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.adj[v * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        Neighbors {
            row: self.row(v),
            word: 0,
            bits: self.row(v)[0],
        }
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// True iff the listed vertices are pairwise adjacent.
    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// `N[u] == N[v]`.
    pub fn are_true_twins(&self, u: usize, v: usize) -> bool {
        if u == v || !self.has_edge(u, v) {
            return false;
        }
        let (ru, rv) = (self.row(u), self.row(v));
        (0..self.words).all(|i| {
            let bit = |x: usize| if x / 64 == i { 1u64 << (x % 64) } else { 0 };
            ru[i] | bit(u) == rv[i] | bit(v)
        })
    }

    pub fn complement(&self) -> Graph {
        let mut c = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    c.add_edge(u, v);
                }
            }
        }
        c
    }

    /// `g + h`; vertices of `h` are shifted by `g.n()`.
    pub fn disjoint_union(&self, h: &Graph) -> Graph {
        let mut out = Graph::new(self.n + h.n);
        for (u, v) in self.edges() {
            out.add_edge(u, v);
        }
        for (u, v) in h.edges() {
            out.add_edge(u + self.n, v + self.n);
        }
        out
    }

    /// `g * h`: disjoint union plus every edge between the two sides.
    pub fn join(&self, h: &Graph) -> Graph {
        let mut out = self.disjoint_union(h);
        for u in 0..self.n {
            for v in 0..h.n {
                out.add_edge(u, self.n + v);
            }
        }
        out
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in the sorted order of `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        if let Some(&bad) = s.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        Ok(self.induced_by_list(s.as_slice()))
    }

    /// Subgraph induced by `vs` with vertex `i` of the result being `vs[i]`.
    /// Order is preserved, which makes this usable for arbitrary relabelings.
    pub fn induced_by_list(&self, vs: &[usize]) -> Graph {
        let mut out = Graph::new(vs.len());
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if self.has_edge(vs[i], vs[j]) {
                    out.add_edge(i, j);
                }
            }
        }
        out
    }

    /// Relabels by `perm`: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut out = Graph::new(self.n);
        for (u, v) in self.edges() {
            out.add_edge(perm[u], perm[v]);
        }
        out
    }

    /// Connected components, each sorted, listed by minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                        queue.push_back(v);
                    }
                }
            }
            out.push(VertexSet::new(members));
        }
        out
    }

    /// Component id per vertex, numbered in the order of [`Graph::components`].
    pub fn component_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (i, c) in self.components().iter().enumerate() {
            for &v in c.iter() {
                labels[v] = i;
            }
        }
        labels
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&w| w == 0)
    }

    /// A proper 2-colouring `(colour 0, colour 1)`, or `None` if an odd cycle exists.
    /// BFS from the smallest uncoloured vertex, which gets colour 0.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        let side = |c| VertexSet::new((0..self.n).filter(|&v| color[v] == c).collect());
        Some((side(0), side(1)))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_co_bipartite(&self) -> bool {
        self.complement().is_bipartite()
    }

    /// Shortest-path length, `None` when `u` and `v` are disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                return Ok(Some(dist[x]));
            }
            for y in self.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        Ok(None)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterator over the set bits of an adjacency row.
pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    bits: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.bits = self.row[self.word];
        }
    }
}

/// A sorted set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn complement_examples() {
        assert_eq!(complete(3).complement(), Graph::new(3));
        let c5 = cycle(5);
        assert!(crate::search::is_isomorphic(&c5.complement(), &c5));
        for n in 0..=5 {
            for g in crate::enumerate::all_labeled_graphs(n) {
                assert_eq!(g.complement().complement(), g);
            }
        }
    }

    #[test]
    fn union_and_join() {
        assert_eq!(Graph::new(1).disjoint_union(&Graph::new(1)), Graph::new(2));
        let k2k2 = complete(2).disjoint_union(&complete(2));
        assert_eq!(k2k2.components().len(), 2);
        let u = path(3).disjoint_union(&cycle(4));
        assert_eq!((u.n(), u.edge_count(), u.components().len()), (7, 6, 2));

        assert!(crate::search::is_isomorphic(&Graph::new(1).join(&path(4)), &gem()));
        assert_eq!(Graph::new(1).join(&Graph::new(1)), complete(2));
        assert_eq!(Graph::new(2).join(&Graph::new(3)), complete_bipartite(2, 3));
    }

    #[test]
    fn induced_subgraphs() {
        let c4 = cycle(4);
        assert_eq!(
            c4.induced_subgraph(&VertexSet::new(vec![0, 1, 2])).unwrap(),
            path(3)
        );
        assert_eq!(c4.induced_subgraph(&(0..4).collect()).unwrap(), c4);
        let k5 = complete(5);
        assert_eq!(
            k5.induced_subgraph(&VertexSet::new(vec![4, 1, 2])).unwrap(),
            complete(3)
        );
        assert!(matches!(
            c4.induced_subgraph(&VertexSet::new(vec![0, 4])),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        ));
    }

    #[test]
    fn component_examples() {
        let two_k2 = complete(2).disjoint_union(&complete(2));
        let comps = two_k2.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
        assert_eq!(cycle(5).components().len(), 1);
        assert_eq!(
            Graph::new(3).components(),
            vec![VertexSet::new(vec![0]), VertexSet::new(vec![1]), VertexSet::new(vec![2])]
        );
    }

    #[test]
    fn predicates() {
        assert!(cycle(4).is_co_bipartite());
        assert!(cycle(5).bipartition().is_none());
        assert_eq!(path(5).distance(0, 4).unwrap(), Some(4));
        assert_eq!(Graph::new(2).distance(0, 1).unwrap(), None);
        assert!(complete(4).is_complete());
        assert!(Graph::new(4).is_edgeless());
        assert!(Graph::new(0).is_complete() && Graph::new(0).is_edgeless());
        let (a, b) = cycle(6).bipartition().unwrap();
        assert_eq!(a.as_slice(), &[0, 2, 4]);
        assert_eq!(b.as_slice(), &[1, 3, 5]);
    }

    #[test]
    fn large_graph_rows() {
        let mut g = Graph::new(130);
        g.add_edge(0, 129);
        g.add_edge(64, 65);
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edges(), vec![(0, 129), (64, 65)]);
        assert!(g.are_true_twins(0, 129));
        g.add_edge(0, 64);
        assert!(!g.are_true_twins(0, 129));
        g.add_edge(129, 64);
        assert!(g.are_true_twins(0, 129));
        g.add_edge(0, 65);
        assert!(!g.are_true_twins(0, 129));
        let k = complete(100);
        assert!(k.are_true_twins(3, 97));
    }

    #[test]
    fn true_twin_test() {
        let p3 = path(3);
        assert!(!p3.are_true_twins(0, 2));
        assert!(complete(3).are_true_twins(0, 2));
        let paw = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert!(paw.are_true_twins(0, 1));
        assert!(!paw.are_true_twins(0, 2));
    }
}
