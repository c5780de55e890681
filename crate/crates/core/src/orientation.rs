//! Orientations, the 1-perfection check, and orientation transfer under the
//! closure operations (true twins, universal and simplicial vertices, twin
//! blow-ups).

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::{content_lines, parse_edge_list_prefix, to_edge_list};
use crate::graph::{Graph, VertexSet};
use crate::structure::is_pseudoforest;

/// A graph together with a direction for each of its edges.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ArcList", try_from = "ArcList")]
pub struct Orientation {
    base: Graph,
    /// Out-adjacency, one directed bitset row per vertex.
    out: Graph,
}

/// Serialized form: vertex count plus the arc list.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArcList {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl From<Orientation> for ArcList {
    fn from(d: Orientation) -> Self {
        ArcList {
            n: d.n(),
            arcs: d.arcs(),
        }
    }
}

impl TryFrom<ArcList> for Orientation {
    type Error = Error;

    fn try_from(a: ArcList) -> Result<Self> {
        let mut base = Graph::new(a.n);
        for &(u, v) in &a.arcs {
            for w in [u, v] {
                if w >= a.n {
                    return Err(Error::VertexOutOfRange { vertex: w, n: a.n });
                }
            }
            if u == v || base.has_edge(u, v) {
                return Err(Error::Orientation(format!("arc {u} -> {v} repeats or is a loop")));
            }
            base.add_edge(u, v);
        }
        Orientation::from_arcs(base, &a.arcs)
    }
}

impl std::fmt::Debug for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Orientation(n={}, arcs={:?})", self.n(), self.arcs())
    }
}

// `out` reuses Graph rows as a directed bitset matrix.
fn set_arc(out: &mut Graph, u: usize, v: usize) {
    out.add_arc_raw(u, v);
}

impl Orientation {
    /// Orients each edge `{u, v}` (`u < v`) as `u -> v` iff `forward(u, v)`.
    pub fn from_fn(base: Graph, mut forward: impl FnMut(usize, usize) -> bool) -> Self {
        let mut out = Graph::new(base.n());
        for (u, v) in base.edges() {
            if forward(u, v) {
                set_arc(&mut out, u, v);
            } else {
                set_arc(&mut out, v, u);
            }
        }
        Orientation { base, out }
    }

    /// Every edge of `base` must appear exactly once among `arcs`, and no
    /// arc may lie outside `base`.
    pub fn from_arcs(base: Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut out = Graph::new(base.n());
        for &(u, v) in arcs {
            if u >= base.n() || v >= base.n() || !base.has_edge(u, v) {
                return Err(Error::Orientation(format!("arc {u} -> {v} is not an edge")));
            }
            if out.has_edge(u, v) || out.has_edge(v, u) {
                return Err(Error::Orientation(format!("edge {u} {v} is directed twice")));
            }
            set_arc(&mut out, u, v);
        }
        if arcs.len() != base.edge_count() {
            return Err(Error::Orientation(format!(
                "{} of {} edges directed",
                arcs.len(),
                base.edge_count()
            )));
        }
        Ok(Orientation { base, out })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out.has_edge(u, v)
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.out.neighbors(v).collect()
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        self.base.neighbors(v).filter(|&w| self.has_arc(w, v)).collect()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out.degree(v)
    }

    /// Arcs in the order of `base.edges()`.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.base
            .edges()
            .into_iter()
            .map(|(u, v)| if self.has_arc(u, v) { (u, v) } else { (v, u) })
            .collect()
    }

    /// Vertices whose out-neighbourhood is not a clique.
    pub fn violations(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&v| !self.out_is_clique(v))
            .collect()
    }

    fn out_is_clique(&self, v: usize) -> bool {
        let row = self.out.row(v);
        // every out-neighbour w must be adjacent to all other out-neighbours
        self.out.neighbors(v).all(|w| {
            let adj = self.base.row(w);
            row.iter().zip(adj).enumerate().all(|(i, (&r, &a))| {
                let own = if w / 64 == i { 1u64 << (w % 64) } else { 0 };
                r & !(a | own) == 0
            })
        })
    }

    pub fn is_one_perfect(&self) -> bool {
        (0..self.n()).all(|v| self.out_is_clique(v))
    }

    /// The orientation induced on `vs`; vertex `i` of the result is `vs[i]`.
    pub fn restrict(&self, vs: &[usize]) -> Orientation {
        let base = self.base.induced_by_list(vs);
        Orientation::from_fn(base, |i, j| self.has_arc(vs[i], vs[j]))
    }

    /// Vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Orientation {
        let base = self.base.relabel(perm);
        let mut inv = vec![0; perm.len()];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        Orientation::from_fn(base, |u, v| self.has_arc(inv[u], inv[v]))
    }

    pub fn disjoint_union(&self, other: &Orientation) -> Orientation {
        let k = self.n();
        let base = self.base.disjoint_union(&other.base);
        Orientation::from_fn(base, |u, v| {
            if v < k {
                self.has_arc(u, v)
            } else {
                other.has_arc(u - k, v - k)
            }
        })
    }

    /// Text form: the base graph as an edge list, then one `u -> v` line per
    /// edge.
    pub fn to_text(&self) -> String {
        let mut s = to_edge_list(&self.base);
        for (u, v) in self.arcs() {
            s.push_str(&format!("{u} -> {v}\n"));
        }
        s
    }
}

pub fn is_one_perfect(d: &Orientation) -> bool {
    d.is_one_perfect()
}

pub fn parse_orientation(text: &str) -> Result<Orientation> {
    let mut lines = content_lines(text);
    let base = parse_edge_list_prefix(&mut lines)?;
    let mut arcs = Vec::with_capacity(base.edge_count());
    for (line_no, line) in lines {
        let (a, b) = line.split_once("->").ok_or_else(|| Error::Parse {
            offset: line_no,
            message: format!("line {line_no}: expected \"u -> v\""),
        })?;
        let parse = |t: &str| {
            t.trim().parse::<usize>().map_err(|_| Error::Parse {
                offset: line_no,
                message: format!("line {line_no}: {:?} is not a vertex", t.trim()),
            })
        };
        arcs.push((parse(a)?, parse(b)?));
    }
    Orientation::from_arcs(base, &arcs)
}

fn require_one_perfect(d: &Orientation) -> Result<()> {
    if d.is_one_perfect() {
        Ok(())
    } else {
        Err(Error::Precondition("input orientation is not 1-perfect".into()))
    }
}

/// Adds a true twin `v'` of `v` as the new last vertex. `v'` copies the
/// directions of `v`'s edges and `v' -> v`.
pub fn extend_true_twin(d: &Orientation, v: usize) -> Result<Orientation> {
    if v >= d.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: d.n() });
    }
    require_one_perfect(d)?;
    let t = d.n();
    let mut base = d.base.disjoint_union(&Graph::new(1));
    base.add_edge(v, t);
    for w in d.base.neighbors(v) {
        base.add_edge(w, t);
    }
    Ok(Orientation::from_fn(base, |a, b| {
        if b != t {
            d.has_arc(a, b)
        } else if a == v {
            false
        } else {
            !d.has_arc(v, a)
        }
    }))
}

/// Adds a universal vertex with every edge directed into it.
pub fn extend_universal(d: &Orientation) -> Result<Orientation> {
    require_one_perfect(d)?;
    let t = d.n();
    let base = d.base.join(&Graph::new(1));
    Ok(Orientation::from_fn(base, |a, b| b == t || d.has_arc(a, b)))
}

/// Adds a vertex adjacent to `clique` with every edge directed out of it.
pub fn extend_simplicial(d: &Orientation, clique: &VertexSet) -> Result<Orientation> {
    require_one_perfect(d)?;
    if let Some(&bad) = clique.iter().find(|&&v| v >= d.n()) {
        return Err(Error::VertexOutOfRange { vertex: bad, n: d.n() });
    }
    if !d.base.is_clique(clique.as_slice()) {
        return Err(Error::Precondition("attachment set is not a clique".into()));
    }
    let t = d.n();
    let mut base = d.base.disjoint_union(&Graph::new(1));
    for &w in clique {
        base.add_edge(w, t);
    }
    Ok(Orientation::from_fn(base, |a, b| b != t && d.has_arc(a, b)))
}

/// Out-degree-at-most-one orientation of a pseudoforest. A tree component is
/// oriented towards its minimum vertex; in a unicyclic component the cycle is
/// oriented cyclically, starting at its minimum vertex towards the smaller of
/// its two cycle neighbours, and every other edge points towards the cycle.
pub fn orient_pseudoforest(g: &Graph) -> Result<Orientation> {
    if !is_pseudoforest(g) {
        return Err(Error::Precondition("graph is not a pseudoforest".into()));
    }
    let n = g.n();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    // peel leaves to find cycle vertices
    let mut deg = g.degrees();
    let mut on_cycle = vec![true; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = queue.pop_front() {
        if !on_cycle[v] {
            continue;
        }
        on_cycle[v] = false;
        for w in g.neighbors(v) {
            if on_cycle[w] {
                deg[w] -= 1;
                if deg[w] <= 1 {
                    queue.push_back(w);
                }
            }
        }
    }
    for comp in g.components() {
        let cycle: Vec<usize> = comp.iter().copied().filter(|&v| on_cycle[v]).collect();
        let mut roots: Vec<usize> = Vec::new();
        if let Some(&start) = cycle.first() {
            let mut prev = start;
            let mut cur = g
                .neighbors(start)
                .filter(|&w| on_cycle[w])
                .min()
                .expect("cycle vertex has cycle neighbours");
            parent[start] = Some(cur);
            while cur != start {
                let next = g
                    .neighbors(cur)
                    .find(|&w| on_cycle[w] && w != prev)
                    .expect("cycle continues");
                parent[cur] = Some(next);
                prev = cur;
                cur = next;
            }
            roots.extend(&cycle);
        } else {
            roots.push(comp.first().expect("components are nonempty"));
        }
        let mut seen = vec![false; n];
        let mut queue: VecDeque<usize> = roots.iter().copied().collect();
        for &r in &roots {
            seen[r] = true;
        }
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
    }
    let d = Orientation::from_fn(g.clone(), |u, v| parent[u] == Some(v));
    debug_assert!((0..n).all(|v| d.out_degree(v) <= 1));
    Ok(d)
}

/// Pulls `quotient` back along `map` (target vertex -> quotient vertex).
/// Edges between vertices with different images copy the quotient arc;
/// edges inside one fibre go from the higher to the lower index. Meant for
/// twin blow-ups, where each fibre is a clique of true twins; the result is
/// checked for 1-perfection.
pub fn expand_twins(quotient: &Orientation, target: &Graph, map: &[usize]) -> Result<Orientation> {
    if map.len() != target.n() {
        return Err(Error::Precondition(format!(
            "map covers {} of {} vertices",
            map.len(),
            target.n()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&q| q >= quotient.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: bad,
            n: quotient.n(),
        });
    }
    for (u, v) in target.edges() {
        if map[u] != map[v] && !quotient.base.has_edge(map[u], map[v]) {
            return Err(Error::Inconsistent(format!(
                "edge {u} {v} maps to the non-edge {} {}",
                map[u], map[v]
            )));
        }
    }
    let d = Orientation::from_fn(target.clone(), |u, v| {
        if map[u] == map[v] {
            false
        } else {
            quotient.has_arc(map[u], map[v])
        }
    });
    if !d.is_one_perfect() {
        return Err(Error::Inconsistent(format!(
            "lifted orientation is not 1-perfect at {:?}",
            d.violations()
        )));
    }
    Ok(d)
}
