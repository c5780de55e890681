//! Backtracking searches for small patterns: isomorphism and induced
//! subgraph containment.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Injective map from pattern vertices to host vertices; `mapping[p]` is the
/// host image of pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub mapping: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and that adjacency and non-adjacency are preserved.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = &self.mapping;
        if m.len() != pattern.n() || m.iter().any(|&v| v >= host.n()) {
            return false;
        }
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                if m[i] == m[j] || pattern.has_edge(i, j) != host.has_edge(m[i], m[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Order in which to place pattern vertices: highest degree first, then
/// repeatedly the vertex with most already-placed neighbours.
fn placement_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[next] = true;
        order.push(next);
        for w in g.neighbors(next) {
            weight[w] += 1;
        }
    }
    order
}

/// Colour refinement run on both graphs with a shared palette, so equal
/// colours across graphs are comparable.
fn joint_refinement(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut cg: Vec<usize> = g.degrees();
    let mut ch: Vec<usize> = h.degrees();
    let mut classes = usize::MAX;
    loop {
        let sig = |gr: &Graph, col: &[usize], v: usize| {
            let mut nb: Vec<usize> = gr.neighbors(v).map(|w| col[w]).collect();
            nb.sort_unstable();
            (col[v], nb)
        };
        let sg: Vec<_> = (0..g.n()).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.n()).map(|v| sig(h, &ch, v)).collect();
        let mut palette = BTreeMap::new();
        for s in sg.iter().chain(sh.iter()) {
            let next = palette.len();
            palette.entry(s.clone()).or_insert(next);
        }
        cg = sg.iter().map(|s| palette[s]).collect();
        ch = sh.iter().map(|s| palette[s]).collect();
        if palette.len() == classes {
            return (cg, ch);
        }
        classes = palette.len();
    }
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let (cg, ch) = joint_refinement(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }

    let order = placement_order(g);
    let mut map = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        depth: usize,
        order: &[usize],
        g: &Graph,
        h: &Graph,
        cg: &[usize],
        ch: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        for y in 0..h.n() {
            if used[y] || ch[y] != cg[x] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&x2| g.has_edge(x, x2) == h.has_edge(y, map[x2]));
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if rec(depth + 1, order, g, h, cg, ch, map, used) {
                return true;
            }
            used[y] = false;
        }
        map[x] = usize::MAX;
        false
    }
    rec(0, &order, g, h, &cg, &ch, &mut map, &mut used).then_some(map)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Finds `pattern` as an induced subgraph of `host`.
pub fn find_induced_subgraph(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.n() > host.n() {
        return None;
    }
    let order = placement_order(pattern);
    let pdeg = pattern.degrees();
    let hdeg = host.degrees();
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = vec![false; host.n()];

    #[allow(clippy::too_many_arguments)]
    fn rec(
        depth: usize,
        order: &[usize],
        host: &Graph,
        pattern: &Graph,
        pdeg: &[usize],
        hdeg: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let p = order[depth];
        for v in 0..host.n() {
            if used[v] || hdeg[v] < pdeg[p] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&q| pattern.has_edge(p, q) == host.has_edge(v, map[q]));
            if !consistent {
                continue;
            }
            map[p] = v;
            used[v] = true;
            if rec(depth + 1, order, host, pattern, pdeg, hdeg, map, used) {
                return true;
            }
            used[v] = false;
        }
        map[p] = usize::MAX;
        false
    }

    rec(0, &order, host, pattern, &pdeg, &hdeg, &mut map, &mut used)
        .then_some(Embedding { mapping: map })
}

pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    find_induced_subgraph(host, pattern).is_some()
}

/// True iff `g` has none of `patterns` as an induced subgraph.
pub fn is_free_of(g: &Graph, patterns: &[Graph]) -> bool {
    patterns.iter().all(|p| !contains_induced(g, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::all_labeled_graphs;
    use crate::families::*;
    use crate::products::{direct, strong};
    use crate::structure::raft;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_iso(g: &Graph, h: &Graph) -> bool {
        g.n() == h.n() && permutations(g.n()).iter().any(|p| g.relabel(p) == *h)
    }

    fn brute_induced(host: &Graph, pattern: &Graph) -> bool {
        // all injections via permutations of chosen subsets
        fn rec(host: &Graph, pattern: &Graph, map: &mut Vec<usize>) -> bool {
            let k = map.len();
            if k == pattern.n() {
                return true;
            }
            for v in 0..host.n() {
                if map.contains(&v) {
                    continue;
                }
                if (0..k).all(|q| pattern.has_edge(k, q) == host.has_edge(v, map[q])) {
                    map.push(v);
                    if rec(host, pattern, map) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        rec(host, pattern, &mut Vec::new())
    }

    #[test]
    fn iso_examples() {
        assert!(is_isomorphic(&path(4), &raft(1)));
        assert!(is_isomorphic(&raft(0).join(&Graph::new(1)), &path(3)));
        assert!(!is_isomorphic(&complete(3), &path(3)));
    }

    #[test]
    fn iso_agrees_with_permutation_brute_force() {
        for n in 0..=4 {
            let gs: Vec<_> = all_labeled_graphs(n).collect();
            for g in &gs {
                for h in &gs {
                    assert_eq!(is_isomorphic(g, h), brute_iso(g, h), "{g:?} {h:?}");
                }
            }
        }
        // n = 5, 6: against a fixed sample of partners
        for n in 5..=6 {
            let gs: Vec<_> = all_labeled_graphs(n).step_by(if n == 5 { 7 } else { 211 }).collect();
            for g in &gs {
                for h in gs.iter().take(40) {
                    assert_eq!(is_isomorphic(g, h), brute_iso(g, h));
                }
                // a relabeled copy is always isomorphic
                let p: Vec<usize> = (0..n).rev().collect();
                let m = find_isomorphism(g, &g.relabel(&p)).unwrap();
                assert_eq!(g.relabel(&m), g.relabel(&p));
            }
        }
    }

    #[test]
    fn induced_examples() {
        let e = find_induced_subgraph(&strong(&path(4), &path(4)), &domino()).unwrap();
        assert!(e.verify(&strong(&path(4), &path(4)), &domino()));
        let host = direct(&complete(3), &complete(3));
        let co_c6 = cycle(6).complement();
        assert!(find_induced_subgraph(&host, &co_c6).unwrap().verify(&host, &co_c6));
        assert!(find_induced_subgraph(&complete(3), &Graph::new(2)).is_none());
    }

    #[test]
    fn induced_agrees_with_naive() {
        // every host on <= 6 vertices up to isomorphism, plus all labeled hosts on <= 4
        let mut hosts: Vec<_> = (0..=6).flat_map(crate::enumerate::unlabeled_graphs).collect();
        hosts.extend((0..=4).flat_map(all_labeled_graphs));
        let patterns: Vec<_> = (1..=4).flat_map(all_labeled_graphs).collect();
        for h in &hosts {
            for p in &patterns {
                let found = find_induced_subgraph(h, p);
                assert_eq!(found.is_some(), brute_induced(h, p), "{h:?} {p:?}");
                if let Some(e) = found {
                    assert!(e.verify(h, p));
                }
            }
        }
    }
}
