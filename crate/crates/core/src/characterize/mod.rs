//! Deciders for 1-perfect orientability of products and joins, computed from
//! the factors.
//!
//! Each decider returns a [`Verdict`] naming the clause that matched. Positive
//! verdicts carry a certificate orientation of the product (in the
//! [`PairIndex`](crate::products::PairIndex) labeling); negative verdicts try
//! to attach a forbidden induced subgraph or induced minor.

pub mod catalog;
pub mod raft;
pub mod witness;

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::{expand_twins, extend_universal, orient_pseudoforest, Orientation};
use crate::products::{lexicographic, PairIndex, ProductKind};
use crate::recognize::recognize_2sat;
use crate::search::Embedding;
use crate::structure::{
    classify_ttf_co_chain, co_chain_partition, components_all_2_complete, components_all_co_chain,
    components_all_complete, is_k_linear_forest, is_pseudoforest, raft, raft_join_k1_into_raft,
    true_twin_reduction, CoChainTTFClass,
};

pub use catalog::{catalog_graph, forbidden_catalog};
pub use raft::{orient_p3_strong_raft, orient_p3_strong_raft_join_k1, P3RaftLayout};
pub use witness::{find_witness, Witness, DEFAULT_MINOR_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DecisionKind {
    Cartesian,
    Lexicographic,
    Direct,
    Strong,
    Join,
}

impl From<ProductKind> for DecisionKind {
    fn from(k: ProductKind) -> Self {
        match k {
            ProductKind::Cartesian => DecisionKind::Cartesian,
            ProductKind::Lexicographic => DecisionKind::Lexicographic,
            ProductKind::Direct => DecisionKind::Direct,
            ProductKind::Strong => DecisionKind::Strong,
        }
    }
}

impl fmt::Display for DecisionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DecisionKind::Cartesian => "cartesian",
            DecisionKind::Lexicographic => "lexicographic",
            DecisionKind::Direct => "direct",
            DecisionKind::Strong => "strong",
            DecisionKind::Join => "join",
        };
        f.write_str(s)
    }
}

/// Label for negative verdicts.
pub const NO_CONDITION: &str = "none";
/// Label for products with a factor on fewer than two vertices.
pub const TRIVIAL_CONDITION: &str = "trivial-product";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub kind: DecisionKind,
    pub is_1po: bool,
    pub condition: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<Orientation>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

/// Controls the work spent on negative verdicts.
#[derive(Clone, Copy, Debug)]
pub struct DecideOptions {
    /// Search for a witness when the answer is no.
    pub witness: bool,
    /// Node budget for the induced-minor part of the witness search.
    pub minor_budget: u64,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            witness: true,
            minor_budget: DEFAULT_MINOR_BUDGET,
        }
    }
}

fn is_1po(g: &Graph) -> bool {
    recognize_2sat(g).is_yes()
}

fn certificate_of(g: &Graph) -> Result<Orientation> {
    recognize_2sat(g)
        .into_certificate()
        .ok_or_else(|| Error::Inconsistent("factor expected to be 1-p.o.".into()))
}

fn nontrivial(g: &Graph, h: &Graph) -> Result<()> {
    if g.n() < 2 || h.n() < 2 {
        Err(Error::TrivialProduct { g_n: g.n(), h_n: h.n() })
    } else {
        Ok(())
    }
}

fn yes(kind: DecisionKind, condition: String, certificate: Orientation) -> Verdict {
    Verdict {
        kind,
        is_1po: true,
        condition,
        certificate: Some(certificate),
        witness: None,
    }
}

fn no(kind: DecisionKind, product: &Graph, opts: &DecideOptions) -> Verdict {
    Verdict {
        kind,
        is_1po: false,
        condition: NO_CONDITION.to_string(),
        certificate: None,
        witness: if opts.witness {
            find_witness(product, opts.minor_budget)
        } else {
            None
        },
    }
}

fn label(kind: DecisionKind, clause: &str, swapped: bool) -> String {
    if swapped {
        format!("{kind} ({clause}), factors swapped")
    } else {
        format!("{kind} ({clause})")
    }
}

/// `count` disjoint copies of `d`.
fn copies(d: &Orientation, count: usize) -> Orientation {
    let mut out = Orientation::from_fn(Graph::new(0), |_, _| true);
    for _ in 0..count {
        out = out.disjoint_union(d);
    }
    out
}

/// Component index of every vertex, numbered by minimum vertex.
fn component_index(g: &Graph) -> (usize, Vec<usize>) {
    let comps = g.components();
    let mut idx = vec![0; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            idx[v] = i;
        }
    }
    (comps.len(), idx)
}

/// Lifts copies of `d` (an orientation of one factor) to `product`. `map`
/// sends a product vertex `(u, v)` to `(copy, vertex of d)`.
fn lift_copies(
    d: &Orientation,
    count: usize,
    product: &Graph,
    idx: PairIndex,
    map: impl Fn(usize, usize) -> (usize, usize),
) -> Result<Orientation> {
    let q = copies(d, count);
    let m: Vec<usize> = (0..idx.len())
        .map(|i| {
            let (u, v) = idx.pair(i);
            let (c, w) = map(u, v);
            c * d.n() + w
        })
        .collect();
    expand_twins(&q, product, &m)
}

pub fn decide_cartesian(g: &Graph, h: &Graph) -> Result<Verdict> {
    decide_cartesian_with(g, h, &DecideOptions::default())
}

pub fn decide_cartesian_with(g: &Graph, h: &Graph, opts: &DecideOptions) -> Result<Verdict> {
    nontrivial(g, h)?;
    let kind = DecisionKind::Cartesian;
    let product = ProductKind::Cartesian.apply(g, h);
    let idx = PairIndex::new(g, h);
    if g.is_edgeless() && is_1po(h) {
        let d = lift_copies(&certificate_of(h)?, g.n(), &product, idx, |u, v| (u, v))?;
        return Ok(yes(kind, label(kind, "i", false), d));
    }
    if h.is_edgeless() && is_1po(g) {
        let d = lift_copies(&certificate_of(g)?, h.n(), &product, idx, |u, v| (v, u))?;
        return Ok(yes(kind, label(kind, "i", true), d));
    }
    if is_k_linear_forest(g, 2) && is_k_linear_forest(h, 2) {
        return Ok(yes(kind, label(kind, "ii", false), orient_pseudoforest(&product)?));
    }
    Ok(no(kind, &product, opts))
}

pub fn decide_lexicographic(g: &Graph, h: &Graph) -> Result<Verdict> {
    decide_lexicographic_with(g, h, &DecideOptions::default())
}

pub fn decide_lexicographic_with(g: &Graph, h: &Graph, opts: &DecideOptions) -> Result<Verdict> {
    nontrivial(g, h)?;
    let kind = DecisionKind::Lexicographic;
    let product = lexicographic(g, h);
    let idx = PairIndex::new(g, h);
    if g.is_edgeless() && is_1po(h) {
        let d = lift_copies(&certificate_of(h)?, g.n(), &product, idx, |u, v| (u, v))?;
        return Ok(yes(kind, label(kind, "i", false), d));
    }
    if h.is_complete() && is_1po(g) {
        let m: Vec<usize> = (0..idx.len()).map(|i| idx.pair(i).0).collect();
        let d = expand_twins(&certificate_of(g)?, &product, &m)?;
        return Ok(yes(kind, label(kind, "ii", false), d));
    }
    if components_all_complete(g) && h.is_co_bipartite() && is_1po(h) {
        let d = certificate_of(&product)?;
        return Ok(yes(kind, label(kind, "iii", false), d));
    }
    Ok(no(kind, &product, opts))
}

pub fn decide_direct(g: &Graph, h: &Graph) -> Result<Verdict> {
    decide_direct_with(g, h, &DecideOptions::default())
}

pub fn decide_direct_with(g: &Graph, h: &Graph, opts: &DecideOptions) -> Result<Verdict> {
    nontrivial(g, h)?;
    let kind = DecisionKind::Direct;
    let product = ProductKind::Direct.apply(g, h);
    let lin = |x: &Graph, k| is_k_linear_forest(x, k);
    let clause = if lin(g, 1) {
        Some(("i", false))
    } else if lin(h, 1) {
        Some(("i", true))
    } else if lin(g, 2) && is_pseudoforest(h) {
        Some(("ii", false))
    } else if lin(h, 2) && is_pseudoforest(g) {
        Some(("ii", true))
    } else if lin(g, 3) && lin(h, 4) {
        Some(("iii", false))
    } else if lin(h, 3) && lin(g, 4) {
        Some(("iii", true))
    } else {
        None
    };
    match clause {
        Some((c, swapped)) => {
            let d = orient_pseudoforest(&product)?;
            Ok(yes(kind, label(kind, c, swapped), d))
        }
        None => Ok(no(kind, &product, opts)),
    }
}

pub fn decide_strong(g: &Graph, h: &Graph) -> Result<Verdict> {
    decide_strong_with(g, h, &DecideOptions::default())
}

pub fn decide_strong_with(g: &Graph, h: &Graph, opts: &DecideOptions) -> Result<Verdict> {
    nontrivial(g, h)?;
    let kind = DecisionKind::Strong;
    let product = ProductKind::Strong.apply(g, h);
    let idx = PairIndex::new(g, h);
    if components_all_complete(g) && is_1po(h) {
        let (k, comp) = component_index(g);
        let d = lift_copies(&certificate_of(h)?, k, &product, idx, |u, v| (comp[u], v))?;
        return Ok(yes(kind, label(kind, "i", false), d));
    }
    if components_all_complete(h) && is_1po(g) {
        let (k, comp) = component_index(h);
        let d = lift_copies(&certificate_of(g)?, k, &product, idx, |u, v| (comp[v], u))?;
        return Ok(yes(kind, label(kind, "i", true), d));
    }
    if components_all_2_complete(g) && components_all_co_chain(h) {
        let d = strong_two_complete_certificate(&product, g, h, false)?;
        return Ok(yes(kind, label(kind, "ii", false), d));
    }
    if components_all_2_complete(h) && components_all_co_chain(g) {
        let d = strong_two_complete_certificate(&product, h, g, true)?;
        return Ok(yes(kind, label(kind, "ii", true), d));
    }
    Ok(no(kind, &product, opts))
}

/// Maps each vertex of a 2-complete component to `u_1`, `u_2` or `u_3`
/// (0, 1, 2) of `P_3`: the reduction's middle vertex class goes to `u_2`.
fn two_complete_map(c: &Graph) -> Result<Vec<usize>> {
    let red = true_twin_reduction(c);
    let class = red.class_index(c.n());
    let r = red.reduced(c);
    let pos: Vec<usize> = match r.n() {
        1 => vec![1],
        3 => {
            let mid = (0..3).find(|&v| r.degree(v) == 2).expect("P_3 has a middle");
            let mut ends = (0..3).filter(|&v| v != mid);
            let mut p = vec![0; 3];
            p[mid] = 1;
            p[ends.next().unwrap()] = 0;
            p[ends.next().unwrap()] = 2;
            p
        }
        _ => return Err(Error::Inconsistent("component is not 2-complete".into())),
    };
    Ok((0..c.n()).map(|v| pos[class[v]]).collect())
}

/// Maps each vertex of a co-chain component into a raft `R_m` in which its
/// true-twin reduction embeds; returns `m` and the map.
fn co_chain_map(d: &Graph) -> Result<(usize, Vec<usize>)> {
    let red = true_twin_reduction(d);
    let class = red.class_index(d.n());
    let r = red.reduced(d);
    let class_kind = classify_ttf_co_chain(&r)?;
    let (m, emb): (usize, Vec<usize>) = match class_kind {
        CoChainTTFClass::IsK1 => (1, vec![0]),
        CoChainTTFClass::IsRaft(n) => {
            let p = co_chain_partition(&r).expect("classified as co-chain");
            let mut e = vec![0; r.n()];
            for (i, &x) in p.x_order.iter().enumerate() {
                e[x] = i;
            }
            for (j, &y) in p.y_order.iter().enumerate() {
                e[y] = n + 1 + j;
            }
            (n, e)
        }
        CoChainTTFClass::IsRaftJoinK1(n) => {
            let p = co_chain_partition(&r).expect("classified as co-chain");
            // the side of size n + 2 holds the apex as its last vertex
            let (big, small) = if p.x_order.len() == n + 2 {
                (&p.x_order, &p.y_order)
            } else {
                (&p.y_order, &p.x_order)
            };
            let into = raft_join_k1_into_raft(n);
            let mut e = vec![0; r.n()];
            for (i, &x) in big[..=n].iter().enumerate() {
                e[x] = into[i];
            }
            for (j, &y) in small.iter().enumerate() {
                e[y] = into[n + 1 + j];
            }
            e[big[n + 1]] = into[2 * n + 2];
            (n + 2, e)
        }
        CoChainTTFClass::NotCoChainTTF => {
            return Err(Error::Inconsistent("component is not co-chain".into()))
        }
    };
    if !(Embedding { mapping: emb.clone() }).verify(&raft(m), &r) {
        return Err(Error::Inconsistent("co-chain component does not embed in its raft".into()));
    }
    Ok((m, (0..d.n()).map(|v| emb[class[v]]).collect()))
}

/// Certificate for `G ⊠ H` when every component of `two` is 2-complete and
/// every component of `co` is co-chain. `two` is the first factor of
/// `product` unless `swapped`.
fn strong_two_complete_certificate(
    product: &Graph,
    two: &Graph,
    co: &Graph,
    swapped: bool,
) -> Result<Orientation> {
    let (g, h) = if swapped { (co, two) } else { (two, co) };
    let idx = PairIndex::new(g, h);
    let mut p3_pos = vec![0; two.n()];
    for c in two.components() {
        let m = two_complete_map(&two.induced_by_list(c.as_slice()))?;
        for (i, &v) in c.iter().enumerate() {
            p3_pos[v] = m[i];
        }
    }
    let mut raft_pos = vec![(0, 0); co.n()];
    for c in co.components() {
        let (m, map) = co_chain_map(&co.induced_by_list(c.as_slice()))?;
        for (i, &v) in c.iter().enumerate() {
            raft_pos[v] = (m, map[i]);
        }
    }
    let mut hosts: HashMap<usize, Orientation> = HashMap::new();
    let mut pieces: Vec<Orientation> = Vec::new();
    let mut where_is = vec![(0, 0); idx.len()];
    for cg in g.components() {
        for ch in h.components() {
            let vs: Vec<usize> = cg
                .iter()
                .flat_map(|&u| ch.iter().map(move |&v| idx.index(u, v)))
                .collect();
            let mut m_used = 0;
            let map: Vec<usize> = vs
                .iter()
                .map(|&x| {
                    let (u, v) = idx.pair(x);
                    let (t, c) = if swapped { (v, u) } else { (u, v) };
                    let (m, r) = raft_pos[c];
                    m_used = m;
                    PairIndex { g_n: 3, h_n: 2 * m + 2 }.index(p3_pos[t], r)
                })
                .collect();
            if let Entry::Vacant(e) = hosts.entry(m_used) {
                e.insert(orient_p3_strong_raft(m_used)?);
            }
            let local = expand_twins(&hosts[&m_used], &product.induced_by_list(&vs), &map)?;
            for (i, &x) in vs.iter().enumerate() {
                where_is[x] = (pieces.len(), i);
            }
            pieces.push(local);
        }
    }
    let d = Orientation::from_fn(product.clone(), |x, y| {
        let (p, i) = where_is[x];
        let (_, j) = where_is[y];
        pieces[p].has_arc(i, j)
    });
    if !d.is_one_perfect() {
        return Err(Error::Inconsistent("assembled strong-product certificate is not 1-perfect".into()));
    }
    Ok(d)
}

pub fn decide_join(g: &Graph, h: &Graph) -> Result<Verdict> {
    decide_join_with(g, h, &DecideOptions::default())
}

pub fn decide_join_with(g: &Graph, h: &Graph, opts: &DecideOptions) -> Result<Verdict> {
    let kind = DecisionKind::Join;
    let joined = g.join(h);
    if g.is_complete() && is_1po(h) {
        let mut d = certificate_of(h)?;
        for _ in 0..g.n() {
            d = extend_universal(&d)?;
        }
        // h's vertices come first in `d`; move them behind g's
        let perm: Vec<usize> = (0..h.n())
            .map(|v| g.n() + v)
            .chain(0..g.n())
            .collect();
        return Ok(yes(kind, label(kind, "i", false), d.relabel(&perm)));
    }
    if h.is_complete() && is_1po(g) {
        let mut d = certificate_of(g)?;
        for _ in 0..h.n() {
            d = extend_universal(&d)?;
        }
        return Ok(yes(kind, label(kind, "i", true), d));
    }
    if g.is_co_bipartite() && h.is_co_bipartite() && is_1po(g) && is_1po(h) {
        return Ok(yes(kind, label(kind, "ii", false), certificate_of(&joined)?));
    }
    Ok(no(kind, &joined, opts))
}

pub fn decide_with(kind: ProductKind, g: &Graph, h: &Graph, opts: &DecideOptions) -> Result<Verdict> {
    match kind {
        ProductKind::Cartesian => decide_cartesian_with(g, h, opts),
        ProductKind::Lexicographic => decide_lexicographic_with(g, h, opts),
        ProductKind::Direct => decide_direct_with(g, h, opts),
        ProductKind::Strong => decide_strong_with(g, h, opts),
    }
}

/// Like [`decide_with`], but a product with a factor on fewer than two
/// vertices is decided by the recognizer and labeled `trivial-product`.
pub fn decide_product(kind: ProductKind, g: &Graph, h: &Graph, opts: &DecideOptions) -> Result<Verdict> {
    match decide_with(kind, g, h, opts) {
        Err(Error::TrivialProduct { .. }) => {
            let product = kind.apply(g, h);
            let r = recognize_2sat(&product);
            let mut v = Verdict {
                kind: kind.into(),
                is_1po: r.is_yes(),
                condition: TRIVIAL_CONDITION.to_string(),
                certificate: r.into_certificate(),
                witness: None,
            };
            if !v.is_1po && opts.witness {
                v.witness = find_witness(&product, opts.minor_budget);
            }
            Ok(v)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::products::strong;

    fn check(v: &Verdict, product: &Graph) {
        if let Some(d) = &v.certificate {
            assert!(d.is_one_perfect());
            assert_eq!(d.base(), product);
        }
        if let Some(w) = &v.witness {
            assert!(w.verify(product));
        }
        assert_eq!(v.is_1po, recognize_2sat(product).is_yes());
    }

    #[test]
    fn cartesian_examples() {
        let v = decide_cartesian(&complete(2), &complete(2)).unwrap();
        assert!(v.is_1po);
        assert_eq!(v.condition, "cartesian (ii)");
        let d = v.certificate.as_ref().unwrap();
        assert!((0..4).all(|x| d.out_degree(x) == 1));

        let v = decide_cartesian(&complete(3), &complete(2)).unwrap();
        assert!(!v.is_1po);
        assert_eq!(v.witness.as_ref().unwrap().pattern(), "co-C6");
        check(&v, &ProductKind::Cartesian.apply(&complete(3), &complete(2)));

        let v = decide_cartesian(&Graph::new(2), &cycle(5)).unwrap();
        assert_eq!(v.condition, "cartesian (i)");
        check(&v, &ProductKind::Cartesian.apply(&Graph::new(2), &cycle(5)));

        let v = decide_cartesian(&cycle(5), &Graph::new(2)).unwrap();
        assert_eq!(v.condition, "cartesian (i), factors swapped");
        check(&v, &ProductKind::Cartesian.apply(&cycle(5), &Graph::new(2)));

        let kk = complete(2).disjoint_union(&complete(2));
        assert_eq!(decide_cartesian(&kk, &kk).unwrap().condition, "cartesian (ii)");
        assert!(matches!(
            decide_cartesian(&complete(1), &complete(2)),
            Err(Error::TrivialProduct { .. })
        ));
    }

    #[test]
    fn lexicographic_examples() {
        let v = decide_lexicographic(&path(3), &Graph::new(2)).unwrap();
        assert!(!v.is_1po);
        assert_eq!(v.witness.as_ref().unwrap().pattern(), "K2,3");
        let v = decide_lexicographic(&cycle(5), &complete(3)).unwrap();
        assert_eq!(v.condition, "lexicographic (ii)");
        check(&v, &lexicographic(&cycle(5), &complete(3)));
        let v = decide_lexicographic(&complete(2), &cycle(4)).unwrap();
        assert_eq!(v.condition, "lexicographic (iii)");
        check(&v, &lexicographic(&complete(2), &cycle(4)));
    }

    #[test]
    fn direct_examples() {
        let v = decide_direct(&path(3), &path(4)).unwrap();
        assert!(v.is_1po);
        assert_eq!(v.condition, "direct (iii)");
        let v = decide_direct(&path(4), &path(4)).unwrap();
        assert!(!v.is_1po);
        assert_eq!(v.witness.as_ref().unwrap().pattern(), "domino");
        let mut tri_tail = cycle(3).disjoint_union(&Graph::new(2));
        tri_tail.add_edge(2, 3);
        tri_tail.add_edge(3, 4);
        let v = decide_direct(&complete(2), &tri_tail).unwrap();
        assert_eq!(v.condition, "direct (ii)");
        check(&v, &ProductKind::Direct.apply(&complete(2), &tri_tail));
    }

    #[test]
    fn strong_examples() {
        let v = decide_strong(&path(3), &claw()).unwrap();
        assert!(!v.is_1po);
        let w = v.witness.as_ref().unwrap();
        assert_eq!(w.pattern(), "K2,3");
        assert!(w.verify(&strong(&path(3), &claw())));

        // R_0 = 2K_1 has complete components, so clause (i) applies there
        assert_eq!(decide_strong(&path(3), &raft(0)).unwrap().condition, "strong (i), factors swapped");
        for n in 0..=4 {
            let v = decide_strong(&path(3), &raft(n)).unwrap();
            if n > 0 {
                assert_eq!(v.condition, "strong (ii)");
            }
            check(&v, &strong(&path(3), &raft(n)));
            let v = decide_strong(&raft(n), &path(3)).unwrap();
            assert!(v.is_1po);
            check(&v, &strong(&raft(n), &path(3)));
        }
        let g = complete(3).disjoint_union(&complete(2));
        let v = decide_strong(&g, &cycle(5)).unwrap();
        assert_eq!(v.condition, "strong (i)");
        check(&v, &strong(&g, &cycle(5)));
    }

    #[test]
    fn strong_with_twins_and_components() {
        // a 2-complete graph with twins on both sides, times a co-chain
        // graph with twins and an R_1 * K_1 component
        let mut two = complete(3).disjoint_union(&complete(2));
        two.add_edge(2, 3);
        two.add_edge(2, 4);
        let two = two.disjoint_union(&path(3));
        let co = raft(1)
            .join(&Graph::new(1))
            .disjoint_union(&lexicographic(&raft(2), &complete(2)));
        for (g, h) in [(&two, &co), (&co, &two)] {
            let v = decide_strong(g, h).unwrap();
            assert!(v.is_1po);
            check(&v, &strong(g, h));
        }
    }

    #[test]
    fn join_examples() {
        let v = decide_join(&complete(1), &path(4)).unwrap();
        assert!(v.is_1po);
        check(&v, &complete(1).join(&path(4)));
        let v = decide_join(&Graph::new(2), &Graph::new(3)).unwrap();
        assert!(!v.is_1po);
        let v = decide_join(&cycle(4), &cycle(4)).unwrap();
        assert_eq!(v.condition, "join (ii)");
        check(&v, &cycle(4).join(&cycle(4)));
        let v = decide_join(&path(4), &complete(2)).unwrap();
        assert_eq!(v.condition, "join (i), factors swapped");
        check(&v, &path(4).join(&complete(2)));
    }

    #[test]
    fn trivial_route() {
        let opts = DecideOptions::default();
        let v = decide_product(ProductKind::Strong, &complete(1), &domino(), &opts).unwrap();
        assert_eq!(v.condition, TRIVIAL_CONDITION);
        assert!(!v.is_1po);
        assert_eq!(v.witness.unwrap().pattern(), "domino");
    }

    #[test]
    fn verdict_json_shape() {
        let v = decide_cartesian(&complete(2), &complete(2)).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["kind"], "cartesian");
        assert_eq!(json["is_1po"], true);
        assert_eq!(json["certificate"]["n"], 4);
        assert!(json.get("witness").is_none());
        let v = decide_direct(&path(4), &path(4)).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["witness"]["type"], "induced_subgraph");
        assert_eq!(json["witness"]["pattern"], "domino");
        let back: Verdict = serde_json::from_value(json).unwrap();
        assert_eq!(back, v);
    }
}
