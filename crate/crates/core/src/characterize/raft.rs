//! An explicit 1-perfect orientation of `P_3 ⊠ R_n`.
//!
//! With `P_3 = u_1 u_2 u_3` (vertices 0, 1, 2) and the raft labeling of
//! [`raft`], the product vertex `(u_k, r)` is `k * (2n + 2) + r`. Removing the
//! four simplicial vertices `(u_1, x_0)`, `(u_3, x_0)`, `(u_1, y_0)`,
//! `(u_3, y_0)` leaves two apexes `a = (u_2, x_0)`, `b = (u_2, y_0)` and six
//! cliques of size `n`:
//!
//! * `A_j = {(u_j, x_i) : 1 <= i <= n}` for `j = 1, 2, 3`,
//! * `B_j = {(u_{4-j}, y_i) : 1 <= i <= n}` for `j = 1, 2, 3`,
//!
//! each ordered by `i`. The core is oriented by fixed rules between these
//! parts; the simplicial vertices are then attached pointing into their
//! neighbourhoods.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::orientation::{extend_simplicial, Orientation};
use crate::products::{strong, PairIndex};
use crate::families::path;
use crate::structure::{raft, raft_join_k1_into_raft};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P3RaftLayout {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    /// `A_1, A_2, A_3`, each listed by position `1..=n`.
    pub a_cliques: [Vec<usize>; 3],
    /// `B_1, B_2, B_3`, each listed by position `1..=n`.
    pub b_cliques: [Vec<usize>; 3],
    /// `(u_1, x_0)`, `(u_3, x_0)`, `(u_1, y_0)`, `(u_3, y_0)`.
    pub simplicial: [usize; 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    ApexA,
    ApexB,
    A(usize),
    B(usize),
}

#[derive(Clone, Copy, Debug)]
struct Role {
    part: Part,
    pos: usize,
}

/// Cross arcs between the `A` and `B` cliques, as `(from, to)`.
const CROSS: [(Part, Part); 7] = [
    (Part::B(3), Part::A(1)),
    (Part::A(3), Part::B(1)),
    (Part::B(2), Part::A(1)),
    (Part::A(2), Part::B(1)),
    (Part::B(3), Part::A(2)),
    (Part::A(3), Part::B(2)),
    (Part::A(2), Part::B(2)),
];

/// Whether the core edge `x y` is directed `x -> y`.
fn forward(x: Role, y: Role) -> bool {
    use Part::*;
    match (x.part, y.part) {
        (p, q) if p == q => x.pos < y.pos,
        (ApexA, A(j)) | (ApexB, B(j)) => j != 1,
        (A(j), ApexA) | (B(j), ApexB) => j == 1,
        (A(1), A(2)) | (B(1), B(2)) => true,
        (A(2), A(1)) | (B(2), B(1)) => false,
        (A(2), A(3)) | (B(2), B(3)) => x.pos < y.pos,
        (A(3), A(2)) | (B(3), B(2)) => y.pos >= x.pos,
        (p, q) => {
            if CROSS.contains(&(p, q)) {
                true
            } else {
                debug_assert!(CROSS.contains(&(q, p)), "no rule for {p:?} {q:?}");
                false
            }
        }
    }
}

impl P3RaftLayout {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Precondition("the layout needs n >= 1".into()));
        }
        let idx = PairIndex { g_n: 3, h_n: 2 * n + 2 };
        let x = |i: usize| i;
        let y = |j: usize| n + 1 + j;
        let clique = |k: usize, f: &dyn Fn(usize) -> usize| -> Vec<usize> {
            (1..=n).map(|i| idx.index(k, f(i))).collect()
        };
        Ok(P3RaftLayout {
            n,
            a: idx.index(1, x(0)),
            b: idx.index(1, y(0)),
            a_cliques: [clique(0, &x), clique(1, &x), clique(2, &x)],
            b_cliques: [clique(2, &y), clique(1, &y), clique(0, &y)],
            simplicial: [
                idx.index(0, x(0)),
                idx.index(2, x(0)),
                idx.index(0, y(0)),
                idx.index(2, y(0)),
            ],
        })
    }

    /// The core vertices: `a`, `b`, then `A_1..A_3`, `B_1..B_3`.
    pub fn core(&self) -> Vec<usize> {
        let mut v = vec![self.a, self.b];
        for c in self.a_cliques.iter().chain(&self.b_cliques) {
            v.extend(c);
        }
        v
    }

    fn roles(&self) -> Vec<Option<Role>> {
        let mut r = vec![None; 3 * (2 * self.n + 2)];
        r[self.a] = Some(Role { part: Part::ApexA, pos: 0 });
        r[self.b] = Some(Role { part: Part::ApexB, pos: 0 });
        for j in 0..3 {
            for (i, &v) in self.a_cliques[j].iter().enumerate() {
                r[v] = Some(Role { part: Part::A(j + 1), pos: i + 1 });
            }
            for (i, &v) in self.b_cliques[j].iter().enumerate() {
                r[v] = Some(Role { part: Part::B(j + 1), pos: i + 1 });
            }
        }
        r
    }

    /// The out-neighbourhood each core vertex should receive, computed from
    /// the part structure alone: `N+(a) = A_2 ∪ A_3`; for position `i`,
    /// `A_1`: `{a} ∪ A_1[>i] ∪ A_2`, `A_2`: `(A_2 ∪ A_3)[>i] ∪ (B_1 ∪ B_2)[>n-i]`,
    /// `A_3`: `A_2[>=i] ∪ A_3[>i] ∪ (B_1 ∪ B_2)[>n-i]`, and symmetrically for
    /// `b`, `B_1`, `B_3`; `B_2`: `A_1[>n-i] ∪ (B_2 ∪ B_3)[>i]`. `None` for
    /// the simplicial vertices.
    pub fn predicted_out_neighborhood(&self, v: usize) -> Option<Vec<usize>> {
        let n = self.n;
        let role = self.roles().get(v).copied().flatten()?;
        let i = role.pos;
        let (a, b) = (&self.a_cliques, &self.b_cliques);
        let after = |c: &Vec<usize>, k: usize| c[k.min(n)..].to_vec();
        let mut out: Vec<usize> = match role.part {
            Part::ApexA => [after(&a[1], 0), after(&a[2], 0)].concat(),
            Part::ApexB => [after(&b[1], 0), after(&b[2], 0)].concat(),
            Part::A(1) => [vec![self.a], after(&a[0], i), after(&a[1], 0)].concat(),
            Part::B(1) => [vec![self.b], after(&b[0], i), after(&b[1], 0)].concat(),
            Part::A(2) => [
                after(&a[1], i),
                after(&a[2], i),
                after(&b[0], n - i),
                after(&b[1], n - i),
            ]
            .concat(),
            Part::A(3) => [
                after(&a[1], i - 1),
                after(&a[2], i),
                after(&b[0], n - i),
                after(&b[1], n - i),
            ]
            .concat(),
            Part::B(3) => [
                after(&b[1], i - 1),
                after(&b[2], i),
                after(&a[0], n - i),
                after(&a[1], n - i),
            ]
            .concat(),
            Part::B(2) => [after(&a[0], n - i), after(&b[1], i), after(&b[2], i)].concat(),
            _ => unreachable!(),
        };
        out.sort_unstable();
        Some(out)
    }
}

/// A 1-perfect orientation of `P_3 ⊠ R_n` in the product labeling
/// (`P_3` first). For `n = 0` it is the restriction of the `n = 2` orientation
/// to `x_0` and `y_2`.
pub fn orient_p3_strong_raft(n: usize) -> Result<Orientation> {
    if n == 0 {
        let emb = raft_join_k1_into_raft(0);
        return Ok(restrict_along(&orient_p3_strong_raft(2)?, 2, &emb[..2]));
    }
    let layout = P3RaftLayout::new(n)?;
    let product = strong(&path(3), &raft(n));
    let roles = layout.roles();
    let mut order = layout.core();
    let core = product.induced_by_list(&order);
    let mut d = Orientation::from_fn(core, |i, j| {
        forward(roles[order[i]].unwrap(), roles[order[j]].unwrap())
    });
    if !d.is_one_perfect() {
        return Err(Error::Inconsistent(format!(
            "core orientation fails at {:?}",
            d.violations()
        )));
    }
    for &s in &layout.simplicial {
        let clique: VertexSet = order
            .iter()
            .enumerate()
            .filter(|&(_, &w)| product.has_edge(s, w))
            .map(|(i, _)| i)
            .collect();
        d = extend_simplicial(&d, &clique)?;
        order.push(s);
    }
    let d = d.relabel(&order);
    debug_assert_eq!(d.base(), &product);
    Ok(d)
}

/// Restricts an orientation of `P_3 ⊠ R_m` to `P_3 ⊠ S`, where `emb[s]` is
/// the raft vertex of `R_m` standing for vertex `s` of `S`.
fn restrict_along(d: &Orientation, m: usize, emb: &[usize]) -> Orientation {
    let big = PairIndex { g_n: 3, h_n: 2 * m + 2 };
    let vs: Vec<usize> = (0..3)
        .flat_map(|k| emb.iter().map(move |&r| big.index(k, r)))
        .collect();
    d.restrict(&vs)
}

/// A 1-perfect orientation of `P_3 ⊠ (R_n * K_1)`, obtained from `R_{n+2}`.
pub fn orient_p3_strong_raft_join_k1(n: usize) -> Result<Orientation> {
    let d = orient_p3_strong_raft(n + 2)?;
    Ok(restrict_along(&d, n + 2, &raft_join_k1_into_raft(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete;
    use crate::graph::Graph;

    #[test]
    fn layout_partitions_vertices() {
        for n in 1..=6 {
            let l = P3RaftLayout::new(n).unwrap();
            let mut all = l.core();
            all.extend(l.simplicial);
            all.sort_unstable();
            assert_eq!(all, (0..3 * (2 * n + 2)).collect::<Vec<_>>());
            let product = strong(&path(3), &raft(n));
            for c in l.a_cliques.iter().chain(&l.b_cliques) {
                assert!(product.is_clique(c));
                // closed neighbourhoods grow along each clique
                for w in c.windows(2) {
                    let nb = |v: usize| -> Vec<usize> {
                        let mut s: Vec<usize> = product.neighbors(v).collect();
                        s.push(v);
                        s
                    };
                    let later = nb(w[1]);
                    assert!(nb(w[0]).iter().all(|v| later.contains(v)));
                }
            }
            for &s in &l.simplicial {
                let nb: Vec<usize> = product.neighbors(s).collect();
                assert!(product.is_clique(&nb));
            }
        }
        assert!(P3RaftLayout::new(0).is_err());
    }

    #[test]
    fn orientation_is_one_perfect() {
        for n in 0..=12 {
            let d = orient_p3_strong_raft(n).unwrap();
            assert_eq!(d.base(), &strong(&path(3), &raft(n)));
            assert!(d.is_one_perfect(), "n = {n}");
        }
        for n in 0..=8 {
            let d = orient_p3_strong_raft_join_k1(n).unwrap();
            assert_eq!(d.base(), &strong(&path(3), &raft(n).join(&Graph::new(1))));
            assert!(d.is_one_perfect());
        }
    }

    #[test]
    fn out_neighborhoods_match_prediction() {
        for n in 1..=8 {
            let l = P3RaftLayout::new(n).unwrap();
            let d = orient_p3_strong_raft(n).unwrap();
            for v in l.core() {
                assert_eq!(Some(d.out_neighbors(v)), l.predicted_out_neighborhood(v), "n={n} v={v}");
            }
            let mut apex = [l.a_cliques[1].clone(), l.a_cliques[2].clone()].concat();
            apex.sort_unstable();
            assert_eq!(d.out_neighbors(l.a), apex);
            for &s in &l.simplicial {
                assert_eq!(l.predicted_out_neighborhood(s), None);
                assert_eq!(d.in_neighbors(s), Vec::<usize>::new());
            }
        }
    }

    #[test]
    fn small_case_is_p3_strong_p4() {
        let d = orient_p3_strong_raft(1).unwrap();
        assert_eq!(d.n(), 12);
        assert!(crate::search::is_isomorphic(d.base(), &strong(&path(3), &path(4))));
        assert!(!crate::search::is_isomorphic(d.base(), &complete(12)));
    }
}
