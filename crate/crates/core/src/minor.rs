//! Induced-minor containment for small patterns.
//!
//! `H` is an induced minor of `G` iff `V(G)` contains disjoint connected
//! branch sets `B_h` (one per vertex of `H`) such that `h ~ h'` exactly when
//! some edge of `G` joins `B_h` and `B_h'`. Vertices outside every branch set
//! are deleted.
//!
//! The search assigns host vertices in BFS order to a branch set or to the
//! deleted set. Adjacent branch sets whose pattern vertices are non-adjacent
//! are rejected immediately; a branch set that can no longer become connected
//! through unassigned vertices, or a pattern edge that can no longer be
//! realised, prunes the subtree. Pattern vertices that are twins of each other
//! are interchangeable, so their branch sets are opened in index order only.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MINOR_HOST_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub branch_sets: Vec<VertexSet>,
    pub deleted: VertexSet,
}

impl MinorWitness {
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.branch_sets.len() != pattern.n() {
            return false;
        }
        let mut owner = vec![usize::MAX; host.n()];
        for (b, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return false;
            }
            for &v in set {
                if v >= host.n() || owner[v] != usize::MAX {
                    return false;
                }
                owner[v] = b;
            }
            let sub = host.induced_by_list(set.as_slice());
            if !sub.is_connected() {
                return false;
            }
        }
        for &v in &self.deleted {
            if v >= host.n() || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = usize::MAX - 1;
        }
        if owner.contains(&usize::MAX) {
            return false;
        }
        let mut touch = vec![vec![false; pattern.n()]; pattern.n()];
        for (u, v) in host.edges() {
            let (a, b) = (owner[u], owner[v]);
            if a < pattern.n() && b < pattern.n() && a != b {
                touch[a][b] = true;
                touch[b][a] = true;
            }
        }
        (0..pattern.n()).all(|a| (a + 1..pattern.n()).all(|b| touch[a][b] == pattern.has_edge(a, b)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorSearch {
    Found(MinorWitness),
    Absent,
    BudgetExhausted,
}

pub fn find_induced_minor(host: &Graph, pattern: &Graph) -> Result<Option<MinorWitness>> {
    match find_induced_minor_bounded(host, pattern, u64::MAX)? {
        MinorSearch::Found(w) => Ok(Some(w)),
        _ => Ok(None),
    }
}

/// Same search, giving up after `node_budget` search nodes.
pub fn find_induced_minor_bounded(
    host: &Graph,
    pattern: &Graph,
    node_budget: u64,
) -> Result<MinorSearch> {
    if host.n() > MINOR_HOST_LIMIT {
        return Err(Error::TooLarge {
            n: host.n(),
            limit: MINOR_HOST_LIMIT,
        });
    }
    if pattern.n() > host.n() {
        return Ok(MinorSearch::Absent);
    }
    if host == pattern {
        return Ok(MinorSearch::Found(MinorWitness {
            branch_sets: (0..host.n()).map(|v| VertexSet::new(vec![v])).collect(),
            deleted: VertexSet::default(),
        }));
    }
    if pattern.n() == 0 {
        return Ok(MinorSearch::Found(MinorWitness {
            branch_sets: Vec::new(),
            deleted: (0..host.n()).collect(),
        }));
    }

    let k = pattern.n();
    let padj: Vec<u64> = (0..k).map(|p| pattern.mask(p)).collect();
    // predecessor in the same twin class (open or closed twins)
    let mut prev_twin = vec![None; k];
    for b in 0..k {
        for a in (0..b).rev() {
            let strip = !((1u64 << a) | (1u64 << b));
            if padj[a] & strip == padj[b] & strip {
                prev_twin[b] = Some(a);
                break;
            }
        }
    }

    let mut search = Search {
        host,
        k,
        padj,
        prev_twin,
        order: bfs_order(host),
        members: vec![0; k],
        unassigned: if host.n() == 64 { u64::MAX } else { (1u64 << host.n()) - 1 },
        deleted: 0,
        nodes: 0,
        budget: node_budget,
    };
    Ok(match search.run(0) {
        Some(true) => MinorSearch::Found(MinorWitness {
            branch_sets: search.members.iter().map(|&m| mask_to_set(m)).collect(),
            deleted: mask_to_set(search.deleted),
        }),
        Some(false) => MinorSearch::Absent,
        None => MinorSearch::BudgetExhausted,
    })
}

fn mask_to_set(mut m: u64) -> VertexSet {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    VertexSet::new(out)
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    host: &'a Graph,
    k: usize,
    padj: Vec<u64>,
    prev_twin: Vec<Option<usize>>,
    order: Vec<usize>,
    members: Vec<u64>,
    unassigned: u64,
    deleted: u64,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn nbhd(&self, set: u64) -> u64 {
        let mut acc = 0;
        let mut m = set;
        while m != 0 {
            acc |= self.host.mask(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        acc
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    fn reach(&self, start: u64, within: u64) -> u64 {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let next = self.nbhd(frontier) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn feasible(&self) -> bool {
        let empty = self.members.iter().filter(|&&m| m == 0).count();
        if empty > self.unassigned.count_ones() as usize {
            return false;
        }
        let mut nb = vec![0u64; self.k];
        for (b, &m) in self.members.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let lowest = m & m.wrapping_neg();
            if self.reach(lowest, m | self.unassigned) & m != m {
                return false;
            }
            nb[b] = self.nbhd(m);
        }
        for a in 0..self.k {
            for b in a + 1..self.k {
                if self.padj[a] >> b & 1 == 0 || self.members[a] == 0 || self.members[b] == 0 {
                    continue;
                }
                let touching = nb[a] & self.members[b] != 0;
                let can_grow = nb[a] & self.unassigned != 0 || nb[b] & self.unassigned != 0;
                if !touching && !can_grow {
                    return false;
                }
            }
        }
        true
    }

    /// `Some(true)` found, `Some(false)` exhausted subtree, `None` out of budget.
    fn run(&mut self, depth: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if depth == self.order.len() {
            return Some(self.members.iter().all(|&m| m != 0));
        }
        let v = self.order[depth];
        let bit = 1u64 << v;
        let vn = self.host.mask(v);
        self.unassigned &= !bit;
        for choice in 0..=self.k {
            if choice < self.k {
                let b = choice;
                if self.members[b] == 0 {
                    if let Some(a) = self.prev_twin[b] {
                        if self.members[a] == 0 {
                            continue;
                        }
                    }
                }
                let conflict = (0..self.k).any(|c| {
                    c != b && self.members[c] & vn != 0 && self.padj[b] >> c & 1 == 0
                });
                if conflict {
                    continue;
                }
                self.members[b] |= bit;
            } else {
                self.deleted |= bit;
            }
            if self.feasible() {
                match self.run(depth + 1) {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
            if choice < self.k {
                self.members[choice] &= !bit;
            } else {
                self.deleted &= !bit;
            }
        }
        self.unassigned |= bit;
        Some(false)
    }
}
