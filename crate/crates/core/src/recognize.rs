//! Recognition of 1-perfectly orientable graphs: a polynomial 2-SAT reduction
//! and an exhaustive oracle.
//!
//! Variable `e` stands for the edge `edges[e] = (u, v)`, `u < v`, and is true
//! when the edge is directed `u -> v`. For each vertex `u` and each pair of
//! non-adjacent neighbours `v`, `w`, the clause `¬out(u,v) ∨ ¬out(u,w)`
//! forbids both edges leaving `u`. Models are exactly the 1-perfect
//! orientations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::Orientation;

pub const BRUTE_FORCE_EDGE_BUDGET: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Obstruction {
    /// A strongly connected component of the implication graph containing a
    /// literal and its negation. `edges` lists the edges whose variables occur
    /// in it; `variable` is the edge found on both sides.
    Conflict {
        variable: (usize, usize),
        edges: Vec<(usize, usize)>,
    },
    /// Every orientation was ruled out by the exhaustive search.
    Exhausted { nodes: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecognitionResult {
    Yes(Orientation),
    No(Obstruction),
}

impl RecognitionResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, RecognitionResult::Yes(_))
    }

    pub fn certificate(&self) -> Option<&Orientation> {
        match self {
            RecognitionResult::Yes(d) => Some(d),
            RecognitionResult::No(_) => None,
        }
    }

    pub fn into_certificate(self) -> Option<Orientation> {
        match self {
            RecognitionResult::Yes(d) => Some(d),
            RecognitionResult::No(_) => None,
        }
    }
}

/// 2-SAT over variables `0..n`. Literal `2x` is `x`, `2x + 1` is `¬x`.
#[derive(Clone, Debug)]
pub struct TwoSat {
    vars: usize,
    imp: Vec<Vec<usize>>,
}

impl TwoSat {
    pub fn new(vars: usize) -> Self {
        TwoSat {
            vars,
            imp: vec![Vec::new(); 2 * vars],
        }
    }

    pub fn lit(x: usize, value: bool) -> usize {
        2 * x + usize::from(!value)
    }

    /// Adds `a ∨ b`.
    pub fn add_clause(&mut self, a: usize, b: usize) {
        self.imp[a ^ 1].push(b);
        self.imp[b ^ 1].push(a);
    }

    /// Component index of every literal, in topological order of the
    /// condensation (Kosaraju, iterative).
    fn components(&self) -> Vec<usize> {
        let m = self.imp.len();
        let mut order = Vec::with_capacity(m);
        let mut seen = vec![false; m];
        for s in 0..m {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![(s, 0usize)];
            while let Some(&mut (v, ref mut i)) = stack.last_mut() {
                if let Some(&w) = self.imp[v].get(*i) {
                    *i += 1;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push((w, 0));
                    }
                } else {
                    order.push(v);
                    stack.pop();
                }
            }
        }
        let mut rev = vec![Vec::new(); m];
        for (v, outs) in self.imp.iter().enumerate() {
            for &w in outs {
                rev[w].push(v);
            }
        }
        let mut comp = vec![usize::MAX; m];
        let mut next = 0;
        for &s in order.iter().rev() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &rev[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// A satisfying assignment, or a variable `x` together with every
    /// variable in the component containing both `x` and `¬x`.
    pub fn solve(&self) -> std::result::Result<Vec<bool>, (usize, Vec<usize>)> {
        let comp = self.components();
        for x in 0..self.vars {
            if comp[2 * x] == comp[2 * x + 1] {
                let c = comp[2 * x];
                let members: Vec<usize> = (0..self.vars)
                    .filter(|&y| comp[2 * y] == c || comp[2 * y + 1] == c)
                    .collect();
                return Err((x, members));
            }
        }
        Ok((0..self.vars).map(|x| comp[2 * x] > comp[2 * x + 1]).collect())
    }
}

fn edge_index(g: &Graph) -> (Vec<(usize, usize)>, impl Fn(usize, usize) -> usize) {
    let edges = g.edges();
    let n = g.n();
    let mut idx = vec![usize::MAX; n * n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        idx[u * n + v] = e;
        idx[v * n + u] = e;
    }
    (edges, move |u: usize, v: usize| idx[u * n + v])
}

pub fn recognize_2sat(g: &Graph) -> RecognitionResult {
    let (edges, index) = edge_index(g);
    let mut sat = TwoSat::new(edges.len());
    // literal for "u -> v"
    let out_lit = |u: usize, v: usize| TwoSat::lit(index(u, v), u < v);
    for u in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(u).collect();
        for (i, &v) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if !g.has_edge(v, w) {
                    sat.add_clause(out_lit(u, v) ^ 1, out_lit(u, w) ^ 1);
                }
            }
        }
    }
    match sat.solve() {
        Ok(model) => {
            let d = Orientation::from_fn(g.clone(), |u, v| model[index(u, v)]);
            debug_assert!(d.is_one_perfect());
            RecognitionResult::Yes(d)
        }
        Err((x, members)) => RecognitionResult::No(Obstruction::Conflict {
            variable: edges[x],
            edges: members.into_iter().map(|e| edges[e]).collect(),
        }),
    }
}

/// Exhaustive search over edge directions. Bit `k` of the direction vector
/// is 0 when edge `k` points from its smaller to its larger endpoint.
/// Vectors are explored in increasing numeric order, with partial
/// assignments pruned as soon as some out-neighbourhood stops being a clique,
/// so the returned orientation is the numerically smallest 1-perfect one.
pub fn recognize_bruteforce(g: &Graph) -> Result<RecognitionResult> {
    let edges = g.edges();
    if edges.len() > BRUTE_FORCE_EDGE_BUDGET {
        return Err(Error::EdgeBudget {
            edges: edges.len(),
            budget: BRUTE_FORCE_EDGE_BUDGET,
        });
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut bits = vec![false; edges.len()];
    let mut nodes = 0u64;

    fn rec(
        k: usize,
        g: &Graph,
        edges: &[(usize, usize)],
        out: &mut Vec<Vec<usize>>,
        bits: &mut [bool],
        nodes: &mut u64,
    ) -> bool {
        *nodes += 1;
        if k == 0 {
            return true;
        }
        let e = k - 1;
        let (u, v) = edges[e];
        for bit in [false, true] {
            let (t, h) = if bit { (v, u) } else { (u, v) };
            if out[t].iter().all(|&w| g.has_edge(w, h)) {
                out[t].push(h);
                bits[e] = bit;
                if rec(e, g, edges, out, bits, nodes) {
                    return true;
                }
                out[t].pop();
            }
        }
        false
    }

    if rec(edges.len(), g, &edges, &mut out, &mut bits, &mut nodes) {
        let d = Orientation::from_fn(g.clone(), |u, v| {
            let e = edges.binary_search(&(u, v)).expect("edge listed");
            !bits[e]
        });
        Ok(RecognitionResult::Yes(d))
    } else {
        Ok(RecognitionResult::No(Obstruction::Exhausted { nodes }))
    }
}
