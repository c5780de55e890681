//! Named small graphs and standard families used throughout the crate.

use crate::graph::Graph;

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// `nK_1`.
pub fn edgeless(n: usize) -> Graph {
    Graph::new(n)
}

/// `P_n` on vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// `K_{p,q}` with the `p` side first.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    Graph::new(p).join(&Graph::new(q))
}

/// `K_{1,3}`, centre 0.
pub fn claw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
}

/// Triangle `0 1 2` with pendant edges `0-3` and `1-4`.
pub fn bull() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]).unwrap()
}

/// Two squares sharing an edge: `P_3 □ K_2`.
pub fn domino() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
}

/// `P_4 * K_1`; the apex is vertex 4.
pub fn gem() -> Graph {
    path(4).join(&Graph::new(1))
}

/// Looks up a fixture by name: `P4`, `claw`, `bull`, `domino`, `gem`,
/// `K2,3`, `raft:n`, `cycle:n`, `path:n`, `complete:n`, `edgeless:n`,
/// `Kp,q`, and shorthands `Pn`, `Cn`, `Kn`.
pub fn named(name: &str) -> Option<Graph> {
    let num = |s: &str| s.parse::<usize>().ok();
    match name {
        "claw" => return Some(claw()),
        "bull" => return Some(bull()),
        "domino" => return Some(domino()),
        "gem" => return Some(gem()),
        "co-C6" | "coC6" => return Some(cycle(6).complement()),
        _ => {}
    }
    if let Some((kind, arg)) = name.split_once(':') {
        let k = num(arg)?;
        return match kind {
            "raft" => Some(crate::structure::raft(k)),
            "cycle" if k >= 3 => Some(cycle(k)),
            "path" => Some(path(k)),
            "complete" => Some(complete(k)),
            "edgeless" => Some(edgeless(k)),
            _ => None,
        };
    }
    if let Some(rest) = name.strip_prefix('K') {
        if let Some((p, q)) = rest.split_once(',') {
            return Some(complete_bipartite(num(p)?, num(q)?));
        }
        return num(rest).map(complete);
    }
    if let Some(rest) = name.strip_prefix('P') {
        return num(rest).map(path);
    }
    if let Some(rest) = name.strip_prefix('C') {
        return num(rest).filter(|&k| k >= 3).map(cycle);
    }
    None
}
