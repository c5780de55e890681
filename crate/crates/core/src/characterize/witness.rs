//! Forbidden-structure witnesses for graphs that are not 1-p.o.

use serde::{Deserialize, Serialize};

use super::catalog::{catalog_graph, forbidden_catalog};
use crate::families::complete_bipartite;
use crate::graph::{Graph, VertexSet};
use crate::minor::{find_induced_minor_bounded, MinorSearch, MinorWitness, MINOR_HOST_LIMIT};
use crate::search::{find_induced_subgraph, Embedding};

/// Default node budget for the induced-minor fallback.
pub const DEFAULT_MINOR_BUDGET: u64 = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    InducedSubgraph {
        pattern: String,
        mapping: Vec<usize>,
    },
    InducedMinor {
        pattern: String,
        branch_sets: Vec<VertexSet>,
        deleted: VertexSet,
    },
}

impl Witness {
    pub fn pattern(&self) -> &str {
        match self {
            Witness::InducedSubgraph { pattern, .. } | Witness::InducedMinor { pattern, .. } => pattern,
        }
    }

    pub fn pattern_graph(&self) -> Option<Graph> {
        catalog_graph(self.pattern())
    }

    /// Re-checks the witness against `host`.
    pub fn verify(&self, host: &Graph) -> bool {
        let Some(p) = self.pattern_graph() else {
            return false;
        };
        match self {
            Witness::InducedSubgraph { mapping, .. } => Embedding {
                mapping: mapping.clone(),
            }
            .verify(host, &p),
            Witness::InducedMinor {
                branch_sets,
                deleted,
                ..
            } => MinorWitness {
                branch_sets: branch_sets.clone(),
                deleted: deleted.clone(),
            }
            .verify(host, &p),
        }
    }
}

/// Looks for a catalog graph as an induced subgraph of `g`, then for `K_{2,3}`
/// as an induced minor within `minor_budget` search nodes.
pub fn find_witness(g: &Graph, minor_budget: u64) -> Option<Witness> {
    for (name, p) in forbidden_catalog() {
        if let Some(e) = find_induced_subgraph(g, &p) {
            return Some(Witness::InducedSubgraph {
                pattern: name.to_string(),
                mapping: e.mapping,
            });
        }
    }
    find_k23_minor(g, minor_budget)
}

pub fn find_k23_minor(g: &Graph, budget: u64) -> Option<Witness> {
    if g.n() > MINOR_HOST_LIMIT {
        return None;
    }
    match find_induced_minor_bounded(g, &complete_bipartite(2, 3), budget) {
        Ok(MinorSearch::Found(w)) => Some(Witness::InducedMinor {
            pattern: "K2,3".to_string(),
            branch_sets: w.branch_sets,
            deleted: w.deleted,
        }),
        _ => None,
    }
}
