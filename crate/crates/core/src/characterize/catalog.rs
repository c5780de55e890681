//! Small graphs known not to be 1-perfectly orientable.

use crate::families::{complete_bipartite, cycle, domino};
use crate::graph::Graph;
use crate::recognize::recognize_bruteforce;

/// `K_{2,3}`, the domino and the complement of `C_6`, in the order used when
/// searching for witnesses.
pub fn forbidden_catalog() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2,3", complete_bipartite(2, 3)),
        ("domino", domino()),
        ("co-C6", cycle(6).complement()),
    ]
}

pub fn catalog_graph(name: &str) -> Option<Graph> {
    forbidden_catalog()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, g)| g)
}

/// Pairs each entry with the exhaustive verdict; every entry should report
/// `false` (not 1-p.o.).
pub fn catalog_self_check(catalog: &[(&'static str, Graph)]) -> Vec<(&'static str, bool)> {
    catalog
        .iter()
        .map(|(name, g)| {
            let yes = recognize_bruteforce(g).map(|r| r.is_yes()).unwrap_or(true);
            (*name, yes)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_entries_are_not_one_po() {
        let cat = forbidden_catalog();
        assert_eq!(cat.len(), 3);
        for (name, yes) in catalog_self_check(&cat) {
            assert!(!yes, "{name}");
        }
        assert!(catalog_graph("domino").is_some());
        assert!(catalog_graph("F2").is_none());
    }
}
