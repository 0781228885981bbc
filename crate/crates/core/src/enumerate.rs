//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Order `n` classes come from extending every order `n-1` representative by
//! one vertex with an arbitrary neighbourhood and deduplicating by canonical
//! code. With a hereditary filter (closed under vertex deletion, such as
//! fork-freeness) pruning at each order loses nothing, since every member of
//! the class has a member of order `n-1` below it.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalCode};
use crate::graph::Graph;

/// Canonical representatives for every order `0..=max_order`, grouped by
/// order and sorted by canonical code.
pub fn graphs_up_to_iso(max_order: usize) -> Vec<Vec<Graph>> {
    hereditary_classes(max_order, |_| true)
}

pub fn graphs_of_order(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n).pop().unwrap_or_default()
}

/// As [`graphs_up_to_iso`], keeping only graphs accepted by `keep`, which
/// must be hereditary.
pub fn hereditary_classes<F>(max_order: usize, keep: F) -> Vec<Vec<Graph>>
where
    F: Fn(&Graph) -> bool,
{
    let mut levels = vec![vec![Graph::empty(0)]];
    for n in 1..=max_order {
        let mut seen: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for base in &levels[n - 1] {
            for mask in 0u64..1 << (n - 1) {
                let g = extend_by_vertex(base, mask);
                let (code, perm) = canonical_form(&g);
                if seen.contains_key(&code) || !keep(&g) {
                    continue;
                }
                seen.insert(code, g.permute(&perm));
            }
        }
        levels.push(seen.into_values().collect());
    }
    levels
}

fn extend_by_vertex(base: &Graph, mask: u64) -> Graph {
    let n = base.order();
    let mut edges = base.edge_list();
    edges.extend((0..n).filter(|&u| mask >> u & 1 == 1).map(|u| (u, n)));
    Graph::new(n + 1, &edges).expect("extension stays in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = graphs_up_to_iso(6).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn hereditary_filter_matches_post_filter() {
        let triangle_free = |g: &Graph| {
            g.edges()
                .all(|(u, v)| g.neighbors(u).intersection(g.neighbors(v)).is_empty())
        };
        let pruned = hereditary_classes(6, triangle_free);
        let full = graphs_up_to_iso(6);
        for n in 0..=6 {
            let filtered: Vec<_> = full[n].iter().filter(|g| triangle_free(g)).cloned().collect();
            assert_eq!(pruned[n], filtered);
        }
    }
}
