//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Adjacency is stored as one 64-bit row per vertex, so a [`Graph`] holds at
//! most [`MAX_ORDER`] vertices. Every algorithm in this crate is exponential
//! in the worst case and meant for desk-scale instances, well below that cap.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// A set of vertex labels, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Largest member plus one, or zero for the empty set.
    pub fn bound(self) -> usize {
        MAX_ORDER - self.0.leading_zeros() as usize
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Repeated pairs (in either orientation)
    /// are merged; self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge { order: n });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    pair: (u, v),
                    order: n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { order: n, adj })
    }

    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph {
            order: n,
            adj: vec![0; n],
        }
    }

    /// Builds from adjacency rows. Callers guarantee symmetry and an empty
    /// diagonal; only checked in debug builds.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Graph {
        let g = Graph {
            order: adj.len(),
            adj,
        };
        debug_assert!(g.is_well_formed());
        g
    }

    fn is_well_formed(&self) -> bool {
        self.order <= MAX_ORDER
            && (0..self.order).all(|u| {
                self.adj[u] >> u & 1 == 0
                    && self.adj[u] & !VertexSet::full(self.order).bits() == 0
                    && self.neighbors(u).iter().all(|v| self.adj[v] >> u & 1 == 1)
            })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// `N(v) ∪ {v}`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        if s.bound() > self.order {
            let v = s.iter().last().unwrap_or_default();
            return Err(GraphError::MemberOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order {
            return Err(GraphError::MemberOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        Ok(())
    }

    /// The subgraph induced by `s`, relabelled densely in increasing label
    /// order. The returned map sends each new label to its original label.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(s)?;
        Ok(self.induced(s))
    }

    pub(crate) fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let mut rows = vec![0u64; map.len()];
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    rows[i] |= 1 << j;
                }
            }
        }
        (Graph::from_rows(rows), map)
    }

    /// `G - s`, relabelled densely.
    pub fn delete(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(s)?;
        Ok(self.induced(self.vertices().difference(s)))
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().bits();
        let rows = (0..self.order)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph::from_rows(rows)
    }

    /// Adds `copies` new vertices (labels `n..n+copies`), each adjacent to
    /// exactly `N(v)`.
    pub fn duplicate_vertex(&self, v: usize, copies: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        if copies == 0 {
            return Err(GraphError::ZeroCopies);
        }
        let n = self.order + copies;
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge { order: n });
        }
        let mut rows = self.adj.clone();
        rows.resize(n, 0);
        let nv = self.adj[v];
        for c in self.order..n {
            rows[c] = nv;
            for u in VertexSet(nv) {
                rows[u] |= 1 << c;
            }
        }
        Ok(Graph::from_rows(rows))
    }

    pub fn is_independent_set(&self, s: VertexSet) -> Result<bool, GraphError> {
        self.check_set(s)?;
        Ok(self.is_independent(s))
    }

    pub(crate) fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    /// Vertex sets of the connected components, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let comp = self.component_of(start);
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next.union(self.neighbors(u));
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.component_of(0) == self.vertices()
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut rows = vec![0u64; self.order];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Graph::from_rows(rows)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.order, self.edge_list())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            order: self.order,
            edges: self.edge_list(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        Graph::new(repr.order, &repr.edges).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = vec![];
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_examples() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));

        let c5 = cycle(5);
        assert_eq!(c5.size(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));

        let k4 = complete(4);
        assert_eq!(k4.size(), 6);
        assert!((0..4).all(|v| k4.degree(v) == 3));
    }

    #[test]
    fn build_rejects_bad_pairs() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange {
                pair: (0, 3),
                order: 3
            })
        );
        assert_eq!(
            Graph::new(3, &[(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
        assert!(matches!(
            Graph::new(65, &[]),
            Err(GraphError::TooLarge { .. })
        ));
    }

    #[test]
    fn duplicate_pairs_merge() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_list(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_examples() {
        let k4 = complete(4);
        let (k3, map) = k4.induced_subgraph(VertexSet::from_iter([0, 2, 3])).unwrap();
        assert_eq!(k3, complete(3));
        assert_eq!(map, vec![0, 2, 3]);

        let (p3, _) = cycle(5)
            .induced_subgraph(VertexSet::from_iter([0, 1, 2]))
            .unwrap();
        assert_eq!(p3.edge_list(), vec![(0, 1), (1, 2)]);

        assert!(k4.induced_subgraph(VertexSet::singleton(4)).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(4).complement(), Graph::empty(4));
        assert_eq!(Graph::empty(4).complement(), complete(4));
    }

    #[test]
    fn duplicate_examples() {
        let g = cycle(5).duplicate_vertex(0, 1).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.degree(5), 2);
        assert_eq!(g.neighbors(5), g.neighbors(0));
        assert!(!g.has_edge(0, 5));

        let diamond = complete(3).duplicate_vertex(0, 1).unwrap();
        assert_eq!(diamond.size(), 5);
        assert!(!diamond.has_edge(0, 3));

        assert_eq!(cycle(5).duplicate_vertex(5, 1), Err(GraphError::MemberOutOfRange { vertex: 5, order: 5 }));
        assert_eq!(cycle(5).duplicate_vertex(0, 0), Err(GraphError::ZeroCopies));
    }

    #[test]
    fn independence_examples() {
        let c5 = cycle(5);
        assert!(c5.is_independent_set(VertexSet::from_iter([0, 2])).unwrap());
        let k4 = complete(4);
        for (u, v) in k4.edges() {
            assert!(!k4.is_independent_set(VertexSet::from_iter([u, v])).unwrap());
        }
        assert!(c5.is_independent_set(VertexSet::singleton(7)).is_err());
    }

    #[test]
    fn components_of_disjoint_union() {
        let g = Graph::new(6, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let comps: Vec<_> = g.components().into_iter().map(|c| c.to_vec()).collect();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3, 4], vec![5]]);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = vec![];
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph(12)) {
            prop_assert_eq!(g.complement().complement(), g.clone());
            let n = g.order();
            prop_assert_eq!(g.size() + g.complement().size(), n * (n - 1) / 2);
        }

        #[test]
        fn adjacency_is_symmetric(g in arb_graph(12)) {
            for u in 0..g.order() {
                prop_assert!(!g.has_edge(u, u));
                for v in g.neighbors(u) {
                    prop_assert!(g.has_edge(v, u));
                }
            }
        }

        #[test]
        fn induced_on_everything_is_identity(g in arb_graph(12)) {
            let (h, map) = g.induced_subgraph(g.vertices()).unwrap();
            prop_assert_eq!(h, g.clone());
            prop_assert_eq!(map, (0..g.order()).collect::<Vec<_>>());
        }

        #[test]
        fn duplication_counts(g in arb_graph(10), v in 0usize..10, k in 1usize..4) {
            let v = v % g.order();
            let h = g.duplicate_vertex(v, k).unwrap();
            prop_assert_eq!(h.order(), g.order() + k);
            prop_assert_eq!(h.size(), g.size() + k * g.degree(v));
        }
    }
}
