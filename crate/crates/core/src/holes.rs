//! Induced odd cycles and the structure around a five-hole.
//!
//! Parts are 0-based: with the hole `h[0..5]`, part `i` is the set of common
//! neighbours of `h[i+2]` and `h[i+3]` (indices mod 5). Its plus half is the
//! part of it adjacent to `h[i]` as well; the minus half is the rest.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum HoleError {
    #[error("a cycle needs at least 3 vertices, got {len}")]
    TooShort { len: usize },
    #[error("expected a hole of length {expected}, got {len}")]
    WrongLength { expected: usize, len: usize },
    #[error("vertex {vertex} is not in the graph")]
    OutOfRange { vertex: usize },
    #[error("vertex {vertex} repeats")]
    Repeated { vertex: usize },
    #[error("consecutive vertices {0:?} are not adjacent")]
    MissingEdge((usize, usize)),
    #[error("chord {0:?}")]
    Chord((usize, usize)),
}

/// An induced cycle, stored with its least vertex first and its second
/// vertex smaller than its last.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hole(Vec<usize>);

impl Hole {
    /// Checks that `cycle` is an induced cycle of `g` and normalizes it.
    pub fn new(g: &Graph, cycle: &[usize]) -> Result<Hole, HoleError> {
        let len = cycle.len();
        if len < 3 {
            return Err(HoleError::TooShort { len });
        }
        let mut seen = VertexSet::EMPTY;
        for &v in cycle {
            if v >= g.order() {
                return Err(HoleError::OutOfRange { vertex: v });
            }
            if seen.contains(v) {
                return Err(HoleError::Repeated { vertex: v });
            }
            seen.insert(v);
        }
        for i in 0..len {
            for j in i + 1..len {
                let (a, b) = (cycle[i], cycle[j]);
                let consecutive = j == i + 1 || (i == 0 && j == len - 1);
                match (consecutive, g.has_edge(a, b)) {
                    (true, false) => return Err(HoleError::MissingEdge((a, b))),
                    (false, true) => return Err(HoleError::Chord((a, b))),
                    _ => {}
                }
            }
        }
        Ok(Hole::normalized(cycle))
    }

    fn normalized(cycle: &[usize]) -> Hole {
        let len = cycle.len();
        let start = (0..len).min_by_key(|&i| cycle[i]).unwrap();
        let fwd = cycle[(start + 1) % len] < cycle[(start + len - 1) % len];
        Hole(
            (0..len)
                .map(|k| {
                    let i = if fwd { start + k } else { start + len - k };
                    cycle[i % len]
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Vertex at position `i`, taken mod the length.
    pub fn at(&self, i: isize) -> usize {
        self.0[i.rem_euclid(self.0.len() as isize) as usize]
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    fn as_five(&self) -> Result<[usize; 5], HoleError> {
        self.0.as_slice().try_into().map_err(|_| HoleError::WrongLength {
            expected: 5,
            len: self.len(),
        })
    }
}

/// All induced odd cycles with length in `min_len..=max_len` (`None` means
/// no upper bound), each once, sorted.
///
/// Paths are grown from their least vertex, never touching a vertex adjacent
/// to an interior vertex of the path, so every closure is chordless.
pub fn enumerate_induced_odd_cycles(g: &Graph, min_len: usize, max_len: Option<usize>) -> Vec<Hole> {
    let max_len = max_len.unwrap_or(g.order()).min(g.order());
    let mut out = Vec::new();
    if min_len > max_len {
        return out;
    }
    for a in 0..g.order() {
        let below = VertexSet::full(a + 1);
        let mut path = vec![a];
        for p1 in g.neighbors(a).difference(below) {
            path.push(p1);
            extend(g, &mut path, below, min_len.max(3), max_len, &mut out);
            path.pop();
        }
    }
    out.sort();
    out
}

/// `blocked` holds the vertices no later path vertex may be or touch, apart
/// from the anchor whose neighbours close the cycle.
fn extend(
    g: &Graph,
    path: &mut Vec<usize>,
    blocked: VertexSet,
    min_len: usize,
    max_len: usize,
    out: &mut Vec<Hole>,
) {
    let a = path[0];
    let last = *path.last().unwrap();
    let len = path.len() + 1;
    if len > max_len {
        return;
    }
    for x in g.neighbors(last).difference(blocked) {
        if path.contains(&x) {
            continue;
        }
        if g.has_edge(x, a) {
            if len % 2 == 1 && len >= min_len && path[1] < x {
                let mut cycle = path.clone();
                cycle.push(x);
                out.push(Hole(cycle));
            }
        } else if len < max_len {
            let interior = if path.len() >= 2 { g.closed_neighbors(last) } else { VertexSet::EMPTY };
            path.push(x);
            extend(g, path, blocked.union(interior), min_len, max_len, out);
            path.pop();
        }
    }
}

/// Induced odd cycles of length at least 5.
pub fn odd_holes(g: &Graph) -> Vec<Hole> {
    enumerate_induced_odd_cycles(g, 5, None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StarViolation {
    /// A vertex of the hole's component with no neighbour on the hole.
    Undominated { vertex: usize },
    /// A vertex whose neighbours on the hole (by position) are neither two
    /// consecutive nor three nonconsecutive.
    BadAttachment { vertex: usize, positions: Vec<usize> },
}

impl StarViolation {
    pub fn vertex(&self) -> usize {
        match *self {
            StarViolation::Undominated { vertex } | StarViolation::BadAttachment { vertex, .. } => vertex,
        }
    }
}

/// Positions on the five-hole adjacent to `v`, as a 5-bit mask.
fn attachment(g: &Graph, hole: &[usize; 5], v: usize) -> u8 {
    (0..5).filter(|&i| g.has_edge(v, hole[i])).fold(0, |m, i| m | 1 << i)
}

/// Part index and plus flag for an attachment mask, if it is well formed.
fn classify(mask: u8) -> Option<(usize, bool)> {
    (0..5).find_map(|i| {
        let pair = 1 << ((i + 2) % 5) | 1 << ((i + 3) % 5);
        if mask == pair {
            Some((i, false))
        } else if mask == pair | 1 << i {
            Some((i, true))
        } else {
            None
        }
    })
}

fn positions(mask: u8) -> Vec<usize> {
    (0..5).filter(|i| mask >> i & 1 == 1).collect()
}

/// The first vertex of the hole's component that breaks property (⋆) or the
/// domination requirement, or `None` if there is none.
pub fn star_violation(g: &Graph, hole: &Hole) -> Result<Option<StarViolation>, HoleError> {
    let h = hole.as_five()?;
    Hole::new(g, &h)?;
    let outside = g.component_of(h[0]).difference(hole.vertex_set());
    for v in outside {
        let mask = attachment(g, &h, v);
        if mask == 0 {
            return Ok(Some(StarViolation::Undominated { vertex: v }));
        }
        if classify(mask).is_none() {
            return Ok(Some(StarViolation::BadAttachment {
                vertex: v,
                positions: positions(mask),
            }));
        }
    }
    Ok(None)
}

pub fn satisfies_star(g: &Graph, hole: &Hole) -> Result<bool, HoleError> {
    star_violation(g, hole).map(|v| v.is_none())
}

/// The partition of a five-hole's component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HolePartition {
    pub hole: [usize; 5],
    pub component: VertexSet,
    pub plus: [VertexSet; 5],
    pub minus: [VertexSet; 5],
}

impl HolePartition {
    pub fn part(&self, i: isize) -> VertexSet {
        let i = i.rem_euclid(5) as usize;
        self.plus[i].union(self.minus[i])
    }

    pub fn plus(&self, i: isize) -> VertexSet {
        self.plus[i.rem_euclid(5) as usize]
    }

    pub fn minus(&self, i: isize) -> VertexSet {
        self.minus[i.rem_euclid(5) as usize]
    }

    pub fn v(&self, i: isize) -> usize {
        self.hole[i.rem_euclid(5) as usize]
    }

    /// The same partition with the hole read as `h[shift], h[shift±1], ...`.
    pub fn renumbered(&self, shift: usize, reflect: bool) -> HolePartition {
        let idx = |k: usize| {
            if reflect {
                (shift + 5 - k) % 5
            } else {
                (shift + k) % 5
            }
        };
        // Under reflection the part opposite position k maps to the part
        // opposite the image of k, which is the same formula.
        HolePartition {
            hole: std::array::from_fn(|k| self.hole[idx(k)]),
            component: self.component,
            plus: std::array::from_fn(|k| self.plus[idx(k)]),
            minus: std::array::from_fn(|k| self.minus[idx(k)]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum PartitionError {
    #[error(transparent)]
    Hole(#[from] HoleError),
    #[error("vertex {vertex} has hole neighbours at positions {positions:?}")]
    Unclassified { vertex: usize, positions: Vec<usize> },
    #[error("minus half of part {part} has {} vertices", vertices.len())]
    MinusTooLarge { part: usize, vertices: Vec<usize> },
    #[error("part {part} contains the edge {edge:?}")]
    PartNotIndependent { part: usize, edge: (usize, usize) },
}

/// Partitions the component of a five-hole, checking every invariant.
pub fn hole_partition(g: &Graph, hole: &Hole) -> Result<HolePartition, PartitionError> {
    let h = hole.as_five()?;
    Hole::new(g, &h)?;
    let component = g.component_of(h[0]);
    let mut plus = [VertexSet::EMPTY; 5];
    let mut minus = [VertexSet::EMPTY; 5];
    for v in component.difference(hole.vertex_set()) {
        let mask = attachment(g, &h, v);
        match classify(mask) {
            Some((i, true)) => plus[i].insert(v),
            Some((i, false)) => minus[i].insert(v),
            None => {
                return Err(PartitionError::Unclassified {
                    vertex: v,
                    positions: positions(mask),
                })
            }
        }
    }
    for i in 0..5 {
        if minus[i].len() > 1 {
            return Err(PartitionError::MinusTooLarge {
                part: i,
                vertices: minus[i].to_vec(),
            });
        }
        let part = plus[i].union(minus[i]);
        for u in part {
            if let Some(w) = g.neighbors(u).intersection(part).first() {
                return Err(PartitionError::PartNotIndependent {
                    part: i,
                    edge: (u.min(w), u.max(w)),
                });
            }
        }
    }
    Ok(HolePartition {
        hole: h,
        component,
        plus,
        minus,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// Part `i` complete to parts `i±2`.
    CompleteToFar,
    /// Part `i` complete to the minus halves of parts `i±1`.
    CompleteToNearMinus,
    /// Minus halves of parts `i+1`, `i+2` complete, and of `i-1`, `i-2`.
    NearMinusComplete,
    /// One of parts `i+2`, `i-2` is empty.
    OneFarEmpty,
    /// Each plus vertex of part `i` misses at most one plus vertex of each
    /// neighbouring part.
    FewPlusNonNeighbors,
}

pub const CLAUSES: [Clause; 5] = [
    Clause::CompleteToFar,
    Clause::CompleteToNearMinus,
    Clause::NearMinusComplete,
    Clause::OneFarEmpty,
    Clause::FewPlusNonNeighbors,
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseCheck {
    pub part: usize,
    pub clause: Clause,
    /// Offending vertices when the clause fails.
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub checks: Vec<ClauseCheck>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.witness.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClauseCheck> {
        self.checks.iter().filter(|c| c.witness.is_some())
    }
}

fn missing_edge(g: &Graph, a: VertexSet, b: VertexSet) -> Option<Vec<usize>> {
    a.iter()
        .find_map(|x| b.difference(g.neighbors(x)).without(x).first().map(|y| vec![x, y]))
}

/// Checks every clause for each part with a nonempty plus half.
pub fn validate_structure(g: &Graph, p: &HolePartition) -> StructureReport {
    let mut checks = Vec::new();
    for i in 0..5isize {
        if p.plus(i).is_empty() {
            continue;
        }
        let ui = p.part(i);
        for clause in CLAUSES {
            let witness = match clause {
                Clause::CompleteToFar => missing_edge(g, ui, p.part(i + 2).union(p.part(i - 2))),
                Clause::CompleteToNearMinus => missing_edge(g, ui, p.minus(i + 1).union(p.minus(i - 1))),
                Clause::NearMinusComplete => missing_edge(g, p.minus(i + 1), p.minus(i + 2))
                    .or_else(|| missing_edge(g, p.minus(i - 1), p.minus(i - 2))),
                Clause::OneFarEmpty => {
                    let (a, b) = (p.part(i + 2), p.part(i - 2));
                    (!a.is_empty() && !b.is_empty()).then(|| vec![a.first().unwrap(), b.first().unwrap()])
                }
                Clause::FewPlusNonNeighbors => p.plus(i).iter().find_map(|x| {
                    [p.plus(i - 1), p.plus(i + 1)].into_iter().find_map(|side| {
                        let miss = side.difference(g.neighbors(x));
                        (miss.len() > 1).then(|| {
                            let mut w = vec![x];
                            w.extend(miss.iter().take(2));
                            w
                        })
                    })
                }),
            };
            checks.push(ClauseCheck {
                part: i as usize,
                clause,
                witness,
            });
        }
    }
    StructureReport { checks }
}

/// All maximal independent sets, sorted by bit pattern.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    out.sort_by_key(|s| s.bits());
    out
}

/// Bron–Kerbosch with pivoting, run on the complement implicitly.
fn bron_kerbosch(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let non_nbrs = |v: usize| g.vertices().difference(g.closed_neighbors(v));
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| p.intersection(non_nbrs(u)).len())
        .unwrap();
    let (mut p, mut x) = (p, x);
    for v in p.difference(non_nbrs(pivot)) {
        let nv = non_nbrs(v);
        bron_kerbosch(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}

/// The maximal independent sets predicted from a partition: the five sets
/// `{h[i-1], h[i+1]} ∪ U_i`, each nonempty minus half with its own hole
/// vertex, and every nonadjacent pair from plus halves of neighbouring parts.
/// Sorted by bit pattern, deduplicated.
pub fn predicted_maximal_independent_sets(g: &Graph, p: &HolePartition) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for i in 0..5isize {
        out.push(p.part(i).with(p.v(i - 1)).with(p.v(i + 1)));
        if let Some(u) = p.minus(i).first() {
            out.push(VertexSet::singleton(u).with(p.v(i)));
        }
        for x in p.plus(i) {
            for y in p.plus(i + 1).difference(g.neighbors(x)) {
                out.push(VertexSet::singleton(x).with(y));
            }
        }
    }
    out.sort_by_key(|s| s.bits());
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{figure3, figure3_flag_sets, named_graph, Figure3Variant, PatternName};

    fn cycle(n: usize) -> Graph {
        named_graph(&PatternName::Cycle { len: n }).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = vec![];
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &e).unwrap()
    }

    fn five_hole(g: &Graph, h: [usize; 5]) -> Hole {
        Hole::new(g, &h).unwrap()
    }

    /// Every subset whose induced subgraph is a single odd cycle.
    fn brute_odd_cycles(g: &Graph, min: usize, max: usize) -> usize {
        (0u64..1 << g.order())
            .map(VertexSet::from_bits)
            .filter(|s| {
                let k = s.len();
                k >= min && k <= max && k % 2 == 1 && {
                    let (h, _) = g.induced(*s);
                    h.is_connected() && (0..k).all(|v| h.degree(v) == 2)
                }
            })
            .count()
    }

    #[test]
    fn hole_normalization() {
        let g = cycle(5);
        assert_eq!(Hole::new(&g, &[3, 2, 1, 0, 4]).unwrap().as_slice(), &[0, 1, 2, 3, 4]);
        assert_eq!(Hole::new(&g, &[2, 3, 4, 0, 1]).unwrap().as_slice(), &[0, 1, 2, 3, 4]);
        assert!(matches!(Hole::new(&g, &[0, 1, 3, 2, 4]), Err(HoleError::MissingEdge(_))));
        let k4 = named_graph(&PatternName::Complete { len: 4 }).unwrap();
        assert!(matches!(Hole::new(&k4, &[0, 1, 2, 3]), Err(HoleError::Chord(_))));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_induced_odd_cycles(&cycle(5), 5, Some(5)).len(), 1);
        let c72 = named_graph(&PatternName::C7Squared).unwrap();
        assert!(odd_holes(&c72).is_empty());
        assert_eq!(enumerate_induced_odd_cycles(&petersen(), 5, Some(5)).len(), 12);
        assert_eq!(brute_odd_cycles(&petersen(), 5, 5), 12);
        let k4 = named_graph(&PatternName::Complete { len: 4 }).unwrap();
        assert_eq!(enumerate_induced_odd_cycles(&k4, 3, None).len(), 4);
        assert!(enumerate_induced_odd_cycles(&k4, 5, None).is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force_on_small_graphs() {
        for level in crate::enumerate::graphs_up_to_iso(7) {
            for g in level {
                let found = enumerate_induced_odd_cycles(&g, 3, None);
                assert_eq!(found.len(), brute_odd_cycles(&g, 3, g.order()), "{g:?}");
                for h in &found {
                    assert_eq!(&Hole::new(&g, h.as_slice()).unwrap(), h);
                }
                let bounded = enumerate_induced_odd_cycles(&g, 5, Some(5));
                assert_eq!(bounded.len(), brute_odd_cycles(&g, 5, 5));
            }
        }
    }

    #[test]
    fn star_examples() {
        let h = [0, 1, 2, 3, 4];
        let mut e: Vec<_> = cycle(5).edge_list();
        e.extend([(5, 0), (5, 1)]);
        let g = Graph::new(6, &e).unwrap();
        assert!(satisfies_star(&g, &five_hole(&g, h)).unwrap());

        let mut e: Vec<_> = cycle(5).edge_list();
        e.extend([(5, 0), (5, 2)]);
        let g = Graph::new(6, &e).unwrap();
        let v = star_violation(&g, &five_hole(&g, h)).unwrap().unwrap();
        assert_eq!(v.vertex(), 5);

        let mut e: Vec<_> = cycle(5).edge_list();
        e.extend([(5, 0), (5, 1), (6, 5)]);
        let g = Graph::new(7, &e).unwrap();
        assert_eq!(
            star_violation(&g, &five_hole(&g, h)).unwrap(),
            Some(StarViolation::Undominated { vertex: 6 })
        );

        let fb = figure3(Figure3Variant::B, &[]).unwrap();
        assert!(satisfies_star(&fb.graph, &five_hole(&fb.graph, fb.hole)).unwrap());
    }

    #[test]
    fn partition_examples() {
        let g = cycle(5);
        let p = hole_partition(&g, &five_hole(&g, [0, 1, 2, 3, 4])).unwrap();
        assert!((0..5).all(|i| p.part(i).is_empty()));

        let fb = figure3(Figure3Variant::B, &[]).unwrap();
        let p = hole_partition(&fb.graph, &five_hole(&fb.graph, fb.hole)).unwrap();
        let u2 = fb.vertex("u2+").unwrap();
        for i in 0..5 {
            let expect = if i == 1 { VertexSet::singleton(u2) } else { VertexSet::EMPTY };
            assert_eq!(p.part(i as isize), expect);
        }
        assert_eq!(p.plus[1], VertexSet::singleton(u2));

        let fa = figure3(Figure3Variant::A, &[2, 3, 4]).unwrap();
        let p = hole_partition(&fa.graph, &five_hole(&fa.graph, fa.hole)).unwrap();
        assert_eq!(p.plus[1].len(), 1);
        assert_eq!(p.plus[3].len(), 1);
        assert_eq!(p.minus[2].len(), 1);
    }

    #[test]
    fn partition_rejects_two_minus_vertices() {
        let mut e: Vec<_> = cycle(5).edge_list();
        e.extend([(5, 2), (5, 3), (6, 2), (6, 3)]);
        let g = Graph::new(7, &e).unwrap();
        assert!(matches!(
            hole_partition(&g, &five_hole(&g, [0, 1, 2, 3, 4])),
            Err(PartitionError::MinusTooLarge { part: 0, .. })
        ));
    }

    #[test]
    fn renumbering_preserves_definitions() {
        let fa = figure3(Figure3Variant::A, &[2, 3]).unwrap();
        let g = &fa.graph;
        let p = hole_partition(g, &five_hole(g, fa.hole)).unwrap();
        for shift in 0..5 {
            for reflect in [false, true] {
                let q = p.renumbered(shift, reflect);
                let direct = hole_partition(g, &Hole(q.hole.to_vec())).unwrap();
                assert_eq!(q, direct);
            }
        }
    }

    #[test]
    fn figure3_templates_pass_all_clauses() {
        for variant in [Figure3Variant::A, Figure3Variant::B, Figure3Variant::C] {
            for flags in figure3_flag_sets(variant) {
                let f = figure3(variant, &flags).unwrap();
                let h = five_hole(&f.graph, f.hole);
                assert!(satisfies_star(&f.graph, &h).unwrap());
                let p = hole_partition(&f.graph, &h).unwrap();
                let report = validate_structure(&f.graph, &p);
                assert!(report.passed(), "{variant:?} {flags:?}: {report:?}");
                assert_eq!(
                    maximal_independent_sets(&f.graph),
                    predicted_maximal_independent_sets(&f.graph, &p),
                    "{variant:?} {flags:?}"
                );
            }
        }
    }

    #[test]
    fn mutation_breaks_a_completeness_clause() {
        let fa = figure3(Figure3Variant::A, &[2, 3, 4]).unwrap();
        let (u2, u4) = (fa.vertex("u2+").unwrap(), fa.vertex("u4+").unwrap());
        let edges: Vec<_> = fa
            .graph
            .edges()
            .filter(|&e| e != (u2.min(u4), u2.max(u4)))
            .collect();
        let g = Graph::new(fa.graph.order(), &edges).unwrap();
        let p = hole_partition(&g, &five_hole(&g, fa.hole)).unwrap();
        let report = validate_structure(&g, &p);
        let failed: Vec<_> = report.failures().map(|c| c.clause).collect();
        assert!(failed.contains(&Clause::CompleteToFar));
    }

    #[test]
    fn maximal_independent_set_examples() {
        let c5 = maximal_independent_sets(&cycle(5));
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|s| s.len() == 2));
        let k4 = maximal_independent_sets(&named_graph(&PatternName::Complete { len: 4 }).unwrap());
        assert_eq!(k4, (0..4).map(VertexSet::singleton).collect::<Vec<_>>());
    }

    #[test]
    fn maximal_sets_match_subset_scan() {
        for level in crate::enumerate::graphs_up_to_iso(6) {
            for g in level {
                let brute: Vec<_> = (0u64..1 << g.order())
                    .map(VertexSet::from_bits)
                    .filter(|&s| {
                        g.is_independent(s)
                            && g.vertices().difference(s).iter().all(|v| !g.is_independent(s.with(v)))
                    })
                    .collect();
                assert_eq!(maximal_independent_sets(&g), brute);
            }
        }
    }
}
