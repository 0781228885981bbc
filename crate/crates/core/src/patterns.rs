//! Named graphs and induced-subgraph detection.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid pattern parameter: {0}")]
pub struct PatternError(pub String);

/// The three five-hole configurations that every structural case reduces to
/// by vertex duplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Figure3Variant {
    /// `u2+`, `u4+`; optional `u2-`, `u3-`, `u4-`.
    A,
    /// `u2+`; optional `u1-` .. `u4-`.
    B,
    /// `u2+`, `u3+`, `u5-`; nothing optional.
    C,
}

impl Figure3Variant {
    fn optional(self) -> &'static [u8] {
        match self {
            Figure3Variant::A => &[2, 3, 4],
            Figure3Variant::B => &[1, 2, 3, 4],
            Figure3Variant::C => &[],
        }
    }

    /// Mandatory outside vertices as (part index 1..=5, in plus half).
    fn mandatory(self) -> &'static [(u8, bool)] {
        match self {
            Figure3Variant::A => &[(2, true), (4, true)],
            Figure3Variant::B => &[(2, true)],
            Figure3Variant::C => &[(2, true), (3, true), (5, false)],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum PatternName {
    Claw,
    Fork,
    Cycle { len: usize },
    Path { len: usize },
    Complete { len: usize },
    /// Rim length; the hub is the extra vertex.
    Wheel { rim: usize },
    C7Squared,
    C10Squared,
    /// `minus` lists which optional `u_i^-` (by part index) are present.
    Figure3 {
        variant: Figure3Variant,
        minus: Vec<u8>,
    },
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternName::Claw => write!(f, "claw"),
            PatternName::Fork => write!(f, "fork"),
            PatternName::Cycle { len } => write!(f, "C{len}"),
            PatternName::Path { len } => write!(f, "P{len}"),
            PatternName::Complete { len } => write!(f, "K{len}"),
            PatternName::Wheel { rim } => write!(f, "W{rim}"),
            PatternName::C7Squared => write!(f, "C7^2"),
            PatternName::C10Squared => write!(f, "C10^2"),
            PatternName::Figure3 { variant, minus } => {
                let v = format!("{variant:?}").to_lowercase();
                write!(f, "figure3{v}")?;
                for i in minus {
                    write!(f, "+u{i}-")?;
                }
                Ok(())
            }
        }
    }
}

/// Builds the named graph.
///
/// Cycles and paths are labelled along the cycle/path. Wheels put the rim on
/// `0..rim` and the hub last. The claw has center 0; the fork adds vertex 4
/// pendant to leaf 3. Figure-3 graphs put the hole `v1..v5` on `0..5` and the
/// outside vertices after it, see [`figure3`].
pub fn named_graph(name: &PatternName) -> Result<Graph, PatternError> {
    let bad = |m: &str| Err(PatternError(m.to_string()));
    Ok(match *name {
        PatternName::Claw => Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        PatternName::Fork => Graph::new(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap(),
        PatternName::Cycle { len } if len < 3 => return bad("cycle length must be at least 3"),
        PatternName::Cycle { len } => power_of_cycle(len, 1)?,
        PatternName::Path { len } if len == 0 => return bad("path needs a vertex"),
        PatternName::Path { len } => {
            let edges: Vec<_> = (1..len).map(|i| (i - 1, i)).collect();
            Graph::new(len, &edges).map_err(|e| PatternError(e.to_string()))?
        }
        PatternName::Complete { len } => {
            if len > crate::graph::MAX_ORDER {
                return bad("complete graph too large");
            }
            Graph::empty(len).complement()
        }
        PatternName::Wheel { rim } if rim < 3 => return bad("wheel rim must be at least 3"),
        PatternName::Wheel { rim } => {
            let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
            edges.extend((0..rim).map(|i| (i, rim)));
            Graph::new(rim + 1, &edges).map_err(|e| PatternError(e.to_string()))?
        }
        PatternName::C7Squared => power_of_cycle(7, 2)?,
        PatternName::C10Squared => power_of_cycle(10, 2)?,
        PatternName::Figure3 { variant, ref minus } => figure3(variant, minus)?.graph,
    })
}

fn power_of_cycle(len: usize, dist: usize) -> Result<Graph, PatternError> {
    let mut edges = vec![];
    for i in 0..len {
        for d in 1..=dist {
            edges.push((i, (i + d) % len));
        }
    }
    Graph::new(len, &edges).map_err(|e| PatternError(e.to_string()))
}

/// A built figure-3 configuration with its vertex names.
#[derive(Debug, Clone)]
pub struct Figure3Graph {
    pub graph: Graph,
    /// The five-hole `v1..v5`.
    pub hole: [usize; 5],
    /// Names (`"u2+"`, `"u3-"`, ...) of the outside vertices, by label.
    pub outside: Vec<(String, usize)>,
}

impl Figure3Graph {
    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.outside.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }
}

/// Builds a figure-3 configuration.
///
/// Vertex `u_i^±` belongs to part `i`: it is adjacent to `v_{i+2}` and
/// `v_{i+3}`, and also to `v_i` when it is a plus vertex. Among outside
/// vertices the edges are those implied by fork-freeness around a nonempty
/// plus part (part `i` complete to parts `i±2` and to the minus halves of
/// parts `i±1`; minus halves of `i+1` and `i+2` complete), the drawn `u2+u3+`
/// edge of variant C, and all edges between minus vertices.
///
/// Variant B with both `u1-` and `u4-` is rejected: no completion of that
/// configuration is fork-free with every five-hole well attached.
pub fn figure3(variant: Figure3Variant, minus: &[u8]) -> Result<Figure3Graph, PatternError> {
    let mut flags = 0u8;
    for &i in minus {
        if !variant.optional().contains(&i) {
            return Err(PatternError(format!(
                "u{i}- is not optional in variant {variant:?}"
            )));
        }
        flags |= 1 << i;
    }
    if variant == Figure3Variant::B && flags & 0b10010 == 0b10010 {
        return Err(PatternError(
            "variant B cannot carry both u1- and u4-".into(),
        ));
    }
    let mut parts: Vec<(u8, bool)> = variant.mandatory().to_vec();
    parts.extend((1..=5u8).filter(|i| flags >> i & 1 == 1).map(|i| (i, false)));

    let hole_idx = |i: i32| (i - 1).rem_euclid(5) as usize;
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let mut outside = Vec::new();
    for (k, &(i, plus)) in parts.iter().enumerate() {
        let x = 5 + k;
        let i = i as i32;
        edges.push((x, hole_idx(i + 2)));
        edges.push((x, hole_idx(i + 3)));
        if plus {
            edges.push((x, hole_idx(i)));
        }
        outside.push((format!("u{i}{}", if plus { '+' } else { '-' }), x));
    }

    let part_of = |k: usize| parts[k].0 as i32;
    let same = |a: i32, b: i32| (a - b).rem_euclid(5) == 0;
    let has_plus = |i: i32| parts.iter().any(|&(j, p)| p && same(j as i32, i));
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            let (ia, pa) = (part_of(a), parts[a].1);
            let (ib, pb) = (part_of(b), parts[b].1);
            let mut adjacent = !pa && !pb && !same(ia, ib);
            for (i, j, pj) in [(ia, ib, pb), (ib, ia, pa)] {
                if has_plus(i) {
                    let d = (j - i).rem_euclid(5);
                    adjacent |= d == 2 || d == 3;
                    adjacent |= (d == 1 || d == 4) && !pj;
                }
            }
            if variant == Figure3Variant::C && pa && pb {
                adjacent = true;
            }
            if adjacent {
                edges.push((5 + a, 5 + b));
            }
        }
    }
    let graph = Graph::new(5 + parts.len(), &edges).map_err(|e| PatternError(e.to_string()))?;
    Ok(Figure3Graph {
        graph,
        hole: [0, 1, 2, 3, 4],
        outside,
    })
}

/// Every legal flag set of a variant.
pub fn figure3_flag_sets(variant: Figure3Variant) -> Vec<Vec<u8>> {
    let opt = variant.optional();
    (0..1u32 << opt.len())
        .map(|m| {
            opt.iter()
                .enumerate()
                .filter(|(k, _)| m >> k & 1 == 1)
                .map(|(_, &i)| i)
                .collect::<Vec<u8>>()
        })
        .filter(|m| figure3(variant, m).is_ok())
        .collect()
}

/// Injective map from pattern vertices to host vertices preserving edges and
/// non-edges. `map[p]` is the image of pattern vertex `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        let n = pattern.order();
        self.map.len() == n
            && self.image().len() == n
            && self.map.iter().all(|&v| v < host.order())
            && (0..n).all(|p| {
                (p + 1..n).all(|q| pattern.has_edge(p, q) == host.has_edge(self.map[p], self.map[q]))
            })
    }
}

/// Finds an induced copy of `pattern` in `host`, by backtracking over pattern
/// vertices in a connectivity-first order. Deterministic: candidates are
/// tried in increasing label order.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    find_induced_within(host, host.vertices(), pattern)
}

/// As [`find_induced`], restricted to host vertices in `allowed`.
pub fn find_induced_within(host: &Graph, allowed: VertexSet, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.order();
    if k > allowed.len() {
        return None;
    }
    if k == 0 {
        return Some(Embedding { map: vec![] });
    }
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; k];
    if extend(host, allowed, pattern, &order, 0, &mut map, VertexSet::EMPTY) {
        Some(Embedding { map })
    } else {
        None
    }
}

fn search_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.order();
    let mut placed = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let next = (0..k)
            .filter(|&p| !placed.contains(p))
            .max_by_key(|&p| {
                (
                    pattern.neighbors(p).intersection(placed).len(),
                    pattern.degree(p),
                    std::cmp::Reverse(p),
                )
            })
            .unwrap();
        placed.insert(next);
        order.push(next);
    }
    order
}

fn extend(
    host: &Graph,
    allowed: VertexSet,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut cands = allowed.difference(used);
    for &q in &order[..depth] {
        let img = host.neighbors(map[q]);
        if pattern.has_edge(p, q) {
            cands = cands.intersection(img);
        } else {
            cands = cands.difference(img);
        }
    }
    let need = pattern.degree(p);
    for h in cands {
        if host.neighbors(h).intersection(allowed).len() < need {
            continue;
        }
        map[p] = h;
        if extend(host, allowed, pattern, order, depth + 1, map, used.with(h)) {
            return true;
        }
    }
    map[p] = usize::MAX;
    false
}

pub fn contains_claw(g: &Graph) -> Option<Embedding> {
    find_induced(g, &named_graph(&PatternName::Claw).unwrap())
}

pub fn find_fork(g: &Graph) -> Option<Embedding> {
    find_induced(g, &named_graph(&PatternName::Fork).unwrap())
}

pub fn is_fork_free(g: &Graph) -> bool {
    find_fork(g).is_none()
}

/// The first pattern (in the given order) found as an induced subgraph.
pub fn contains_any_of(g: &Graph, names: &[PatternName]) -> Option<(PatternName, Embedding)> {
    names.iter().find_map(|name| {
        let p = named_graph(name).ok()?;
        find_induced(g, &p).map(|e| (name.clone(), e))
    })
}

/// `K4, W5, C7^2, C10^2`: the induced obstructions checked before anything else.
pub fn small_obstructions() -> Vec<PatternName> {
    vec![
        PatternName::Complete { len: 4 },
        PatternName::Wheel { rim: 5 },
        PatternName::C7Squared,
        PatternName::C10Squared,
    ]
}

/// An induced odd wheel `W_{2k+1}`, smallest rim first.
pub fn find_odd_wheel(g: &Graph) -> Option<(PatternName, Embedding)> {
    let names: Vec<_> = (3..g.order())
        .step_by(2)
        .map(|rim| PatternName::Wheel { rim })
        .collect();
    contains_any_of(g, &names)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: PatternName) -> Graph {
        named_graph(&name).unwrap()
    }

    /// All-subsets oracle, independent of the backtracking search.
    fn naive_induced(host: &Graph, pattern: &Graph) -> bool {
        let k = pattern.order();
        let n = host.order();
        if k > n {
            return false;
        }
        let code = crate::canon::canonical_code(pattern);
        (0u64..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .any(|m| crate::canon::canonical_code(&host.induced(VertexSet::from_bits(m)).0) == code)
    }

    #[test]
    fn wheel_three_is_k4() {
        assert!(crate::canon::is_isomorphic(
            &g(PatternName::Wheel { rim: 3 }),
            &g(PatternName::Complete { len: 4 })
        ));
    }

    #[test]
    fn squares_of_cycles() {
        let c7 = g(PatternName::C7Squared);
        assert_eq!(c7.order(), 7);
        assert!((0..7).all(|v| c7.degree(v) == 4));
        let c10 = g(PatternName::C10Squared);
        assert!((0..10).all(|v| c10.degree(v) == 4));
        assert_eq!(c10.size(), 20);
    }

    #[test]
    fn invalid_parameters() {
        assert!(named_graph(&PatternName::Wheel { rim: 2 }).is_err());
        assert!(named_graph(&PatternName::Cycle { len: 2 }).is_err());
        assert!(named_graph(&PatternName::Path { len: 0 }).is_err());
        assert!(figure3(Figure3Variant::C, &[1]).is_err());
        assert!(figure3(Figure3Variant::A, &[5]).is_err());
        assert!(figure3(Figure3Variant::B, &[1, 4]).is_err());
    }

    #[test]
    fn figure3b_bare() {
        let f = figure3(Figure3Variant::B, &[]).unwrap();
        assert_eq!(f.graph.order(), 6);
        let hub = f.vertex("u2+").unwrap();
        // v2, v4, v5 are labels 1, 3, 4.
        assert_eq!(f.graph.neighbors(hub).to_vec(), vec![1, 3, 4]);
        assert_eq!(f.graph.size(), 8);
    }

    #[test]
    fn figure3c_edges() {
        let f = figure3(Figure3Variant::C, &[]).unwrap();
        let (a, b, c) = (
            f.vertex("u2+").unwrap(),
            f.vertex("u3+").unwrap(),
            f.vertex("u5-").unwrap(),
        );
        assert!(f.graph.has_edge(a, b) && f.graph.has_edge(a, c) && f.graph.has_edge(b, c));
        assert_eq!(f.graph.neighbors(c).intersection(VertexSet::full(5)).to_vec(), vec![1, 2]);
    }

    #[test]
    fn flag_sets_are_enumerated() {
        assert_eq!(figure3_flag_sets(Figure3Variant::A).len(), 8);
        assert_eq!(figure3_flag_sets(Figure3Variant::B).len(), 12);
        assert_eq!(figure3_flag_sets(Figure3Variant::C).len(), 1);
    }

    #[test]
    fn detection_examples() {
        let claw = g(PatternName::Claw);
        assert!(find_induced(&g(PatternName::Fork), &claw).is_some());
        assert!(find_induced(&g(PatternName::Cycle { len: 5 }), &claw).is_none());
        let w5 = g(PatternName::Wheel { rim: 5 });
        assert!(find_induced(&w5, &claw).is_none());
        let w7 = g(PatternName::Wheel { rim: 7 });
        let e = find_induced(&w7, &claw).unwrap();
        assert!(e.verify(&w7, &claw));
        assert!(naive_induced(&w7, &claw));
    }

    #[test]
    fn embeddings_verify() {
        let host = g(PatternName::C10Squared);
        for name in [
            PatternName::Cycle { len: 5 },
            PatternName::Path { len: 4 },
            PatternName::Complete { len: 3 },
            PatternName::Claw,
        ] {
            let p = g(name.clone());
            if let Some(e) = find_induced(&host, &p) {
                assert!(e.verify(&host, &p), "{name}");
            }
            assert_eq!(find_induced(&host, &p).is_some(), naive_induced(&host, &p), "{name}");
        }
    }

    #[test]
    fn agrees_with_naive_on_all_small_graphs() {
        let patterns: Vec<Graph> = crate::enumerate::graphs_up_to_iso(5)
            .into_iter()
            .flatten()
            .filter(|p| p.order() >= 3)
            .collect();
        for n in 1..=6 {
            for host in crate::enumerate::graphs_of_order(n) {
                for p in &patterns {
                    let fast = find_induced(&host, p);
                    if let Some(e) = &fast {
                        assert!(e.verify(&host, p));
                    }
                    assert_eq!(fast.is_some(), naive_induced(&host, p), "{host:?} {p:?}");
                }
            }
        }
    }
}
