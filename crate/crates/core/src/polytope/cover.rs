//! Minimum-cost w-covers.
//!
//! A w-cover is a multiset of vertices, edges and odd cycles (chorded ones
//! included) covering every vertex `v` at least `w(v)` times. Vertices and
//! edges cost 1, an odd cycle `C` costs `(|C|-1)/2`. The minimum cost is
//! found exactly by memoized recursion on the residual demand: some element
//! of an optimal cover contains the first vertex still in demand, so trying
//! each such element and recursing on what remains is exhaustive.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{alpha_w, odd_cycle_sets, Weighting};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoverElement {
    Vertex { v: usize },
    Edge { u: usize, v: usize },
    OddCycle { cycle: Vec<usize> },
}

impl CoverElement {
    pub fn vertex_set(&self) -> VertexSet {
        match self {
            CoverElement::Vertex { v } => VertexSet::singleton(*v),
            CoverElement::Edge { u, v } => VertexSet::singleton(*u).with(*v),
            CoverElement::OddCycle { cycle } => cycle.iter().copied().collect(),
        }
    }

    pub fn cost(&self) -> u64 {
        match self {
            CoverElement::OddCycle { cycle } => (cycle.len() as u64 - 1) / 2,
            _ => 1,
        }
    }

    /// Whether this is a vertex, an edge, or an odd cycle of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        match self {
            CoverElement::Vertex { v } => *v < g.order(),
            CoverElement::Edge { u, v } => *u < g.order() && *v < g.order() && g.has_edge(*u, *v),
            CoverElement::OddCycle { cycle } => {
                let k = cycle.len();
                k >= 3
                    && k % 2 == 1
                    && cycle.iter().all(|&v| v < g.order())
                    && self.vertex_set().len() == k
                    && (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WCover {
    /// Elements with positive multiplicities, sorted by element.
    pub elements: Vec<(CoverElement, u32)>,
    pub cost: u64,
}

impl WCover {
    /// Checks the elements, the multiplicities, the coverage and the cost.
    pub fn verify(&self, g: &Graph, w: &Weighting) -> bool {
        let mut coverage = vec![0u64; g.order()];
        let mut cost = 0;
        for (e, m) in &self.elements {
            if *m == 0 || !e.is_valid_in(g) {
                return false;
            }
            for v in e.vertex_set() {
                coverage[v] += *m as u64;
            }
            cost += e.cost() * *m as u64;
        }
        cost == self.cost && coverage.iter().zip(&w.0).all(|(&c, &d)| c >= d as u64)
    }
}

/// Minimum covers on one graph, sharing the memo across weightings.
pub struct CoverSolver {
    order: usize,
    elements: Vec<CoverElement>,
    sets: Vec<VertexSet>,
    /// Element indices containing each vertex, in element order.
    through: Vec<Vec<usize>>,
    memo: HashMap<Vec<u32>, u64>,
}

impl CoverSolver {
    pub fn new(g: &Graph) -> CoverSolver {
        let mut elements: Vec<CoverElement> = g.vertices().iter().map(|v| CoverElement::Vertex { v }).collect();
        elements.extend(g.edges().map(|(u, v)| CoverElement::Edge { u, v }));
        elements.extend(odd_cycle_sets(g).into_iter().map(|cycle| CoverElement::OddCycle { cycle }));
        let sets: Vec<VertexSet> = elements.iter().map(CoverElement::vertex_set).collect();
        let through = (0..g.order())
            .map(|v| (0..elements.len()).filter(|&e| sets[e].contains(v)).collect())
            .collect();
        CoverSolver {
            order: g.order(),
            elements,
            sets,
            through,
            memo: HashMap::new(),
        }
    }

    fn residual(&self, r: &[u32], e: usize) -> Vec<u32> {
        let mut next = r.to_vec();
        for v in self.sets[e] {
            next[v] = next[v].saturating_sub(1);
        }
        next
    }

    fn min_cost(&mut self, r: &[u32]) -> u64 {
        let Some(v) = r.iter().position(|&d| d > 0) else {
            return 0;
        };
        if let Some(&c) = self.memo.get(r) {
            return c;
        }
        let mut best = u64::MAX;
        for k in 0..self.through[v].len() {
            let e = self.through[v][k];
            let next = self.residual(r, e);
            best = best.min(self.elements[e].cost() + self.min_cost(&next));
        }
        self.memo.insert(r.to_vec(), best);
        best
    }

    /// A minimum-cost cover. Among optimal choices the first element in
    /// element order (vertices, edges, cycles by vertex set) wins.
    pub fn solve(&mut self, w: &Weighting) -> WCover {
        assert_eq!(w.0.len(), self.order, "one weight per vertex");
        let total = self.min_cost(&w.0);
        let mut counts: HashMap<usize, u32> = HashMap::new();
        let mut r = w.0.clone();
        let mut left = total;
        while let Some(v) = r.iter().position(|&d| d > 0) {
            let through = self.through[v].clone();
            let (e, next) = through
                .into_iter()
                .find_map(|e| {
                    let next = self.residual(&r, e);
                    (self.elements[e].cost() + self.min_cost(&next) == left).then_some((e, next))
                })
                .expect("an optimal element exists");
            left -= self.elements[e].cost();
            *counts.entry(e).or_default() += 1;
            r = next;
        }
        let mut elements: Vec<(CoverElement, u32)> =
            counts.into_iter().map(|(e, m)| (self.elements[e].clone(), m)).collect();
        elements.sort();
        WCover { elements, cost: total }
    }
}

pub fn min_w_cover(g: &Graph, w: &Weighting) -> WCover {
    CoverSolver::new(g).solve(w)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongViolation {
    pub weighting: Weighting,
    pub alpha: u64,
    pub cover: WCover,
}

/// Result of checking every weighting in `{0..=w_max}^V`. A pass is evidence,
/// not proof: the definition quantifies over all weightings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongReport {
    pub w_max: u32,
    pub weightings_checked: u64,
    pub violation: Option<StrongViolation>,
}

impl StrongReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for StrongReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "pass up to w_max = {}", self.w_max),
            Some(v) => write!(
                f,
                "violation at w = {:?}: alpha_w = {}, minimum cover cost = {}",
                v.weighting.0, v.alpha, v.cover.cost
            ),
        }
    }
}

/// Checks `min cover cost == alpha_w` for every weighting with entries in
/// `0..=w_max`, in lexicographic order, stopping at the first violation.
pub fn strong_t_perfect_check(g: &Graph, w_max: u32) -> StrongReport {
    let n = g.order();
    let mut solver = CoverSolver::new(g);
    let mut w = vec![0u32; n];
    let mut checked = 0;
    loop {
        checked += 1;
        let weighting = Weighting(w.clone());
        let alpha = alpha_w(g, &weighting);
        if solver.min_cost(&w) != alpha {
            let cover = solver.solve(&weighting);
            return StrongReport {
                w_max,
                weightings_checked: checked,
                violation: Some(StrongViolation { weighting, alpha, cover }),
            };
        }
        let Some(i) = (0..n).rev().find(|&i| w[i] < w_max) else {
            break;
        };
        w[i] += 1;
        w[i + 1..].iter_mut().for_each(|x| *x = 0);
    }
    StrongReport {
        w_max,
        weightings_checked: checked,
        violation: None,
    }
}
