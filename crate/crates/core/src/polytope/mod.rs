//! The vertex/edge/odd-cycle system of a graph, in exact arithmetic.
//!
//! `P(G)` is cut out by `0 <= x_v <= 1`, `x_u + x_v <= 1` on edges and
//! `x(C) <= (|C|-1)/2` on odd cycles. The graph is t-perfect when every vertex
//! of `P(G)` is integral. Strong t-perfection is checked through w-covers: a
//! graph whose system is totally dual integral has, for every weighting `w`,
//! a w-cover of cost `alpha_w`.

mod cover;
mod dd;

pub use cover::{min_w_cover, strong_t_perfect_check, CoverElement, CoverSolver, StrongReport, WCover};
pub use dd::enumerate_vertices;

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::holes::enumerate_induced_odd_cycles;

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a point as `(p/q, ...)`, integers without a denominator.
pub fn format_point(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConstraintKind {
    LowerBound { vertex: usize },
    UpperBound { vertex: usize },
    Edge { u: usize, v: usize },
    OddCycle { cycle: Vec<usize> },
}

/// `coeffs · x <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub coeffs: Vec<i64>,
    pub rhs: i64,
    pub kind: ConstraintKind,
}

impl Constraint {
    fn over_set(n: usize, s: VertexSet, rhs: i64, kind: ConstraintKind) -> Constraint {
        Constraint {
            coeffs: (0..n).map(|v| s.contains(v) as i64).collect(),
            rhs,
            kind,
        }
    }

    /// `coeffs · x - rhs`; positive means violated.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        let mut s = rational(-self.rhs);
        for (c, xi) in self.coeffs.iter().zip(x) {
            match c {
                0 => {}
                1 => s += xi,
                -1 => s -= xi,
                _ => s += xi * rational(*c),
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSystem {
    pub n: usize,
    pub rows: Vec<Constraint>,
}

impl ConstraintSystem {
    pub fn count(&self, pred: impl Fn(&ConstraintKind) -> bool) -> usize {
        self.rows.iter().filter(|r| pred(&r.kind)).count()
    }

    pub fn satisfies(&self, x: &[Rational]) -> bool {
        x.len() == self.n && self.rows.iter().all(|r| r.slack(x) <= Rational::zero())
    }
}

fn base_rows(g: &Graph) -> Vec<Constraint> {
    let n = g.order();
    let mut rows = Vec::new();
    for v in 0..n {
        let mut lower = Constraint::over_set(n, VertexSet::EMPTY, 0, ConstraintKind::LowerBound { vertex: v });
        lower.coeffs[v] = -1;
        rows.push(lower);
        rows.push(Constraint::over_set(n, VertexSet::singleton(v), 1, ConstraintKind::UpperBound { vertex: v }));
    }
    for (u, v) in g.edges() {
        rows.push(Constraint::over_set(n, VertexSet::singleton(u).with(v), 1, ConstraintKind::Edge { u, v }));
    }
    rows
}

fn cycle_row(n: usize, cycle: Vec<usize>) -> Constraint {
    let s: VertexSet = cycle.iter().copied().collect();
    Constraint::over_set(n, s, (cycle.len() as i64 - 1) / 2, ConstraintKind::OddCycle { cycle })
}

/// Bounds (lower then upper, per vertex), edges, then one row per induced
/// odd cycle including triangles.
pub fn build_system(g: &Graph) -> ConstraintSystem {
    let n = g.order();
    let mut rows = base_rows(g);
    rows.extend(
        enumerate_induced_odd_cycles(g, 3, None)
            .into_iter()
            .map(|h| cycle_row(n, h.as_slice().to_vec())),
    );
    ConstraintSystem { n, rows }
}

/// As [`build_system`] with a row for every vertex set spanning an odd cycle,
/// chorded or not.
pub fn build_full_system(g: &Graph) -> ConstraintSystem {
    let n = g.order();
    let mut rows = base_rows(g);
    rows.extend(odd_cycle_sets(g).into_iter().map(|c| cycle_row(n, c)));
    ConstraintSystem { n, rows }
}

/// For every odd vertex set of size at least 3 whose induced subgraph has a
/// Hamiltonian cycle, one such cycle. Sorted by vertex set bits.
pub(crate) fn odd_cycle_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 20, "odd cycle sets are enumerated over all subsets");
    let mut out = Vec::new();
    for bits in 0u64..1 << n {
        let s = VertexSet::from_bits(bits);
        if s.len() >= 3 && s.len() % 2 == 1 {
            if let Some(c) = hamiltonian_cycle(g, s) {
                out.push(c);
            }
        }
    }
    out
}

/// A Hamiltonian cycle of `g[s]` starting at its least vertex and oriented
/// so the second vertex is below the last, by bitmask DP over paths.
fn hamiltonian_cycle(g: &Graph, s: VertexSet) -> Option<Vec<usize>> {
    let verts = s.to_vec();
    let k = verts.len();
    let adj: Vec<u32> = verts
        .iter()
        .map(|&u| (0..k).filter(|&j| g.has_edge(u, verts[j])).fold(0, |m, j| m | 1 << j))
        .collect();
    // reach[mask] = endpoints j such that a path from 0 visits exactly mask and ends at j
    let full = (1u32 << k) - 1;
    let mut reach = vec![0u32; 1 << k];
    reach[1] = 1;
    for mask in 1..=full {
        if mask & 1 == 0 || reach[mask as usize] == 0 {
            continue;
        }
        let ends = reach[mask as usize];
        for j in 0..k {
            if ends >> j & 1 == 1 {
                let mut next = adj[j] & !mask;
                while next != 0 {
                    let t = next.trailing_zeros();
                    next &= next - 1;
                    reach[(mask | 1 << t) as usize] |= 1 << t;
                }
            }
        }
    }
    let last = (1..k).find(|&j| reach[full as usize] >> j & 1 == 1 && adj[0] >> j & 1 == 1)?;
    let mut path = vec![last];
    let (mut mask, mut end) = (full, last);
    while mask != 1 {
        mask &= !(1 << end);
        end = (0..k)
            .find(|&j| reach[mask as usize] >> j & 1 == 1 && adj[j] >> end & 1 == 1)
            .unwrap();
        path.push(end);
    }
    path.reverse();
    if path[1] > path[k - 1] {
        path[1..].reverse();
    }
    Some(path.into_iter().map(|j| verts[j]).collect())
}

/// True iff every vertex of `P(G)` is integral. When it is, also checks that
/// the vertices are exactly the independent sets.
pub fn t_perfect_oracle(g: &Graph) -> bool {
    let vertices = enumerate_vertices(&build_system(g));
    let one = Rational::one();
    let integral = vertices
        .iter()
        .all(|p| p.iter().all(|x| x.is_zero() || *x == one));
    if integral {
        let mut sets: Vec<u64> = vertices
            .iter()
            .map(|p| p.iter().enumerate().filter(|(_, x)| !x.is_zero()).fold(0, |m, (v, _)| m | 1 << v))
            .collect();
        sets.sort_unstable();
        let expected: Vec<u64> = (0u64..1 << g.order())
            .filter(|&b| g.is_independent(VertexSet::from_bits(b)))
            .collect();
        assert_eq!(sets, expected, "integral vertices must be the independent sets");
    }
    integral
}

/// A nonnegative integer weight per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weighting(pub Vec<u32>);

impl Weighting {
    pub fn uniform(n: usize, w: u32) -> Weighting {
        Weighting(vec![w; n])
    }

    pub fn of(&self, s: VertexSet) -> u64 {
        s.iter().map(|v| self.0[v] as u64).sum()
    }
}

/// Maximum weight of an independent set.
pub fn alpha_w(g: &Graph, w: &Weighting) -> u64 {
    assert_eq!(w.0.len(), g.order(), "one weight per vertex");
    let mut best = 0;
    let live = g.vertices().iter().filter(|&v| w.0[v] > 0).collect();
    mwis(g, w, live, 0, &mut best);
    best
}

fn mwis(g: &Graph, w: &Weighting, cand: VertexSet, acc: u64, best: &mut u64) {
    if acc > *best {
        *best = acc;
    }
    if cand.is_empty() || acc + clique_cover_bound(g, w, cand) <= *best {
        return;
    }
    let v = cand.iter().max_by_key(|&v| (w.0[v], g.neighbors(v).intersection(cand).len())).unwrap();
    mwis(g, w, cand.without(v).difference(g.neighbors(v)), acc + w.0[v] as u64, best);
    mwis(g, w, cand.without(v), acc, best);
}

/// Greedy clique cover of `cand`; an independent set meets each clique once.
fn clique_cover_bound(g: &Graph, w: &Weighting, cand: VertexSet) -> u64 {
    let mut rest = cand;
    let mut bound = 0;
    while let Some(v) = rest.first() {
        let mut clique = VertexSet::singleton(v);
        let mut common = g.neighbors(v).intersection(rest);
        while let Some(u) = common.first() {
            clique.insert(u);
            common = common.intersection(g.neighbors(u));
        }
        bound += clique.iter().map(|u| w.0[u] as u64).max().unwrap();
        rest = rest.difference(clique);
    }
    bound
}

/// `max w·x` over the given points.
pub fn lp_max(points: &[Vec<Rational>], w: &Weighting) -> Option<Rational> {
    points
        .iter()
        .map(|p| p.iter().zip(&w.0).map(|(x, &wi)| x * rational(wi as i64)).sum::<Rational>())
        .max()
}
