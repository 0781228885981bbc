//! Optimal colorings of t-perfect fork-free graphs.
//!
//! Components without odd holes, then claw-free components, are colored by
//! exact search. Every other component has a five-hole whose partition gives
//! an explicit 3-coloring: number the hole so that `U1+` is nonempty and `U4`
//! is empty, then
//!
//! * `U3` empty: `U5 + v4`, `U1 + v2 + v5`, `U2 + v1 + v3`;
//! * `U5` empty: `U1 + v5`, `U2 + v1 + v3`, `U3 + v2 + v4`;
//! * `U5+` nonempty (so `U2` is empty): `U1 + v2 + v5`, `U3 + v3`, `U5 + v1 + v4`.
//!
//! Here `v1..v5` are the hole positions `0..5` and `Uk` is part `k-1` of
//! [`HolePartition`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::holes::{hole_partition, odd_holes, HolePartition};
use crate::recognize::{recognize, Answer, Branch, RecognizeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error(transparent)]
    Recognize(#[from] RecognizeError),
    #[error("graph is not t-perfect")]
    NotTPerfect,
    #[error("t-perfection could not be decided within the search budget")]
    Inconclusive,
    #[error("component {component:?} is not 3-colorable")]
    NotThreeColorable { component: Vec<usize> },
    #[error("no numbering of any five-hole of component {component:?} fits a coloring case")]
    NoStructuralCase { component: Vec<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColorBranch {
    Perfect,
    ClawFree,
    /// Structural case with `U3` empty.
    U3Empty,
    U5Empty,
    U5PlusNonempty,
}

/// How a structural component was colored: the hole in its chosen numbering
/// (`hole[k]` is `v_{k+1}`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralWitness {
    pub hole: [usize; 5],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentColoring {
    pub vertices: Vec<usize>,
    pub branch: ColorBranch,
    pub witness: Option<StructuralWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    /// Color of each vertex, in `0..3`.
    pub colors: Vec<u8>,
    pub components: Vec<ComponentColoring>,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn num_colors(&self) -> usize {
        let mut seen = [false; 256];
        self.colors.iter().for_each(|&c| seen[c as usize] = true);
        seen.iter().filter(|&&s| s).count()
    }

    /// The color classes, each sorted, in color order, empty ones omitted.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let k = self.colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut out = vec![Vec::new(); k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c as usize].push(v);
        }
        out.retain(|c| !c.is_empty());
        out
    }
}

/// A proper coloring with colors `0..k`, if one exists.
///
/// A greedy maximal clique is precolored, then the remaining vertices are
/// assigned by backtracking, always branching on the most constrained one.
pub fn exact_k_color(g: &Graph, k: usize) -> Option<Vec<u8>> {
    assert!(k >= 1, "need at least one color");
    let n = g.order();
    let mut colors = vec![u8::MAX; n];
    let mut clique = VertexSet::EMPTY;
    if let Some(start) = (0..n).max_by_key(|&v| g.degree(v)) {
        clique.insert(start);
        let mut common = g.neighbors(start);
        while let Some(u) = common.iter().max_by_key(|&u| g.neighbors(u).intersection(common).len()) {
            clique.insert(u);
            common = common.intersection(g.neighbors(u));
        }
    }
    if clique.len() > k {
        return None;
    }
    for (c, v) in clique.iter().enumerate() {
        colors[v] = c as u8;
    }
    backtrack(g, k, &mut colors).then_some(colors)
}

fn backtrack(g: &Graph, k: usize, colors: &mut [u8]) -> bool {
    let used = |colors: &[u8], v: usize| {
        g.neighbors(v)
            .iter()
            .filter(|&u| colors[u] != u8::MAX)
            .fold(0u64, |m, u| m | 1 << colors[u])
    };
    let next = (0..g.order())
        .filter(|&v| colors[v] == u8::MAX)
        .max_by_key(|&v| (used(colors, v).count_ones(), g.degree(v)));
    let Some(v) = next else {
        return true;
    };
    let forbidden = used(colors, v);
    for c in 0..k {
        if forbidden >> c & 1 == 0 {
            colors[v] = c as u8;
            if backtrack(g, k, colors) {
                return true;
            }
        }
    }
    colors[v] = u8::MAX;
    false
}

fn optimal_coloring(g: &Graph, max: usize) -> Option<Vec<u8>> {
    if g.order() == 0 {
        return Some(Vec::new());
    }
    (1..=max).find_map(|k| exact_k_color(g, k))
}

/// Colors a t-perfect fork-free graph with at most three colors, using the
/// minimum number on every component.
pub fn three_color(g: &Graph) -> Result<Coloring, ColorError> {
    let verdict = recognize(g)?;
    match verdict.answer {
        Answer::TPerfect => {}
        Answer::NotTPerfect => return Err(ColorError::NotTPerfect),
        Answer::Inconclusive => return Err(ColorError::Inconclusive),
    }
    let mut colors = vec![0u8; g.order()];
    let mut components = Vec::new();
    for trace in &verdict.components {
        let comp: VertexSet = trace.vertices.iter().copied().collect();
        let (sub, map) = g.induced(comp);
        let (local, branch, witness) = match trace.branch {
            Branch::Perfect | Branch::ClawFree => {
                let local = optimal_coloring(&sub, 3).ok_or_else(|| ColorError::NotThreeColorable {
                    component: trace.vertices.clone(),
                })?;
                let branch = if trace.branch == Branch::Perfect || odd_holes(&sub).is_empty() {
                    ColorBranch::Perfect
                } else {
                    ColorBranch::ClawFree
                };
                (local, branch, None)
            }
            Branch::Structural => {
                let (p, branch) = trace
                    .five_holes
                    .iter()
                    .filter_map(|h| hole_partition(g, h).ok())
                    .find_map(|p| structural_numbering(g, &p))
                    .ok_or_else(|| ColorError::NoStructuralCase {
                        component: trace.vertices.clone(),
                    })?;
                let classes = case_classes(&p, branch);
                let local = map
                    .iter()
                    .map(|&v| classes.iter().position(|c| c.contains(v)).unwrap() as u8)
                    .collect();
                (local, branch, Some(StructuralWitness { hole: p.hole }))
            }
            Branch::Obstruction => unreachable!("accepted components never stop at an obstruction"),
        };
        for (i, &v) in map.iter().enumerate() {
            colors[v] = local[i];
        }
        components.push(ComponentColoring {
            vertices: trace.vertices.clone(),
            branch,
            witness,
        });
    }
    let coloring = Coloring { colors, components };
    if !coloring.is_proper(g) {
        return Err(ColorError::NoStructuralCase {
            component: g.vertices().to_vec(),
        });
    }
    Ok(coloring)
}

/// The three classes of a structural case for a partition already numbered
/// so that `U1+` is nonempty and `U4` is empty.
pub fn case_classes(p: &HolePartition, case: ColorBranch) -> [VertexSet; 3] {
    let u = |k: isize| p.part(k - 1);
    let v = |k: isize| VertexSet::singleton(p.v(k - 1));
    match case {
        ColorBranch::U3Empty => [
            u(5).union(v(4)),
            u(1).union(v(2)).union(v(5)),
            u(2).union(v(1)).union(v(3)),
        ],
        ColorBranch::U5Empty => [
            u(1).union(v(5)),
            u(2).union(v(1)).union(v(3)),
            u(3).union(v(2)).union(v(4)),
        ],
        ColorBranch::U5PlusNonempty => [
            u(1).union(v(2)).union(v(5)),
            u(3).union(v(3)),
            u(5).union(v(1)).union(v(4)),
        ],
        ColorBranch::Perfect | ColorBranch::ClawFree => panic!("not a structural case"),
    }
}

/// Among the ten numberings of the hole with `U1+` nonempty and `U4` empty,
/// the one with the lexicographically least vertex sequence whose case
/// partition is a proper coloring of the component.
fn structural_numbering(g: &Graph, p: &HolePartition) -> Option<(HolePartition, ColorBranch)> {
    let mut numberings: Vec<HolePartition> = (0..5)
        .flat_map(|shift| [false, true].map(|r| p.renumbered(shift, r)))
        .filter(|q| !q.plus(0).is_empty() && q.part(3).is_empty())
        .collect();
    numberings.sort_by_key(|q| q.hole);
    numberings.into_iter().find_map(|q| {
        let case = if q.part(2).is_empty() {
            ColorBranch::U3Empty
        } else if q.part(4).is_empty() {
            ColorBranch::U5Empty
        } else if !q.plus(4).is_empty() {
            ColorBranch::U5PlusNonempty
        } else {
            return None;
        };
        let classes = case_classes(&q, case);
        let covers = classes.iter().fold(VertexSet::EMPTY, |a, &c| a.union(c)) == q.component
            && classes.iter().map(|c| c.len()).sum::<usize>() == q.component.len();
        (covers && classes.iter().all(|&c| g.is_independent(c))).then_some((q, case))
    })
}
