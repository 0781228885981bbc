//! t-contractions and exhaustive search for forbidden t-minors.
//!
//! A t-contraction on `v` merges `N(v) ∪ {v}` into one vertex and is only
//! allowed when `N(v)` is independent. A t-minor is anything reachable by
//! vertex deletions and t-contractions. The forbidden targets are `C7^2`,
//! `C10^2` and the odd wheels `W_{2k+1}` (with `W3 = K4`).

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{find_induced, named_graph, PatternName};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TMinorError {
    #[error("cannot t-contract on {center}: neighbours {edge:?} are adjacent")]
    NeighborhoodNotIndependent { center: usize, edge: (usize, usize) },
    #[error("vertex {vertex} is not in a graph of order {order}")]
    NoSuchVertex { vertex: usize, order: usize },
}

/// t-contraction on `v`.
///
/// The vertices outside `N(v) ∪ {v}` keep their relative order and are
/// relabelled densely; the merged vertex gets the last label.
pub fn t_contract(g: &Graph, v: usize) -> Result<Graph, TMinorError> {
    if v >= g.order() {
        return Err(TMinorError::NoSuchVertex {
            vertex: v,
            order: g.order(),
        });
    }
    let nv = g.neighbors(v);
    for a in nv {
        if let Some(b) = g.neighbors(a).intersection(nv).first() {
            return Err(TMinorError::NeighborhoodNotIndependent {
                center: v,
                edge: (a.min(b), a.max(b)),
            });
        }
    }
    Ok(contract_unchecked(g, v))
}

fn contract_unchecked(g: &Graph, v: usize) -> Graph {
    let merged = g.closed_neighbors(v);
    let mut touched = VertexSet::EMPTY;
    for u in merged {
        touched = touched.union(g.neighbors(u));
    }
    touched = touched.difference(merged);
    let (rest, map) = g.induced(g.vertices().difference(merged));
    let k = rest.order();
    let mut edges = rest.edge_list();
    edges.extend(
        map.iter()
            .enumerate()
            .filter(|(_, &orig)| touched.contains(orig))
            .map(|(i, _)| (i, k)),
    );
    Graph::new(k + 1, &edges).expect("contraction shrinks the graph")
}

fn can_contract(g: &Graph, v: usize) -> bool {
    let nv = g.neighbors(v);
    !nv.is_empty() && nv.iter().all(|a| g.neighbors(a).is_disjoint(nv))
}

/// One replayable step. Labels refer to the graph as it is before the step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    /// Delete these vertices; the survivors are relabelled densely.
    Delete { vertices: Vec<usize> },
    /// t-contract on this center, see [`t_contract`].
    Contract { center: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TMinorCertificate {
    pub steps: Vec<Step>,
    pub target: PatternName,
}

impl TMinorCertificate {
    pub fn replay(&self, source: &Graph) -> Result<Graph, TMinorError> {
        let mut g = source.clone();
        for step in &self.steps {
            g = match step {
                Step::Delete { vertices } => {
                    if let Some(&v) = vertices.iter().find(|&&v| v >= g.order()) {
                        return Err(TMinorError::NoSuchVertex {
                            vertex: v,
                            order: g.order(),
                        });
                    }
                    g.induced(g.vertices().difference(vertices.iter().copied().collect()))
                        .0
                }
                Step::Contract { center } => t_contract(&g, *center)?,
            };
        }
        Ok(g)
    }

    /// Replays the steps and checks the result is the named target.
    pub fn verify(&self, source: &Graph) -> bool {
        let Ok(target) = named_graph(&self.target) else {
            return false;
        };
        self.replay(source)
            .is_ok_and(|end| canonical_code(&end) == canonical_code(&target))
    }

    /// One step per line: `delete 0 3 4` or `contract 2`, then `target W5`.
    pub fn to_script(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            match step {
                Step::Delete { vertices } => {
                    out.push_str("delete");
                    for v in vertices {
                        out.push_str(&format!(" {v}"));
                    }
                }
                Step::Contract { center } => out.push_str(&format!("contract {center}")),
            }
            out.push('\n');
        }
        out.push_str(&format!("target {}\n", self.target));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum TMinorOutcome {
    Found(TMinorCertificate),
    Absent,
    /// The node budget ran out before the search space was exhausted.
    Inconclusive { explored: usize },
}

impl TMinorOutcome {
    pub fn certificate(&self) -> Option<&TMinorCertificate> {
        match self {
            TMinorOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Node budget used when none is given: unlimited up to order 10.
pub fn default_budget(order: usize) -> Option<usize> {
    (order > 10).then_some(2_000_000)
}

/// Exhaustive search with the default budget.
pub fn has_forbidden_t_minor(g: &Graph) -> TMinorOutcome {
    search_forbidden_t_minor(g, default_budget(g.order()))
}

/// Depth-first search over t-minors, memoized on canonical codes so every
/// isomorphism class is expanded at most once. Each node is tested for an
/// induced target, which also covers the whole-graph case.
pub fn search_forbidden_t_minor(g: &Graph, budget: Option<usize>) -> TMinorOutcome {
    let mut search = MinorSearch {
        dead: HashSet::new(),
        explored: 0,
        budget,
        targets: Targets::new(g.order()),
    };
    let mut steps = Vec::new();
    match search.visit(g, &mut steps) {
        Ok(Some(cert)) => TMinorOutcome::Found(cert),
        Ok(None) => TMinorOutcome::Absent,
        Err(OutOfBudget) => TMinorOutcome::Inconclusive {
            explored: search.explored,
        },
    }
}

struct OutOfBudget;

struct Targets {
    graphs: Vec<(PatternName, Graph)>,
}

impl Targets {
    fn new(max_order: usize) -> Targets {
        let mut graphs = Vec::new();
        for rim in (3..max_order).step_by(2) {
            let name = PatternName::Wheel { rim };
            graphs.push((name.clone(), named_graph(&name).unwrap()));
            if rim == 5 && max_order >= 7 {
                graphs.push((PatternName::C7Squared, named_graph(&PatternName::C7Squared).unwrap()));
            }
            if rim == 9 && max_order >= 10 {
                graphs.push((PatternName::C10Squared, named_graph(&PatternName::C10Squared).unwrap()));
            }
        }
        Targets { graphs }
    }

    fn find(&self, g: &Graph) -> Option<(PatternName, VertexSet)> {
        self.graphs
            .iter()
            .filter(|(_, t)| t.order() <= g.order() && t.size() <= g.size())
            .find_map(|(name, t)| find_induced(g, t).map(|e| (name.clone(), e.image())))
    }
}

struct MinorSearch {
    dead: HashSet<CanonicalCode>,
    explored: usize,
    budget: Option<usize>,
    targets: Targets,
}

/// Every target has at least six edges, and neither operation adds edges.
const MIN_TARGET_EDGES: usize = 6;

impl MinorSearch {
    fn visit(&mut self, g: &Graph, steps: &mut Vec<Step>) -> Result<Option<TMinorCertificate>, OutOfBudget> {
        if g.size() < MIN_TARGET_EDGES {
            return Ok(None);
        }
        self.explored += 1;
        if self.budget.is_some_and(|b| self.explored > b) {
            return Err(OutOfBudget);
        }
        if let Some((target, image)) = self.targets.find(g) {
            let mut steps = steps.clone();
            let rest = g.vertices().difference(image);
            if !rest.is_empty() {
                steps.push(Step::Delete {
                    vertices: rest.to_vec(),
                });
            }
            return Ok(Some(TMinorCertificate { steps, target }));
        }
        let children = (0..g.order())
            .filter(|&v| can_contract(g, v))
            .map(|v| (Step::Contract { center: v }, contract_unchecked(g, v)))
            .chain((0..g.order()).map(|v| {
                (
                    Step::Delete { vertices: vec![v] },
                    g.induced(g.vertices().without(v)).0,
                )
            }));
        for (step, child) in children {
            if child.size() < MIN_TARGET_EDGES {
                continue;
            }
            let code = canonical_code(&child);
            if self.dead.contains(&code) {
                continue;
            }
            steps.push(step);
            let found = self.visit(&child, steps)?;
            steps.pop();
            if found.is_some() {
                return Ok(found);
            }
            self.dead.insert(code);
        }
        Ok(None)
    }
}
