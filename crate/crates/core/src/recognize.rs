//! Deciding t-perfection of fork-free graphs.
//!
//! Each component goes through the same steps, and the graph is t-perfect
//! iff every component is:
//!
//! 1. an induced `K4`, `W5`, `C7^2` or `C10^2` rejects;
//! 2. a claw-free component is decided by the exhaustive t-minor search;
//! 3. a component with no odd hole is perfect and `K4`-free, so accepted;
//! 4. otherwise it is rejected iff some five-hole breaks property (⋆) or
//!    some odd hole is longer than five.
//!
//! Steps 2 and 3 stand in for polynomial subroutines with exact exponential
//! searches; a verdict lists which of them it relied on.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::holes::{enumerate_induced_odd_cycles, star_violation, Hole, StarViolation};
use crate::patterns::{find_induced, find_induced_within, named_graph, small_obstructions, Embedding, PatternName};
use crate::tminor::{default_budget, search_forbidden_t_minor, Step, TMinorCertificate, TMinorOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum RecognizeError {
    #[error("input contains a fork at {:?}", embedding.map)]
    ContainsFork { embedding: Embedding },
    #[error("bounded odd-hole search (lengths 7..=19) disagrees with the exhaustive one on component {component:?}")]
    BoundedSearchDisagrees { component: Vec<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Answer {
    TPerfect,
    NotTPerfect,
    Inconclusive,
}

/// Which step decided a component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Obstruction,
    Perfect,
    ClawFree,
    Structural,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FallbackStep {
    /// Exhaustive t-minor search on a claw-free component.
    TMinorSearch,
    /// Exhaustive odd-hole enumeration.
    OddHoleSearch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentTrace {
    pub vertices: Vec<usize>,
    pub answer: Answer,
    pub branch: Branch,
    /// For accepted structural components: every odd hole, all of length
    /// five and all satisfying (⋆).
    pub five_holes: Vec<Hole>,
    pub fallback_steps_used: Vec<FallbackStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    InducedObstruction { pattern: PatternName, embedding: Embedding },
    /// Steps replay from the whole input graph.
    TMinor { certificate: TMinorCertificate },
    StarViolation { hole: Hole, violation: StarViolation },
    LongOddHole { hole: Hole },
    /// The search budget ran out on this component.
    Budget { component: Vec<usize>, explored: usize },
    /// Positive answer; the evidence is in the component traces.
    Accepted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub answer: Answer,
    /// The deciding component's branch for a negative or inconclusive
    /// answer; for a positive one, the last branch reached by any component.
    pub branch: Branch,
    pub certificate: Certificate,
    pub fallback_steps_used: Vec<FallbackStep>,
    pub components: Vec<ComponentTrace>,
}

struct ComponentResult {
    trace: ComponentTrace,
    certificate: Certificate,
}

pub fn recognize(g: &Graph) -> Result<Verdict, RecognizeError> {
    recognize_with_budget(g, None)
}

/// As [`recognize`], with a node budget for the t-minor search; `None` uses
/// the default for each component's order.
pub fn recognize_with_budget(g: &Graph, budget: Option<usize>) -> Result<Verdict, RecognizeError> {
    if let Some(embedding) = find_induced(g, &named_graph(&PatternName::Fork).unwrap()) {
        return Err(RecognizeError::ContainsFork { embedding });
    }
    let mut results = Vec::new();
    for comp in g.components() {
        results.push(component(g, comp, budget)?);
    }
    let mut fallback: Vec<FallbackStep> = results
        .iter()
        .flat_map(|r| r.trace.fallback_steps_used.iter().copied())
        .collect();
    fallback.sort();
    fallback.dedup();
    let decisive = results
        .iter()
        .position(|r| r.trace.answer == Answer::NotTPerfect)
        .or_else(|| results.iter().position(|r| r.trace.answer == Answer::Inconclusive));
    let (answer, branch, certificate) = match decisive {
        Some(i) => (results[i].trace.answer, results[i].trace.branch, results[i].certificate.clone()),
        None => (
            Answer::TPerfect,
            results.iter().map(|r| r.trace.branch).max().unwrap_or(Branch::Perfect),
            Certificate::Accepted,
        ),
    };
    Ok(Verdict {
        answer,
        branch,
        certificate,
        fallback_steps_used: fallback,
        components: results.into_iter().map(|r| r.trace).collect(),
    })
}

fn component(g: &Graph, comp: VertexSet, budget: Option<usize>) -> Result<ComponentResult, RecognizeError> {
    let mut trace = ComponentTrace {
        vertices: comp.to_vec(),
        answer: Answer::TPerfect,
        branch: Branch::Obstruction,
        five_holes: Vec::new(),
        fallback_steps_used: Vec::new(),
    };
    let reject = |mut trace: ComponentTrace, branch, certificate| {
        trace.answer = Answer::NotTPerfect;
        trace.branch = branch;
        Ok(ComponentResult { trace, certificate })
    };

    for pattern in small_obstructions() {
        if let Some(embedding) = find_induced_within(g, comp, &named_graph(&pattern).unwrap()) {
            return reject(trace, Branch::Obstruction, Certificate::InducedObstruction { pattern, embedding });
        }
    }

    let (sub, map) = g.induced(comp);
    if find_induced_within(g, comp, &named_graph(&PatternName::Claw).unwrap()).is_none() {
        trace.branch = Branch::ClawFree;
        trace.fallback_steps_used.push(FallbackStep::TMinorSearch);
        let budget = budget.or(default_budget(sub.order()));
        return match search_forbidden_t_minor(&sub, budget) {
            TMinorOutcome::Found(mut certificate) => {
                let outside = g.vertices().difference(comp);
                if !outside.is_empty() {
                    certificate.steps.insert(0, Step::Delete { vertices: outside.to_vec() });
                }
                reject(trace, Branch::ClawFree, Certificate::TMinor { certificate })
            }
            TMinorOutcome::Absent => Ok(ComponentResult {
                trace,
                certificate: Certificate::Accepted,
            }),
            TMinorOutcome::Inconclusive { explored } => {
                trace.answer = Answer::Inconclusive;
                Ok(ComponentResult {
                    certificate: Certificate::Budget {
                        component: comp.to_vec(),
                        explored,
                    },
                    trace,
                })
            }
        };
    }

    trace.fallback_steps_used.push(FallbackStep::OddHoleSearch);
    let lift = |h: &Hole| Hole::new(g, &h.as_slice().iter().map(|&v| map[v]).collect::<Vec<_>>()).unwrap();
    let holes: Vec<Hole> = enumerate_induced_odd_cycles(&sub, 5, None).iter().map(lift).collect();
    if holes.is_empty() {
        trace.branch = Branch::Perfect;
        return Ok(ComponentResult {
            trace,
            certificate: Certificate::Accepted,
        });
    }

    trace.branch = Branch::Structural;
    let five: Vec<Hole> = holes.iter().filter(|h| h.len() == 5).cloned().collect();
    for hole in &five {
        if let Some(violation) = star_violation(g, hole).expect("enumerated holes are valid") {
            let hole = hole.clone();
            return reject(trace, Branch::Structural, Certificate::StarViolation { hole, violation });
        }
    }
    let long = holes.iter().find(|h| h.len() != 5).cloned();
    if !five.is_empty() {
        let bounded = !enumerate_induced_odd_cycles(&sub, 7, Some(19)).is_empty();
        if bounded != long.is_some() {
            return Err(RecognizeError::BoundedSearchDisagrees {
                component: comp.to_vec(),
            });
        }
    }
    if let Some(hole) = long {
        return reject(trace, Branch::Structural, Certificate::LongOddHole { hole });
    }
    trace.five_holes = five;
    Ok(ComponentResult {
        trace,
        certificate: Certificate::Accepted,
    })
}

impl Verdict {
    /// Re-checks the certificate against `g` without trusting the pipeline:
    /// negative certificates by embedding, replay or direct (⋆) check, and
    /// positive traces by recomputing each component's evidence.
    pub fn verify(&self, g: &Graph) -> bool {
        match (&self.answer, &self.certificate) {
            (Answer::NotTPerfect, Certificate::InducedObstruction { pattern, embedding }) => {
                named_graph(pattern).is_ok_and(|p| embedding.verify(g, &p))
            }
            (Answer::NotTPerfect, Certificate::TMinor { certificate }) => certificate.verify(g),
            (Answer::NotTPerfect, Certificate::StarViolation { hole, violation }) => {
                star_violation(g, hole).is_ok_and(|v| v.as_ref() == Some(violation))
            }
            (Answer::NotTPerfect, Certificate::LongOddHole { hole }) => {
                hole.len() % 2 == 1 && hole.len() > 5 && Hole::new(g, hole.as_slice()).as_ref() == Ok(hole)
            }
            (Answer::Inconclusive, Certificate::Budget { .. }) => true,
            (Answer::TPerfect, Certificate::Accepted) => {
                let comps = g.components();
                comps.len() == self.components.len()
                    && comps
                        .iter()
                        .zip(&self.components)
                        .all(|(&c, t)| c.to_vec() == t.vertices && verify_accepted(g, c, t))
            }
            _ => false,
        }
    }
}

fn verify_accepted(g: &Graph, comp: VertexSet, t: &ComponentTrace) -> bool {
    if t.answer != Answer::TPerfect {
        return false;
    }
    let (sub, _) = g.induced(comp);
    let obstruction_free = small_obstructions()
        .iter()
        .all(|p| find_induced(&sub, &named_graph(p).unwrap()).is_none());
    let claw = find_induced(&sub, &named_graph(&PatternName::Claw).unwrap()).is_some();
    let odd_holes = || enumerate_induced_odd_cycles(&sub, 5, None);
    obstruction_free
        && match t.branch {
            Branch::ClawFree => !claw && search_forbidden_t_minor(&sub, None) == TMinorOutcome::Absent,
            Branch::Perfect => claw && odd_holes().is_empty(),
            Branch::Structural => {
                let holes = odd_holes();
                claw && !t.five_holes.is_empty()
                    && holes.len() == t.five_holes.len()
                    && holes.iter().all(|h| h.len() == 5)
                    && t.five_holes
                        .iter()
                        .all(|h| h.vertex_set().is_subset(comp) && star_violation(g, h) == Ok(None))
            }
            Branch::Obstruction => false,
        }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{figure3, figure3_flag_sets, Figure3Variant};

    fn named(name: PatternName) -> Graph {
        named_graph(&name).unwrap()
    }

    fn answer(g: &Graph) -> Answer {
        let v = recognize(g).unwrap();
        assert!(v.verify(g), "{v:?}");
        v.answer
    }

    #[test]
    fn forbidden_family() {
        for name in [
            PatternName::Complete { len: 4 },
            PatternName::Wheel { rim: 5 },
            PatternName::Wheel { rim: 7 },
            PatternName::C7Squared,
            PatternName::C10Squared,
        ] {
            assert_eq!(answer(&named(name.clone())), Answer::NotTPerfect, "{name}");
        }
    }

    #[test]
    fn small_positives() {
        let v = recognize(&named(PatternName::Cycle { len: 5 })).unwrap();
        assert_eq!((v.answer, v.branch), (Answer::TPerfect, Branch::ClawFree));
        assert_eq!(v.fallback_steps_used, vec![FallbackStep::TMinorSearch]);
        let v = recognize(&named(PatternName::Claw)).unwrap();
        assert_eq!((v.answer, v.branch), (Answer::TPerfect, Branch::Perfect));
        assert_eq!(answer(&Graph::empty(0)), Answer::TPerfect);
    }

    #[test]
    fn figure3_templates_are_accepted() {
        for variant in [Figure3Variant::A, Figure3Variant::B, Figure3Variant::C] {
            for flags in figure3_flag_sets(variant) {
                let g = figure3(variant, &flags).unwrap().graph;
                let v = recognize(&g).unwrap();
                assert_eq!(v.answer, Answer::TPerfect, "{variant:?} {flags:?}");
                assert_eq!(v.branch, Branch::Structural);
                assert!(v.verify(&g));
            }
        }
    }

    #[test]
    fn fork_is_a_scope_error() {
        assert!(matches!(
            recognize(&named(PatternName::Fork)),
            Err(RecognizeError::ContainsFork { .. })
        ));
    }

    #[test]
    fn bad_attachment_is_rejected_with_witness() {
        // Five-hole with a claw-centred vertex seeing v1, v2, v3.
        let mut e: Vec<_> = named(PatternName::Cycle { len: 5 }).edge_list();
        e.extend([(5, 0), (5, 1), (5, 2), (6, 1)]);
        let g = Graph::new(7, &e).unwrap();
        if let Ok(v) = recognize(&g) {
            assert_eq!(v.answer, Answer::NotTPerfect);
            assert!(v.verify(&g));
        }
    }

    #[test]
    fn long_hole_with_a_claw_is_rejected() {
        // The rim is the only odd hole; hub plus alternate rim vertices is a claw.
        let g = named(PatternName::Wheel { rim: 7 });
        let v = recognize(&g).unwrap();
        assert_eq!(v.answer, Answer::NotTPerfect);
        assert!(matches!(v.certificate, Certificate::LongOddHole { .. }));
        assert!(v.verify(&g));
    }

    #[test]
    fn components_combine_by_conjunction() {
        let mut e: Vec<_> = named(PatternName::Cycle { len: 5 }).edge_list();
        e.extend([(5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)]);
        let g = Graph::new(9, &e).unwrap();
        let v = recognize(&g).unwrap();
        assert_eq!(v.answer, Answer::NotTPerfect);
        assert_eq!(v.components.len(), 2);
        assert!(v.verify(&g));

        let mut e: Vec<_> = named(PatternName::Cycle { len: 5 }).edge_list();
        e.extend([(5, 6), (5, 7), (5, 8)]);
        let g = Graph::new(9, &e).unwrap();
        let v = recognize(&g).unwrap();
        assert_eq!((v.answer, v.branch), (Answer::TPerfect, Branch::ClawFree));
        assert!(v.verify(&g));
    }

    #[test]
    fn minor_certificates_replay_from_the_whole_graph() {
        // An isolated vertex next to the figure-4 graph.
        let mut e: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        e.extend([(7, 0), (7, 1), (7, 4), (7, 5)]);
        let g = Graph::new(9, &e.iter().map(|&(a, b)| (a + 1, b + 1)).collect::<Vec<_>>()).unwrap();
        let v = recognize(&g).unwrap();
        assert_eq!(v.answer, Answer::NotTPerfect);
        assert!(v.verify(&g));
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let c9 = named(PatternName::Cycle { len: 9 });
        let v = recognize_with_budget(&c9, Some(1)).unwrap();
        assert_eq!(v.answer, Answer::Inconclusive);
    }

    #[test]
    fn verdict_round_trips_through_json() {
        let g = figure3(Figure3Variant::A, &[2, 3]).unwrap().graph;
        let v = recognize(&g).unwrap();
        let back: Verdict = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(back, v);
    }
}
