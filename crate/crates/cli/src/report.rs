use serde::{Deserialize, Serialize};

use tperfect::color::Coloring;
use tperfect::holes::Hole;
use tperfect::polytope::StrongReport;
use tperfect::recognize::{Answer, FallbackStep, Verdict};
use tperfect::tminor::TMinorOutcome;

/// Everything a run produced, as emitted by `--json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    /// SHA-256 of the input bytes, hex.
    pub input_digest: Option<String>,
    pub payload: Payload,
    pub fallback_steps_used: Vec<FallbackStep>,
    /// Omitted by `corpus` so its output is reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Gen { name: String, edge_list: String, graph6: String },
    Recognize { verdict: Verdict },
    Color { coloring: Coloring },
    OracleTPerfect { t_perfect: bool, vertices: Vec<Vec<String>> },
    OracleStrong { report: StrongReport, summary: String },
    TMinor { outcome: TMinorOutcome, script: Option<String> },
    Holes { holes: Vec<Hole> },
    Corpus { lines: Vec<CorpusLine>, disagreements: usize, inconclusive: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusLine {
    pub graph6: String,
    pub order: usize,
    /// `None` when the graph contains a fork and is out of scope.
    pub recognize: Option<Answer>,
    pub forbidden_t_minor: Option<bool>,
    /// `None` when the order exceeds the oracle limit.
    pub polytope_integral: Option<bool>,
    pub agree: bool,
}
