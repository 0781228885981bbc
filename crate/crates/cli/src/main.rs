//! `tperfect`: recognition, coloring and oracles for fork-free graphs.
//!
//! Exit status: 0 for a definite answer, 2 when a search budget ran out,
//! 3 when `corpus` finds the oracles disagreeing, 1 for any input error.

mod report;

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use report::{CorpusLine, Payload, RunReport};
use tperfect::color::three_color;
use tperfect::holes::enumerate_induced_odd_cycles;
use tperfect::io::{parse_graph, parse_graph6, write_edge_list, write_graph6};
use tperfect::patterns::{figure3, is_fork_free, named_graph, Figure3Variant, PatternName};
use tperfect::polytope::{build_system, enumerate_vertices, strong_t_perfect_check, t_perfect_oracle};
use tperfect::recognize::{recognize_with_budget, Answer, Certificate, RecognizeError, Verdict};
use tperfect::tminor::{default_budget, search_forbidden_t_minor, TMinorOutcome};
use tperfect::Graph;

#[derive(Parser)]
#[command(name = "tperfect", version, about = "Fork-free t-perfect graphs: recognition, coloring, oracles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named graph: claw, fork, cycle N, path N, complete N,
    /// wheel N, c7sq, c10sq, figure3 {a|b|c} [MINUS...].
    Gen {
        name: String,
        params: Vec<String>,
        #[arg(long)]
        graph6: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide t-perfection of a fork-free graph.
    Recognize {
        file: String,
        #[arg(long)]
        json: bool,
        /// Node budget for the t-minor search.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Color a t-perfect fork-free graph with at most three colors.
    Color {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the polyhedral oracles.
    Oracle {
        file: String,
        #[arg(long, value_enum, default_value = "tperfect")]
        mode: OracleMode,
        #[arg(long, default_value_t = 1)]
        wmax: u32,
        #[arg(long)]
        json: bool,
    },
    /// Search for a forbidden t-minor and print a replayable script.
    Tminor {
        file: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// List induced odd cycles, one per line.
    Holes {
        file: String,
        #[arg(long, default_value_t = 5)]
        min: usize,
        #[arg(long)]
        max: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check recognizer, t-minor search and polytope on graph6 lines.
    Corpus {
        file: String,
        /// Skip the polytope oracle above this order.
        #[arg(long, default_value_t = 10)]
        oracle_max_order: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    Tperfect,
    Strong,
}

struct Outcome {
    report: RunReport,
    text: String,
    status: u8,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let json = match &cli.command {
        Command::Gen { json, .. }
        | Command::Recognize { json, .. }
        | Command::Color { json, .. }
        | Command::Oracle { json, .. }
        | Command::Tminor { json, .. }
        | Command::Holes { json, .. }
        | Command::Corpus { json, .. } => *json,
    };
    let start = Instant::now();
    match run(cli.command, argv[1..].to_vec()) {
        Ok(mut out) => {
            if !matches!(out.report.payload, Payload::Corpus { .. }) {
                out.report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&out.report).expect("reports serialize"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.status)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn read_input(file: &str) -> Result<Vec<u8>, String> {
    let mut bytes = Vec::new();
    if file == "-" {
        std::io::stdin().read_to_end(&mut bytes).map_err(|e| format!("stdin: {e}"))?;
    } else {
        bytes = std::fs::read(file).map_err(|e| format!("{file}: {e}"))?;
    }
    Ok(bytes)
}

fn load(file: &str) -> Result<(Graph, String), String> {
    let bytes = read_input(file)?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| format!("{file}: not UTF-8"))?;
    let g = parse_graph(&text).map_err(|e| format!("{file}: {e}"))?;
    Ok((g, digest(&bytes)))
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn report(command: Vec<String>, input_digest: Option<String>, payload: Payload) -> RunReport {
    RunReport {
        command,
        input_digest,
        payload,
        fallback_steps_used: Vec::new(),
        wall_time_ms: None,
    }
}

fn run(command: Command, argv: Vec<String>) -> Result<Outcome, String> {
    match command {
        Command::Gen { name, params, graph6, .. } => {
            let g = generate(&name, &params)?;
            let (el, g6) = (write_edge_list(&g), write_graph6(&g));
            let text = if graph6 { format!("{g6}\n") } else { el.clone() };
            let payload = Payload::Gen { name, edge_list: el, graph6: g6 };
            Ok(Outcome { report: report(argv, None, payload), text, status: 0 })
        }
        Command::Recognize { file, budget, .. } => {
            let (g, d) = load(&file)?;
            let verdict = recognize_with_budget(&g, budget).map_err(scope_error)?;
            let text = describe_verdict(&verdict);
            let status = if verdict.answer == Answer::Inconclusive { 2 } else { 0 };
            let mut r = report(argv, Some(d), Payload::Recognize { verdict: verdict.clone() });
            r.fallback_steps_used = verdict.fallback_steps_used;
            Ok(Outcome { report: r, text, status })
        }
        Command::Color { file, .. } => {
            let (g, d) = load(&file)?;
            let coloring = three_color(&g).map_err(|e| e.to_string())?;
            let mut text = String::new();
            for c in &coloring.components {
                let b = serde_json::to_value(c.branch).unwrap();
                text.push_str(&format!("component {:?}: {}\n", c.vertices, b.as_str().unwrap()));
            }
            text.push_str(&format!("colors: {}\n", coloring.num_colors()));
            for (i, class) in coloring.classes().iter().enumerate() {
                text.push_str(&format!("class {i}: {}\n", join(class)));
            }
            Ok(Outcome { report: report(argv, Some(d), Payload::Color { coloring }), text, status: 0 })
        }
        Command::Oracle { file, mode, wmax, .. } => {
            let (g, d) = load(&file)?;
            if g.order() > 12 {
                return Err(format!("the polytope oracles are exponential; order {} is over 12", g.order()));
            }
            let (payload, text) = match mode {
                OracleMode::Tperfect => {
                    let t_perfect = t_perfect_oracle(&g);
                    let vertices: Vec<Vec<String>> = enumerate_vertices(&build_system(&g))
                        .iter()
                        .map(|p| p.iter().map(|x| x.to_string()).collect())
                        .collect();
                    let mut text = format!("t-perfect: {t_perfect}\nvertices: {}\n", vertices.len());
                    for p in &vertices {
                        text.push_str(&format!("({})\n", p.join(", ")));
                    }
                    (Payload::OracleTPerfect { t_perfect, vertices }, text)
                }
                OracleMode::Strong => {
                    let rep = strong_t_perfect_check(&g, wmax);
                    let summary = rep.to_string();
                    let text = format!("{summary}\n");
                    (Payload::OracleStrong { report: rep, summary }, text)
                }
            };
            Ok(Outcome { report: report(argv, Some(d), payload), text, status: 0 })
        }
        Command::Tminor { file, budget, .. } => {
            let (g, d) = load(&file)?;
            let outcome = search_forbidden_t_minor(&g, budget.or(default_budget(g.order())));
            let (text, status, script) = match &outcome {
                TMinorOutcome::Found(c) => (c.to_script(), 0, Some(c.to_script())),
                TMinorOutcome::Absent => ("absent\n".to_string(), 0, None),
                TMinorOutcome::Inconclusive { explored } => {
                    (format!("inconclusive after {explored} nodes\n"), 2, None)
                }
            };
            Ok(Outcome { report: report(argv, Some(d), Payload::TMinor { outcome, script }), text, status })
        }
        Command::Holes { file, min, max, .. } => {
            let (g, d) = load(&file)?;
            let holes = enumerate_induced_odd_cycles(&g, min.max(3), max);
            let text: String = holes.iter().map(|h| format!("{}\n", join(h.as_slice()))).collect();
            Ok(Outcome { report: report(argv, Some(d), Payload::Holes { holes }), text, status: 0 })
        }
        Command::Corpus { file, oracle_max_order, .. } => corpus(&file, oracle_max_order, argv),
    }
}

fn scope_error(e: RecognizeError) -> String {
    match e {
        RecognizeError::ContainsFork { embedding } => {
            format!("out of scope: the graph contains a fork at {}", join(&embedding.map))
        }
        other => other.to_string(),
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn describe_verdict(v: &Verdict) -> String {
    let name = |x: serde_json::Value| x.as_str().unwrap().to_string();
    let mut text = format!(
        "answer: {}\nbranch: {}\n",
        name(serde_json::to_value(v.answer).unwrap()),
        name(serde_json::to_value(v.branch).unwrap())
    );
    let cert = match &v.certificate {
        Certificate::InducedObstruction { pattern, embedding } => {
            format!("induced {pattern} at {}", join(&embedding.map))
        }
        Certificate::TMinor { certificate } => {
            format!("t-minor {}:\n{}", certificate.target, certificate.to_script().trim_end())
        }
        Certificate::StarViolation { hole, violation } => format!(
            "vertex {} breaks property (*) on five-hole {}",
            violation.vertex(),
            join(hole.as_slice())
        ),
        Certificate::LongOddHole { hole } => format!("odd hole of length {}: {}", hole.len(), join(hole.as_slice())),
        Certificate::Budget { explored, .. } => format!("budget exhausted after {explored} nodes"),
        Certificate::Accepted => "accepted".to_string(),
    };
    text.push_str(&format!("certificate: {cert}\n"));
    if !v.fallback_steps_used.is_empty() {
        let steps: Vec<String> = v
            .fallback_steps_used
            .iter()
            .map(|s| name(serde_json::to_value(s).unwrap()))
            .collect();
        text.push_str(&format!("fallback steps: {}\n", steps.join(", ")));
    }
    text
}

fn generate(name: &str, params: &[String]) -> Result<Graph, String> {
    let num = |i: usize| -> Result<usize, String> {
        params
            .get(i)
            .ok_or_else(|| format!("{name} needs a size"))?
            .parse()
            .map_err(|_| format!("not a number: {}", params[i]))
    };
    let pattern = match name {
        "claw" => PatternName::Claw,
        "fork" => PatternName::Fork,
        "cycle" => PatternName::Cycle { len: num(0)? },
        "path" => PatternName::Path { len: num(0)? },
        "complete" => PatternName::Complete { len: num(0)? },
        "wheel" => PatternName::Wheel { rim: num(0)? },
        "c7sq" => PatternName::C7Squared,
        "c10sq" => PatternName::C10Squared,
        "figure3" => {
            let variant = match params.first().map(String::as_str) {
                Some("a") => Figure3Variant::A,
                Some("b") => Figure3Variant::B,
                Some("c") => Figure3Variant::C,
                _ => return Err("figure3 needs a variant: a, b or c".into()),
            };
            let minus = params[1..]
                .iter()
                .map(|p| p.parse::<u8>().map_err(|_| format!("not a part index: {p}")))
                .collect::<Result<Vec<_>, _>>()?;
            return figure3(variant, &minus).map(|f| f.graph).map_err(|e| e.to_string());
        }
        other => return Err(format!("unknown graph name {other:?}")),
    };
    named_graph(&pattern).map_err(|e| e.to_string())
}

fn corpus(file: &str, oracle_max_order: usize, argv: Vec<String>) -> Result<Outcome, String> {
    let bytes = read_input(file)?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| format!("{file}: not UTF-8"))?;
    let graphs = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l).map(|g| (l.trim().to_string(), g)).map_err(|e| format!("line {}: {e}", i + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    let lines: Vec<CorpusLine> = graphs
        .par_iter()
        .map(|(g6, g)| corpus_line(g6, g, oracle_max_order))
        .collect();
    let disagreements = lines.iter().filter(|l| !l.agree).count();
    let inconclusive = lines
        .iter()
        .filter(|l| l.recognize == Some(Answer::Inconclusive) || (l.recognize.is_some() && l.forbidden_t_minor.is_none()))
        .count();
    let show = |x: Option<bool>| x.map_or("-".to_string(), |b| b.to_string());
    let mut out = String::new();
    for l in &lines {
        let rec = l
            .recognize
            .map_or("fork".to_string(), |a| serde_json::to_value(a).unwrap().as_str().unwrap().to_string());
        out.push_str(&format!(
            "{} recognize={} t-minor={} integral={} {}\n",
            l.graph6,
            rec,
            show(l.forbidden_t_minor),
            show(l.polytope_integral),
            if l.agree { "ok" } else { "DISAGREE" }
        ));
    }
    out.push_str(&format!("{} graphs, {disagreements} disagreements, {inconclusive} inconclusive\n", lines.len()));
    let status = if disagreements > 0 {
        3
    } else if inconclusive > 0 {
        2
    } else {
        0
    };
    let payload = Payload::Corpus { lines, disagreements, inconclusive };
    Ok(Outcome { report: report(argv, Some(digest(&bytes)), payload), text: out, status })
}

fn corpus_line(g6: &str, g: &Graph, oracle_max_order: usize) -> CorpusLine {
    let mut line = CorpusLine {
        graph6: g6.to_string(),
        order: g.order(),
        recognize: None,
        forbidden_t_minor: None,
        polytope_integral: None,
        agree: true,
    };
    if !is_fork_free(g) {
        return line;
    }
    line.recognize = recognize_with_budget(g, None).ok().map(|v| v.answer);
    line.forbidden_t_minor = match search_forbidden_t_minor(g, default_budget(g.order())) {
        TMinorOutcome::Found(_) => Some(true),
        TMinorOutcome::Absent => Some(false),
        TMinorOutcome::Inconclusive { .. } => None,
    };
    if g.order() <= oracle_max_order {
        line.polytope_integral = Some(t_perfect_oracle(g));
    }
    let positive = match line.recognize {
        Some(Answer::TPerfect) => Some(true),
        Some(Answer::NotTPerfect) => Some(false),
        _ => None,
    };
    let votes = [positive, line.forbidden_t_minor.map(|f| !f), line.polytope_integral];
    let decided: Vec<bool> = votes.iter().flatten().copied().collect();
    line.agree = decided.windows(2).all(|w| w[0] == w[1]);
    line
}
