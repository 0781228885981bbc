use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tperfect(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tperfect"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let o = tperfect(&[&["gen"], args].concat(), "");
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn wheel_is_rejected_with_an_obstruction() {
    let o = tperfect(&["recognize", "-"], &gen(&["wheel", "5"]));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("answer: not-t-perfect"), "{out}");
    assert!(out.contains("induced W5"), "{out}");
}

#[test]
fn fork_is_out_of_scope() {
    let o = tperfect(&["recognize", "-"], &gen(&["fork"]));
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("fork"));
}

#[test]
fn bad_input_and_bad_flags_exit_one() {
    assert_eq!(tperfect(&["recognize", "-"], "3\n0 7\n").status.code(), Some(1));
    assert_eq!(tperfect(&["recognize", "--nope", "-"], "").status.code(), Some(1));
    assert_eq!(tperfect(&["recognize", "/no/such/file"], "").status.code(), Some(1));
}

#[test]
fn budget_exhaustion_exits_two() {
    let o = tperfect(&["recognize", "--budget", "1", "-"], &gen(&["cycle", "9"]));
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
    assert!(stdout(&o).contains("inconclusive"));
}

#[test]
fn json_report_round_trips() {
    let input = gen(&["figure3", "b"]);
    for cmd in ["recognize", "color", "holes", "tminor"] {
        let o = tperfect(&[cmd, "--json", "-"], &input);
        assert!(o.status.success(), "{cmd}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let again: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(v, again);
        assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
        assert!(v["wall_time_ms"].is_u64());
        assert!(v["fallback_steps_used"].is_array());
    }
}

#[test]
fn graph6_and_edge_list_agree() {
    let g6 = gen(&["c7sq", "--graph6"]);
    let a = stdout(&tperfect(&["recognize", "-"], &g6));
    let b = stdout(&tperfect(&["recognize", "-"], &gen(&["c7sq"])));
    assert_eq!(a, b);
    assert!(a.contains("not-t-perfect"));
}

#[test]
fn strong_oracle_finds_the_k4_violation() {
    let o = tperfect(&["oracle", "--mode", "strong", "--wmax", "1", "-"], &gen(&["complete", "4"]));
    assert!(o.status.success());
    assert!(!stdout(&o).contains("pass"), "{}", stdout(&o));
}

#[test]
fn corpus_output_is_byte_identical_across_runs() {
    let mut input = String::new();
    for args in [
        vec!["cycle", "5"],
        vec!["cycle", "7"],
        vec!["wheel", "5"],
        vec!["complete", "4"],
        vec!["claw"],
        vec!["figure3", "a"],
        vec!["figure3", "b"],
        vec!["figure3", "c"],
        vec!["path", "6"],
        vec!["fork"],
    ] {
        input.push_str(&gen(&[args, vec!["--graph6"]].concat()));
    }
    let first = tperfect(&["corpus", "--json", "-"], &input);
    let second = tperfect(&["corpus", "--json", "-"], &input);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["payload"]["disagreements"], 0);
    assert_eq!(v["payload"]["lines"].as_array().unwrap().len(), 10);
}
