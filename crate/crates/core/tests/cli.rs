use std::path::Path;
use std::process::Command;

use hindman_lab::cli::{execute, parse_command, Status};
use hindman_lab::coloring::PopcountParity;
use hindman_lab::lowerbound::{EnumerationSchedule, VsgColoring};
use hindman_lab::oracles::{is_avoiding, TableColoring};
use hindman_lab::solver::{verify_solution, SolutionDocument};
use hindman_lab::LengthPattern;
use serde_json::Value;

fn run(args: &[&str]) -> (Value, i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hindman-lab"))
        .args(args)
        .env_remove("HINDMAN_LAB_WORKERS")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&text).unwrap_or(Value::Null);
    (v, out.status.code().unwrap(), text)
}

fn p(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn exit_code_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(d.join("k.txt"), "2 0\n").unwrap();
    std::fs::write(d.join("bad_k.txt"), "5 0\n2 1\n").unwrap();
    std::fs::write(d.join("mono.txt"), "2 4\n0 0 0 0\n").unwrap();
    std::fs::write(d.join("avoid.txt"), "2 4\n0 1 1 0\n").unwrap();
    std::fs::write(
        d.join("ctx.json"),
        r#"{"H":["2","8","32"],"a":1,"b":1,"schedule_ref":"k.txt"}"#,
    )
    .unwrap();
    std::fs::write(d.join("junk.json"), "not json").unwrap();
    let (k, bad_k, mono, avoid, ctx, junk, missing) = (
        p(d, "k.txt"),
        p(d, "bad_k.txt"),
        p(d, "mono.txt"),
        p(d, "avoid.txt"),
        p(d, "ctx.json"),
        p(d, "junk.json"),
        p(d, "missing.txt"),
    );
    let sol = p(d, "sol.json");

    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["profile", "11"], "ok"),
        (vec!["profile", "0"], "invalid_input"),
        (vec!["profile", "eleven"], "invalid_input"),
        (vec!["frobnicate"], "invalid_input"),
        (vec!["witness", "--pattern", "schur"], "ok"),
        (
            vec!["witness", "--pattern", "vdw:3", "--max", "5"],
            "not_found",
        ),
        (
            vec!["witness", "--pattern", "brauer:3:1", "--budget-steps", "10"],
            "budget_exceeded",
        ),
        (vec!["witness", "--pattern", "vdw:zero"], "invalid_input"),
        (
            vec!["find-config", "--pattern", "schur", "--coloring", &mono],
            "ok",
        ),
        (
            vec!["find-config", "--pattern", "schur", "--coloring", &avoid],
            "not_found",
        ),
        (
            vec!["find-config", "--pattern", "schur", "--coloring", &missing],
            "invalid_input",
        ),
        (
            vec![
                "solve",
                "--pattern",
                "schur",
                "--coloring",
                "popcount",
                "--target",
                "6",
                "--out",
                &sol,
            ],
            "ok",
        ),
        (
            vec![
                "solve",
                "--pattern",
                "schur",
                "--coloring",
                "popcount",
                "--mode",
                "pipeline",
                "--max",
                "3",
            ],
            "not_found",
        ),
        (
            vec![
                "solve",
                "--pattern",
                "schur",
                "--coloring",
                "popcount",
                "--budget-steps",
                "5",
            ],
            "budget_exceeded",
        ),
        (
            vec!["solve", "--pattern", "schur", "--coloring", "stripes"],
            "invalid_input",
        ),
        (vec!["vsg", "--schedule", &k, "--n", "11"], "ok"),
        (
            vec!["vsg", "--schedule", &bad_k, "--n", "11"],
            "invalid_input",
        ),
        (vec!["vsg", "--schedule", &k, "--n", "0"], "invalid_input"),
        (
            vec!["claims", "--schedule", &k, "--m", "3", "--n", "4"],
            "ok",
        ),
        (
            vec!["claims", "--schedule", &k, "--m", "3", "--n", "2"],
            "invalid_input",
        ),
        (
            vec!["claims", "--schedule", &k, "--solution", &junk],
            "invalid_input",
        ),
        (
            vec!["decode", "--schedule", &k, "--context", &ctx, "--upto", "3"],
            "ok",
        ),
        (
            vec!["decode", "--schedule", &k, "--context", &ctx, "--x", "5"],
            "not_found",
        ),
        (
            vec!["decode", "--schedule", &k, "--reproduce", "--upto", "4"],
            "ok",
        ),
        (
            vec![
                "decode",
                "--schedule",
                &k,
                "--reproduce",
                "--budget-steps",
                "3",
            ],
            "budget_exceeded",
        ),
        (vec!["decode", "--schedule", &k], "invalid_input"),
    ];
    for (args, status) in cases {
        let (v, code, text) = run(&args);
        assert_eq!(v["status"], status, "{args:?}\n{text}");
        let expected = match status {
            "ok" => 0,
            "invalid_input" => 2,
            _ => 1,
        };
        assert_eq!(code, expected, "{args:?}");
    }
    // The solution written above feeds the claims verb.
    let (v, code, _) = run(&["claims", "--schedule", &k, "--solution", &sol]);
    assert_eq!((v["status"].as_str(), code), (Some("ok"), 0));
}

#[test]
fn documented_payloads() {
    let (v, _, _) = run(&["profile", "11"]);
    assert_eq!(
        v["payload"],
        serde_json::json!({"exponents": [0, 1, 3], "lambda": 0, "mu": 3, "gaps": [[0, 1], [1, 3]]})
    );
    let (v, _, _) = run(&[
        "witness",
        "--pattern",
        "schur",
        "--colors",
        "2",
        "--max",
        "10",
    ]);
    assert_eq!(v["payload"]["value"], 5);
    assert_eq!(v["payload"]["exact"], true);
    assert_eq!(v["payload"]["certificate"], "2 4\n0 1 1 0");

    let dir = tempfile::tempdir().unwrap();
    let k = p(dir.path(), "k.txt");
    std::fs::write(&k, "2 0\n").unwrap();
    let (v, _, _) = run(&["vsg", "--schedule", &k, "--n", "11"]);
    assert_eq!(
        v["payload"],
        serde_json::json!({"SG": [[0, 1]], "VSG": [[0, 1]], "color": 1})
    );
}

#[test]
fn certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for pattern in ["schur", "vdw:3", "brauer:3:1", "folkman:2"] {
        let path = p(dir.path(), "cert.txt");
        let (v, code, _) = run(&["witness", "--pattern", pattern, "--certificate", &path]);
        assert_eq!(code, 0);
        let text = std::fs::read_to_string(&path).unwrap();
        let t: TableColoring = text.parse().unwrap();
        assert_eq!(format!("{}\n", t.to_text()), text);
        let pat: LengthPattern = pattern.parse().unwrap();
        assert_eq!(
            Value::Bool(is_avoiding(&t, &pat)),
            v["payload"]["certificate_verified"]
        );
        assert!(is_avoiding(&t, &pat));
    }
}

#[test]
fn solution_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let k = p(dir.path(), "k.txt");
    std::fs::write(&k, "3 1\n7 0\n9 5\n").unwrap();
    let schedule: EnumerationSchedule = std::fs::read_to_string(&k).unwrap().parse().unwrap();
    let out = p(dir.path(), "sol.json");

    let vsg = format!("vsg:{k}");
    let (_, code, _) = run(&[
        "solve",
        "--pattern",
        "brauer:3:1",
        "--coloring",
        &vsg,
        "--ground",
        "24",
        "--target",
        "12",
        "--out",
        &out,
    ]);
    assert_eq!(code, 0);
    let doc: SolutionDocument =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let report = verify_solution(&VsgColoring::new(schedule), &doc.solution().unwrap());
    assert_eq!(report.verified, doc.verified);
    assert!(doc.verified);

    let (_, code, _) = run(&[
        "solve",
        "--pattern",
        "schur",
        "--coloring",
        "popcount",
        "--mode",
        "iterated",
        "--target",
        "8",
        "--out",
        &out,
    ]);
    assert_eq!(code, 0);
    let doc: SolutionDocument =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(verify_solution(&PopcountParity, &doc.solution().unwrap()).verified);
    assert_eq!(doc.mode, "iterated");
}

#[test]
fn reports_are_byte_stable() {
    let args = [
        "solve",
        "--pattern",
        "vdw:3",
        "--coloring",
        "popcount",
        "--target",
        "6",
    ];
    let (_, _, a) = run(&args);
    let (_, _, b) = run(&args);
    assert_eq!(a, b);
    let c = parse_command(args).unwrap();
    assert_eq!(execute(&c).to_json(), a);
    assert_eq!(execute(&c).status, Status::Ok);
}

#[test]
fn workers_flag_and_env_agree() {
    let args = ["witness", "--pattern", "brauer:3:1"];
    let (_, _, one) = run(&args);
    let out = Command::new(env!("CARGO_BIN_EXE_hindman-lab"))
        .args(args)
        .env("HINDMAN_LAB_WORKERS", "8")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), one);
    let (_, _, flag) = run(&["witness", "--pattern", "brauer:3:1", "--workers", "4"]);
    assert_eq!(flag, one);
}
