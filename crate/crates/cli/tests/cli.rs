use std::process::{Command, Output};

use rpgraph::constructions::{build, Family};
use rpgraph::partition::{is_rp, SolverBudget};

fn rpgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rpgraph"))
        .args(args)
        .env_remove("RP_BUDGET_N")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(code(&rpgraph(&["check", "rp", "T(1,1,2)"])), 0);
    assert_eq!(code(&rpgraph(&["check", "rp", "T(1,1,3)"])), 1);
    assert_eq!(code(&rpgraph(&["semistar", "check", "K2(1,1,2,6,3)"])), 0);

    let out = rpgraph(&["semistar", "minimal", "2", "5", "--bound", "8"]);
    assert_eq!(code(&out), 0);
    let listed: Vec<String> = stdout(&out)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(str::to_string)
        .collect();
    assert_eq!(listed, vec!["K2(1,1,1,2,4)", "K2(1,1,2,2,3)"]);
}

#[test]
fn exit_status_matches_library() {
    for expr in [
        "P5",
        "C6",
        "T(1,2,3)",
        "T(1,1,4)",
        "KM(2,4)",
        "KM(3,3)",
        "B(1,1,2)",
        "join(P2,Kn1,P3)",
        "E3",
    ] {
        let g = build(&expr.parse::<Family>().unwrap()).unwrap().graph;
        let verdict = is_rp(&g, SolverBudget::default()).unwrap().verdict;
        let out = rpgraph(&["check", "rp", expr]);
        assert_eq!(
            code(&out),
            if verdict { 0 } else { 1 },
            "{expr}: {}",
            stdout(&out)
        );
    }
    assert_eq!(code(&rpgraph(&["check", "traceable", "T(1,1,1)"])), 1);
    assert_eq!(code(&rpgraph(&["check", "matchable", "T(1,1,1)"])), 1);
    assert_eq!(code(&rpgraph(&["check", "ap", "KM(1,3)"])), 1);
    assert_eq!(code(&rpgraph(&["check", "ap", "T(1,1,2)"])), 0);
    assert_eq!(code(&rpgraph(&["conditions", "treerp", "T(1,4,13)"])), 0);
    assert_eq!(code(&rpgraph(&["conditions", "treerp", "T(1,5,7)"])), 1);
    assert_eq!(code(&rpgraph(&["conditions", "rpspan", "KM(1,4)"])), 1);
    assert_eq!(
        code(&rpgraph(&["conditions", "spider", "KM(1,5)", "--k", "4"])),
        1
    );
    assert_eq!(code(&rpgraph(&["conditions", "spider", "C6"])), 0);
}

#[test]
fn errors_exit_with_two() {
    let out = rpgraph(&["check", "rp", "T(1,1"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 1, column"), "{}", stderr(&out));

    let out = rpgraph(&["check", "rp", "P14"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("budget"), "{}", stderr(&out));
    let out = Command::new(env!("CARGO_BIN_EXE_rpgraph"))
        .args(["check", "rp", "P14"])
        .env("RP_BUDGET_N", "14")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);

    assert_eq!(code(&rpgraph(&["check", "sideways", "P3"])), 2);
}

#[test]
fn certificates_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let cert = cert.to_str().unwrap();
    assert_eq!(
        code(&rpgraph(&["check", "rp", "T(2,4,6)", "--cert-out", cert])),
        0
    );
    let out = rpgraph(&["cert", "verify", "T(2,4,6)", cert]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("tier: elementary"));
    // the certificate names vertices of T(2,4,6) and does not fit T(1,4,7)
    assert_eq!(code(&rpgraph(&["cert", "verify", "T(1,4,7)", cert])), 1);

    std::fs::write(
        cert,
        "{\"version\": 1, \"certificate\": {\"kind\": \"tree\"}}",
    )
    .unwrap();
    let out = rpgraph(&["cert", "verify", "T(2,4,6)", cert]);
    assert_eq!(code(&out), 2);
    assert!(
        stderr(&out).contains("$.certificate.kind"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn construct_writes_edge_lists() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("h.txt");
    let cert = dir.path().join("h.json");
    let out = rpgraph(&[
        "construct",
        "H(2,1)",
        "--out",
        file.to_str().unwrap(),
        "--cert-out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.contains("# cut: {0,1}"), "{text}");
    let out = rpgraph(&[
        "cert",
        "verify",
        file.to_str().unwrap(),
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("tier: theorem_backed"));
    assert_eq!(code(&rpgraph(&["check", "rp", file.to_str().unwrap()])), 0);
}

#[test]
fn mod_cut_example() {
    let out = rpgraph(&[
        "conditions",
        "modcut",
        "K2(1,1,1,2,2)",
        "--cut",
        "0,1",
        "--k",
        "3",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("w_k: 7/2"), "{}", stdout(&out));
    assert_eq!(code(&rpgraph(&["conditions", "modcut", "P6"])), 0);
}

fn without_wall(text: &str) -> String {
    text.lines()
        .filter(|l| !l.starts_with("WALL"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn verify_suite_is_deterministic() {
    let first = rpgraph(&["verify", "paper", "--suite", "all"]);
    assert_eq!(code(&first), 0, "{}", stdout(&first));
    let second = rpgraph(&["verify", "paper", "--suite", "all"]);
    assert_eq!(
        without_wall(&stdout(&first)),
        without_wall(&stdout(&second))
    );
    assert!(stdout(&first).contains("PASS tables/K2(1,2,3,4,6)/lambda=6"));
}

#[test]
fn corrupted_table_fixture_fails() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("tables.txt");
    let text = rpgraph_cli::tables::PAPER_TABLES.replace(
        "6 K0(0,0,0,0,6) K2(1,2,3,4,0)",
        "6 K0(0,0,0,0,6) K2(1,2,3,3,0)",
    );
    assert_ne!(text, rpgraph_cli::tables::PAPER_TABLES);
    std::fs::write(&file, text).unwrap();
    let out = rpgraph(&[
        "verify",
        "paper",
        "--suite",
        "tables",
        "--tables-file",
        file.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    let failures: Vec<String> = stdout(&out)
        .lines()
        .filter(|l| l.starts_with("FAIL"))
        .map(str::to_string)
        .collect();
    assert_eq!(failures.len(), 1, "{failures:?}");
    assert!(
        failures[0].starts_with("FAIL tables/K2(1,2,3,4,6)/lambda=6 "),
        "{}",
        failures[0]
    );
    assert!(failures[0].contains("repro: "));
}
