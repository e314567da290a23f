use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use permarray::io::read_pa;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_permarray"));
    c.env_remove("PERMARRAY_THREADS");
    c
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().unwrap()
}

fn json(dir: &Path, args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(dir, &full);
    let v: Value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

#[test]
fn summaries_have_the_documented_shape() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v) = json(dir.path(), &["gen-group", "--family", "agl1", "--q", "5", "-o", "g.pa", "--verify-full"]);
    assert_eq!(code, 0);
    for key in ["command", "inputs", "outputs", "metrics", "status"] {
        assert!(v.get(key).is_some(), "missing {key} in {v}");
    }
    assert_eq!(v["command"], "gen-group");
    assert_eq!(v["status"], "ok");
    assert_eq!(read_pa(dir.path().join("g.pa")).unwrap().array.len(), 20);
}

#[test]
fn projective_group_of_order_50616() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _) = json(dir.path(), &["gen-group", "--family", "pgl2", "--q", "37", "-o", "pgl37.pa"]);
    assert_eq!(code, 0);
    let g = read_pa(dir.path().join("pgl37.pa")).unwrap();
    assert_eq!((g.array.len(), g.array.n()), (50_616, 38));
}

#[test]
fn agl4_extension_matches_the_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let sys = data("agl4_simple.json");
    let out = run(dir.path(), &["extend", "--mode", "simple", "--system", sys.to_str().unwrap(), "-o", "ext.pa", "--verify"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let got = std::fs::read(dir.path().join("ext.pa")).unwrap();
    assert_eq!(got, std::fs::read(data("agl4_simple_ext.pa")).unwrap());
}

#[test]
fn verification_failure_exits_1_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(data("agl4_simple_ext.pa")).unwrap();
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    let rows: Vec<usize> = (0..lines.len()).filter(|&i| !lines[i].starts_with('#')).collect();
    // Two rows at distance 2 break a distance-4 claim.
    let mut first: Vec<u16> = lines[rows[0]].split_whitespace().map(|t| t.parse().unwrap()).collect();
    first.swap(0, 1);
    lines[rows[1]] = first.iter().map(u16::to_string).collect::<Vec<_>>().join(" ");
    std::fs::write(dir.path().join("bad.pa"), lines.join("\n") + "\n").unwrap();
    let (code, v) = json(dir.path(), &["verify", "--pa", "bad.pa", "--distance", "4"]);
    assert_eq!(code, 1, "{v}");
    assert_eq!(v["status"], "failed");
    let w = v["metrics"]["witness_pair"].as_array().expect("witness pair");
    assert_eq!(w.len(), 2);

    let (code, _) = json(dir.path(), &["verify", "--pa", data("agl4_simple_ext.pa").to_str().unwrap(), "--distance", "4"]);
    assert_eq!(code, 0);
}

#[test]
fn usage_and_input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["gen-group", "--family", "agl1"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["verify", "--pa", "x.pa", "--distance", "3", "--mode", "sampled"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["verify", "--pa", "missing.pa", "--distance", "3"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["gen-group", "--family", "agl1", "--q", "6", "-o", "g.pa"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["no-such-command"]).status.code(), Some(2));
}

#[test]
fn invalid_system_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let desc = r#"{"n": 4, "d": 4,
        "blocks": [{"group": {"family": "agl1", "q": 4}, "block": 0}, {"group": {"family": "agl1", "q": 4}, "block": 1}],
        "P": [[0, 1], [1, 2, 3]], "Q": [[0, 1], [2, 3]]}"#;
    std::fs::write(dir.path().join("bad.json"), desc).unwrap();
    let (code, v) = json(dir.path(), &["extend", "--mode", "simple", "--system", "bad.json", "-o", "o.pa"]);
    assert_eq!(code, 1, "{v}");
}

#[test]
fn seeded_runs_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert!(run(p, &["gen-group", "--family", "agl1", "--q", "7", "-o", "g.pa"]).status.success());
    for out in ["a.pa", "b.pa"] {
        let o = run(p, &["search-coset", "--mode", "random", "--group", "g.pa", "--distance", "4", "--trials", "500", "--seed", "9", "-o", out]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(std::fs::read(p.join("a.pa")).unwrap(), std::fs::read(p.join("b.pa")).unwrap());
    assert_eq!(
        run(p, &["search-coset", "--mode", "random", "--group", "g.pa", "--distance", "4", "-o", "c.pa"]).status.code(),
        Some(2),
        "random search without a seed is a usage error"
    );
}

#[test]
fn pipeline_runs_its_steps_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let spec = r#"{"seed": 5, "steps": [
        {"command": "gen-group", "args": ["--family", "agl1", "--q", "7", "-o", "g.pa"]},
        {"command": "search-coset", "args": ["--mode", "random", "--group", "g.pa", "--distance", "4", "--trials", "300", "-o", "reps.pa"]},
        {"command": "verify", "args": ["--pa", "g.pa", "--distance", "6", "--mode", "sampled", "--pairs", "500"]}
    ]}"#;
    std::fs::write(p.join("spec.json"), spec).unwrap();
    let (code, v) = json(p, &["pipeline", "--spec", "spec.json"]);
    assert_eq!(code, 0, "{v}");
    let first = std::fs::read(p.join("reps.pa")).unwrap();
    let (code, _) = json(p, &["pipeline", "--spec", "spec.json"]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read(p.join("reps.pa")).unwrap(), first);
}

#[test]
fn ledger_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let rec = |bound: &str| {
        run(p, &[
            "ledger", "record", "--ledger", "b.csv", "--n", "39", "--d", "37", "--bound", bound, "--method", "sequential",
            "--source", "constructed", "--artifact", "seq.pa", "--verified-mode", "full",
        ])
    };
    assert!(rec("1301").status.success());
    assert!(rec("195").status.success());
    let csv = std::fs::read_to_string(p.join("b.csv")).unwrap();
    assert!(csv.contains("39,37,1301"));
    assert!(!csv.contains("39,37,195"));
    let (code, v) = json(p, &["ledger", "compare", "--ledger", "b.csv"]);
    assert_eq!(code, 0, "{v}");
    let (code, v) = json(p, &["ledger", "conjecture"]);
    assert_eq!(code, 0, "{v}");
    assert!(v.to_string().contains("1429"));
}
