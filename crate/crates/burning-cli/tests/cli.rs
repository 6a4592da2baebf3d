//! End-to-end tests against the built binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn burning(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burning"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn line_value<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key))
        .unwrap_or_else(|| panic!("no `{key}` line in {text:?}"))
        .trim()
}

/// Scratch directory that cleans up after itself.
struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Scratch {
        let dir = std::env::temp_dir().join(format!("burning-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let path = self.0.join(name);
        std::fs::write(&path, contents).unwrap();
        path
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        std::fs::remove_dir_all(&self.0).ok();
    }
}

#[test]
fn verify_accepts_known_optimal_sequence() {
    let out = burning(&["verify", "--gen", "path:9", "--seq", "2,6,8"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "valid");
}

#[test]
fn verify_rejects_short_sequence() {
    let out = burning(&["verify", "--gen", "path:9", "--seq", "2,6"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("invalid"));
    assert!(text.contains("covered 4 of 9 vertices"));
}

#[test]
fn solve_line49_within_published_length() {
    let out = burning(&["solve", "--algo", "bgp+", "--gen", "path:49"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let length: usize = line_value(&text, "length:").parse().unwrap();
    assert!(length <= 9, "expected <= 9, got {length}");
    assert_eq!(line_value(&text, "verified:"), "true");
}

#[test]
fn solve_reproduces_worked_trace() {
    let out = burning(&[
        "solve",
        "--algo",
        "bgp",
        "--gen",
        "tight-example",
        "--start",
        "N",
        "--tiebreak",
        "pref:K,A,E,I,G,J",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(line_value(&text, "sequence:"), "N,K,A,E,I,G,J");
    assert_eq!(line_value(&text, "length:"), "7");
    assert_eq!(line_value(&text, "start:"), "N");
}

#[test]
fn solve_output_reverifies() {
    let out = burning(&["solve", "--algo", "bgp", "--gen", "grid2:5x5", "--start", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let seq = line_value(&text, "sequence:").to_string();
    let check = burning(&["verify", "--gen", "grid2:5x5", "--seq", &seq]);
    assert_eq!(check.status.code(), Some(0), "{}", stdout(&check));
}

#[test]
fn exact_path9() {
    let out = burning(&["exact", "--gen", "path:9"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("b(G) = 3"), "{text}");
    assert!(text.contains("witness:"));
}

#[test]
fn exact_refuses_large_graphs_without_override() {
    let out = burning(&["exact", "--gen", "path:25"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("limit"));
    let out = burning(&["exact", "--gen", "path:25", "--max-n", "25"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("b(G) = 5"));
}

#[test]
fn gen_emits_canonical_edge_list() {
    let out = burning(&["gen", "path:3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "# nodes 3\n0 1\n1 2\n");
}

#[test]
fn gen_round_trips_through_solve() {
    let scratch = Scratch::new("roundtrip");
    let path = scratch.0.join("ba.edges");
    let out = burning(&["gen", "ba:40,2,7", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let solved = burning(&["solve", "--input", path.to_str().unwrap(), "--algo", "bgp+"]);
    assert_eq!(solved.status.code(), Some(0), "{}", stderr(&solved));
    assert_eq!(line_value(&stdout(&solved), "verified:"), "true");
}

#[test]
fn seeded_runs_are_reproducible() {
    let args = [
        "solve", "--gen", "ba:30,2,9", "--algo", "bgp", "--tiebreak", "random", "--seed", "5",
    ];
    let a = burning(&args);
    let b = burning(&args);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn bench_runs_a_manifest() {
    let scratch = Scratch::new("bench");
    let manifest = scratch.file(
        "m.toml",
        r#"
            seed = 11
            runs_per_instance = 2
            algorithms = ["bgp", "bgp_plus"]

            [[instance]]
            name = "p9"
            generator = "path:9"
            vertices = 9
            edges = 8
        "#,
    );
    let out = burning(&["bench", "--manifest", manifest.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let table = stdout(&out);
    assert!(table.contains("p9"));
    assert!(table.contains("ok"));

    let json_path = scratch.0.join("report.json");
    let out = burning(&[
        "bench",
        "--manifest",
        manifest.to_str().unwrap(),
        "--out",
        "json",
        "--output",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = std::fs::read_to_string(&json_path).unwrap();
    assert!(report.contains("\"failed\": false"));
    assert!(report.contains("\"seed\": 11"));
}

#[test]
fn usage_errors_exit_two() {
    // no input source at all
    let out = burning(&["solve"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown algorithm value
    let out = burning(&["solve", "--gen", "path:9", "--algo", "dijkstra"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown subcommand
    let out = burning(&["anneal"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn runtime_errors_exit_one() {
    let out = burning(&["solve", "--input", "/no/such/file.edges"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error"));
    let out = burning(&["solve", "--gen", "path:9", "--algo", "bgp", "--start", "Z"]);
    assert_eq!(out.status.code(), Some(1));
    let out = burning(&["solve", "--gen", "path:9", "--algo", "alg1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--k"));
}

#[test]
fn alg1_solves_with_declared_k() {
    let out = burning(&["solve", "--gen", "path:9", "--algo", "alg1", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(line_value(&text, "length:"), "7");
    assert_eq!(line_value(&text, "verified:"), "true");
}

#[test]
fn mtx_input_with_dropped_entries_notes_them() {
    let scratch = Scratch::new("mtx");
    let path = scratch.file(
        "g.mtx",
        "%%MatrixMarket matrix coordinate pattern symmetric\n3 3 3\n2 1\n3 2\n1 1\n",
    );
    let out = burning(&["solve", "--input", path.to_str().unwrap(), "--algo", "bgp+"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stderr(&out).contains("dropped 1 self-loop"));
}
