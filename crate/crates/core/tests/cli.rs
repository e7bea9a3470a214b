//! The command-line binary, driven through files and pipes.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use fincat::cli::{adjunction_doc, category_doc, parse_adjunction, parse_category, Document};
use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_fincat"));
    cmd.env_remove("FINCAT_BUDGET");
    cmd
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fincat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child =
        bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn gallery(name: &[&str], file: &str) -> String {
    let path = scratch(file);
    let mut args = vec!["gallery"];
    args.extend_from_slice(name);
    let p = path.to_str().unwrap().to_string();
    args.extend(["-o", &p]);
    assert_eq!(run(&args).status.code(), Some(0));
    p
}

#[test]
fn gallery_pipes_into_validate() {
    let doc = run(&["gallery", "walking_idempotent"]);
    assert_eq!(doc.status.code(), Some(0));
    let out = run_stdin(&["validate", "-"], &doc.stdout);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["kind"], "category");
    assert_eq!(v["result"]["morphisms"], 2);
}

#[test]
fn classify_e_to_one() {
    let f = gallery(&["g_E_to_1"], "g.json");
    let v = json(&run(&["classify", "--functor", &f]));
    assert_eq!(v["result"]["semiseparable"], true);
    assert_eq!(v["result"]["separable"], false);
    assert_eq!(v["result"]["witnesses"]["idempotent"][0][1], "e");
}

#[test]
fn audit_split_adjunction() {
    let a = gallery(&["one_E"], "one_e.json");
    let out = run(&["audit", "--adjunction", &a]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let clauses = v["result"]["clauses"].as_array().unwrap();
    assert_eq!(clauses.len(), 11);
    assert!(clauses.iter().all(|c| c["status"] == "pass"));
    let dual = json(&run(&["audit", "--adjunction", &a, "--dual"]));
    assert_eq!(dual["holds"], true);
}

#[test]
fn adjoint_search_exit_codes() {
    let g = gallery(&["g_E_to_1"], "g_adj.json");
    let out = run(&["adjoint", "--functor", &g]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["holds"], false);
    let t = gallery(&["suite_functor", "walking_split_idempotent->terminal"], "split.json");
    assert_eq!(run(&["adjoint", "--functor", &t]).status.code(), Some(0));
}

#[test]
fn monad_subcommands() {
    let a = gallery(&["one_E"], "one_e_monad.json");
    for action in ["em", "kleisli", "separable"] {
        let out = run(&["monad", "--adjunction", &a, action]);
        assert_eq!(out.status.code(), Some(0), "{action}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn complete_and_quotient() {
    let e = gallery(&["walking_idempotent"], "e.json");
    let out = run(&["complete", &e]);
    assert_eq!(out.status.code(), Some(0));
    let id = gallery(&["central_idempotent", "F2xF2", "1", "(1,0)"], "z.json");
    let out = run(&["quotient", "--idempotent", &id]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn invalid_input_exits_two_with_json_diagnostics() {
    let out = run_stdin(&["validate", "-"], br#"{"objects": ["a"], "morphisms": []"#);
    assert_eq!(out.status.code(), Some(2));
    let line = String::from_utf8_lossy(&out.stderr);
    let diag: Value = serde_json::from_str(line.lines().next().unwrap()).unwrap();
    assert_eq!(diag["exit"], 2);
    let broken =
        br#"{"objects":["a"],"morphisms":[{"name":"f","dom":"a","cod":"b"}],"identities":{"a":"f"},"composition":[]}"#;
    assert_eq!(run_stdin(&["validate", "-"], broken).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_three() {
    let a = gallery(&["one_E"], "one_e_budget.json");
    let out = bin().args(["audit", "--adjunction", &a]).env("FINCAT_BUDGET", "1").output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn seed_is_recorded_and_output_is_stable() {
    let f = gallery(&["g_E_to_1"], "g_seed.json");
    let a = run(&["--seed", "11", "classify", "--functor", &f]);
    let b = run(&["--seed", "11", "classify", "--functor", &f]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 11);
}

#[test]
fn gallery_documents_are_canonical() {
    for name in [&["walking_split_idempotent"][..], &["karoubi", "walking_idempotent"], &["one_E"]] {
        let first = run(&[&["gallery"][..], name].concat());
        let path = scratch(&format!("{}.json", name.join("_")));
        std::fs::write(&path, &first.stdout).unwrap();
        let out = run(&["validate", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8(first.stdout).unwrap();
        let doc: Document = serde_json::from_str(&text).unwrap();
        let again = match &doc {
            Document::Category(c) => Document::Category(category_doc(&parse_category(c).unwrap())),
            Document::Adjunction(a) => Document::Adjunction(adjunction_doc(&parse_adjunction(a).unwrap())),
            other => panic!("unexpected {}", other.kind()),
        };
        assert_eq!(serde_json::to_string(&again).unwrap() + "\n", text);
    }
}
