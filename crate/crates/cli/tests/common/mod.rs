#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_jetloci"));
    cmd.env_remove("JETLOCI_BUDGET");
    cmd
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

pub fn run_json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

pub fn schema_path(command: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{command}.schema.json"))
}

pub fn assert_valid(command: &str, doc: &serde_json::Value) {
    let text = std::fs::read_to_string(schema_path(command)).expect("schema exists");
    let schema: serde_json::Value = serde_json::from_str(&text).expect("schema is JSON");
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| format!("{e} at {}", e.instance_path)).collect();
    assert!(errors.is_empty(), "{command} output violates schema: {errors:#?}\n{doc:#}");
}

/// One invocation per subcommand, all deterministic.
pub const INVOCATIONS: &[(&str, &[&str])] = &[
    ("snf", &["snf", "--matrix", "2 2 2 2;t;1;0;t"]),
    ("snf", &["snf", "--matrix", "2 3 3 0;1/2 + t;t^2;-3*t;0;t;2"]),
    ("type", &["type", "--matrix", "2 2 1 3;t;0;0;t"]),
    ("member", &["member", "--matrix", "2 2 1 2;t;0;0;t", "--g", "2", "--d", "1", "--r", "0"]),
    ("h0", &["h0", "--type", "(1,2,2)@3"]),
    ("h0", &["h0", "--matrix", "3 2 2 5;t;0;0;t^2;1;1"]),
    ("lct", &["lct", "--g", "4", "--d", "3", "--r", "1", "--l", "2"]),
    ("lct", &["lct", "--ambient", "4", "--jet-dims", "3,6,9"]),
    ("bounds", &["bounds", "theta-fiber", "--g", "5", "--m", "4"]),
    ("bounds", &["bounds", "theta-stratum", "--g", "5", "--m", "2", "--type", "(1,2)@3"]),
    (
        "bounds",
        &["bounds", "stratum", "--g", "7", "--d", "4", "--r", "1", "--l", "3", "--m", "4", "--type", "(1,3,4)@5", "--defects", "2,0,5"],
    ),
    ("bounds", &["bounds", "martens", "--g", "6", "--d", "5", "--r", "1"]),
    ("census", &["census", "--p", "2,3", "--rows", "1", "--cols", "2", "--m", "1"]),
    ("census", &["census", "--p", "5", "--rows", "2", "--cols", "2", "--m", "3", "--random", "200", "--seed", "7", "--shards", "3"]),
    ("mult", &["mult", "--n", "2"]),
    ("identity", &["identity", "--l-max", "4", "--part-max", "5"]),
    ("classify", &["classify", "--n", "5", "--dims", "8,12,16"]),
    ("classify", &["classify", "--theta-g", "6", "--hyperelliptic", "--horizon", "4"]),
    ("classify", &["classify", "--n", "3", "--kind", "lci", "--dims", "5"]),
];
