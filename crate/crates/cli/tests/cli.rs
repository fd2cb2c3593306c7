use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn kforce(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kforce")).args(args).current_dir(dir).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.code().is_some_and(|c| c == 0 || c == 4 || c == 1),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn schemas_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas")
}

fn assert_schema(v: &Value) {
    let id = v["schema"].as_str().expect("schema tag");
    let name = id.trim_start_matches("kforce/").trim_end_matches("/v1");
    let path = schemas_dir().join(format!("{name}.v1.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}\n{v:#}");
}

fn gen(dir: &Path, file: &str, args: &[&str]) -> Value {
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", file]);
    let v = json(&kforce(&all, dir));
    assert_schema(&v);
    v
}

#[test]
fn solve_sierpinski() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "s33.graph", &["sierpinski", "--p", "3", "--n", "3"]);
    let v = json(&kforce(&["solve", "--param", "pdk", "-k", "1", "s33.graph"], dir.path()));
    assert_schema(&v);
    assert_eq!(v["value"], 3);
    assert_eq!(v["parameter"], "gammaPk");
    let meta: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("s33.graph.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["order"], 27);
    assert_eq!(meta["params"]["p"], 3);
}

#[test]
fn closure_on_l2_reaches_everything() {
    let dir = TempDir::new().unwrap();
    let meta = gen(dir.path(), "l2.graph", &["lq", "-k", "2", "--q", "2"]);
    assert_eq!(meta["x"], serde_json::json!([1, 2, 3, 4]));
    let v = json(&kforce(&["closure", "--mode", "power", "-k", "2", "--seed-set", "0", "l2.graph"], dir.path()));
    assert_schema(&v);
    assert_eq!(v["success"], true);
    let last = v["rounds"].as_array().unwrap().last().unwrap().as_array().unwrap().len();
    assert_eq!(last, 11);
}

#[test]
fn usage_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    assert_eq!(kforce(&["verify", "-k", "1", "nonexistent.file"], dir.path()).status.code(), Some(2));
    assert_eq!(kforce(&["solve", "--param", "nope", "x"], dir.path()).status.code(), Some(2));
    assert_eq!(kforce(&["gen", "sierpinski", "--p", "3", "-o", "a.graph"], dir.path()).status.code(), Some(2));
    assert_eq!(kforce(&["solve", "--param", "pdk", "--workers", "0", "x"], dir.path()).status.code(), Some(2));
    std::fs::write(dir.path().join("bad.graph"), "3 1\n0 0\n").unwrap();
    let out = kforce(&["solve", "--param", "pdk", "bad.graph"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    gen(dir.path(), "p4.graph", &["path", "--n", "4"]);
    std::fs::write(dir.path().join("parts.json"), "[[0,1],[1,2,3]]").unwrap();
    let out =
        kforce(&["bound", "partition", "--param", "pdk", "-k", "1", "--parts", "parts.json", "p4.graph"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = kforce(&["closure", "--mode", "power", "-k", "1", "--seed-set", "9", "p4.graph"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exit_3() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "s33.graph", &["sierpinski", "--p", "3", "--n", "3"]);
    let out = kforce(&["solve", "--param", "pdk", "-k", "1", "--budget", "5", "s33.graph"], dir.path());
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn hypothesis_exit_4() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "star.graph", &["star", "--n", "4"]);
    let out = kforce(&["bound", "contraction", "--param", "zk", "-k", "1", "--set", "0", "star.graph"], dir.path());
    assert_eq!(out.status.code(), Some(4));
    let v = json(&out);
    assert_schema(&v);
    assert_eq!(v["hypothesis_met"], false);
    let out = kforce(
        &["bound", "contraction", "--param", "pdk", "--low-degree", "-k", "1", "--set", "0", "star.graph"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(4));
    let out = kforce(&["verify", "sierpinski", "--p", "3", "--n", "3", "-k", "2"], dir.path());
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn transforms_write_graphs() {
    let dir = TempDir::new().unwrap();
    let meta = gen(dir.path(), "u2.graph", &["uq", "-k", "2", "--q", "2"]);
    let x: Vec<String> = meta["x"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
    let x = x.join(",");
    let v = json(&kforce(&["contract", "--set", &x, "u2.graph", "-o", "c.graph"], dir.path()));
    assert_schema(&v);
    assert_eq!((v["order"].as_u64(), v["size"].as_u64()), (Some(6), Some(8)));
    assert_eq!(v["contracted_vertex"], 5);
    let v = json(&kforce(&["xhat", "--set", &x, "u2.graph", "-o", "h.graph"], dir.path()));
    assert_schema(&v);
    assert_eq!((v["order"].as_u64(), v["size"].as_u64()), (Some(6), Some(6)));
    let v = json(&kforce(&["solve", "--param", "pdk", "-k", "2", "h.graph"], dir.path()));
    assert_eq!(v["value"], 1);
    let v = json(&kforce(&["bound", "contraction", "--param", "pdk", "-k", "2", "--set", &x, "u2.graph"], dir.path()));
    assert_schema(&v);
    assert_eq!(v["interval"]["upper"], 2);
}

#[test]
fn partition_is_reproducible_across_workers() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "s34.graph", &["sierpinski", "--p", "3", "--n", "4"]);
    std::fs::write(
        dir.path().join("parts.json"),
        serde_json::to_string(&(0..3).map(|i| (27 * i..27 * (i + 1)).collect::<Vec<_>>()).collect::<Vec<_>>()).unwrap(),
    )
    .unwrap();
    let args = ["bound", "partition", "--param", "pdk", "-k", "1", "--parts", "parts.json", "s34.graph"];
    let one = kforce(&[&args[..], &["--workers", "1"]].concat(), dir.path());
    let three = kforce(&[&args[..], &["--workers", "3"]].concat(), dir.path());
    assert_eq!(one.stdout, three.stdout);
    let v = json(&one);
    assert_schema(&v);
    assert_eq!(v["bound"], 9);
    assert_eq!(v["witness_verified"], true);

    let timed = json(&kforce(&[&args[..], &["--timings"]].concat(), dir.path()));
    assert_schema(&timed);
    assert!(timed["parts"][0]["elapsed_ms"].is_number());

    let zk =
        kforce(&["bound", "partition", "--param", "zk", "-k", "1", "--parts", "parts.json", "s34.graph"], dir.path());
    assert_schema(&json(&zk));
}

#[test]
fn verify_reports() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "g.graph", &["random", "--n", "8", "--prob", "0.4", "--seed", "5"]);
    let args = ["verify", "-k", "1", "--seed", "3", "g.graph"];
    let a = kforce(&args, dir.path());
    let b = kforce(&args, dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_schema(&json(&a));

    let text = kforce(&["verify", "-k", "1", "g.graph", "--format", "text"], dir.path());
    let text = String::from_utf8(text.stdout).unwrap();
    assert!(text.contains("pd-zf-sandwich") && text.contains("PASS"));

    for args in [
        vec!["verify", "sierpinski", "--p", "3", "--n", "3", "-k", "1"],
        vec!["verify", "sierpinski", "--p", "3", "--n", "4", "-k", "1"],
        vec!["verify", "block", "--p", "3", "--n", "4", "-k", "1", "--prefix", "1"],
        vec!["verify", "surgery", "-k", "1", "--trials", "10", "g.graph"],
    ] {
        let out = kforce(&args, dir.path());
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let v = json(&out);
        assert_schema(&v);
        assert_eq!(v["verdict"], "PASS");
    }
}

#[test]
fn monotone_and_gen_families() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "p7.graph", &["path", "--n", "7"]);
    let v = json(&kforce(&["bound", "monotone", "--set", "2,3,4", "p7.graph"], dir.path()));
    assert_schema(&v);
    assert_eq!(v["holds"], true);
    for (file, args) in [
        ("t.graph", vec!["tkc", "-k", "1", "--c", "3"]),
        ("gpr.graph", vec!["gpr", "-k", "1", "--p", "5", "--r", "2"]),
        ("c.graph", vec!["cycle", "--n", "6"]),
        ("k.graph", vec!["complete", "--n", "5"]),
        ("kb.graph", vec!["complete-bipartite", "--a", "3", "--b", "3"]),
    ] {
        gen(dir.path(), file, &args);
    }
    let v = json(&kforce(&["solve", "--param", "zk", "-k", "1", "gpr.graph"], dir.path()));
    assert_eq!(v["value"], 8);
    let v = json(&kforce(&["solve", "--param", "gamma", "c.graph"], dir.path()));
    assert_eq!(v["value"], 2);
}
