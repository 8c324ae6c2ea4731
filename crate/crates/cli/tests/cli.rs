use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const P4: &str = "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";
const C4: &str = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
const MIS: &str = r#"{"n":4,"edges":[[1,2],[2,3],[3,4],[4,1]],"parts":[[1,2],[3,4]]}"#;
const MCSI_K4: &str = r#"{"n":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]],"parts":[[1],[2],[3],[4]],"pattern_edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#;
const GRID_YES: &str = r#"{"k":2,"n":2,"cells":[[[1,1]],[[1,2]],[[2,1]],[[2,2]]]}"#;
const GRID_NO: &str = r#"{"k":2,"n":2,"cells":[[[1,1]],[[2,2]],[[2,1]],[[2,2]]]}"#;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_firstfit"));
    c.env_remove("FIRSTFIT_SEED").env_remove("FIRSTFIT_CAP");
    c
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn firstfit");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&o.stdout)))
}

fn temp(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("firstfit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn binomial_tree_has_grundy_k() {
    let g = run(&["gen", "--family", "binomial-tree", "--params", "k=4"], "");
    assert_eq!(code(&g), 0);
    let o = run(&["grundy", "--k", "4"], std::str::from_utf8(&g.stdout).unwrap());
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["value"], 4);
    let o = run(&["grundy", "--k", "5"], std::str::from_utf8(&g.stdout).unwrap());
    assert_eq!(code(&o), 1);
}

#[test]
fn firstfit_on_p4() {
    let o = run(&["firstfit", "--order", "0,2,1,3"], P4);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["colors"], serde_json::json!([1, 1, 2, 2]));
    assert_eq!(v["colors_by_vertex"], serde_json::json!([1, 2, 1, 2]));
    assert_eq!(v["max_color"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["grundy", "--k", "3"], P4)), 0);
    assert_eq!(code(&run(&["grundy", "--k", "4"], P4)), 1);
    assert_eq!(code(&run(&["no-such-command"], "")), 2);
    assert_eq!(code(&run(&["grundy"], "p edge 2 1\ne 1 3\n")), 2);
    assert_eq!(code(&run(&["--cap", "2", "grundy"], P4)), 3);
    // C4 contains K_{2,2}
    let o = run(&["fpt", "--problem", "bcore", "--k", "2", "--t", "2"], C4);
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("K_{2,2}"));
}

#[test]
fn cap_from_environment() {
    let o = bin()
        .args(["grundy", temp("p4.col", P4).to_str().unwrap()])
        .env("FIRSTFIT_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn grundy_certificate_verifies() {
    let g = temp(
        "rand.json",
        &String::from_utf8(
            run(
                &["gen", "--family", "random", "--params", "n=9,p=40", "--seed", "5"],
                "",
            )
            .stdout,
        )
        .unwrap(),
    );
    let o = run(&["grundy", g.to_str().unwrap()], "");
    assert_eq!(code(&o), 0);
    let cert = temp("cert.json", &String::from_utf8(o.stdout).unwrap());
    let v = run(
        &[
            "verify",
            "--graph",
            g.to_str().unwrap(),
            "--cert",
            cert.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code(&v), 0);
    assert_eq!(json(&v)["valid"], true);
}

#[test]
fn tampered_certificate_fails_verification() {
    let g = temp("p4-verify.col", P4);
    let o = run(&["grundy", g.to_str().unwrap()], "");
    let mut doc = json(&o);
    // Collapse classes 1 and 2 into one class.
    let classes = doc["certificate"]["classes"].as_array_mut().unwrap();
    let second = classes.remove(1);
    classes[0]
        .as_array_mut()
        .unwrap()
        .extend(second.as_array().unwrap().iter().cloned());
    let cert = temp("bad.json", &doc.to_string());
    let v = run(
        &[
            "verify",
            "--graph",
            g.to_str().unwrap(),
            "--cert",
            cert.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code(&v), 1);
    assert_eq!(json(&v)["valid"], false);
}

#[test]
fn partial_grundy_methods_agree() {
    let g = run(
        &["gen", "--family", "random", "--params", "n=8,p=45", "--seed", "2"],
        "",
    );
    let text = String::from_utf8(g.stdout).unwrap();
    let a = json(&run(&["partial-grundy", "--method", "partition"], &text));
    let b = json(&run(&["partial-grundy", "--method", "centered"], &text));
    assert_eq!(a["value"], b["value"]);
}

#[test]
fn mis_reduction_certifies() {
    let o = run(&["certify", "--from", "mis"], MIS);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["valid"], true);
    let target = v["target"].as_u64().unwrap();
    let root = v["root"].as_u64().unwrap() - 1;

    let red = json(&run(&["reduce", "--from", "mis"], MIS));
    let graph = red["graph"].to_string();
    let r = run(
        &[
            "rooted-grundy",
            "--vertex",
            &root.to_string(),
            "--k",
            &target.to_string(),
        ],
        &graph,
    );
    assert_eq!(code(&r), 0);

    // Adjacent pair from different parts is not independent.
    assert_eq!(code(&run(&["certify", "--from", "mis", "--solution", "2,3"], MIS)), 2);
}

#[test]
fn mcsi_reduction_certifies() {
    let o = run(&["certify", "--from", "mcsi"], MCSI_K4);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["valid"], true);
    assert_eq!(v["equivalence_preserving"], true);

    let r = json(&run(&["reduce", "--from", "mcsi", "--budget", "12"], MCSI_K4));
    assert_eq!(r["equivalence_preserving"], false);
    assert_eq!(r["target"], 12);
}

#[test]
fn gridtiling_small_k_is_rejected_by_the_verifier() {
    let o = run(&["certify", "--from", "gridtiling"], GRID_YES);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["valid"], false);

    let o = run(&["certify", "--from", "gridtiling"], GRID_NO);
    assert_eq!(code(&o), 1);
    assert!(json(&o)["solution"].is_null());
}

#[test]
fn props_suite_passes() {
    let o = run(&["props", "--suite", "half-graph-bounds"], "");
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["passed"], true);
    assert!(String::from_utf8_lossy(&o.stderr)
        .lines()
        .all(|l| l.starts_with("PASS")));
}

#[test]
fn output_depends_only_on_the_seed() {
    let args = ["firstfit", "--sample", "50", "--seed", "11"];
    let g = String::from_utf8(run(&["gen", "--family", "half-graph", "--params", "t=5"], "").stdout).unwrap();
    let a = run(&args, &g);
    let b = run(&args, &g);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let seeded = |s: &str| run(&["gen", "--family", "random", "--params", "n=12,p=30", "--seed", s], "").stdout;
    assert_eq!(seeded("4"), seeded("4"));
    assert_ne!(seeded("4"), seeded("5"));
}

#[test]
fn gen_formats() {
    let d = run(
        &[
            "gen",
            "--family",
            "binomial-tree",
            "--params",
            "k=3",
            "--format",
            "dimacs",
        ],
        "",
    );
    assert_eq!(code(&d), 0);
    assert!(String::from_utf8_lossy(&d.stdout).starts_with("p edge 4 3"));
    let dot = run(
        &["gen", "--family", "binomial-tree", "--params", "k=3", "--format", "dot"],
        "",
    );
    assert!(String::from_utf8_lossy(&dot.stdout).contains("graph"));
    assert_eq!(code(&run(&["gen", "--family", "nope"], "")), 2);
}
