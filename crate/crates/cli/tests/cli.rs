use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_congrkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn verdicts_and_exit_codes() {
    let pentagon = fixture("pentagon.alg");
    let out = run(&["alg", "cblp", &pentagon]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("cblp false"));
    assert_eq!(run(&["alg", "cblp", &pentagon, "--assert"]).status.code(), Some(1));
    assert_eq!(run(&["alg", "cblp", &fixture("diamond.alg"), "--assert"]).status.code(), Some(0));
    assert_eq!(run(&["alg", "validate", "/no/such/file.alg"]).status.code(), Some(2));
}

#[test]
fn z_congruences_as_json() {
    let v = json(&["alg", "con", &fixture("lattice_z.alg")]);
    assert_eq!(v["congruence_count"], 10);
    assert_eq!(v["congruences"].as_array().unwrap().len(), 10);
    let v = json(&["alg", "cblp", &fixture("lattice_z.alg")]);
    assert_eq!(v["cblp"], false);
}

#[test]
fn brute_force_cross_check() {
    let v = json(&["alg", "con", &fixture("pentagon.alg"), "--brute-force"]);
    assert_eq!(v["oracle_agreed"], true);
    let v = json(&["alg", "con", &fixture("pentagon.alg")]);
    assert!(v.get("oracle_agreed").is_none());
}

#[test]
fn residuated_example_fails_at_c() {
    let out = run(&["rl", "blp", &fixture("residuated_a.alg")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("blp false"));
    let failing: Vec<&str> = text.lines().filter(|l| l.trim_start().starts_with("FAIL")).collect();
    assert_eq!(failing.len(), 1);
    assert!(failing[0].contains("[c)"));
    let out = run(&["rl", "validate", &fixture("l2.alg")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("prod"));
}

#[test]
fn invalid_lattice_names_the_axiom() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.alg");
    std::fs::write(&path, "algebra bad\nsize 2\nop join 2\n0 1\n0 1\nop meet 2\n0 0\n0 1\n").unwrap();
    let out = run(&["lat", "profile", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("join"));
}

#[test]
fn output_is_deterministic() {
    let args = ["alg", "cblp", &fixture("lattice_z.alg")];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for out in [&a, &b] {
        let status = run(&[
            "catalog", "random", "--size", "5", "--count", "4", "--seed", "9", "--out", out.to_str().unwrap(),
        ])
        .status;
        assert_eq!(status.code(), Some(0));
    }
    let mut names: Vec<_> = std::fs::read_dir(&a).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert_eq!(names.len(), 4);
    for n in names {
        assert_eq!(std::fs::read(a.join(&n)).unwrap(), std::fs::read(b.join(&n)).unwrap());
    }
}

#[test]
fn hasse_diagram_to_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("p.dot");
    let out = run(&["hasse", &fixture("pentagon.lat"), "--dot", dot.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("->").count(), 5);
}

#[test]
fn catalog_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.alg");
    let out = run(&["catalog", "export", "lattice_z", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        std::fs::read_to_string(fixture("lattice_z.alg")).unwrap()
    );
    let list = stdout(&run(&["catalog", "list"]));
    assert!(list.contains("pentagon") && list.contains("residuated_a"));
    assert_eq!(run(&["catalog", "show", "hexagon"]).status.code(), Some(2));
}

#[test]
fn products_and_quotients() {
    let dir = tempfile::tempdir().unwrap();
    let prod = dir.path().join("p.alg");
    let l2 = fixture("l2.alg");
    let out = run(&["alg", "product", &l2, &l2, "-o", prod.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&["alg", "con", prod.to_str().unwrap()]);
    assert_eq!(v["congruence_count"], 4);
    let out = run(&["alg", "quotient", &fixture("pentagon.alg"), "--pair", "y,z"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("size 4"));
}

#[test]
fn decomposition_of_a_boolean_lattice() {
    let out = run(&["alg", "decompose", &fixture("boolean_2.alg")]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["alg", "decompose", &fixture("pentagon.alg"), "--assert"]);
    assert_eq!(out.status.code(), Some(1));
}
