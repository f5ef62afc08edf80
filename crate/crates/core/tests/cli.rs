use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn regmap(args: &[&str]) -> Output {
    regmap_env(args, &[])
}

fn regmap_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_regmap"));
    cmd.args(args).env_remove("REGMAP_MAX_COSETS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_tetrahedron() {
    let tet = data("tetrahedron.pres");
    let o = regmap(&["analyze", path(&tet)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["id"], "tetrahedron");
    assert_eq!(v["density"], "3/4");
    assert_eq!(v["classification"], "tetrahedron");

    let o = regmap(&["analyze", path(&tet), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().nth(1).unwrap(), "tetrahedron,12,3,3,0,true,true,3/4,tetrahedron,");
}

#[test]
fn fermat_subcommand() {
    let o = regmap(&["fermat", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["group_order"], 96);
    assert_eq!(v["genus"], 3);
    assert_eq!(v["pass"], true);
    assert_eq!(regmap(&["fermat", "0"]).status.code(), Some(2));
}

#[test]
fn quotient_subcommand() {
    let fer3 = data("fer3.pres");
    let o = regmap(&["quotient", path(&fer3), "--subgroup", "S^2;R*S^2*R^-1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["subgroup_order"], 9);
    assert_eq!(v["quotient"]["classification"], "fermat(1)");
    assert_eq!(v["vertex_orbits"], serde_json::json!({"3": 3}));

    let tet = data("tetrahedron.pres");
    assert_eq!(regmap(&["quotient", path(&tet), "--subgroup", "R*S"]).status.code(), Some(2));
    assert_eq!(regmap(&["quotient", path(&tet), "--subgroup", "S"]).status.code(), Some(2));
    assert_eq!(regmap(&["quotient", path(&tet), "--subgroup", "T"]).status.code(), Some(2));
}

#[test]
fn lemmas_subcommand() {
    let o = regmap(&["lemmas", path(&data("fer3.pres"))]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 26);
    assert!(lines.iter().all(|l| l["passed"] != false));
}

#[test]
fn input_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(regmap(&["analyze", path(&dir.path().join("missing.pres"))]).status.code(), Some(2));
    let bad = dir.path().join("bad.pres");
    std::fs::write(&bad, "gens R S ; rels R^3, (S").unwrap();
    let o = regmap(&["analyze", path(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("syntax error"));
}

#[test]
fn coset_bound_from_environment() {
    let fer3 = data("fer3.pres");
    let o = regmap_env(&["analyze", path(&fer3)], &[("REGMAP_MAX_COSETS", "5")]);
    assert_eq!(o.status.code(), Some(2));
    let o = regmap_env(&["analyze", path(&fer3), "--max-cosets", "1000"], &[("REGMAP_MAX_COSETS", "5")]);
    assert_eq!(o.status.code(), Some(0));
    let o = regmap_env(&["analyze", path(&fer3)], &[("REGMAP_MAX_COSETS", "lots")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn census_verify() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(
        &good,
        "# two maps\n\
         id=tet genus=0 type={3,3} order=12 chiral=false rels=R^3;S^3;(R*S)^2\n\
         id=R3.1 genus=3 type={3,7} order=168 chiral=false rels=R^3;S^7;(R*S)^2;(R^-1*S^2)^4\n\
         id=fer4 genus=3 type={3,8} order=96 chiral=false rels=R^3;S^8;(R*S)^2;(R^-1*S^-1*R*S)^3\n",
    )
    .unwrap();
    let a = regmap(&["census-verify", path(&good)]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(stdout(&a).lines().count(), 3);
    let b = regmap(&["census-verify", path(&good), "--jobs", "1"]);
    let c = regmap(&["census-verify", path(&good), "--jobs", "3", "--sample-large", "2"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let csv = regmap(&["census-verify", path(&good), "--format", "csv"]);
    assert_eq!(stdout(&csv).lines().count(), 4);

    let wrong = dir.path().join("wrong.txt");
    std::fs::write(&wrong, std::fs::read_to_string(&good).unwrap().replace("genus=3 type={3,7}", "genus=4 type={3,7}")).unwrap();
    let o = regmap(&["census-verify", path(&wrong)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("R3.1"));
    assert_eq!(stdout(&o).lines().count(), 2);

    let broken = dir.path().join("broken.txt");
    std::fs::write(&broken, "id=x genus=0\n").unwrap();
    assert_eq!(regmap(&["census-verify", path(&broken)]).status.code(), Some(2));
}
