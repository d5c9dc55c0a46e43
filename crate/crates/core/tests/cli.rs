use std::process::{Command, Output};

fn gtqd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtqd")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn octahedral_dot_has_five_clusters_and_34_nodes() {
    let o = gtqd(&["--group", "bo", "--normal", "center", "--cocycle", "trivial", "mckay", "--output", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert_eq!(dot.matches("subgraph cluster_").count(), 5);
    assert_eq!(dot.matches("(dim ").count(), 34);
    for ty in ["E~_7", "D~_4", "D~_6", "A~_7", "A~_5"] {
        assert!(dot.contains(&format!("type={ty}\"")), "missing {ty}");
    }
}

#[test]
fn twisted_z4_passes_every_suite() {
    let o = gtqd(&["--group", "cyclic:4", "--normal", "center", "--cocycle", "cyclic:1", "verify", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn noncentral_normal_subgroup_is_reported_not_normal() {
    let o = gtqd(&["--group", "bd:3", "--normal", "gens:x2", "verify", "--suite", "normality"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not normal as subalgebra: N ⊄ Z(G)"));
}

#[test]
fn configuration_errors_exit_with_2() {
    for args in [
        &["--group", "cyclic:5", "--normal", "center", "irreps"][..],
        &["--group", "bt", "--cocycle", "cyclic:1", "irreps"],
        &["--group", "bd:3", "--normal", "gens:y", "irreps"],
        &["--group", "nope", "irreps"],
        &["--group", "bt", "frobnicate"],
        &["--group", "bt", "irreps", "--output", "dot"],
    ] {
        assert_eq!(gtqd(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn json_is_schema_tagged_and_reproducible() {
    let args = ["--group", "bd:3", "--seed", "7", "verify", "--suite", "quasihopf", "--output", "json"];
    let a = gtqd(&args);
    let b = gtqd(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], "gtqd/1");
    assert_eq!(v["passed"], true);
}

#[test]
fn irreps_counts_per_class() {
    let o = gtqd(&["--group", "bd:3", "--normal", "center", "irreps", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["total"], 16);
    let counts: Vec<u64> = v["result"]["classes"].as_array().unwrap().iter().map(|c| c["irreps"].as_u64().unwrap()).collect();
    assert_eq!(counts, [6, 6, 4]);
}

#[test]
fn fusion_with_trivial_module_is_identity() {
    let o = gtqd(&["--group", "bd:3", "fusion", "x/2", "g0/0", "x/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("= 1\n"));
    let o = gtqd(&["--group", "bd:3", "fusion", "x/2", "g0/0", "x/3"]);
    assert!(stdout(&o).ends_with("= 0\n"));
}

#[test]
fn full_fusion_table_lists_products() {
    let o = gtqd(&["--group", "cyclic:4", "--normal", "center", "--cocycle", "cyclic:1", "fusion", "--full", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    // 8 simple modules, each V ⊗ W of dimension dim V dim W
    let n = v["result"]["labels"].as_array().unwrap().len();
    assert_eq!(n, 8);
    assert!(!v["result"]["coefficients"].as_array().unwrap().is_empty());
}

#[test]
fn chartab_and_group_info_run() {
    let o = gtqd(&["--group", "bt", "chartab"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with('χ')).count(), 7);
    let o = gtqd(&["--group", "bd:3", "chartab", "--stabilizer", "x"]);
    assert!(stdout(&o).contains("Z6"));
    let o = gtqd(&["--group", "bo", "group-info", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["order"], 48);
    assert_eq!(v["result"]["quotient_classes"], 5);
    let o = gtqd(&["--group", "cyclic:4", "--normal", "center", "--cocycle", "cyclic:1", "structure", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["dimension"], 8);
}

#[test]
fn odd_cyclic_without_quotient_reports_the_even_node_clause() {
    // Z_3 has classes of order 3 whose stabilizer Z_3 gives a 3-node cycle
    let o = gtqd(&["--group", "cyclic:3", "--normal", "trivial", "verify", "--suite", "mckay"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] mckay: classes of order above 2 give A~ diagrams with an even number of nodes"));
}
