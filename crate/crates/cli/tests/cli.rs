use std::io::Write;
use std::process::{Command, Output};

fn srdef(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srdef"))
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

#[test]
fn bset_lists_the_square_diagonals() {
    let out = srdef(&["bset", "cycle:4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("{0,2}"), "{text}");
    assert!(text.contains("{1,3}"), "{text}");
    assert!(text.contains("cardinality = 2"), "{text}");
}

#[test]
fn degree_zero_obstructions_of_the_cyclic_fourfold() {
    let out = srdef(&["t2", "--degree0", "cyclic4:8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dim T2_A,0 = 64"), "{text}");
    assert!(text.contains("from vertices: 40"), "{text}");
    assert!(text.contains("from edges: 24"), "{text}");
}

#[test]
fn graded_piece_as_json() {
    let out = srdef(&["t1", "boundary-simplex:3", "--b", "0,1", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["command"], "t1");
    assert_eq!(v["result"]["dim"], 1);
    assert_eq!(v["result"]["method"], "manifold-fast-path");
}

#[test]
fn oracle_agrees_with_the_topological_piece() {
    for cmd in ["t1", "oracle-t1"] {
        let out = srdef(&[cmd, "cycle:4", "--b", "0,2", "--format", "json"]);
        assert!(out.status.success());
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["result"]["dim"], 1, "{cmd}");
    }
}

#[test]
fn versal_ideal_of_the_suspended_hexagon() {
    let out = srdef(&["versal-ideal", "suspension:cycle:6", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let r = &v["result"];
    assert_eq!(r["variable_count"], 30);
    assert_eq!(r["generators"].as_array().unwrap().len(), 6);
    assert_eq!(r["exact"], true);
    assert_eq!(r["krull_dimension"], 26);
}

#[test]
fn normal_form_json_has_nine_hexagon_equations() {
    let out = srdef(&["normal-form", "--n", "6", "--order", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let r = &v["result"];
    assert_eq!(r["equations"].as_array().unwrap().len(), 9);
    assert_eq!(r["base_relations"].as_array().unwrap().len(), 3);
    // every term carries a rational coefficient string
    for eq in r["equations"].as_array().unwrap() {
        for term in eq["terms"].as_array().unwrap() {
            assert!(term["coeff"].is_string());
        }
    }
}

#[test]
fn verify_nf_passes_for_the_square_cone() {
    let out = srdef(&["verify-nf", "--n", "4", "--order", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verification passed"));
}

#[test]
fn facet_file_normalization_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("facets.txt");
    let mut fh = std::fs::File::create(&path).unwrap();
    writeln!(fh, "# comment line").unwrap();
    writeln!(fh, "0 1 2").unwrap();
    writeln!(fh, "1 2").unwrap();
    writeln!(fh, "0 1 2").unwrap();
    drop(fh);
    let out = srdef(&["info", path.to_str().unwrap()]);
    assert!(out.status.success());
    let err = stderr(&out);
    assert!(err.contains("non-maximal"), "{err}");
    assert!(err.contains("duplicate"), "{err}");
    assert!(stdout(&out).contains("f-vector: [3, 3, 1]"));
}

#[test]
fn malformed_facet_line_reports_the_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("facets.txt");
    std::fs::write(&path, "0 1 2\n0 x 3\n").unwrap();
    let out = srdef(&["info", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains(":2:"), "{}", stderr(&out));
}

#[test]
fn unknown_source_is_a_parse_error() {
    let out = srdef(&["info", "nonsense:3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["error"]["code"], "parse");
}

#[test]
fn vertex_cap_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_srdef"))
        .args(["info", "torus:7", "--format", "json"])
        .env("SRDEF_MAX_VERTICES", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["error"]["code"], "resource");
}

#[test]
fn flip_replaces_a_square_vertex_by_the_diagonal() {
    let out = srdef(&["flip", "cycle:4", "--a", "0", "--b", "1,3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut facets: Vec<&str> = text.lines().collect();
    facets.sort_unstable();
    assert_eq!(facets, vec!["1 2", "1 3", "2 3"]);
}

#[test]
fn output_is_deterministic_and_independent_of_parallelism() {
    let a = srdef(&["t1", "--degree0", "boundary-simplex:3", "--parallel", "1"]);
    let b = srdef(&["t1", "--degree0", "boundary-simplex:3", "--parallel", "4"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("dim T1_A,0 = 22"));
    let c = srdef(&["versal-ideal", "torus:7", "--format", "json"]);
    let d = srdef(&["versal-ideal", "torus:7", "--format", "json"]);
    assert_eq!(stdout(&c), stdout(&d));
}

#[test]
fn conflicting_degree_flags_are_rejected() {
    let out = srdef(&["t1", "cycle:4", "--degree0", "--b", "0,2"]);
    assert_eq!(out.status.code(), Some(1));
}
