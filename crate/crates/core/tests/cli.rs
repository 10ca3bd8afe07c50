use std::process::{Command, Output};

fn ternions(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ternions")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn composite_modulus_exits_two() {
    let o = ternions(&["classify", "--q", "4", "--n", "2", "--side", "left"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.contains("modulus 4 is not a prime"));
}

#[test]
fn core_json_for_order_three() {
    let o = ternions(&["core", "--q", "3", "--n", "2", "--side", "left", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["core"]["points"].as_array().unwrap().len(), 13);
    assert_eq!(v["core"]["lines"].as_array().unwrap().len(), 13);
    assert_eq!(v["core"]["verdict"]["is_projective_plane"], true);
    assert_eq!(v["core"]["verdict"]["order"], 3);
}

#[test]
fn classify_writes_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("classify.json");
    let o = ternions(&["classify", "--q", "2", "--n", "2", "--side", "right", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("distinct submodules: 21"));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains(r#""nonunimodular_free_generators": 42, "distinct_submodules": 21"#));
    assert!(text.contains(r#""containment": {"generators_in_I2": true}"#));
}

#[test]
fn snowflake_dot_is_well_formed() {
    let o = ternions(&["snowflake", "--q", "2", "--n", "2", "--side", "left", "--dot", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    let mut depth = 0i32;
    let mut nodes = std::collections::BTreeSet::new();
    let mut edges = 0;
    for line in dot.lines() {
        let line = line.trim();
        depth += line.matches('{').count() as i32 - line.matches('}').count() as i32;
        if line.starts_with("//") || line.ends_with('{') || line == "}" {
            continue;
        }
        assert!(line.ends_with(';'), "unterminated statement: {line}");
        if let Some((a, b)) = line.trim_end_matches(';').split_once(" -- ") {
            assert!(nodes.contains(a) && nodes.contains(b), "edge before its nodes: {line}");
            edges += 1;
        } else {
            let (id, attrs) = line.split_once(' ').unwrap();
            assert!(attrs.starts_with('[') && attrs.ends_with("];"), "{line}");
            assert_eq!(attrs.matches('"').count() % 2, 0);
            nodes.insert(id.to_string());
        }
    }
    assert_eq!(depth, 0);
    assert_eq!(nodes.len(), 21 + 63);
    assert_eq!(edges, 147);
}

#[test]
fn tables_render() {
    let o = ternions(&["tables", "--q", "2", "--paper-labels"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("2 | 0 2 1 3 7 5 6 4"));
    let o = ternions(&["tables", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("26: 2 2 2"));
}

#[test]
fn twin_and_verify_exit_zero() {
    let o = ternions(&["twin", "--q", "3", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("core lines equal: true"));
    let o = ternions(&["--threads", "2", "verify-paper"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("[PASS]")).count(), 8);
}

#[test]
fn budget_overflow_exits_two() {
    let o = ternions(&["--budget", "1000", "snowflake", "--q", "3", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds the budget of 1000"));
}
