use std::process::{Command, Output};

fn kr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kr")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const SPEC: [&str; 8] = ["--family", "C1", "--n", "2", "--r", "1", "--s", "1"];

#[test]
fn decompose_a2even_classical() {
    let o = kr(&["decompose", "--family", "A2even", "--n", "2", "--r", "1", "--s", "1", "--subset", "classical"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Λ1, 0\n");
}

#[test]
fn decompose_zero_subset() {
    let o = kr(&["decompose", "--family", "D1", "--n", "4", "--r", "4", "--s", "2", "--subset", "zero"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2Λ3\n");
}

#[test]
fn build_c1_has_four_nodes() {
    let mut args = vec!["build"];
    args.extend(SPEC);
    let o = kr(&args);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["nodes"].as_array().unwrap().len(), 4);
    assert_eq!(doc["family"], "C1");
    for (k, nd) in doc["nodes"].as_array().unwrap().iter().enumerate() {
        assert_eq!(nd["id"], k);
        assert_eq!(nd["weight"].as_array().unwrap().len(), 2);
    }
}

#[test]
fn build_output_is_byte_stable() {
    for format in ["json", "dot"] {
        let mut args = vec!["build", "--format", format];
        args.extend(["--family", "B1", "--n", "3", "--r", "2", "--s", "2"]);
        let a = kr(&args);
        let b = kr(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{format}");
    }
}

#[test]
fn dot_edges_carry_color_labels() {
    let mut args = vec!["build", "--format", "dot"];
    args.extend(SPEC);
    let text = stdout(&kr(&args));
    assert!(text.starts_with("digraph \"C1 n=2 r=1 s=1\" {\n"));
    assert!(text.trim_end().ends_with('}'));
    let edges = text.lines().filter(|l| l.contains("->")).count();
    assert_eq!(edges, 4);
    assert!(text.lines().filter(|l| l.contains("->")).all(|l| l.contains("[label=\"")));
}

#[test]
fn dim_matches_build() {
    let o = kr(&["dim", "--family", "D1", "--n", "4", "--r", "4", "--s", "1"]);
    assert_eq!(stdout(&o), "8\n");
}

#[test]
fn check_small_grid_passes() {
    let o = kr(&["check", "--suite", "all", "--n-max", "2", "--s-max", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.lines().last().unwrap().contains(" 0 failed"));
    assert_eq!(text, stdout(&kr(&["check", "--suite", "all", "--n-max", "2", "--s-max", "2"])));
}

#[test]
fn check_single_spec_json() {
    let o = kr(&["check", "--family", "B1", "--n", "3", "--r", "1", "--s", "2", "--suite", "sigma", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["failed"], 0);
    assert_eq!(doc["reports"][0]["suite"], "sigma");
}

#[test]
fn failing_check_exits_one() {
    // the positivity statement is contradicted on the sign-free rectangle
    let o = kr(&["check", "--family", "C1", "--n", "3", "--r", "1", "--s", "1", "--suite", "phi0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"));
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        vec!["build", "--family", "C1", "--n", "2", "--r", "3", "--s", "1"],
        vec!["build", "--family", "E8", "--n", "2", "--r", "1", "--s", "1"],
        vec!["dim", "--family", "D1", "--n", "2", "--r", "1", "--s", "1"],
        vec!["check", "--suite", "nonsense"],
        vec!["check", "--family", "C1"],
        vec!["frobnicate"],
    ] {
        let o = kr(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(kr(&["--help"]).status.code(), Some(0));
}
