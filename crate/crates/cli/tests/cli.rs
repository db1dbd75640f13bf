use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidrefine"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn charpoly_methods_agree() {
    for method in ["closed", "ff", "poset", "linear"] {
        assert_eq!(stdout(&["charpoly", "A:2,1", "--method", method]), "t^2 - 5*t + 4\n");
    }
    assert_eq!(
        stdout(&["charpoly", "A:3,2", "--method", "closed"]),
        "t^3 - 18*t^2 + 89*t - 72\n"
    );
}

#[test]
fn charpoly_from_spec_file() {
    let dir = std::env::temp_dir().join(format!("braidrefine-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("spec.json");
    std::fs::write(
        &path,
        r#"{"n": 2, "flavor": "A", "coords": true, "shifts": {"1,2": [-1, 0, 1]}}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["charpoly", "--spec", p]), "t^2 - 5*t + 4\n");
    assert_eq!(stdout(&["regions", "--spec", p, "--method", "poset"]), "10\n");
}

#[test]
fn regions_routes() {
    assert_eq!(stdout(&["regions", "A:2,1", "--method", "enum"]), "10\n");
    assert_eq!(stdout(&["regions", "B:2,1", "--method", "enum"]), "6\n");
    assert_eq!(stdout(&["regions", "B:2,1", "--method", "closed"]), "6\n");
    let gamma = stdout(&["regions", "Gamma:2,1"]);
    assert_eq!(stdout(&["regions", "Gamma:2,1", "--method", "closed"]), gamma);
}

#[test]
fn sketch_to_path_small() {
    assert_eq!(stdout(&["biject", "sketch-to-path", "0 1^0 1^1"]), "| U1 D\n");
    assert_eq!(stdout(&["biject", "path-to-sketch", "| U1 D"]), "0 1^0 1^1\n");
}

#[test]
fn bijections_round_trip() {
    let word = "3^2 3^1 1^2 3^0 1^1 1^0 0 5^0 5^1 5^2 4^0 2^0 4^1 2^1 4^2 2^2";
    let path = stdout(&["biject", "sketch-to-path", word]);
    assert_eq!(stdout(&["biject", "path-to-sketch", path.trim()]).trim(), word);
    let part = stdout(&["biject", "sketch-to-partition", word]);
    assert_eq!(part.trim(), "3 3 1 3 1 1 | 5 5 5 4 2 4 2 4 2");
    assert_eq!(stdout(&["biject", "partition-to-sketch", part.trim()]).trim(), word);
}

#[test]
fn witness_round_trip() {
    let word = "1^1 1^0 0 2^0 2^1";
    let point = stdout(&["--output", "json", "biject", "witness", word]);
    let back = stdout(&["biject", "point-to-sketch", point.trim(), "--m", "1"]);
    assert_eq!(back.trim(), word);
}

#[test]
fn enumeration_sizes() {
    assert_eq!(stdout(&["enumerate", "sketches", "2", "1"]).lines().count(), 10);
    assert_eq!(stdout(&["enumerate", "paths", "2", "2"]).lines().count(), 14);
    assert_eq!(stdout(&["enumerate", "partitions", "3", "1"]).lines().count(), 84);
    let csv = stdout(&["--output", "csv", "enumerate", "sketches", "1", "1"]);
    assert_eq!(csv, "index,sketch\n1,0 1^0 1^1\n2,1^1 1^0 0\n");
}

#[test]
fn compartments_match_coefficients() {
    let json = stdout(&["--output", "json", "stats", "compartments", "3", "1"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["distribution"], serde_json::json!(["30", "41", "12", "1"]));
}

#[test]
fn poset_dump() {
    let json = stdout(&["--output", "json", "stats", "poset", "A:2,1"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["charpoly"], "t^2 - 5*t + 4");
    assert_eq!(v["flats"][0]["mobius"], 1);
}

#[test]
fn verify_table1_all_ok() {
    let out = stdout(&["verify", "table1"]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.ends_with("OK")));
    let json = stdout(&["verify", "table1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
}

#[test]
fn deterministic_output() {
    let args = ["--output", "json", "charpoly", "Delta:3,1"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["charpoly", "X:2,1"],
        vec!["charpoly", "B:2,1", "--method", "closed"],
        vec!["enumerate", "sketches", "5", "2"],
        vec!["biject", "sketch-to-path", "0 1^1 1^0"],
        vec!["biject", "point-to-sketch", "[]"],
        vec!["frobnicate"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn limit_overrides_guard() {
    assert_eq!(run(&["enumerate", "sketches", "2", "2", "--limit", "5"]).status.code(), Some(2));
    assert!(run(&["enumerate", "sketches", "2", "2", "--limit", "6"]).status.success());
}

#[test]
fn inadmissible_moduli_rejected() {
    let out = run(&["charpoly", "A:2,1", "--moduli", "4,9,25"]);
    assert_eq!(out.status.code(), Some(2));
}
