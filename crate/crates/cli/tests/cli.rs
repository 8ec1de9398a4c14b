use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn path(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

/// Write a modified copy of a data file into a temp dir.
fn mutated(name: &str, tag: &str, edit: impl FnOnce(&mut Value)) -> PathBuf {
    let mut doc: Value =
        serde_json::from_str(&std::fs::read_to_string(data(name)).unwrap()).unwrap();
    edit(&mut doc);
    let dir = std::env::temp_dir().join(format!("hecke-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join(format!("{tag}.json"));
    std::fs::write(&out, serde_json::to_string(&doc).unwrap()).unwrap();
    out
}

#[test]
fn dual_numbers_hecke_dims_and_product() {
    let input = data("dual_numbers.json");
    let o = hecke(&[
        "hecke",
        path(&input),
        "-L",
        "4",
        "--max-degree",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for n in ["0", "1", "2"] {
        assert_eq!(v["dims"][n], 1);
        assert_eq!(v["stability"][n], true);
    }
    let products = v["table"]["products"].as_array().unwrap();
    let square = products
        .iter()
        .find(|p| p["left"] == serde_json::json!([1, 0]) && p["right"] == serde_json::json!([1, 0]))
        .expect("degree one square listed");
    assert!(
        !square["result"].as_array().unwrap().is_empty(),
        "t*t vanished"
    );
}

#[test]
fn m2_degree_zero_algebra() {
    let o = hecke(&["hk0", path(&data("m2_nilpotent.json"))]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("dim Hk^0: 1"));
    assert!(text.contains("unit class: [E11]"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn bar_models_agree() {
    for file in ["dual_numbers.json", "m2_nilpotent.json"] {
        let o = hecke(&["thm3", path(&data(file)), "-L", "3"]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("identical complexes: PASS"), "{file}");
    }
}

#[test]
fn antisymmetry_violation_exits_3() {
    let bad = mutated("m2_affine.json", "antisym", |d| {
        d["lie"]["bracket"] = serde_json::json!([[0, 1, 1, "1"]]);
    });
    let o = hecke(&["hecke", path(&bad)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("antisymmetry"));
}

#[test]
fn augmentation_violation_exits_3() {
    let bad = mutated("dual_numbers.json", "augmentation", |d| {
        d["subalgebra"]["eps"] = serde_json::json!(["0", "0"]);
    });
    let o = hecke(&["hecke", path(&bad)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("augmentation-unit"));
}

#[test]
fn unreadable_input_exits_2() {
    let o = hecke(&["hecke", "/nonexistent/input.json"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hecke(&[
        "hecke",
        path(&data("dual_numbers.json")),
        "--resolution",
        "spline",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invalid_resolution_exits_3() {
    let r = format!("file:{}", path(&data("dual_numbers_not_exact.json")));
    let o = hecke(&[
        "hecke",
        path(&data("dual_numbers.json")),
        "--resolution",
        &r,
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn supplied_resolution_matches_bar() {
    let input = data("dual_numbers.json");
    let r = format!("file:{}", path(&data("dual_numbers_koszul.json")));
    let run = |res: &str| {
        let o = hecke(&[
            "hecke",
            path(&input),
            "--resolution",
            res,
            "--max-degree",
            "2",
            "--format",
            "json",
        ]);
        assert_eq!(o.status.code(), Some(0));
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        v["dims"].clone()
    };
    assert_eq!(run("bar"), run(&r));
}

#[test]
fn unstable_truncation_exits_4() {
    let o = hecke(&[
        "hecke",
        path(&data("m2_nilpotent.json")),
        "-L",
        "3",
        "--max-degree",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("unstable"));
}

#[test]
fn failed_check_exits_1() {
    let o = hecke(&[
        "free-cert",
        path(&data("m2_nilpotent.json")),
        "--candidate",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn output_is_deterministic() {
    let input = data("m2_affine.json");
    for args in [
        vec!["hecke", path(&input), "--max-degree", "2"],
        vec!["brst", path(&input), "--format", "json"],
    ] {
        let a = hecke(&args);
        let b = hecke(&args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn json_output_round_trips() {
    let input = data("m2_nilpotent.json");
    let o = hecke(&["triangle", path(&input), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
    assert_eq!(v["command"], "triangle");
    assert!(v["checks"].as_object().unwrap().values().all(|c| c == true));
}

#[test]
fn module_commands_run() {
    let input = data("dual_numbers.json");
    for args in [
        vec!["reduce", path(&input), "--module", "trivial"],
        vec!["observables", path(&input), "--module", "regular"],
        vec![
            "act",
            path(&input),
            "--module",
            "trivial",
            "--hk-degree",
            "1",
            "--degree",
            "0",
        ],
        vec!["ext", path(&input), "--module", "trivial"],
        vec!["tor", path(&input)],
    ] {
        let o = hecke(&args);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(!stdout(&o).contains("FAIL"), "{args:?}");
    }
    let o = hecke(&["reduce", path(&input), "--module", "missing"]);
    assert_ne!(o.status.code(), Some(0));
}
