use std::path::PathBuf;

use hpk::cli::run;
use hpk::group::FiniteGroup;
use hpk::sgpd::SimplicialGroupoid;
use hpk::site::fixtures::{interval_and_point, two_object};
use hpk::site::{NaturalTransformation, PresheafJson, TransformationJson};
use serde_json::Value;

/// A scratch directory unique to one test.
fn scratch(test: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hpk-cli-{}-{test}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &PathBuf, name: &str, value: &impl serde::Serialize) -> String {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string(value).unwrap()).unwrap();
    path.display().to_string()
}

fn hpk(args: &[&str]) -> (i32, Value) {
    let (code, out) = run(std::iter::once("hpk").chain(args.iter().copied()));
    let report = serde_json::from_str(&out).unwrap_or(Value::String(out));
    (code, report)
}

#[test]
fn validate_on_the_two_simplex() {
    let dir = scratch("validate");
    let file = dir.join("d2.json").display().to_string();
    let (code, _) = hpk(&[
        "complex", "--shape", "simplex", "--n", "2", "--depth", "2", "-o", &file,
    ]);
    assert_eq!(code, 0);
    // the report wraps the complex; unwrap it into a plain fixture
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let d2 = write(&dir, "d2-sset.json", &report["result"]["sset"]);
    let (code, report) = hpk(&["validate", &d2]);
    assert_eq!(code, 0, "{report}");
    assert_eq!(report["status"], "ok");
    assert_eq!(
        report["result"]["files"][0]["violations"],
        Value::Array(vec![])
    );
}

#[test]
fn validate_reports_a_broken_face() {
    let dir = scratch("broken");
    let (_, report) = hpk(&["complex", "--shape", "simplex", "--n", "1", "--depth", "1"]);
    let mut sset = report["result"]["sset"].clone();
    // d0 of the degenerate edge on 1 must be 1
    sset["faces"]["1,0"]["11"] = serde_json::json!("0");
    let file = write(&dir, "bad.json", &sset);
    let good = write(&dir, "good.json", &report["result"]["sset"]);
    let (code, report) = hpk(&["--jobs", "2", "validate", &good, &file]);
    assert_eq!(code, 1, "{report}");
    assert_eq!(report["status"], "violation");
    assert_eq!(
        report["result"]["files"][0]["violations"],
        Value::Array(vec![])
    );
    assert_ne!(
        report["result"]["files"][1]["violations"],
        Value::Array(vec![])
    );
}

#[test]
fn wbar_of_constant_z2() {
    let dir = scratch("wbar");
    let a = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 2);
    let file = write(&dir, "z2.json", &a);
    let (code, report) = hpk(&["wbar", &file, "--depth", "3"]);
    assert_eq!(code, 0, "{report}");
    assert_eq!(
        report["result"]["level_sizes"],
        serde_json::json!([1, 2, 4, 8])
    );
    assert_eq!(report["meta"]["budget"], serde_json::json!(1_000_000));

    let (code, report) = hpk(&["--budget", "3", "wbar", &file, "--depth", "3"]);
    assert_eq!(code, 3, "{report}");
    assert_eq!(report["status"], "budget-exceeded");
}

#[test]
fn weq_on_a_pointwise_isomorphism() {
    let dir = scratch("weq");
    let c = two_object();
    let x = interval_and_point(&c, 3);
    let id = NaturalTransformation::identity(&x);
    let site = write(&dir, "site.json", &c);
    let pj = write(&dir, "x.json", &PresheafJson::from_presheaf(&c, &x));
    let map = write(
        &dir,
        "id.json",
        &TransformationJson::from_transformation(&c, &x, &x, &id),
    );
    let (code, report) = hpk(&["weq", &site, &pj, &pj, &map, "--nmax", "2"]);
    assert_eq!(code, 0, "{report}");
    assert_eq!(report["result"]["weak_equivalence"], Value::Bool(true));
}

#[test]
fn output_is_deterministic() {
    let dir = scratch("determinism");
    let a = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(3), 1);
    let file = write(&dir, "z3.json", &a);
    let args = ["hpk", "wbar", file.as_str(), "--depth", "2"];
    assert_eq!(run(args), run(args));
}

#[test]
fn input_errors_exit_with_two() {
    let (code, report) = hpk(&["validate", "/nonexistent/fixture.json"]);
    assert_eq!(code, 2);
    assert_eq!(report["status"], "input-error");
    let (code, _) = hpk(&["no-such-command"]);
    assert_eq!(code, 2);
}

#[test]
fn every_command_documents_depth_and_budget() {
    let commands = [
        "validate",
        "complex",
        "pushout",
        "pullback",
        "pi0",
        "pikan",
        "moore",
        "doldkan",
        "loop",
        "wbar",
        "wtotal",
        "transpose",
        "unit",
        "counit",
        "nerve",
        "pi2gpd",
        "whitehead",
        "msweq",
        "msfib",
        "site-validate",
        "comma",
        "yu",
        "sheafify",
        "hsheaf",
        "weq",
        "geninc",
        "lift",
        "bounds",
    ];
    for cmd in commands {
        let (code, text) = run(["hpk", cmd, "--help"]);
        assert_eq!(code, 0, "{cmd}");
        assert!(text.contains("--budget"), "{cmd}");
        assert!(text.to_lowercase().contains("depth"), "{cmd}: {text}");
    }
}

#[test]
fn text_format_is_a_summary() {
    let (code, text) = run([
        "hpk", "--format", "text", "complex", "--shape", "sphere", "--n", "1", "--depth", "2",
    ]);
    assert_eq!(code, 0);
    assert!(text.starts_with("command: \"complex\""), "{text}");
    assert!(text.contains("status: \"ok\""));
}
