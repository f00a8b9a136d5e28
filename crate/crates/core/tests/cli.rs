use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn lie2mm(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_lie2mm")).args(args).output().expect("binary runs");
    let report: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}\nstderr: {}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().expect("exit code"), report)
}

fn on(cmd: &str, file: &str) -> (i32, Value) {
    lie2mm(&[cmd, "--input", fixture(file).to_str().unwrap()])
}

fn strip_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v
}

#[test]
fn check_accepts_heisenberg() {
    let (code, r) = on("check", "heisenberg.json");
    assert_eq!(code, 0);
    assert_eq!(r["passed"], true);
    assert_eq!(r["exit_code"], 0);
}

#[test]
fn check_reports_jacobi_failure() {
    let (code, r) = on("check", "broken_jacobi.json");
    assert_eq!(code, 1);
    assert_eq!(r["passed"], false);
    let item = r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "lie_algebra").unwrap();
    assert_eq!(item["status"], "fail");
    assert!(item["detail"].as_str().unwrap().contains("Jacobi identity fails on (0,1,2)"), "{item}");
}

#[test]
fn cocycle_without_representation_is_rejected() {
    let (code, r) = on("exists", "missing_representation.json");
    assert_eq!(code, 1);
    assert_eq!(r["error"]["kind"], "invalid-input");
    assert!(r["error"]["message"].as_str().unwrap().contains("cocycle_c"));
}

#[test]
fn existence_verdicts_on_fixtures() {
    for (file, verdict) in [
        ("heisenberg.json", "exists"),
        ("heisenberg_cred_zero.json", "not-exists"),
        ("abelian_c_zero.json", "not-exists"),
        ("abelian_volume.json", "exists"),
        ("abelian_scaling.json", "not-exists"),
        ("su2_cartan.json", "exists"),
    ] {
        let (code, r) = on("exists", file);
        assert_eq!(code, 0, "{file}");
        assert_eq!(r["existence"]["verdict"], verdict, "{file}");
    }
    let (_, su2) = on("exists", "su2_cartan.json");
    assert_eq!(su2["scope"], "algebraic");
    assert!(su2["verdict_line"].as_str().unwrap().contains("algebraic certificate"));
}

#[test]
fn cohomology_of_heisenberg() {
    let (code, r) = on("cohomology", "heisenberg.json");
    assert_eq!(code, 0);
    assert_eq!(r["lie_algebra_cohomology"], serde_json::json!([1, 2, 2, 1]));
    assert_eq!(r["c_red_class_zero"], false);
    assert_eq!(r["h_reduced_dim"], 1);
}

#[test]
fn construct_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("mm.json");
    let input = fixture("heisenberg.json");
    let (code, built) = lie2mm(&["construct", "--input", input.to_str().unwrap(), "--output", report.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(built["verification"]["five_equations"]["passed"], true);
    assert_eq!(built["verification"]["d_tot"]["passed"], true);
    assert!(report.exists());

    let (code, checked) = lie2mm(&["verify", "--input", input.to_str().unwrap(), "--moment-map", report.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(checked["passed"], true);
    assert_eq!(checked["routes_agree"], true);
    assert_eq!(checked["inner_equivalence_to_phi_r"]["found"], true);
}

#[test]
fn perturbed_moment_map_names_failing_equation() {
    let dir = tempfile::tempdir().unwrap();
    let input = fixture("heisenberg.json");
    let (_, built) = on("construct", "heisenberg.json");
    let mut mm = built["moment_map"].clone();
    // μ₂(X, Y) += x only disturbs the binary equation
    mm["mu2"][0][0].as_array_mut().unwrap().push(serde_json::json!({ "exponents": [1, 0, 0], "coefficient": "1" }));
    let path = dir.path().join("bad.json");
    std::fs::write(&path, serde_json::to_string(&mm).unwrap()).unwrap();

    let (code, r) = lie2mm(&["verify", "--input", input.to_str().unwrap(), "--moment-map", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["passed"], false);
    assert_eq!(r["d_tot"]["passed"], false);
    let failed: Vec<&Value> = r["five_equations"]["equations"].as_array().unwrap().iter().filter(|e| e["passed"] == false).collect();
    assert_eq!(failed.len(), 1, "{failed:?}");
    assert_eq!(failed[0]["equation"], "binary");
    assert!(failed[0]["first_failure"]["defect"].is_string());
}

#[test]
fn mismatched_moment_map_dimensions_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let (_, built) = on("construct", "heisenberg.json");
    let mut mm = built["moment_map"].clone();
    mm["mu1_g"].as_array_mut().unwrap().pop();
    let path = dir.path().join("short.json");
    std::fs::write(&path, serde_json::to_string(&mm).unwrap()).unwrap();
    let (code, r) = lie2mm(&["verify", "--input", fixture("heisenberg.json").to_str().unwrap(), "--moment-map", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(r["error"]["kind"], "invalid-input");
}

#[test]
fn construct_without_geometry_reports_scope_and_witness() {
    let (code, r) = on("construct", "su2_cartan.json");
    assert_eq!(code, 1);
    assert_eq!(r["error"]["kind"], "out-of-geometric-scope");
    assert_eq!(r["algebraic_witness"]["verdict"], "exists");
}

#[test]
fn reports_are_deterministic() {
    for cmd in ["exists", "construct", "cohomology"] {
        let (_, a) = on(cmd, "heisenberg.json");
        let (_, b) = on(cmd, "heisenberg.json");
        assert_eq!(strip_timing(a), strip_timing(b), "{cmd}");
    }
}

#[test]
fn toml_and_json_inputs_agree() {
    for cmd in ["exists", "construct"] {
        let (_, a) = on(cmd, "heisenberg.json");
        let (_, b) = on(cmd, "heisenberg.toml");
        let (mut a, mut b) = (strip_timing(a), strip_timing(b));
        a.as_object_mut().unwrap().remove("input");
        b.as_object_mut().unwrap().remove("input");
        assert_eq!(a, b, "{cmd}");
    }
}

fn geometry_check(r: &Value) -> &Value {
    r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "geometry").unwrap()
}

#[test]
fn malformed_witness_point_fails() {
    let input = fixture("heisenberg.json");
    let (code, r) = lie2mm(&["check", "--input", input.to_str().unwrap(), "--witness-points", "1,2"]);
    assert_eq!(code, 1);
    assert_eq!(geometry_check(&r)["status"], "fail");
    assert!(geometry_check(&r)["detail"].as_str().unwrap().contains("--witness-points"));
    let (code, r) = lie2mm(&["exists", "--input", input.to_str().unwrap(), "--witness-points", "1,2"]);
    assert_eq!(code, 1);
    assert_eq!(r["error"]["kind"], "invalid-input");
}

#[test]
fn witness_points_on_volume_form_pass() {
    let (code, r) = lie2mm(&["check", "--input", fixture("heisenberg.json").to_str().unwrap(), "--witness-points", "0,0,0;1/3,-2,5"]);
    assert_eq!(code, 0);
    assert_eq!(r["passed"], true);
}

#[test]
fn degenerate_witness_point_fails_check() {
    let dir = tempfile::tempdir().unwrap();
    let mut problem: Value = serde_json::from_str(&std::fs::read_to_string(fixture("heisenberg.json")).unwrap()).unwrap();
    // x dx∧dy∧dz degenerates on the plane x = 0, which contains the witness origin
    problem["geometry"]["omega"][0]["polynomial"] = serde_json::json!([{ "exponents": [1, 0, 0], "coefficient": "1" }]);
    let path = dir.path().join("degenerate.json");
    std::fs::write(&path, problem.to_string()).unwrap();
    let (code, r) = lie2mm(&["check", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(geometry_check(&r)["status"], "fail");
    assert!(geometry_check(&r)["detail"].as_str().unwrap().contains("not injective"));
}
