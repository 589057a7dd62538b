use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const VERSION: &str = env!("CARGO_PKG_VERSION");

fn run(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_orbitcalc"));
    cmd.args(args).env_remove("ORBITCALC_CACHE").env_remove("RUST_LOG");
    if let Some(dir) = cache {
        cmd.env("ORBITCALC_CACHE", dir);
    }
    cmd.output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args, None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn unramified_g2_has_seven_rows() {
    let v = json(&["unramified", "--type", "G", "--rank", "2", "--json"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["pairs"], 8);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 7);
    let mut nontrivial: Vec<(String, String)> = classes
        .iter()
        .filter(|c| c["component_class"] != "1")
        .map(|c| (c["component_class"].as_str().unwrap().into(), c["dual_orbit"].as_str().unwrap().into()))
        .collect();
    nontrivial.sort();
    assert_eq!(nontrivial, vec![("(12)".into(), "~A1".into()), ("(123)".into(), "A1".into())]);
}

#[test]
fn arthur_wf_a2() {
    let v = json(&["arthur-wf", "--type", "A", "--rank", "2", "--dual-orbit", "2,1", "--json"]);
    assert_eq!(v["geometric"], serde_json::json!(["2,1"]));
    assert_eq!(v["cross_check"], true);
}

#[test]
fn orbits_b3() {
    let v = json(&["orbits", "--type", "B", "--rank", "3", "--json"]);
    let names: Vec<&str> = v["orbits"].as_array().unwrap().iter().map(|o| o["orbit"].as_str().unwrap()).collect();
    assert_eq!(names, ["1,1,1,1,1,1,1", "2,2,1,1,1", "3,1,1,1,1", "3,2,2", "3,3,1", "5,1,1", "7"]);
    assert_eq!(v["hasse"].as_array().unwrap().len(), 6);
}

#[test]
fn local_wf_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("data.json");
    fs::write(&path, r#"[{"J": [], "irreps": [{"label": "1", "mult": 1}]}, {"J": [1], "irreps": [{"label": "sgn", "mult": 1}]}]"#)
        .unwrap();
    let v = json(&["local-wf", "--type", "A", "--rank", "2", "--data", path.to_str().unwrap(), "--json"]);
    assert_eq!(v["geometric"], serde_json::json!(["2,1"]));
    let st = json(&["local-wf", "--type", "G", "--rank", "2", "--pattern", "steinberg", "--json"]);
    assert_eq!(st["geometric"], serde_json::json!(["G2"]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["orbits", "--type", "Q", "--rank", "2"], None).status.code(), Some(2));
    assert_eq!(run(&["orbits", "--type", "A"], None).status.code(), Some(2));
    assert_eq!(run(&["orbits", "--type", "G", "--rank", "3"], None).status.code(), Some(2));
    assert_eq!(run(&["arthur-wf", "--type", "A", "--rank", "2", "--dual-orbit", "4"], None).status.code(), Some(2));
    assert_eq!(run(&["nonsense"], None).status.code(), Some(2));
    // too large to enumerate
    assert_eq!(run(&["unramified", "--type", "A", "--rank", "7"], None).status.code(), Some(1));
    assert_eq!(run(&["selftest"], None).status.code(), Some(0));
}

#[test]
fn runs_are_deterministic() {
    let args = ["unramified", "--type", "B", "--rank", "2", "--json"];
    assert_eq!(run(&args, None).stdout, run(&args, None).stdout);
}

#[test]
fn cache_cold_warm_and_corrupt() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["unramified", "--type", "C", "--rank", "3", "--isogeny", "simply_connected", "--json"];
    let fresh = run(&args, None).stdout;
    let cold = run(&args, Some(dir.path()));
    let file = dir.path().join(format!("v{VERSION}")).join("C3-simply_connected-unramified.json");
    assert!(file.exists());
    let warm = run(&args, Some(dir.path()));
    assert_eq!(cold.stdout, fresh);
    assert_eq!(warm.stdout, fresh);
    assert!(warm.stderr.is_empty());

    fs::write(&file, "{ not json").unwrap();
    let out = run(&args, Some(dir.path()));
    assert_eq!(out.stdout, fresh);
    assert!(String::from_utf8_lossy(&out.stderr).contains("corrupt"));
    assert_eq!(run(&args, Some(dir.path())).stdout, fresh);
}

#[test]
fn version_bump_invalidates() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["orbits", "--type", "A", "--rank", "3", "--json"];
    let fresh = run(&args, None).stdout;
    let sub = dir.path().join(format!("v{VERSION}"));
    fs::create_dir_all(&sub).unwrap();
    let bogus = serde_json::json!({ "version": "0.0.0", "data": { "orbits": [], "hasse": [] } });
    fs::write(sub.join("A3-adjoint-orbits.json"), bogus.to_string()).unwrap();
    let out = run(&args, Some(dir.path()));
    assert_eq!(out.stdout, fresh);
    assert!(String::from_utf8_lossy(&out.stderr).contains("stale"));
}

#[cfg(unix)]
#[test]
fn read_only_cache_dir() {
    use std::os::unix::fs::PermissionsExt;
    let dir = tempfile::tempdir().unwrap();
    let mut cache = dir.path().to_path_buf();
    fs::set_permissions(dir.path(), fs::Permissions::from_mode(0o555)).unwrap();
    if fs::write(dir.path().join("probe"), "").is_ok() {
        // permissions are not enforced for root; a plain file blocks the
        // cache just as well
        cache = dir.path().join("probe");
    }
    let args = ["orbits", "--type", "G", "--rank", "2", "--json"];
    let out = run(&args, Some(&cache));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, run(&args, None).stdout);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not writable"));
}
