use std::process::{Command, Output};

use serde_json::Value;

fn motivic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motivic"))
        .args(args)
        .env_remove("MOTIVIC_WORKERS")
        .output()
        .expect("spawn motivic")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn strip_timing(mut v: Value) -> Value {
    for r in v["reports"].as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("wall_time_ms");
    }
    v
}

#[test]
fn list_checks_is_stable() {
    let a = motivic(&["list-checks"]);
    assert!(a.status.success());
    let ids: Vec<String> = stdout(&a).lines().map(|l| l.split_whitespace().next().unwrap().to_string()).collect();
    assert!(ids.len() >= 18);
    for id in ["zeta-rationality", "rank2", "rank3", "var-rank3", "count-cross-check"] {
        assert!(ids.iter().any(|i| i == id), "{id} missing");
    }
    assert_eq!(stdout(&a), stdout(&motivic(&["list-checks"])));
}

#[test]
fn verify_rank2_writes_schema_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = motivic(&["verify", "--genus", "2", "--checks", "rank2", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["summary"]["pass"], 1);
    let r = &v["reports"][0];
    assert_eq!(r["id"], "rank2");
    assert_eq!(r["verdict"], "pass");
    assert!(r["anchor"].as_str().unwrap().contains("M(2,L)"));
    assert!(r["wall_time_ms"].is_number());
    assert!(stdout(&o).starts_with("PASS rank2"));
}

#[test]
fn json_is_deterministic_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let run = |workers: &str, name: &str| {
        let path = dir.path().join(name);
        let o = motivic(&[
            "verify", "--genus", "2..3", "--checks", "deczeta-chow,var-rank2,symmpro",
            "--workers", workers, "--json", path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        strip_timing(serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap())
    };
    let a = serde_json::to_string(&run("1", "a.json")).unwrap();
    let b = serde_json::to_string(&run("4", "b.json")).unwrap();
    assert_eq!(a, b);

    let o = motivic(&["verify", "--genus", "2", "--checks", "rank2", "--format", "json", "--no-timing"]);
    let p = motivic(&["verify", "--genus", "2", "--checks", "rank2", "--format", "json", "--no-timing"]);
    assert_eq!(o.stdout, p.stdout);
    assert!(!stdout(&o).contains("wall_time_ms"));
}

#[test]
fn flagged_is_not_a_failure() {
    let o = motivic(&["verify", "--genus", "2", "--checks", "inversion-consistency", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["flagged"], 2);
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["reports"][0]["note"].as_str().unwrap().starts_with("inversion-fixed-vs-varying-determinant"));
}

#[test]
fn usage_errors_exit_nonzero_without_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("never.json");
    let p = path.to_str().unwrap();
    for args in [
        vec!["verify", "--genus", "1", "--json", p],
        vec!["verify", "--genus", "2", "--checks", "no-such-check", "--json", p],
        vec!["verify", "--genus", "3", "--checks", "rank3", "--window", "0,10", "--json", p],
        vec!["verify", "--genus", "2", "--checks", "var-rank3", "--dim-window", "-5,5", "--json", p],
        vec!["verify", "--genus", "x", "--json", p],
        vec!["verify", "--genus", "2", "--workers", "0", "--json", p],
    ] {
        let o = motivic(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!path.exists(), "{args:?}");
    }
    // narrower windows are fine when nothing needs rank-3 degrees
    let o = motivic(&["verify", "--genus", "3", "--checks", "rank2", "--window", "0,10"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn workers_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_motivic"))
        .args(["verify", "--genus", "2", "--checks", "rank2"])
        .env("MOTIVIC_WORKERS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn realize_targets() {
    let o = motivic(&["realize", "--target", "poincare", "--class", "m2", "--genus", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1 + t^2 + 4t^3 + t^4 + t^6");

    let o = motivic(&["realize", "--target", "hodge", "--class", "jac", "--genus", "2"]);
    assert!(o.status.success());
    assert!(serde_json::from_str::<Value>(stdout(&o).trim()).is_ok());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("counts.json");
    std::fs::write(&path, r#"{"q": 3, "counts": [4, 16]}"#).unwrap();
    let o = motivic(&["realize", "--target", "count", "--class", "ck:1", "--counts", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "4");

    let o = motivic(&["realize", "--target", "count", "--class", "m2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = motivic(&["realize", "--target", "poincare", "--class", "m9"]);
    assert_eq!(o.status.code(), Some(2));
}
