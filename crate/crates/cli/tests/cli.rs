use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bisgpd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bisgpd"))
        .args(args)
        .env_remove("BISGPD_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn repo_fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bisgpd-cli-{}-{}", name, std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn bis_of_p3_is_sym3() {
    let o = bisgpd(&["bis", "P3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("order 6\n"), "{}", out);
    assert!(out.contains("β_* is injective; image has order 6"));
    for c in ["(12)", "(13)", "(23)", "(123)", "(132)"] {
        assert!(out.contains(c), "{} missing", c);
    }
}

#[test]
fn committed_fixtures_match_the_registry() {
    let dir = scratch("emit");
    assert_eq!(bisgpd(&["fixtures", "emit", "--all", "--dir", dir.to_str().unwrap()]).status.code(), Some(0));
    let mut names: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert_eq!(names.len(), 18);
    for n in names {
        let fresh = std::fs::read(dir.join(&n)).unwrap();
        let committed = std::fs::read(repo_fixtures().join(&n)).unwrap_or_default();
        assert_eq!(fresh, committed, "{:?} differs from fixtures/", n);
    }
}

#[test]
fn comonad_suite_passes_on_committed_corpus() {
    let dir = repo_fixtures();
    let o = bisgpd(&["check", "comonad", "--corpus", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn machine_readable_lines_are_json() {
    let o = bisgpd(&["check", "gauge", "--format", "machine-readable"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(!out.is_empty());
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["law"].as_str().unwrap().starts_with("gauge."));
        assert!(["pass", "skipped"].contains(&v["status"].as_str().unwrap()));
    }
}

#[test]
fn gauge_of_free_s3_pair_has_18_arrows() {
    let o = bisgpd(&["gauge", "S3-pair-He"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "groupoid");
    assert_eq!(v["arrows"].as_array().unwrap().len(), 18);
}

#[test]
fn ltimes_output_validates() {
    let dir = scratch("ltimes");
    let o = bisgpd(&["ltimes", "S3-natural-action"]);
    assert_eq!(o.status.code(), Some(0));
    let file = dir.join("lt.json");
    std::fs::write(&file, o.stdout).unwrap();
    let v = bisgpd(&["validate", file.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("18 arrows over 3 objects, locally trivial"));
}

#[test]
fn bad_input_exits_2() {
    let dir = scratch("bad");
    let broken = dir.join("broken.json");
    std::fs::write(&broken, "{\"kind\": \"group\",\n  \"name\": }").unwrap();
    let o = bisgpd(&["validate", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    assert_eq!(bisgpd(&["bis", "S3-pair-He"]).status.code(), Some(2));
    assert_eq!(bisgpd(&["validate", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(bisgpd(&["fixtures", "emit", "nope"]).status.code(), Some(2));
}

#[test]
fn tight_cap_skips_instead_of_failing() {
    let o = bisgpd(&["--cap", "3", "check", "bisection"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("skipped"));
}
