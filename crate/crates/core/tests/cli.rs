use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use codeideal::io::parse_result_json;

const F3: &str = "field p=3 r=1 modulus=0,1\nparity 1 2 1\n";
const F4: &str = "field p=2 r=2 modulus=1,1,1 basis=a,1\nparity a a^3 a^2\n";

fn codeideal(args: &[&str], cache: &Path, stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_codeideal"))
        .args(args)
        .env("CODEIDEAL_CACHE_DIR", cache)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_job(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn graver_text_output() {
    let tmp = tempfile::tempdir().unwrap();
    let out = codeideal(&["graver", "-"], tmp.path(), Some(F3));
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 13);
    assert!(text.lines().any(|l| l == "x[1,1]*x[3,1] - x[2,1]"));
}

#[test]
fn json_round_trip_and_determinism() {
    let tmp = tempfile::tempdir().unwrap();
    let job = write_job(tmp.path(), "f4.job", F4);
    let args = ["ugb", job.as_str(), "--kind", "generalized", "--format", "json", "--no-cache"];
    let first = stdout(&codeideal(&args, tmp.path(), None));
    let second = stdout(&codeideal(&args, tmp.path(), None));
    assert_eq!(first, second);
    let doc = parse_result_json(&first).unwrap();
    assert_eq!(doc.count, 99);
    assert_eq!(doc.binomial_set().unwrap().len(), 99);

    let shortcut = ["ugb", job.as_str(), "--kind", "generalized", "--format", "json", "--no-cache", "--shortcut-char2"];
    let via_shortcut = parse_result_json(&stdout(&codeideal(&shortcut, tmp.path(), None))).unwrap();
    assert_eq!(via_shortcut.binomial_set(), doc.binomial_set());
}

#[test]
fn cache_matches_fresh_run() {
    let tmp = tempfile::tempdir().unwrap();
    let cache = tmp.path().join("cache");
    let job = write_job(tmp.path(), "f3.job", F3);
    let fresh = stdout(&codeideal(&["graver", &job, "--format", "json", "--no-cache"], &cache, None));
    assert!(!cache.exists(), "--no-cache must not write");
    let filled = stdout(&codeideal(&["graver", &job, "--format", "json"], &cache, None));
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 1);
    let hit = stdout(&codeideal(&["graver", &job, "--format", "json"], &cache, None));
    assert_eq!(fresh, filled);
    assert_eq!(fresh, hit);
}

#[test]
fn corrupt_cache_entry_is_a_computation_error() {
    let tmp = tempfile::tempdir().unwrap();
    let job = write_job(tmp.path(), "f3.job", F3);
    assert!(codeideal(&["rgb", &job], tmp.path(), None).status.success());
    let entry = fs::read_dir(tmp.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .find(|p| p.extension().is_some_and(|e| e == "json"));
    fs::write(entry.unwrap(), "{ not json").unwrap();
    let out = codeideal(&["rgb", &job], tmp.path(), None);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cache"));
}

#[test]
fn matrix_command() {
    let tmp = tempfile::tempdir().unwrap();
    let out = stdout(&codeideal(&["matrix", "-", "--kind", "generalized"], tmp.path(), Some(F4)));
    let expected = "# H_+e\n1 0 1 1 1 0 0 1 1\n1 1 0 0 1 1 1 0 1\n\
                    # H_+(q)\n1 0 1 1 1 0 0 1 1 2 0\n1 1 0 0 1 1 1 0 1 0 2\n# Lawrence(H_+e)\n";
    assert!(out.starts_with(expected), "{out}");
}

#[test]
fn verify_reports_agreement() {
    let tmp = tempfile::tempdir().unwrap();
    let out = stdout(&codeideal(&["verify", "-"], tmp.path(), Some(F3)));
    assert!(out.starts_with("# agree: yes\n# pipeline: 13, oracle: 13\n"), "{out}");
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let bad_token = codeideal(&["graver", "-"], tmp.path(), Some("field p=3 r=1 modulus=0,1\nparity 1 a^9 1\n"));
    assert_eq!(bad_token.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_token.stderr).contains("line 2"));

    let missing = codeideal(&["graver", "/nonexistent/job"], tmp.path(), None);
    assert_eq!(missing.status.code(), Some(2));

    // 5^13 candidate differences exceed the brute-force limit
    let big = "field p=2 r=1 modulus=1,1\nparity 1 1 1 1 1 1 1 1 1 1 1 1 1\n";
    let refused = codeideal(&["verify", "-", "--no-cache"], tmp.path(), Some(big));
    assert_eq!(refused.status.code(), Some(3));
}
