use std::path::Path;
use std::process::{Command, Output};

fn permlab(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permlab"))
        .args(args)
        .env("PERMLAB_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name),
    )
    .unwrap()
}

#[test]
fn gen_examples() {
    let dir = tempfile::tempdir().unwrap();
    let o = permlab(dir.path(), &["gen", "p2", "--n", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x1_1*x2_2 + x1_2^2\n");
    let o = permlab(dir.path(), &["gen", "pij:1,2", "--n", "3"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = permlab(dir.path(), &["gen", "decomp:0", "--n", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("n >= 3"));
    let o = permlab(dir.path(), &["gen", "nonsense", "--n", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn gb_is_deterministic_and_cached() {
    let dir = tempfile::tempdir().unwrap();
    let first = permlab(dir.path(), &["gb", "p2", "--n", "3"]);
    assert!(first.status.success());
    assert!(stderr(&first).contains("cache miss"));
    assert_eq!(stdout(&first), golden("gb_p2_n3.txt"));
    let second = permlab(dir.path(), &["gb", "p2", "--n", "3"]);
    assert!(stderr(&second).contains("cache hit"));
    assert_eq!(first.stdout, second.stdout);
    let o = permlab(dir.path(), &["gb", "p2", "--n", "2"]);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn corrupt_cache_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    permlab(dir.path(), &["gb", "p2", "--n", "3"]);
    let entries: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(entries.len(), 1);
    std::fs::write(&entries[0], b"garbage").unwrap();
    let o = permlab(dir.path(), &["gb", "p2", "--n", "3"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("cache miss"));
    assert_eq!(stdout(&o), golden("gb_p2_n3.txt"));
    let o = permlab(dir.path(), &["gb", "p2", "--n", "3"]);
    assert!(stderr(&o).contains("cache hit"));
}

#[test]
fn cache_dir_flag_beats_environment() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let flag = flag_dir.path().to_str().unwrap();
    permlab(
        env_dir.path(),
        &["gb", "p2", "--n", "2", "--cache-dir", flag],
    );
    assert_eq!(std::fs::read_dir(flag_dir.path()).unwrap().count(), 1);
    assert_eq!(std::fs::read_dir(env_dir.path()).unwrap().count(), 0);
}

#[test]
fn json_output() {
    let dir = tempfile::tempdir().unwrap();
    let o = permlab(dir.path(), &["gb", "p2", "--n", "3", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["size"], 14);
    assert_eq!(v["order"], "diag-lex");
    assert_eq!(v["polynomials"].as_array().unwrap().len(), 14);
}

#[test]
fn nf_examples() {
    let dir = tempfile::tempdir().unwrap();
    let o = permlab(dir.path(), &["nf", "x1_2*x1_3*x2_3", "p2", "--n", "3"]);
    assert_eq!(stdout(&o), "-x1_3^2*x2_2\n");
    let o = permlab(dir.path(), &["nf", "x1_2*x3_4", "p2", "--n", "4"]);
    assert_eq!(stdout(&o), "0\n");
    let o = permlab(dir.path(), &["nf", "0", "p2", "--n", "3"]);
    assert_eq!(stdout(&o), "0\n");
    let o = permlab(dir.path(), &["nf", "x1_2 +* 3", "p2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_commands() {
    let dir = tempfile::tempdir().unwrap();
    let o = permlab(dir.path(), &["check", "grobner", "--n", "4"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["assertions"][0]["witness"], "|GB| = 57");

    let o = permlab(dir.path(), &["check", "all", "--n", "3"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 9);
    assert!(reports.iter().all(|r| r["passed"] == true));

    let o = permlab(
        dir.path(),
        &["check", "char2", "--n", "3", "--field", "fp:2"],
    );
    assert!(o.status.success());

    let o = permlab(dir.path(), &["check", "depth", "--n", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = permlab(dir.path(), &["check", "all", "--n", "2", "--out", "text"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("skip depth"));
}

#[test]
fn budget_exhaustion_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = permlab(
        dir.path(),
        &[
            "gb",
            "p2",
            "--n",
            "6",
            "--paranoid",
            "--budget-seconds",
            "1",
        ],
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("budget exhausted"));
}

#[test]
fn bad_configuration_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["gen", "p2", "--n", "1"][..],
        &["gen", "p2", "--field", "fp:4"],
        &["gen", "p2", "--order", "qk-lex:9"],
        &["gb", "p2", "--budget-seconds", "0"],
        &["frobnicate"],
    ] {
        assert_eq!(permlab(dir.path(), args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn export_scripts_match_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = permlab(dir.path(), &["export", "p2", "--n", "3"]);
    assert_eq!(stdout(&o), golden("export_p2_n3.sing"));
    let o = permlab(
        dir.path(),
        &["export", "p2", "--n", "3", "--out", "macaulay2"],
    );
    assert_eq!(stdout(&o), golden("export_p2_n3.m2"));
    let o = permlab(dir.path(), &["export", "p2", "--n", "3", "--out", "json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn export_names_are_collision_free() {
    let dir = tempfile::tempdir().unwrap();
    for (n, cas) in [(9, "singular"), (10, "singular"), (10, "macaulay2")] {
        let o = permlab(
            dir.path(),
            &["gen", "maxideal", "--n", &n.to_string(), "--out", cas],
        );
        let text = stdout(&o);
        let decl = text.lines().next().unwrap();
        let inner = &decl[decl.find(['(', '[']).unwrap() + 1..decl.rfind([')', ']']).unwrap()];
        let names: Vec<&str> = if cas == "singular" {
            inner.split(',').collect()
        } else {
            inner
                .split(", ")
                .filter(|s| !s.starts_with("MonomialOrder"))
                .collect()
        };
        let unique: std::collections::BTreeSet<_> = names.iter().collect();
        assert_eq!(names.len(), n * (n + 1) / 2, "{decl}");
        assert_eq!(unique.len(), names.len());
    }
}

#[test]
fn qk_order_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let o = permlab(
        dir.path(),
        &[
            "gb", "qk:3", "--n", "3", "--order", "qk-lex:3", "--out", "json",
        ],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], "qk-lex:3");
}
