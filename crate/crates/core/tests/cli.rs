use std::path::PathBuf;
use std::process::{Command, Output};

fn stdlib() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../stdlib")
}

fn tt2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tt2"))
        .args(args)
        .env("TT2_COLOR", "0")
        .output()
        .unwrap()
}

fn lib(f: &str) -> String {
    stdlib().join(f).display().to_string()
}

fn text(b: &[u8]) -> String {
    String::from_utf8(b.to_vec()).unwrap()
}

#[test]
fn check_exit_codes() {
    let ok = tt2(&["check", &lib("fin.tt")]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(ok.stdout.is_empty() && ok.stderr.is_empty());

    let bad = tt2(&["check", &lib("negative/jf_strict_motive.tt")]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(bad.stdout.is_empty());
    assert!(text(&bad.stderr).contains("error[FIBRANCY]"));

    assert_eq!(tt2(&["check", "/no/such/file.tt"]).status.code(), Some(2));
    assert_eq!(tt2(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        tt2(&["--universes", "0", "check", &lib("fin.tt")]).status.code(),
        Some(2)
    );
    assert_eq!(tt2(&["check"]).status.code(), Some(2));
    assert_eq!(tt2(&["--help"]).status.code(), Some(0));
}

#[test]
fn files_share_one_signature() {
    let alone = tt2(&["check", &lib("semi_segal2.tt")]);
    assert_eq!(alone.status.code(), Some(1));
    assert!(text(&alone.stderr).contains("error[UNBOUND]"));
    let together = tt2(&["check", &lib("base.tt"), &lib("equiv.tt"), &lib("semi_segal2.tt")]);
    assert_eq!(together.status.code(), Some(0));
}

#[test]
fn include_paths() {
    let dir = stdlib().display().to_string();
    assert_eq!(
        tt2(&["-I", &dir, "check", "base.tt", "negative/hole.tt"]).status.code(),
        Some(1)
    );
    assert_eq!(
        tt2(&["-I", &dir, "check", "base.tt", "fin.tt", "iso.tt", "strict_cat.tt"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn generated_sst_rechecks() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.tt").display().to_string();
    assert_eq!(
        tt2(&["gen", "sst", "--levels", "2", "--out", &out]).status.code(),
        Some(0)
    );
    let body = std::fs::read_to_string(&out).unwrap();
    assert!(body.contains("X1 : X0 -> X0 -> U0"));
    assert_eq!(tt2(&["check", &out]).status.code(), Some(0));

    let seg = dir.path().join("seg.tt").display().to_string();
    assert_eq!(
        tt2(&["gen", "segal", "--levels", "3", "--out", &seg]).status.code(),
        Some(0)
    );
    assert_eq!(
        tt2(&["check", &lib("base.tt"), &lib("equiv.tt"), &seg]).status.code(),
        Some(0)
    );

    assert_eq!(tt2(&["gen", "segal", "--levels", "1"]).status.code(), Some(2));
    assert_eq!(tt2(&["gen", "sst", "--levels", "40"]).status.code(), Some(2));
    assert_eq!(tt2(&["gen", "cube", "--levels", "2"]).status.code(), Some(2));
}

#[test]
fn generation_is_deterministic() {
    for args in [
        &["gen", "sst", "--levels", "4"][..],
        &["gen", "spine", "--levels", "3", "--literal-spine", "--prefix", "k_"],
        &["gen", "segal", "--levels", "4"],
    ] {
        let (a, b) = (tt2(args), tt2(args));
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn eval_prints_normal_forms() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("e.tt");
    std::fs::write(
        &f,
        "def two : Nat := suc (suc zero)\ndef four : Nat := natelim (\\_. Nat) two (\\_ r. suc r) two\n",
    )
    .unwrap();
    let f = f.display().to_string();
    let out = tt2(&["eval", &f, "--term", "four"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(text(&out.stdout), "suc (suc (suc (suc zero)))\n");
    assert_eq!(tt2(&["eval", &f, "--term", "five"]).status.code(), Some(2));
    assert_eq!(tt2(&["eval", &f]).status.code(), Some(2));
}

#[test]
fn delta_faces() {
    let out = tt2(&["delta", "--faces", "1", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(text(&out.stdout), "0,1\n0,2\n1,2\n");
    let out = tt2(&["delta", "--faces", "2", "5"]);
    assert_eq!(text(&out.stdout).lines().count(), 20);
    assert_eq!(tt2(&["delta", "--faces", "1"]).status.code(), Some(2));
}

#[test]
fn json_diagnostics() {
    let out = tt2(&[
        "--json-diagnostics",
        "check",
        &lib("negative/unbound.tt"),
        &lib("negative/univ_in_itself.tt"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let codes: Vec<String> = text(&out.stderr)
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["code"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(codes, ["UNBOUND", "LEVEL"]);
}

#[test]
fn color_switches() {
    let neg = lib("negative/hole.tt");
    let plain = Command::new(env!("CARGO_BIN_EXE_tt2"))
        .args(["check", &neg])
        .env("TT2_COLOR", "0")
        .output()
        .unwrap();
    assert!(!plain.stderr.contains(&0x1b));
    let flag = Command::new(env!("CARGO_BIN_EXE_tt2"))
        .args(["--no-color", "check", &neg])
        .env_remove("TT2_COLOR")
        .output()
        .unwrap();
    assert!(!flag.stderr.contains(&0x1b));
    let colored = Command::new(env!("CARGO_BIN_EXE_tt2"))
        .args(["check", &neg])
        .env_remove("TT2_COLOR")
        .output()
        .unwrap();
    assert!(colored.stderr.contains(&0x1b));
}

#[test]
fn universe_options() {
    assert_eq!(
        tt2(&["--universes", "1", "check", &lib("negative/univ_in_itself.tt")])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        tt2(&["--collapse-fibrant-universes", "check", &lib("fin.tt")])
            .status
            .code(),
        Some(0)
    );
}
