//! End-to-end smoke tests for the `liftmrd` binary: each subcommand runs
//! against real files in a scratch directory and the documented exit codes
//! are asserted. Output determinism matters here: witnesses and JSON lines
//! are compared byte-for-byte where the contract promises stability.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_liftmrd"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("liftmrd-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn lift_mrd_verify_and_design_round_trip() {
    let dir = scratch("round-trip");
    let code = dir.join("small.json");
    let out = bin()
        .args(["lift-mrd", "--q", "2", "--n", "4", "--k", "2", "--delta", "1"])
        .arg("--out")
        .arg(&code)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("16 codewords"));

    let out = bin().arg("verify").arg("--code").arg(&code).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("min distance 2, witness (0,5)"), "{text}");
    assert!(text.contains("claimed distance 2: verified"), "{text}");

    for check in ["td", "std", "oa", "resolvable"] {
        let out = bin()
            .arg("design")
            .arg("--code")
            .arg(&code)
            .args(["--check", check])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "check {check}: {}", stderr(&out));
        assert!(stdout(&out).contains("PASS"), "check {check}");
    }

    // same verdicts from the compact form
    let compact = dir.join("small.txt");
    let out = bin()
        .args(["lift-mrd", "--q", "2", "--n", "4", "--k", "2", "--delta", "1"])
        .args(["--format", "compact"])
        .arg("--out")
        .arg(&compact)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let out = bin().arg("verify").arg("--code").arg(&compact).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("min distance 2, witness (0,5)"));

    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = scratch("exit-codes");

    // precondition: k > n - k
    let out = bin()
        .args(["lift-mrd", "--q", "2", "--n", "6", "--k", "4", "--delta", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("1 < k <= n - k"), "{}", stderr(&out));

    // refuted: inflate the claimed distance and watch verify fail
    let code = dir.join("small.json");
    let ok = bin()
        .args(["lift-mrd", "--q", "2", "--n", "4", "--k", "2", "--delta", "1"])
        .arg("--out")
        .arg(&code)
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let inflated = dir.join("inflated.json");
    let text = std::fs::read_to_string(&code).unwrap();
    std::fs::write(&inflated, text.replace("\"claimed_d\": 2", "\"claimed_d\": 4")).unwrap();
    let out = bin().arg("verify").arg("--code").arg(&inflated).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("refuted"));

    // usage errors are precondition violations too
    let out = bin().args(["verify", "--no-such-flag"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = bin().arg("parallelism").output().unwrap();
    assert_eq!(out.status.code(), Some(3));

    // resource cap
    let out = bin()
        .args(["lift-mrd", "--q", "5", "--n", "16", "--k", "8", "--delta", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4), "{}", stderr(&out));

    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn bounds_json_is_byte_stable() {
    let out = bin()
        .args(["--json", "bounds", "--q", "2", "--n", "8", "--k", "4", "--delta", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"q\":2,\"n\":8,\"k\":4,\"delta\":2,\"johnson\":6477,\"mrd\":4096,\"ratio\":\"0.632392\",\"thmA\":null,\"thmB\":4797}\n"
    );
}

#[test]
fn construct_lincode_and_parallelism() {
    let dir = scratch("construct");
    let c1 = dir.join("c1.json");
    let out = bin()
        .args(["construct", "--scheme", "I", "--q", "2", "--n", "8"])
        .arg("--out")
        .arg(&c1)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("1179 codewords"));

    let small = dir.join("small.json");
    let ok = bin()
        .args(["lift-mrd", "--q", "2", "--n", "4", "--k", "2", "--delta", "1"])
        .arg("--out")
        .arg(&small)
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let out = bin()
        .arg("lincode")
        .arg("--code")
        .arg(&small)
        .args(["--emit", "alist", "--which", "H"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).starts_with("12 16\n4 3\n"), "{}", stdout(&out));
    let out = bin()
        .arg("lincode")
        .arg("--code")
        .arg(&small)
        .args(["--emit", "alist", "--which", "HT"])
        .output()
        .unwrap();
    assert!(stdout(&out).starts_with("16 12\n3 4\n"), "{}", stdout(&out));

    let out = bin()
        .arg("lincode")
        .arg("--code")
        .arg(&small)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("length 12, dimension 4, distance 6 (exact)"), "{text}");
    assert!(text.contains("length 16, dimension 8, distance 4 (exact)"), "{text}");

    let out = bin().args(["parallelism", "--verify-table5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(
        stdout(&out).contains("defect found in spread 6; repaired table verified"),
        "{}",
        stdout(&out)
    );

    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn cache_dir_supplies_default_output_location() {
    let dir = scratch("cache");
    let out = bin()
        .args(["lift-mrd", "--q", "2", "--n", "4", "--k", "2", "--delta", "1"])
        .env("LIFTMRD_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let expected = dir.join("lifted-mrd-q2-n4-k2-delta1.json");
    assert!(expected.exists());
    let _ = std::fs::remove_dir_all(&dir);
}
