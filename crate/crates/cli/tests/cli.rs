use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn gdiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gdiv"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn report(path: &str) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn out_path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

#[test]
fn dividing_c5_in_two_mode_is_a_class_violation() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.g6", "Dhc\n");
    let out = out_path(&dir, "out.json");
    let res = gdiv(&["divide", "--mode", "two", "--in", &c5, "--out", &out]);
    assert_eq!(code(&res), 4);
    let r = report(&out);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["records"][0]["status"], "class-violation");
    assert_eq!(r["records"][0]["witnesses"][0]["pattern"], "C5");
}

#[test]
fn perfect_colouring_sweep_respects_the_bound_and_reverifies() {
    let dir = TempDir::new().unwrap();
    let out = out_path(&dir, "color.json");
    let res = gdiv(&[
        "color",
        "--mode",
        "perfect",
        "--exhaustive",
        "7",
        "--filter",
        "bullfree,p5free",
        "--out",
        &out,
    ]);
    assert_eq!(code(&res), 0, "{}", String::from_utf8_lossy(&res.stderr));
    let r = report(&out);
    let records = r["records"].as_array().unwrap();
    assert!(!records.is_empty());
    for rec in records {
        let cert = &rec["coloring"]["certificate"];
        let omega = cert["omega"].as_u64().unwrap();
        assert!(cert["colors_used"].as_u64().unwrap() <= omega * (omega + 1) / 2);
    }
    assert_eq!(code(&gdiv(&["verify", "--division", &out])), 0);
}

#[test]
fn verify_rechecks_a_single_stored_division() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.g6", "Dhc\n");
    let out = out_path(&dir, "div.json");
    assert_eq!(
        code(&gdiv(&[
            "divide",
            "--mode",
            "perfect",
            "--exhaustive",
            "1-5",
            "--filter",
            "bullfree",
            "--out",
            &out
        ])),
        0
    );
    let checked = out_path(&dir, "verified.json");
    let res = gdiv(&[
        "verify",
        "--division",
        &out,
        "--graph",
        &c5,
        "--out",
        &checked,
    ]);
    assert_eq!(code(&res), 0);
    assert_eq!(report(&checked)["summary"]["total"], 1);
}

#[test]
fn tampered_reports_fail_verification() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.g6", "Dhc\n");
    let out = out_path(&dir, "div.json");
    assert_eq!(
        code(&gdiv(&[
            "divide", "--mode", "perfect", "--in", &c5, "--out", &out
        ])),
        0
    );
    let mut r = report(&out);
    let division = &mut r["records"][0]["division"];
    let (p, w) = (division["p"].clone(), division["w_side"].clone());
    division["p"] = w;
    division["w_side"] = p;
    fs::write(&out, r.to_string()).unwrap();
    assert_eq!(code(&gdiv(&["verify", "--division", &out])), 1);
}

#[test]
fn conjecture_search_finds_nothing_on_small_graphs() {
    let dir = TempDir::new().unwrap();
    for max_n in ["1", "5"] {
        let out = out_path(&dir, "conj.json");
        let res = gdiv(&[
            "conjecture",
            "--max-n",
            max_n,
            "--spot-checks",
            "20",
            "--out",
            &out,
        ]);
        assert_eq!(code(&res), 0);
        assert_eq!(report(&out)["summary"]["exit_status"], 0);
    }
}

#[test]
fn csv_audit_table() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.g6", "Dhc\n");
    let res = gdiv(&["color", "--mode", "perfect", "--in", &c5, "--format", "csv"]);
    assert_eq!(code(&res), 0);
    assert_eq!(
        String::from_utf8(res.stdout).unwrap(),
        "id,omega,chi,used,bound,slack\nDhc,2,3,3,3,0\n"
    );
    assert_eq!(
        code(&gdiv(&[
            "divide", "--mode", "two", "--in", &c5, "--format", "csv"
        ])),
        2
    );
}

#[test]
fn reports_are_reproducible() {
    let dir = TempDir::new().unwrap();
    let a = out_path(&dir, "a.json");
    let b = out_path(&dir, "b.json");
    for out in [&a, &b] {
        let res = gdiv(&[
            "classify", "--random", "7,0.4,30", "--seed", "9", "--out", out,
        ]);
        assert_eq!(code(&res), 0);
    }
    let strip = |p: &str| {
        let mut r = report(p);
        r.as_object_mut().unwrap().remove("generated_at");
        r
    };
    assert_eq!(strip(&a), strip(&b));
    let seq = out_path(&dir, "seq.json");
    gdiv(&[
        "classify",
        "--random",
        "7,0.4,30",
        "--seed",
        "9",
        "--sequential",
        "--out",
        &seq,
    ]);
    assert_eq!(strip(&a), strip(&seq));
}

#[test]
fn input_errors_have_distinct_statuses() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.g6", "D~~~~~\n");
    assert_eq!(code(&gdiv(&["classify", "--in", &bad])), 3);
    assert_eq!(code(&gdiv(&["classify", "--in", "/nonexistent/g.g6"])), 7);
    assert_eq!(code(&gdiv(&["classify", "--exhaustive", "11"])), 2);
    assert_eq!(code(&gdiv(&["classify"])), 2);
    assert_eq!(
        code(&gdiv(&[
            "classify", "--random", "6,0.5,3", "--filter", "oddhole"
        ])),
        2
    );
    let out = Path::new("/nonexistent/dir/out.json").to_str().unwrap();
    assert_eq!(
        code(&gdiv(&["classify", "--exhaustive", "3", "--out", out])),
        7
    );
}

#[test]
fn weights_file_and_budget() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.g6", "Dhc\n");
    let weights = write(&dir, "w.txt", "3 0 2 1 1\n");
    let out = out_path(&dir, "w.json");
    assert_eq!(
        code(&gdiv(&[
            "divide",
            "--mode",
            "perfect",
            "--in",
            &c5,
            "--weights",
            &weights,
            "--out",
            &out
        ])),
        0
    );
    assert!(report(&out)["records"][0]["division"]["weights"].is_array());
    let short = write(&dir, "short.txt", "1 1\n");
    assert_ne!(
        code(&gdiv(&[
            "divide",
            "--mode",
            "perfect",
            "--in",
            &c5,
            "--weights",
            &short
        ])),
        0
    );
}
