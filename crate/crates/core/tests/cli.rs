use std::process::{Command, Output};

use rotcalc::expr::ExprJson;
use rotcalc::{Context, Engine, Expression};

fn rotcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rotcalc")).args(args).output().unwrap()
}

#[test]
fn verify_all_at_n2_passes() {
    let out = rotcalc(&["verify", "--all", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows = text.lines().filter(|l| l.contains(" N=2 ")).count();
    assert!(rows >= 16, "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn json_record_for_the_main_identity() {
    let out = rotcalc(&["verify", "--identity", "virasoro-main", "--n", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1);
    let v: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(v["identity"], "virasoro-main");
    assert_eq!(v["n"], 1);
    assert_eq!(v["passed"], true);
    assert_eq!(v["witness_terms"], 0);
    assert!(v["elapsed_ms"].is_u64());
    assert!(v["anchor"].is_string());
}

#[test]
fn dump_f2_at_n1() {
    let out = rotcalc(&["dump", "f2-rotation", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    // (−5 t3 + 29 r t2)/(5760 g²) − 28 r³/(5760 g)
    assert_eq!(text.trim(), "f2-rotation = -1/1152*s1^-4*t3_1 + 29/5760*s1^-4*r11*t2_1 - 7/1440*s1^-2*r11^3");
}

#[test]
fn json_dump_reparses() {
    let out = rotcalc(&["--dump", "l1f2", "--n", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let json: ExprJson = serde_json::from_value(v["value"].clone()).unwrap();
    let e = Engine::new(Context::with_n(2).unwrap());
    assert_eq!(Expression::from_json(&json).unwrap(), e.l1f2_target().unwrap());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--identity", "no-such", "--n", "2"][..],
        &["verify", "--identity", "theta-sym", "--n", "1"],
        &["verify", "--all", "--n", "5"],
        &["verify", "--all", "--n", "2", "--max-tau", "4"],
        &["verify", "--n", "2"],
        &["frobnicate"],
        &[],
    ] {
        assert_eq!(rotcalc(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_order_ignores_thread_count() {
    let one = rotcalc(&["verify", "--all", "--n", "1", "--threads", "1", "--format", "json"]);
    let many = rotcalc(&["verify", "--all", "--n", "1", "--threads", "4", "--format", "json"]);
    let ids = |o: &Output| -> Vec<String> {
        String::from_utf8_lossy(&o.stdout)
            .lines()
            .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["identity"].to_string())
            .collect()
    };
    assert_eq!(ids(&one), ids(&many));
}
