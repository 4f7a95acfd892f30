use std::process::Command;

use isr1::cli::run;
use isr1::json::mat_from_value;
use isr1::Mat2;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["isr1"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let (code, out, err) = call(args);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}"));
    (code, v)
}

#[test]
fn decide_examples() {
    let (code, v) = json(&["decide", "5,12;0,0", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "isr1");
    assert_eq!(mat_from_value(&v["unitizer_Y"]).unwrap(), Mat2::new(-4, -10, 2, 5));
    assert_eq!(v["sign"], 1);

    let (code, v) = json(&["decide", "12,5;0,0", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "not_isr1");
    assert_eq!(v["reason"], "clean_criterion");
    assert_eq!(v["terminal_pair"], serde_json::json!([12, 5]));

    let (code, out, _) = call(&["decide", "1,0;0,1"]);
    assert_eq!(code, 0);
    assert!(out.contains("status: unit"));

    let (_, v) = json(&["decide", "1,2;3,4", "--format", "json"]);
    assert_eq!(v["status"], "not_sr1");
    assert_eq!(v["det"], -2);
    let (_, v) = json(&["decide", "4,2;0,0", "--format", "json"]);
    assert_eq!((v["status"].as_str(), v["content"].as_i64()), (Some("not_isr1"), Some(2)));
}

#[test]
fn json_matrices_reparse() {
    for m in ["-6,-3;12,6", "3,9;-1,-3", "0,0;0,0", "98765432109876543210,1;0,0", "-7,4;-14,8"] {
        let (_, v) = json(&["decide", m, "--format", "json"]);
        let input: Mat2 = m.parse().unwrap();
        assert_eq!(mat_from_value(&v["input"]).unwrap(), input);
        if let Some(e) = mat_from_value(&v["witness_E"]) {
            assert_eq!(mat_from_value(&v["unitizer_Y"]).unwrap(), e.adjugate());
            assert_eq!((&input * &e).trace(), v["sign"].as_i64().unwrap().into());
        }
    }
}

#[test]
fn input_errors_exit_1() {
    assert_eq!(call(&["decide", "1,2;3"]).0, 1);
    assert_eq!(call(&["decide", "a,b;c,d"]).0, 1);
    assert_eq!(call(&["bezout", "4", "6", "--minimal"]).0, 1);
    assert_eq!(call(&["scan", "--max", "1"]).0, 1);
    assert_eq!(call(&["scan", "--max", "2001"]).0, 1);
    assert_eq!(call(&["oracle", "--mod", "5", "--full"]).0, 1);
    assert_eq!(call(&["oracle", "--mod", "13", "--matrix", "1,0;0,1"]).0, 1);
    assert_eq!(call(&["oracle", "--mod", "1", "--matrix", "1,0;0,1"]).0, 1);
    assert_eq!(call(&["oracle", "--mod", "3"]).0, 1);
    assert_eq!(call(&["no-such-command"]).0, 1);
    let (code, _, err) = call(&["witness", "12,5;0,0"]);
    assert_eq!(code, 1);
    assert!(err.contains("not applicable"));
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn bezout_listing() {
    let (code, out, _) = call(&["bezout", "8", "13", "--minimal"]);
    assert_eq!(code, 0);
    assert!(out.contains("minimal pairs: (5,-3), (-8,5)"), "{out}");

    let (code, v) = json(&["bezout", "13", "18", "--divisibility", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["divisibility"]["holds"], false);
    assert_eq!(v["divisibility"]["minus_solutions"], serde_json::json!([]));
    assert_eq!(v["divisibility"]["plus_solutions"], serde_json::json!([]));

    let (_, v) = json(&["bezout", "2", "5", "--divisibility", "--format", "json"]);
    assert_eq!(v["divisibility"]["holds"], true);
    let s = &v["divisibility"]["solution"];
    let (x, z) = (s[0].as_i64().unwrap(), s[1].as_i64().unwrap());
    assert_eq!(2 * x + 5 * z, 1);

    let (code, out, _) = call(&["bezout", "-4", "6"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("gcd(-4, 6) = 2"), "{out}");
}

#[test]
fn scan_reproduces_tables() {
    let (code, out, _) = call(&["scan", "--max", "75"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("a,b,euclidean,divisibility,agree,witness"));
    let rows: Vec<&str> = lines.collect();
    for (row, verdict) in [("8,13,", true), ("12,17,", false), ("51,71,", false), ("15,23,", true)] {
        let line = rows.iter().find(|l| l.starts_with(row)).unwrap();
        let v = if verdict { "true,true,true,true" } else { "false,false,true,false" };
        assert_eq!(*line, format!("{row}{v}"));
    }
    let (_, out, _) = call(&["scan", "--max", "5"]);
    assert!(out.lines().any(|l| l == "1,1,true,true,true,true"));

    let (code, v) = json(&["scan", "--max", "300", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(v.as_array().unwrap().iter().all(|r| r["agree"] == true));
}

#[test]
fn oracle_reports() {
    let (code, v) = json(&["oracle", "--mod", "2", "--full", "--format", "json"]);
    assert_eq!(code, 0);
    for c in v["claims"].as_array().unwrap() {
        assert_eq!(c["holds"], true, "{c}");
    }

    // The C1/C2 comparison is part of every full report.
    let (code, out, _) = call(&["oracle", "--mod", "3", "--full", "--convention", "c2"]);
    assert_eq!(code, 0);
    assert!(out.contains("claim c1_matches_c2: ok"), "{out}");

    // 2E₁₁ over ℤ/12 is clean and strongly clean; the enumeration finds
    // it has left isr1 as well (ℤ/12 has nontrivial idempotents).
    let (code, v) = json(&["oracle", "--mod", "12", "--matrix", "2,0;0,0", "--format", "json"]);
    assert_eq!(code, 0);
    let m = &v["matrices"][0];
    assert_eq!(m["clean"], true);
    assert_eq!(m["strongly_clean"], true);
    assert_eq!(m["isr1"][0]["left_isr1"], m["isr1"][0]["right_isr1"]);
}

#[test]
fn oracle_reports_are_deterministic() {
    let a = call(&["oracle", "--mod", "3", "--full", "--format", "json"]);
    let b = call(&["oracle", "--mod", "3", "--full", "--format", "json"]);
    assert_eq!(a, b);
}

#[test]
fn witness_transcripts() {
    let (code, v) = json(&["witness", "2,1;0,0", "--samples", "100", "--seed", "42", "--format", "json"]);
    assert_eq!(code, 0);
    let samples = v["samples"].as_array().unwrap();
    assert_eq!(samples.len(), 100);
    assert!(samples.iter().all(|s| s["det"] == -1 && s["ok"] == true));

    let (code, out, _) = call(&["witness", "5,12;0,0"]);
    assert_eq!(code, 0);
    assert!(out.contains("clean decomposition: 5,12;0,0 = (-4,-10;2,5) + (9,22;-2,-5)"), "{out}");

    let first = call(&["witness", "15,23;0,0", "--samples", "30", "--seed", "9"]);
    let second = call(&["witness", "15,23;0,0", "--samples", "30", "--seed", "9"]);
    assert_eq!(first, second);
    let other = call(&["witness", "15,23;0,0", "--samples", "30", "--seed", "10"]);
    assert_ne!(first.1, other.1);
}

#[test]
fn binary_exit_codes_and_seed_env() {
    let exe = env!("CARGO_BIN_EXE_isr1");
    let out = Command::new(exe).args(["decide", "5,12;0,0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(exe).args(["decide", "5,12"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let run_with = |seed: Option<&str>| {
        let mut c = Command::new(exe);
        c.args(["witness", "5,12;0,0", "--samples", "5"]).env_remove("ISR1_SEED");
        if let Some(s) = seed {
            c.env("ISR1_SEED", s);
        }
        let o = c.output().unwrap();
        assert_eq!(o.status.code(), Some(0));
        String::from_utf8(o.stdout).unwrap()
    };
    let default = run_with(None);
    assert!(default.contains(&format!("seed: {}", isr1::cli::DEFAULT_SEED)));
    assert_eq!(default, run_with(None));
    let custom = run_with(Some("123"));
    assert!(custom.contains("seed: 123"));
    assert_ne!(default, custom);

    let bad = Command::new(exe).args(["witness", "5,12;0,0"]).env("ISR1_SEED", "abc").output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
