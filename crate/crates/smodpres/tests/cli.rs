use std::process::Command;

use smodpres::cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
use smodpres::presentations::Presentation;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("smodpres").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn emit_pmod_json() {
    let (code, out, _) = call(&["emit", "--family", "pmod", "--m", "4", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["generators"], serde_json::json!(["t[1,2]", "t[2,3]"]));
    assert_eq!(v["relators"], serde_json::json!([]));
}

#[test]
fn emit_lmod_boundary_text() {
    let (code, out, _) = call(&["emit", "--family", "lmod-boundary", "--n", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("h[1]") && out.contains("t[1,3]"), "{out}");
}

#[test]
fn emit_smod_marked_has_twist_power() {
    let (code, out, _) = call(&["emit", "--family", "smod-marked", "--n", "1", "--k", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("t[1,3]^3"), "{out}");
}

#[test]
fn emit_parse_emit_round_trip() {
    let grid: &[&[&str]] = &[
        &["--family", "pmod", "--n", "5"],
        &["--family", "w", "--n", "2"],
        &["--family", "w-star", "--n", "2"],
        &["--family", "lmod-boundary", "--n", "2"],
        &["--family", "lmod-marked", "--n", "3"],
        &["--family", "lmod-closed", "--n", "2"],
        &["--family", "smod-boundary", "--n", "2", "--k", "3"],
        &["--family", "smod-marked", "--n", "1", "--k", "4"],
        &["--family", "smod-closed", "--n", "2", "--k", "5"],
    ];
    for params in grid {
        let mut text_args = vec!["emit"];
        text_args.extend_from_slice(params);
        let (_, text, _) = call(&text_args);
        assert_eq!(Presentation::from_text(&text).unwrap().to_text(), text);
        let mut json_args = text_args.clone();
        json_args.extend_from_slice(&["--format", "json"]);
        let (_, json, _) = call(&json_args);
        assert_eq!(format!("{}\n", Presentation::from_json(&json).unwrap().to_json()), json);
        // byte-identical on repeat
        assert_eq!(call(&text_args).1, text);
    }
}

#[test]
fn verify_passes_and_corruption_fails() {
    let (code, out, _) = call(&["verify", "--family", "lmod-closed", "--n", "2", "--engine", "sphere"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.lines().all(|l| l.split(' ').nth(1) == Some("OK")));
    let (code, _, _) = call(&["verify", "--family", "smod-closed", "--n", "1", "--k", "3", "--engine", "cover"]);
    assert_eq!(code, EXIT_OK);
    let (code, out, _) = call(&[
        "verify", "--family", "smod-marked", "--n", "1", "--k", "3", "--engine", "both", "--corrupt",
    ]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("FAIL") && out.contains("witness:"), "{out}");
}

#[test]
fn verify_output_is_sorted() {
    let (_, out, _) = call(&["verify", "--family", "lmod-marked", "--n", "2"]);
    let tags: Vec<&str> = out.lines().map(|l| l.split(' ').next().unwrap()).collect();
    let (_, again, _) = call(&["verify", "--family", "lmod-marked", "--n", "2"]);
    let tags2: Vec<&str> = again.lines().map(|l| l.split(' ').next().unwrap()).collect();
    assert_eq!(tags, tags2);
}

#[test]
fn cover_engine_rejects_lmod_closed() {
    let (code, _, err) = call(&["verify", "--family", "lmod-closed", "--n", "1", "--engine", "cover"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("error"));
}

#[test]
fn h1_examples() {
    let (code, out, _) = call(&["h1", "--family", "lmod-closed", "--n", "3", "--expect"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "Z^1 (+) Z_2 (+) Z_2"));
    let (code, out, _) = call(&["h1", "--family", "smod-marked", "--n", "2", "--k", "3", "--expect"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "Z^2 (+) Z_6"));
    let (code, out, _) = call(&["h1", "--family", "smod-boundary", "--n", "2", "--k", "4", "--expect"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "Z^3"));
}

#[test]
fn liftable_examples() {
    let (code, out, _) = call(&["liftable", "s[1]", "--n", "1"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "not-liftable (1 2)"));
    let (_, out, _) = call(&["liftable", "h[1]", "--n", "1"]);
    assert_eq!(out.trim(), "preserving (1 3)");
    let (_, out, _) = call(&["liftable", "r", "--n", "2"]);
    assert!(out.starts_with("reversing "), "{out}");
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["liftable", "t[1", "--n", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["emit", "--family", "nope", "--n", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["emit", "--family", "smod-closed", "--n", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["lemmas"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn lemmas_and_report() {
    let (code, out, _) = call(&["lemmas", "--n", "2"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.lines().count() > 10);
    let (code, out, _) = call(&["report", "--n", "2", "--k", "3", "--format", "json"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["lines"].as_array().unwrap().iter().all(|l| l["ok"] == true));
}

#[test]
fn report_seed_is_recorded() {
    let (_, out, _) = call(&["report", "--n", "1", "--seed", "7"]);
    assert!(out.contains("seed=7"), "{out}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_smodpres");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["h1", "--family", "lmod-marked", "--n", "2", "--expect"]), Some(0));
    assert_eq!(status(&["verify", "--family", "lmod-marked", "--n", "2", "--corrupt"]), Some(2));
    assert_eq!(status(&["emit"]), Some(1));
}
