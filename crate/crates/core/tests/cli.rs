//! Command-line behaviour: exit codes, outputs and determinism.

use cheb4::cli::{run, EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};
use serde_json::Value;
use std::process::Command;

fn cheb4(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["cheb4"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("cheb4-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn extraneous(report: &Value) -> Vec<(f64, f64, f64, String)> {
    report["fixed_points"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|f| f["kind"] == "Extraneous")
        .map(|f| {
            (
                num(&f["location"]["re"]),
                num(&f["location"]["im"]),
                num(&f["modulus"]),
                f["classification"].as_str().unwrap().to_string(),
            )
        })
        .collect()
}

#[test]
fn analyze_positive_parameter() {
    let (code, out, _) = cheb4(&["analyze", "--a", "0.5"]);
    assert_eq!(code, EXIT_OK);
    let r = json(&out);
    assert_eq!(r["case_tag"], "Case3Generic");
    assert_eq!(r["fixed_points"].as_array().unwrap().len(), 11);
    let ext = extraneous(&r);
    assert_eq!(ext.len(), 6);
    for (_, im, m, class) in ext {
        assert_eq!(im, 0.0);
        assert_eq!(class, "Repelling");
        assert!(m >= 14.0 / 3.0);
    }
    assert_eq!(r["axis"]["layout"]["sign"], "positive");
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn analyze_negative_parameter() {
    let (code, out, _) = cheb4(&["analyze", "--a", "-0.5"]);
    assert_eq!(code, EXIT_OK);
    let ext = extraneous(&json(&out));
    assert_eq!(ext.len(), 6);
    assert_eq!(ext.iter().filter(|e| e.1 == 0.0).count(), 4);
    assert_eq!(ext.iter().filter(|e| e.0 == 0.0 && e.1 != 0.0).count(), 2);
    assert!(ext.iter().all(|e| e.3 == "Repelling"));
}

#[test]
fn analyze_complex_parameter_and_out_file() {
    let path = tmp("complex.json");
    let (code, out, _) = cheb4(&["analyze", "--a", "0.3+0.4i", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let r = json(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(num(&r["parameter"]["im"]), 0.4);
    assert!(r["axis"].is_null());
}

#[test]
fn excluded_parameters_exit_2_naming_the_value() {
    for a in ["1", "-1", "0", "1.0", "1+0i"] {
        let (code, _, err) = cheb4(&["analyze", "--a", a]);
        assert_eq!(code, EXIT_USAGE, "{a}");
        assert!(err.contains("is excluded"), "{err}");
    }
    let (_, _, err) = cheb4(&["render", "--a", "-1", "--out", "x.ppm"]);
    assert!(err.contains("a = -1"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cheb4(&["analyze"]).0, EXIT_USAGE);
    assert_eq!(cheb4(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(cheb4(&["analyze", "--a", "0.5", "--quartic", "1,0,0,0,1"]).0, EXIT_USAGE);
    assert_eq!(cheb4(&["analyze", "--quartic", "1,2,3"]).0, EXIT_USAGE);
    assert_eq!(cheb4(&["analyze", "--quartic", "0,0,1,0,1"]).0, EXIT_USAGE);
    assert_eq!(cheb4(&["render", "--a", "0.5", "--size", "0x4", "--out", "x.ppm"]).0, EXIT_USAGE);
    assert_eq!(cheb4(&["render", "--a", "0.5", "--viewport", "1,-1,0,1", "--out", "x.ppm"]).0, EXIT_USAGE);
    assert_eq!(cheb4(&["verify", "--params", "0.5,1.5"]).0, EXIT_USAGE);
    assert_eq!(cheb4(&["--help"]).0, EXIT_OK);
}

#[test]
fn non_family_quartic_reports_case() {
    let (code, out, _) = cheb4(&["analyze", "--quartic", "1,0,0,0,-1"]);
    assert_eq!(code, EXIT_OK);
    let r = json(&out);
    assert_eq!(r["case_tag"], "Case1");
    assert!(!r["disposition"].as_str().unwrap().is_empty());
    assert!(r["parameter"].is_null());
}

#[test]
fn family_quartic_in_disguise_is_reduced() {
    // 2 ((z - 1)^2 - 1)((z - 1)^2 - 0.5) expanded
    let (code, out, _) = cheb4(&["analyze", "--quartic", "2,-8,9,-2,0"]);
    assert_eq!(code, EXIT_OK);
    let r = json(&out);
    assert_eq!(r["case_tag"], "Case3Generic");
    let a = (num(&r["parameter"]["re"]), num(&r["parameter"]["im"]));
    assert!([0.5, 2.0].iter().any(|&x| (a.0 - x).abs() < 1e-12) && a.1.abs() < 1e-12, "{a:?}");
}

#[test]
fn orbit_examples() {
    let (code, out, _) = cheb4(&["orbit", "--a", "0.5", "--seed", "2,0"]);
    assert_eq!(code, EXIT_OK);
    let r = json(&out);
    assert_eq!(num(&r["root"]["re"]), 1.0);
    assert_eq!(r["label"], 4);

    let (_, out, _) = cheb4(&["orbit", "--a", "-0.5", "--seed", "0,2"]);
    let r = json(&out);
    assert_eq!(num(&r["root"]["re"]), 0.0);
    assert!((num(&r["root"]["im"]) - 0.5f64.sqrt()).abs() < 1e-15);

    let (_, out, _) = cheb4(&["orbit", "--a", "0.5", "--seed", "-1,0"]);
    let r = json(&out);
    assert_eq!(r["iterations"], 0);
    // the seed and the confirming iterate
    let t = r["trajectory"].as_array().unwrap();
    assert_eq!(t.len(), 2);
    assert_eq!(num(&t[0]["re"]), -1.0);
}

#[test]
fn orbit_malformed_seed_exits_2() {
    for seed in ["x", "1,", "1,2,3", ""] {
        assert_eq!(cheb4(&["orbit", "--a", "0.5", "--seed", seed]).0, EXIT_USAGE, "{seed}");
    }
}

#[test]
fn render_single_pixel_at_a_root() {
    let path = tmp("one.ppm");
    let p = path.to_str().unwrap();
    let (code, _, _) = cheb4(&["render", "--a", "0.5", "--size", "1x1", "--viewport", "0.9,1.1,-0.1,0.1", "--out", p]);
    assert_eq!(code, EXIT_OK);
    let bytes = std::fs::read(&path).unwrap();
    let mut want = b"P6\n1 1\n255\n".to_vec();
    want.extend_from_slice(&[139, 139, 0]);
    assert_eq!(bytes, want);
}

#[test]
fn render_is_deterministic_across_execution_modes() {
    let (a, b) = (tmp("par.ppm"), tmp("seq.ppm"));
    let args = ["render", "--a", "-0.5", "--size", "96x64", "--viewport", "-1.5,2,-1,1"];
    let mut pa = args.to_vec();
    pa.extend(["--out", a.to_str().unwrap()]);
    let mut pb = args.to_vec();
    pb.extend(["--out", b.to_str().unwrap(), "--sequential"]);
    assert_eq!(cheb4(&pa).0, EXIT_OK);
    assert_eq!(cheb4(&pb).0, EXIT_OK);
    let (x, y) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(x.len(), 13 + 96 * 64 * 3);
    assert_eq!(x, y);
}

#[test]
fn render_unwritable_path_exits_3() {
    let (code, _, err) = cheb4(&["render", "--a", "0.5", "--size", "4x4", "--out", "/nonexistent-dir/x.ppm"]);
    assert_eq!(code, EXIT_IO);
    assert!(err.contains("cannot write"));
}

#[test]
fn verify_restricted_and_negative_control() {
    let (code, out, _) = cheb4(&["verify", "--sweep", "1", "--params", "0.9"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("properties of C_a"));

    let (code, out, _) = cheb4(&["verify", "--params", "0.9", "--perturb-coeff", "1e-3"]);
    assert_eq!(code, EXIT_VERIFY);
    let last = out.lines().last().unwrap();
    let failures = json(last);
    assert!(failures["failures"]
        .as_array()
        .unwrap()
        .iter()
        .any(|f| f["check"] == "oddness-and-conjugation"));
}

#[test]
fn verify_output_is_deterministic() {
    let a = cheb4(&["verify", "--sweep", "2", "--seed-rng", "7", "--raster-size", "40"]);
    let b = cheb4(&["verify", "--sweep", "2", "--seed-rng", "7", "--raster-size", "40", "--sequential"]);
    assert_eq!(a.0, EXIT_OK);
    assert_eq!(a, b);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cheb4");
    let status = |args: &[&str], threads: Option<&str>| {
        let mut c = Command::new(bin);
        c.args(args);
        if let Some(t) = threads {
            c.env("CHEB4_THREADS", t);
        }
        c.output().unwrap().status.code().unwrap()
    };
    assert_eq!(status(&["analyze", "--a", "0"], None), 2);
    assert_eq!(status(&["orbit", "--a", "0.5", "--seed", "0.2,0.1"], Some("2")), 0);
    assert_eq!(status(&["orbit", "--a", "0.5", "--seed", "0.2,0.1"], Some("many")), 2);
    assert_eq!(status(&["render", "--a", "0.5", "--size", "2x2", "--out", "/nonexistent-dir/x"], None), 3);
}
