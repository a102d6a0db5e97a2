mod common;

use std::path::{Path, PathBuf};
use std::process::Command;

use bifrob::cli::{
    check_source, conv_inverse_source, emit_fixture, report_source, Format, InputOptions, EXIT_FAILED,
    EXIT_INPUT, EXIT_OK,
};
use bifrob::file::{parse, render};
use bifrob::FieldSpec;
use serde_json::Value;

use common::{q, single_corruptions};

fn opts() -> InputOptions {
    InputOptions::default()
}

fn emitted(name: &str) -> String {
    emit_fixture(name, q()).unwrap()
}

fn report_json(text: &str) -> Value {
    let out = report_source(text.as_bytes(), Format::Json, &opts());
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bifrob"))
}

#[test]
fn c3_check_exits_zero() {
    let out = check_source(emitted("c3").as_bytes(), &opts());
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.starts_with("ok: "));
}

#[test]
fn every_fixture_checks_clean() {
    for name in bifrob::fixtures::names_all() {
        let out = check_source(emitted(&name).as_bytes(), &opts());
        assert_eq!(out.code, EXIT_OK, "{name}: {}", out.stdout);
    }
}

#[test]
fn b4_report_summary() {
    let doc = report_json(&emitted("b4"));
    let s = &doc["summary"];
    assert_eq!(s["is_bf"], true);
    assert_eq!(s["is_sbf"], false);
    assert_eq!(s["antipode_square_is_identity"], true);
    assert_eq!(s["traces"]["antipode_square"], "4");
    assert_eq!(s["eps_t"], "0");
    assert_eq!(s["phi_one"], "0");
    assert_eq!(s["semisimple"], "no");
    assert_eq!(s["cosemisimple"], "no");
    let ident: Vec<Vec<String>> = (0..4)
        .map(|i| (0..4).map(|j| if i == j { "1" } else { "0" }.to_string()).collect())
        .collect();
    assert_eq!(doc["derived"]["antipode"], serde_json::json!(ident));
}

#[test]
fn nonsbf3_conv_inverse_matches_sigma() {
    let out = conv_inverse_source(emitted("nonsbf3").as_bytes(), Format::Text, &opts());
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("inverse(x) = (-2/3)*1 + (-2/3)*x + (2)*y"), "{}", out.stdout);
    assert!(out.stdout.contains("inverse(y) = (-2/3)*1 + (2)*x + (-2/3)*y"), "{}", out.stdout);

    let out = conv_inverse_source(emitted("nonsbf3").as_bytes(), Format::Json, &opts());
    let doc: Value = serde_json::from_str(&out.stdout).unwrap();
    let inv = &doc["convolution_inverse_of_identity"];
    assert_eq!(inv["kind"], "two-sided");
    assert_eq!(
        inv["matrix"],
        serde_json::json!([["1", "-2/3", "-2/3"], ["0", "-2/3", "2"], ["0", "2", "-2/3"]])
    );
}

#[test]
fn parse_errors_exit_one() {
    let good = emitted("b4");
    let bad_index = good.replacen("[0,0,0,\"1\"]", "[0,0,9,\"1\"]", 1);
    assert_ne!(bad_index, good);
    let bad_scalar = good.replacen("\"unit\": [\"1\"", "\"unit\": [\"1/0\"", 1);
    assert_ne!(bad_scalar, good);
    for text in [bad_index.as_str(), bad_scalar.as_str(), "{", "{\"name\": 3}"] {
        let out = check_source(text.as_bytes(), &opts());
        assert_eq!(out.code, EXIT_INPUT, "{text}");
        assert!(out.stderr.starts_with("parse error: "), "{}", out.stderr);
        assert!(out.stdout.is_empty());
        assert_eq!(report_source(text.as_bytes(), Format::Json, &opts()).code, EXIT_INPUT);
    }
    assert!(check_source(bad_index.as_bytes(), &opts()).stderr.contains("mul"));
}

#[test]
fn build_failure_exits_two_and_names_invariant() {
    // ε(x) = 1 breaks multiplicativity of the counit
    let mut f = parse(&emitted("b4")).unwrap();
    f.counit[1] = "1".into();
    let text = render(&f);
    let out = check_source(text.as_bytes(), &opts());
    assert_eq!(out.code, EXIT_FAILED);
    assert!(out.stderr.starts_with("build failed ["), "{}", out.stderr);

    let doc = report_json(&text);
    assert_eq!(doc["build"]["ok"], false);
    assert!(doc["build"]["invariant"].is_string());
    assert_eq!(doc["summary"]["is_bf"], false);
}

#[test]
fn corrupted_inputs_fail_with_witnesses() {
    let f = parse(&emitted("nonsbf3")).unwrap();
    for (label, g) in single_corruptions(&f) {
        let out = check_source(render(&g).as_bytes(), &opts());
        assert_eq!(out.code, EXIT_FAILED, "{label}");
        let text = format!("{}{}", out.stdout, out.stderr);
        assert!(text.contains("lhs = ") || text.contains("build failed"), "{label}: {text}");
    }
}

#[test]
fn quiet_suppresses_output_not_exit_code() {
    let quiet = InputOptions {
        quiet: true,
        ..opts()
    };
    let out = check_source(b"{", &quiet);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stdout.is_empty() && out.stderr.is_empty());
    let out = check_source(emitted("c2").as_bytes(), &quiet);
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, ""));
}

#[test]
fn field_override_reruns_mod_p() {
    let c3 = emitted("c3");
    let mod5 = InputOptions {
        field_override: Some(5),
        ..opts()
    };
    let doc: Value = serde_json::from_str(&report_source(c3.as_bytes(), Format::Json, &mod5).stdout).unwrap();
    assert_eq!(doc["field"], "F_5");
    assert_eq!(doc["summary"]["traces"]["dimension"], "3");
    assert_eq!(doc["summary"]["all_checks_passed"], true);

    let mod3 = InputOptions {
        field_override: Some(3),
        ..opts()
    };
    // the three-dimensional structure survives mod 3, but id loses its inverse
    let n3 = emitted("nonsbf3");
    assert_eq!(check_source(n3.as_bytes(), &mod3).code, EXIT_OK);
    assert_eq!(conv_inverse_source(n3.as_bytes(), Format::Text, &mod3).stdout, "none\n");

    let mut f = parse(&c3).unwrap();
    f.integral = Some(vec!["1/3".into(); 3]);
    let out = check_source(render(&f).as_bytes(), &mod3);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("integral"), "{}", out.stderr);
    let out = check_source(c3.as_bytes(), &InputOptions { field_override: Some(4), ..opts() });
    assert_eq!(out.code, EXIT_INPUT);
}

#[test]
fn report_is_deterministic() {
    for name in ["b4", "s3", "dual-nonsbf3"] {
        let text = emitted(name);
        let a = report_source(text.as_bytes(), Format::Json, &opts());
        let b = report_source(text.as_bytes(), Format::Json, &opts());
        assert_eq!(a, b);
        let t1 = report_source(text.as_bytes(), Format::Text, &opts());
        assert_eq!(t1, report_source(text.as_bytes(), Format::Text, &opts()));
    }
}

#[test]
fn checks_are_never_silently_omitted() {
    let ids = |name: &str| -> Vec<String> {
        report_json(&emitted(name))["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["id"].as_str().unwrap().to_string())
            .collect()
    };
    let b4 = ids("b4");
    assert_eq!(b4, ids("c3"));
    assert_eq!(b4, ids("nonsbf3"));
    let doc = report_json(&emitted("b4"));
    for c in doc["checks"].as_array().unwrap() {
        if c["status"] == "skipped" {
            assert!(!c["reason"].as_str().unwrap().is_empty());
        }
    }
}

/// Set `BLESS=1` to rewrite the files.
#[test]
fn golden_reports() {
    let bless = std::env::var_os("BLESS").is_some();
    for name in ["b4", "nonsbf3", "c3", "dual-s3"] {
        let got = report_source(emitted(name).as_bytes(), Format::Json, &opts()).stdout;
        let path = golden(&format!("{name}.report.json"));
        if bless {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert!(got == want, "{name}: report differs from {}", path.display());
    }
}

#[test]
fn emitted_files_are_canonical() {
    for name in bifrob::fixtures::names_all() {
        let text = emitted(&name);
        assert_eq!(render(&parse(&text).unwrap()), text, "{name}");
    }
    let f7 = FieldSpec::prime(7).unwrap();
    assert!(emit_fixture("nonsbf3", FieldSpec::prime(3).unwrap()).is_err());
    assert!(emit_fixture("s3", f7).unwrap().contains("\"characteristic\": 7"));
    assert!(emit_fixture("q8", q()).is_err());
}

#[test]
fn hopf_algebras_with_nontrivial_modular_data() {
    for (file, alpha_a, a) in [
        ("sweedler4.json", "-1", vec!["0", "1", "0", "0"]),
        ("taft3_f7.json", "4", vec!["0", "0", "0", "0", "0", "0", "1", "0", "0"]),
    ] {
        let text = std::fs::read_to_string(data(file)).unwrap();
        let doc = report_json(&text);
        let s = &doc["summary"];
        assert_eq!(s["all_checks_passed"], true, "{file}");
        assert_eq!(s["alpha_of_a"], alpha_a, "{file}");
        assert_eq!(s["is_sbf"], true, "{file}");
        assert_eq!(s["unimodular"], false, "{file}");
        assert_eq!(doc["derived"]["modular_element"], serde_json::json!(a), "{file}");
    }
}

#[test]
fn binary_exit_codes() {
    let dir = std::env::temp_dir().join(format!("bifrob-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let c3 = dir.join("c3.json");
    let st = bin().args(["fixtures", "emit", "c3", "-o"]).arg(&c3).status().unwrap();
    assert!(st.success());

    let out = bin().arg("check").arg(&c3).output().unwrap();
    assert_eq!(out.status.code(), Some(0));

    let missing = bin().arg("check").arg(dir.join("nope.json")).output().unwrap();
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("cannot read"));

    let mut f = parse(&std::fs::read_to_string(&c3).unwrap()).unwrap();
    f.unit = vec!["0".into(), "1".into(), "0".into()];
    let broken = dir.join("broken.json");
    std::fs::write(&broken, render(&f)).unwrap();
    let out = bin().args(["check", "--quiet"]).arg(&broken).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty() && out.stderr.is_empty());

    let out = bin().args(["report", "--format", "json"]).arg(&broken).output().unwrap();
    assert_eq!(out.status.code(), Some(0));

    let list = bin().args(["fixtures", "list"]).output().unwrap();
    let listed = String::from_utf8(list.stdout).unwrap();
    assert_eq!(listed.lines().count(), bifrob::fixtures::names_all().len());

    std::fs::remove_dir_all(&dir).unwrap();
}
