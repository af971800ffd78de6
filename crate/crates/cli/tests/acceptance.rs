//! Acceptance gate, criterion 8: CLI end-to-end — contracted exit codes and
//! JSON output that re-parses bit-exactly.

use assert_cmd::Command;
use predicates::prelude::*;

use qclifford_core::qcore::rat;
use qclifford_core::{
    construct_conjugate, parse_rational, Blade, CliffordElement, CliffordPolynomial,
    HomogeneousPolynomial, MultiIndex, QContext,
};

const U3: &str = "x0^3 - x0*x1^2 - 47/64*x0*x2^2";

fn qclifford() -> Command {
    Command::cargo_bin("qclifford").unwrap()
}

/// Independent JSON-term reader: `{"alpha":[..],"blade":"e12","coeff":"p/q"}`
/// lists back into an exact polynomial.
fn poly_from_json_value(value: &serde_json::Value, ctx: &QContext) -> CliffordPolynomial {
    let terms = value["terms"].as_array().expect("terms array");
    let mut out = CliffordPolynomial::zero(ctx);
    for term in terms {
        let alpha: Vec<u32> = term["alpha"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_u64().unwrap() as u32)
            .collect();
        let blade_str = term["blade"].as_str().unwrap();
        let blade = if blade_str == "1" {
            Blade::ONE
        } else {
            let indices: Vec<usize> = blade_str[1..]
                .chars()
                .map(|c| c.to_digit(10).unwrap() as usize)
                .collect();
            Blade::from_indices(&indices)
        };
        let coeff = parse_rational(term["coeff"].as_str().unwrap()).unwrap();
        out = out.add(&CliffordPolynomial::monomial(
            ctx,
            MultiIndex(alpha),
            CliffordElement::from_term(blade, coeff),
        ));
    }
    out
}

#[test]
fn criterion_8_cli_end_to_end() {
    // example 1: the worked U3 is (1/q,q)-harmonic -> exit 0
    qclifford()
        .args(["check-harmonic", "--q", "4/3", "--n", "2", "--poly", U3])
        .assert()
        .success()
        .stdout(predicate::str::contains("harmonic: true"));

    // example 2: x0^2 is not -> exit 1 with the residual printed
    qclifford()
        .args(["check-harmonic", "--q", "4/3", "--n", "2", "--poly", "x0^2"])
        .assert()
        .code(1)
        .stdout(predicate::str::contains("residual"));

    // example 3: conjugate emits JSON that re-parses bit-exactly against an
    // in-process run of the same construction
    let output = qclifford()
        .args([
            "conjugate", "--q", "4/3", "--n", "2", "--poly", U3, "--format", "json", "--verify",
        ])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let value: serde_json::Value = serde_json::from_slice(&output).unwrap();
    assert_eq!(value["monogenic"], serde_json::Value::Bool(true));

    let ctx = QContext::new(rat(4, 3), 2).unwrap();
    let mut u3 = CliffordPolynomial::zero(&ctx);
    for (exps, num, den) in [([3, 0, 0], 1i64, 1i64), ([1, 2, 0], -1, 1), ([1, 0, 2], -47, 64)] {
        u3 = u3.add(
            &CliffordPolynomial::monomial(&ctx, MultiIndex(exps.to_vec()), CliffordElement::one())
                .scale(&rat(num, den)),
        );
    }
    let expected = construct_conjugate(&HomogeneousPolynomial::new(u3, 3).unwrap()).unwrap();
    for (key, poly) in [
        ("v_k", expected.v_k.poly()),
        ("w", expected.w.poly()),
        ("h_poisson", expected.h_poisson.poly()),
        ("h_potential", expected.h_potential.poly()),
        ("f", &expected.f),
    ] {
        assert_eq!(
            poly_from_json_value(&value[key], &ctx),
            *poly,
            "JSON field {key} does not re-parse bit-exactly"
        );
    }
    // W is nonzero and expanded to explicit rationals
    assert!(!poly_from_json_value(&value["w"], &ctx).is_zero());

    println!("criterion 8: PASS - CLI exit codes and bit-exact JSON round-trip");
}

#[test]
fn usage_errors_exit_2() {
    // malformed polynomial
    qclifford()
        .args(["check-harmonic", "--q", "4/3", "--n", "2", "--poly", "x9 + &"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("error"));
    // q = 0 is invalid
    qclifford()
        .args(["check-harmonic", "--q", "0", "--n", "2", "--poly", "x1"])
        .assert()
        .code(2);
    // missing required argument
    qclifford().args(["check-harmonic", "--q", "4/3"]).assert().code(2);
}

#[test]
fn poly_file_and_json_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u3.txt");
    std::fs::write(&path, U3).unwrap();
    qclifford()
        .args(["check-harmonic", "--q", "4/3", "--n", "2"])
        .arg("--poly")
        .arg(format!("@{}", path.display()))
        .assert()
        .success();

    // JSON input detected by the leading '[' and accepted directly
    qclifford()
        .args([
            "check-monogenic",
            "--q",
            "4/3",
            "--n",
            "2",
            "--poly",
            r#"[{"alpha":[0,1,0],"blade":"e1","coeff":"1"},{"alpha":[0,0,1],"blade":"e2","coeff":"-1"}]"#,
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("monogenic: true"));
}

#[test]
fn conjugate_rejects_non_harmonic_with_exit_1() {
    qclifford()
        .args(["conjugate", "--q", "4/3", "--n", "2", "--poly", "x0^2"])
        .assert()
        .code(1);
}

#[test]
fn text_output_round_trips_through_parser() {
    let output = qclifford()
        .args(["poisson", "--q", "4/3", "--n", "2", "--poly", "x1^2", "--verify"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let text = String::from_utf8(output).unwrap();
    let h = text.trim().strip_prefix("h = ").unwrap();
    // the printed solution is valid grammar input again
    qclifford()
        .args(["fischer-decompose", "--q", "4/3", "--n", "2", "--poly", h, "--verify"])
        .assert()
        .success();
}
