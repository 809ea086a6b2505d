use bicomplex::Bicomplex;
use bicomplex_cli::{parse_bicomplex, run, DemoName};
use proptest::prelude::*;

fn fixture() -> String {
    format!("{}/../../fixtures/diag.json", env!("CARGO_MANIFEST_DIR"))
}

fn cli(args: &[&str]) -> (i32, String) {
    run(std::iter::once("bicomplex").chain(args.iter().copied()), &mut std::io::empty())
}

fn coef() -> impl Strategy<Value = f64> {
    prop_oneof![
        (-1000i32..1000).prop_map(f64::from),
        -1e6..1e6f64,
        -1e-3..1e-3f64,
        Just(0.0),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn basis_literals_round_trip(a in coef(), b in coef(), c in coef(), d in coef()) {
        let literal = format!("{a}{b:+}i{c:+}j{d:+}k");
        let z = parse_bicomplex(&literal).unwrap();
        prop_assert_eq!(z.parts(), [a, b, c, d]);
        let again = parse_bicomplex(&z.to_basis_string()).unwrap();
        prop_assert_eq!(again, z);
        let spaced = format!(" {a} {b:+} i {c:+} j\t{d:+} k ");
        prop_assert_eq!(parse_bicomplex(&spaced).unwrap(), z);
    }

    #[test]
    fn idempotent_literals_round_trip(a in coef(), b in coef(), c in coef(), d in coef()) {
        let z = parse_bicomplex(&format!("[{a}{b:+}i; {c}{d:+}i]")).unwrap();
        let (z1, z2) = z.idempotent();
        let scale = 1f64.max(z.abs());
        prop_assert!((z1.re - a).abs() <= 1e-15 * scale && (z1.im - b).abs() <= 1e-15 * scale);
        prop_assert!((z2.re - c).abs() <= 1e-15 * scale && (z2.im - d).abs() <= 1e-15 * scale);
        let again = parse_bicomplex(&z.to_idempotent_string()).unwrap();
        prop_assert!(again.max_abs_diff(&z) <= 1e-15 * scale);
    }
}

#[test]
fn zero_divisor_product() {
    assert_eq!(cli(&["eval", "(1+1k) * (1-1k)"]), (0, "0+0i+0j+0k".into()));
    assert_eq!(cli(&["eval", "0"]), (0, "0+0i+0j+0k".into()));
    let (code, out) = cli(&["--output", "json", "eval", "(1+1k)*(1-1k)"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(code, 0);
    assert_eq!(v["classification"], "zero");
}

#[test]
fn literal_forms() {
    let z = parse_bicomplex("[2; 4]").unwrap();
    assert_eq!(z, Bicomplex::from_idempotent(2.0.into(), 4.0.into()).unwrap());
    assert_eq!(cli(&["decompose", "[2; 4]"]).1.lines().last(), Some("[2+0i; 4+0i]"));
    assert_eq!(cli(&["--idempotent", "eval", "1+1k"]).1, "[2+0i; 0+0i]");
    assert_eq!(cli(&["eval", "-1+2i"]).1, "-1+2i+0j+0k");
}

#[test]
fn input_errors_exit_2() {
    let (code, out) = cli(&["eval", "1 + * 2"]);
    assert_eq!(code, 2);
    assert!(out.contains("byte 4"), "{out}");
    assert_eq!(cli(&["inverse", "e2"]).0, 2);
    assert_eq!(cli(&["spectrum"]).0, 2);
    assert_eq!(cli(&["spectrum", "--matrix", "/nonexistent.json"]).0, 2);
    assert_eq!(cli(&["demo", "no-such-demo"]).0, 2);
    assert_eq!(cli(&["--tol-zero", "-1", "eval", "1"]).0, 2);
    assert_eq!(cli(&["ideal-check", "--n", "2", "--ideal", r#"{"Z1":[3],"Z2":[]}"#]).0, 2);
    assert_eq!(cli(&["demo", "spectrum-unbounded", "--z", "1"]).0, 2);
    assert_eq!(cli(&["--help"]).0, 0);
}

#[test]
fn matrix_from_stdin() {
    let text = std::fs::read_to_string(fixture()).unwrap();
    let (code, out) = run(["bicomplex", "spectrum", "--matrix", "-"], &mut text.as_bytes());
    assert_eq!(code, 0);
    assert_eq!(out, "kind: point\ns1: {1+0i, 2+0i}\ns2: {3+0i, 4+0i}");
}

#[test]
fn diag_fixture_demo() {
    let (code, out) = cli(&["--output", "json", "demo", "sigma-p-not-in-ap", "--matrix", &fixture()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let checks = v["checks"].as_array().unwrap();
    for name in ["lambda in point spectrum", "lambda not in approximate point spectrum", "ker(T - lambda I) nonzero"] {
        assert!(checks.iter().any(|c| c["name"] == name && c["pass"] == true), "{name}");
    }
}

#[test]
fn failing_checks_exit_1() {
    let (code, out) = cli(&["--output", "json", "ideal-check", "--n", "2", "--ideal", r#"{"Z1":[1,2],"Z2":[1,2]}"#]);
    assert_eq!(code, 0, "{out}");
    let (code, _) = cli(&["--tol-eig", "1e-30", "demo", "spectrum-unbounded", "--z", "[0.1+0.7i; 0]"]);
    assert_eq!(code, 1);
}

#[test]
fn spectra_and_kernel() {
    let f = fixture();
    let (_, out) = cli(&["apspectrum", "--matrix", &f, "--lambda", "[2; 3]"]);
    assert!(out.ends_with("member: true"), "{out}");
    let (_, out) = cli(&["apspectrum", "--matrix", &f, "--lambda", "[2; 5]"]);
    assert!(out.ends_with("member: false"));
    let (_, out) = cli(&["spectrum", "--matrix", &f, "--lambda", "[2; 5]"]);
    assert!(out.ends_with("member: true"));
    let (_, out) = cli(&["kernel", "--matrix", &f, "--lambda", "[7; 9]"]);
    assert_eq!(out, "dim = 0");
    let (_, out) = cli(&["--output", "json", "kernel", "--matrix", &f, "--lambda", "[1; 3]"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dimension"], 2);
    let (_, out) = cli(&["--output", "json", "norm", "--matrix", &f]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["a1"].as_f64(), v["a2"].as_f64()), (Some(2.0), Some(4.0)));
}

#[test]
fn algebra_descriptors() {
    let (code, out) = cli(&["maximal-ideals", "--algebra", r#"{"type":"fn","points":["p","q","r"]}"#]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 7);
    assert!(out.ends_with("exhaustive oracle agrees: true"));
    let (code, out) = cli(&["--output", "json", "maximal-ideals", "--n", "6"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["maximal_ideals"].as_array().unwrap().len(), 12);
    assert!(v["oracle_agrees"].is_null());
    assert_eq!(cli(&["ideal-check", "--algebra", r#"{"type":"pointwise","n":2}"#, "--ideal", r#"{"Z1":[1],"Z2":[]}"#]).0, 0);
}

#[test]
fn seed_determines_output() {
    for demo in DemoName::ALL {
        let run_with = |seed: &str| cli(&["--output", "json", "--seed", seed, "demo", demo.as_str()]);
        let (code, first) = run_with("11");
        assert_eq!(code, 0, "{}: {first}", demo.as_str());
        assert_eq!(run_with("11").1, first);
    }
    let a = cli(&["--seed", "1", "spectrum", "--n", "3"]).1;
    let b = cli(&["--seed", "2", "spectrum", "--n", "3"]).1;
    assert_ne!(a, b);
}
