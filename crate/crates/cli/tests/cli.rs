use std::io::Write;
use std::process::{Command, Stdio};

use proptest::prelude::*;
use syzcalc::context::{Backend, ModuleOrderKind};
use syzcalc::{format_polynomial, parse_polynomial, run_captured, Basis, JsonDocument, ParseErrorKind, PolyContext};
use syzcalc_core::orders::BaseOrderKind;
use syzcalc_core::rings::{Integers, IntegersMod, Rationals, RingDescriptor};
use syzcalc_testkit::{InstanceBounds, RandomInstanceSpec};

const THREE_TERMS: &str = "ring: ZZ/8\nvars: x,y\nrank: 2\n2*x^2*y*e1\nx*y^2*e1\n4*x*e2\n";

fn run(args: &[&str], input: &str) -> (i32, String, String) {
    run_captured(std::iter::once("syzcalc").chain(args.iter().copied()), input)
}

/// Non-comment, non-header lines of a text report.
fn body(out: &str) -> Vec<String> {
    out.lines()
        .filter(|l| !l.starts_with('#') && !l.contains(": "))
        .map(|l| l.split("  #").next().unwrap().trim().to_string())
        .collect()
}

#[test]
fn syzygies_of_terms_example() {
    let (code, out, _) = run(&["syzygies-of-terms"], THREE_TERMS);
    assert_eq!(code, 0);
    assert_eq!(body(&out), ["4*s1", "2*s3", "6*x*s2 + y*s1"]);
    assert!(out.contains("# position level sets: {1}, {2}, {3}, {1,2}"));
    assert!(out.contains("basis: s"));
}

#[test]
fn groebner_output_passes_check() {
    let (code, out, _) = run(&["groebner", "--ring", "ZZ", "--vars", "x,y"], "2*x\nx + y\n");
    assert_eq!(code, 0);
    assert_eq!(body(&out), ["2*x", "x + y", "2*y"]);
    let (code, verdict, _) = run(&["check"], &out);
    assert_eq!((code, verdict.trim()), (0, "criterion: PASS"));
    let (code, verdict, _) = run(&["check", "--ring", "ZZ", "--vars", "x,y"], "2*x\nx + y\n");
    assert_eq!(code, 0);
    assert!(verdict.starts_with("criterion: FAIL"));
}

#[test]
fn json_round_trip() {
    let (code, out, _) = run(&["--json", "groebner", "--ring", "ZZ/6", "--vars", "x,y"], "2*x + y\n3*y^2\n");
    assert_eq!(code, 0);
    let doc: JsonDocument = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.kind, "groebner");
    assert_eq!(doc.context.ring, "ZZ/6");
    let (code, verdict, _) = run(&["check"], &out);
    assert_eq!((code, verdict.trim()), (0, "criterion: PASS"));
    let (code, again, _) = run(&["--json", "groebner"], &out);
    assert_eq!(code, 0);
    let redo: JsonDocument = serde_json::from_str(&again).unwrap();
    assert_eq!(redo.polynomials, doc.polynomials);
}

#[test]
fn division_reports_quotients_and_remainder() {
    let (code, out, _) = run(&["divide", "--ring", "QQ", "--vars", "x"], "x^2 + 1\nx - 1\n");
    assert_eq!(code, 0);
    assert!(out.contains("#   x + 1  # q1"));
    assert_eq!(body(&out), ["2"]);
}

#[test]
fn resolution_of_the_maximal_ideal() {
    let (code, out, _) = run(&["resolution", "--ring", "QQ", "--vars", "x,y"], "x\ny\n");
    assert_eq!(code, 0);
    assert!(out.contains("# ranks: 1, 2, 1"));
    assert!(out.contains("# length: 2"));
}

#[test]
fn caps_exit_with_two() {
    let (code, out, _) = run(&["groebner", "--ring", "ZZ", "--vars", "x,y", "--max-rounds", "1"], "2*x\nx + y\n");
    assert_eq!(code, 2);
    assert!(!body(&out).is_empty());
    let (code, _, _) = run(&["resolution", "--ring", "QQ", "--vars", "x,y", "--max-stage", "1"], "x\ny\n");
    assert_eq!(code, 2);
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(run(&["groebner", "--bogus"], "x\n").0, 1);
    assert_eq!(run(&["groebner", "--vars", "x"], "x\n").0, 1);
    assert_eq!(run(&["groebner", "--ring", "ZZ/1", "--vars", "x"], "x\n").0, 1);
    let (code, _, err) = run(&["groebner", "--ring", "ZZ", "--vars", "x,y"], "x + z\n");
    assert_eq!(code, 3);
    assert!(err.contains("column 5"), "{err}");
    assert_eq!(run(&["groebner"], "ring: ZZ\nring: QQ\nx\n").0, 3);
    assert_eq!(run(&["groebner", "--ring", "ZZ", "--vars", "x"], "1/2*x\n").0, 3);
    assert_eq!(run(&["--help"], "").0, 0);
}

#[test]
fn flags_override_headers() {
    let (code, out, _) = run(&["groebner", "--ring", "QQ"], "ring: ZZ\nvars: x\n2*x\n");
    assert_eq!(code, 0);
    assert!(out.starts_with("ring: QQ"));
    assert_eq!(body(&out), ["2*x"]);
}

#[test]
fn repeated_runs_are_identical() {
    for args in [
        &["groebner"][..],
        &["schreyer"],
        &["resolution"],
        &["slist", "--iterate", "2"],
        &["--json", "syzygies-of-terms"],
    ] {
        let first = run(args, THREE_TERMS);
        assert_eq!(first.0, 0, "{args:?}: {}", first.2);
        for _ in 0..3 {
            assert_eq!(run(args, THREE_TERMS), first);
        }
    }
}

#[test]
fn binary_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_syzcalc"))
        .args(["syzygies-of-terms"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(THREE_TERMS.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), run(&["syzygies-of-terms"], THREE_TERMS).1);
}

#[test]
fn parse_error_kinds() {
    let ctx = PolyContext {
        ring: RingDescriptor::Integers,
        vars: vec!["x".into(), "y".into()],
        rank: 2,
        order: BaseOrderKind::Grlex,
        module_order: ModuleOrderKind::Top,
        basis: Basis::E,
    };
    let h = ctx.module(Integers);
    let kind = |t: &str| parse_polynomial(t, &ctx, &h).unwrap_err().kind;
    assert_eq!(kind("x*e3"), ParseErrorKind::PositionOutOfRange(3));
    assert_eq!(kind("x"), ParseErrorKind::MissingPosition);
    assert!(matches!(kind("w*e1"), ParseErrorKind::UnknownVariable(_)));
    assert!(matches!(kind("x*e1 +"), ParseErrorKind::Syntax(_)));
}

fn round_trip<R: Backend + Copy>(ring: R, seed: u64) -> Result<(), TestCaseError> {
    let spec = RandomInstanceSpec::draw(ring.descriptor(), InstanceBounds::default(), seed);
    let h = spec.module(ring);
    let names = ["x", "y", "z"];
    let ctx = PolyContext {
        ring: ring.descriptor(),
        vars: names[..spec.nvars].iter().map(|s| s.to_string()).collect(),
        rank: spec.rank,
        order: spec.order,
        module_order: if spec.position_over_term { ModuleOrderKind::Pot } else { ModuleOrderKind::Top },
        basis: if seed % 2 == 0 { Basis::E } else { Basis::S },
    };
    prop_assert_eq!(ctx.module_order(), h.order().clone());
    for u in spec.polynomials(&h) {
        let text = format_polynomial(&u, &ctx);
        let back = parse_polynomial(&text, &ctx, &h).map_err(|e| TestCaseError::fail(format!("{text}: {e:?}")))?;
        prop_assert_eq!(&back, &u);
        prop_assert_eq!(format_polynomial(&back, &ctx), text);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn parse_inverts_format(seed in any::<u64>()) {
        round_trip(Integers, seed)?;
        round_trip(Rationals, seed)?;
        round_trip(IntegersMod::new(12), seed)?;
    }
}
