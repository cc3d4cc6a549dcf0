use std::path::{Path, PathBuf};
use std::process::Command as Process;

use casson_cli::{parse_expression, parse_krange, run, Action, Command, Format};
use casson_core::{AmbientKnot, BrieskornTriple, KnotDescriptor, ManifoldExpression};
use proptest::prelude::*;

fn data_file() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/knots.txt")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Compares with `tests/golden/<name>`; `CASSON_BLESS=1` rewrites the file.
fn assert_golden(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    if std::env::var_os("CASSON_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected =
        std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

fn json_cmd(action: Action) -> Command {
    Command {
        format: Format::Json,
        data_files: vec![data_file()],
        ..Command::new(action)
    }
}

fn knot() -> impl Strategy<Value = KnotDescriptor> {
    let torus = (2i64..12, 2i64..12)
        .prop_filter_map("valid torus", |(p, q)| KnotDescriptor::torus(p, q).ok());
    let twist = (-20i64..20).prop_filter_map("nonzero", |n| KnotDescriptor::twist(n).ok());
    let named = "[a-z0-9_][A-Za-z0-9_]{0,8}".prop_filter_map("valid name", |s| {
        let reserved = casson_core::knots::RESERVED_NAMES.contains(&s.as_str());
        (!reserved && !s.chars().all(|c| c.is_ascii_digit())).then(|| KnotDescriptor::named(s))
    });
    prop_oneof![Just(KnotDescriptor::Unknot), torus, twist, named]
}

fn triple() -> impl Strategy<Value = BrieskornTriple> {
    (2i64..40, 2i64..40, 2i64..80).prop_filter_map("valid triple", |(a, b, c)| {
        BrieskornTriple::new(a, b, c).ok()
    })
}

fn side() -> impl Strategy<Value = AmbientKnot> {
    prop_oneof![
        knot().prop_map(AmbientKnot::S3),
        (triple(), 1u8..=3).prop_map(|(t, i)| AmbientKnot::singular_fiber(t, i).unwrap()),
    ]
}

fn expression() -> impl Strategy<Value = ManifoldExpression> {
    let catalog = prop_oneof![
        Just("Sigma(2,3,5,7)".to_string()),
        "[A-Za-z][A-Za-z0-9_,]{0,6}",
        "[A-Za-z]{1,4}\\([0-9,]{0,6}\\)",
    ];
    prop_oneof![
        Just(ManifoldExpression::S3),
        triple().prop_map(ManifoldExpression::Brieskorn),
        catalog.prop_map(ManifoldExpression::Catalog),
        (-5i64..=5, -9i64..=9, knot()).prop_map(|(numerator, denominator, knot)| {
            ManifoldExpression::Surgery {
                numerator,
                denominator,
                knot,
            }
        }),
        (side(), side()).prop_map(|(a, b)| ManifoldExpression::Splice(a, b)),
        (-9i64..=9, knot(), knot()).prop_map(|(k, knot1, knot2)| ManifoldExpression::KSplice {
            k,
            knot1,
            knot2
        }),
    ]
}

proptest! {
    #[test]
    fn parse_inverts_print(e in expression()) {
        let printed = e.to_string();
        prop_assert_eq!(parse_expression(&printed).unwrap(), e.clone());
        let squeezed: String = printed.chars().filter(|c| !c.is_whitespace()).collect();
        prop_assert_eq!(parse_expression(&squeezed).unwrap(), e);
    }

    #[test]
    fn parser_never_panics(s in "[a-z0-9(),/@ -]{0,40}") {
        let _ = parse_expression(&s);
    }
}

#[test]
fn eval_examples() {
    let out = run(&Command::new(Action::Eval(
        "splice(torus(2,3),torus(2,5))".into(),
    )));
    assert_eq!(out.exit_code, 0);
    assert!(
        out.output.contains("value: 0\nstatus: VanishesByCorollary"),
        "{}",
        out.output
    );

    let out = run(&json_cmd(Action::Eval("brieskorn(2,3,35)".into())));
    assert_eq!(out.exit_code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.output).unwrap();
    assert_eq!(v["value"], 17);

    let out = run(&Command::new(Action::Eval("surgery(1/0, unknot)".into())));
    assert_eq!(out.exit_code, 3);
    assert!(out.output.contains("status: Unsupported"));

    let out = run(&Command::new(Action::Eval(
        "ksplice(2, twist(2), torus(2,3))".into(),
    )));
    assert_eq!(out.exit_code, 0);
    assert!(out.output.contains("value: 5"), "{}", out.output);

    let out = run(&Command::new(Action::Eval(
        "splice(unknot, brieskorn(2,3,5)@5)".into(),
    )));
    assert_eq!(out.exit_code, 2);
    assert!(out.output.contains("status: ConditionsUnverified"));

    let out = run(&Command::new(Action::Eval(
        "splice(torus(2,3), nosuchknot)".into(),
    )));
    assert_eq!(out.exit_code, 1);
    assert!(out.output.starts_with("error:"));

    let out = run(&Command::new(Action::Eval("brieskorn(2,3,".into())));
    assert_eq!(out.exit_code, 1);
    assert!(out.output.contains("position 14"), "{}", out.output);
}

#[test]
fn demo_reports_non_additivity() {
    let out = run(&Command::new(Action::Demo));
    assert_eq!(out.exit_code, 0);
    assert!(out.output.contains("20 ≠ 47"), "{}", out.output);
}

#[test]
fn check_and_load_probe() {
    let mut cmd = json_cmd(Action::Check {
        knot1: "fig8".into(),
        knot2: "torus(2,3)".into(),
    });
    cmd.krange = Some(parse_krange("-2..2").unwrap());
    let out = run(&cmd);
    assert_eq!(out.exit_code, 0, "{}", out.output);

    let out = run(&Command::new(Action::Check {
        knot1: "twist(2)".into(),
        knot2: "unknot".into(),
    }));
    assert_eq!(out.exit_code, 2);
    assert!(out.output.contains("UNKNOWN"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "knot bad\nalexander 1 1 1\nend\n").unwrap();
    let out = run(&Command::new(Action::LoadProbe(bad)));
    assert_eq!(out.exit_code, 1);
    assert!(out.output.contains("bad"), "{}", out.output);
    let out = run(&Command::new(Action::LoadProbe(data_file())));
    assert_eq!(out.exit_code, 0);
    assert!(out.output.contains("1 record(s): fig8"));
}

#[test]
fn krange_flag_values() {
    assert_eq!(parse_krange("-3..5").unwrap().to_string(), "-3..5");
    assert!(parse_krange("0..0").is_err());
    assert!(parse_krange("4..1").is_err());
    assert!(parse_krange("1-4").is_err());
}

#[test]
fn golden_json() {
    let cases: Vec<(&str, Command)> = vec![
        (
            "eval_brieskorn_2_3_35.json",
            json_cmd(Action::Eval("brieskorn(2,3,35)".into())),
        ),
        (
            "eval_splice_torus.json",
            json_cmd(Action::Eval("splice(torus(2,3), torus(2,5))".into())),
        ),
        (
            "eval_ksplice_6.json",
            json_cmd(Action::Eval("ksplice(6, unknot, torus(2,3))".into())),
        ),
        (
            "eval_sigma4demo.json",
            json_cmd(Action::Eval("sigma4demo".into())),
        ),
        (
            "eval_surgery_fig8.json",
            json_cmd(Action::Eval("surgery(1/2, fig8)".into())),
        ),
        ("demo.json", json_cmd(Action::Demo)),
        (
            "verify_200.json",
            json_cmd(Action::Verify { max_product: 200 }),
        ),
        ("load_probe.json", {
            let mut c = json_cmd(Action::LoadProbe(PathBuf::from("../../data/knots.txt")));
            c.data_files.clear();
            c
        }),
        ("check_fig8_trefoil.json", {
            let mut c = json_cmd(Action::Check {
                knot1: "fig8".into(),
                knot2: "torus(2,3)".into(),
            });
            c.krange = Some(parse_krange("-2..2").unwrap());
            c
        }),
    ];
    for (name, cmd) in cases {
        let out = run(&cmd);
        assert_ne!(out.exit_code, 1, "{name}: {}", out.output);
        assert_golden(name, &out.output);
    }
}

#[test]
fn binary_end_to_end() {
    let bin = env!("CARGO_BIN_EXE_casson");
    let data = data_file();
    let status = |args: &[&str]| {
        let out = Process::new(bin).args(args).output().unwrap();
        (
            out.status.code().unwrap(),
            String::from_utf8(out.stdout).unwrap(),
            String::from_utf8(out.stderr).unwrap(),
        )
    };

    let (code, stdout, _) = status(&["eval", "splice(torus(2,3),torus(2,5))"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("value: 0"));

    let (code, stdout, _) = status(&["--json", "eval", "brieskorn(2,3,35)"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("{\n  \"value\": 17,"), "{stdout}");

    let (code, stdout, _) = status(&["demo"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("20 ≠ 47"));

    let data = data.to_str().unwrap();
    let (code, stdout, _) = status(&[
        "--data",
        data,
        "--krange",
        "-2..2",
        "check",
        "fig8",
        "torus(2,3)",
    ]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("k in -2..2"));

    let (code, stdout, _) = status(&["verify", "--max-product", "300"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("PASS"));

    let (code, _, stderr) = status(&["eval", "splice(torus(2,3)"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("expected `,`"), "{stderr}");

    let (code, _, _) = status(&["eval", "surgery(3/2, torus(2,3))"]);
    assert_eq!(code, 3);
}
