use std::process::{Command, Output};

use prop_rewriter::cli::run;

const BIN: &str = env!("CARGO_BIN_EXE_prop-rewriter");

fn cli(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("PROP_REWRITER_MAX_LEVEL").output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    cli(args).status.code().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let o = cli(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

fn in_process(args: &[&str]) -> (u8, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let all: Vec<&str> = std::iter::once("prop-rewriter").chain(args.iter().copied()).collect();
    let c = run(all, &mut out, &mut err);
    (c, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn normalize_examples() {
    assert_eq!(stdout(&["normalize", "--algebra", "mag", "d[2,0]*d[1,1]"]), "d[2,2]*d[1,0]\n");
    assert_eq!(
        stdout(&["normalize", "--algebra", "leib", "d[1,1]*d[0,0] - d[1,0]*d[0,0] + x[2,1]*d[1,0]*d[0,0]"]),
        "0\n"
    );
    assert_eq!(stdout(&["normalize", "--algebra", "free", "d[0,0]"]), "d[0,0]\n");
    assert_eq!(stdout(&["normalize", "--algebra", "sym", "x[2,0]*x[2,0]"]), "1[2]\n");
}

#[test]
fn normalize_output_is_a_fixed_point() {
    for (alg, expr) in [
        ("symmag", "d[2,0]*x[2,1]*d[1,1] + 1/2*x[3,2]*d[2,2]*d[1,0]"),
        ("symsimp", "d[1,1]*x[1,0]*d[0,0]"),
        ("leib", "d[2,1]*d[1,1]*x[1,0]*d[0,0] - 3*d[2,0]*d[1,0]*d[0,0]"),
        ("leibop", "d[2,1]*d[1,1]*x[1,0]*d[0,0] - 3*d[2,0]*d[1,0]*d[0,0]"),
    ] {
        let (c, once, _) = in_process(&["normalize", "--algebra", alg, expr]);
        assert_eq!(c, 0);
        let (_, twice, _) = in_process(&["normalize", "--algebra", alg, once.trim()]);
        assert_eq!(once, twice, "{alg}");
    }
}

#[test]
fn equal_exit_codes() {
    assert_eq!(code(&["equal", "--algebra", "simp", "d[1,0]*d[0,0]", "d[1,1]*d[0,0]"]), 0);
    assert_eq!(code(&["equal", "--algebra", "braid", "x[2,0]*x[2,1]*x[2,0]", "x[2,1]*x[2,0]*x[2,1]"]), 0);
    assert_eq!(code(&["equal", "--algebra", "free", "x[2,0]*x[2,1]*x[2,0]", "x[2,1]*x[2,0]*x[2,1]"]), 1);
    assert_eq!(code(&["equal", "--algebra", "braid", "x[2,0]*x[2,0]", "1[2]"]), 1);
    assert_eq!(code(&["equal", "--algebra", "sym", "x[2,0]*x[2,0]", "1[2]"]), 0);
    assert_eq!(code(&["equal", "--algebra", "mag", "d[1,0]*d[0,0]", "d[1,1]*d[0,0]"]), 1);
}

#[test]
fn error_exit_codes() {
    let o = cli(&["normalize", "--algebra", "mag", "d[2,0]*"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 7"));
    assert_eq!(code(&["normalize", "--algebra", "braid", "x[2,0]"]), 3);
    assert_eq!(code(&["normalize", "--algebra", "mag", "x[2,0]"]), 2);
    assert_eq!(code(&["normalize", "--algebra", "nope", "d[0,0]"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["verify", "--suite", "bogus"]), 2);
    assert_eq!(code(&["dim", "--algebra", "leib", "--source", "0", "--target", "9"]), 4);
    assert_eq!(code(&["basis", "--algebra", "simp", "--source", "3", "--target", "1"]), 2);
    assert_eq!(code(&["basis", "--algebra", "braid", "--source", "1", "--target", "1"]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn max_level_env_overrides_default_bound() {
    let with_env = |v: &str| {
        Command::new(BIN)
            .args(["dim", "--algebra", "symmag", "--source", "0", "--target", "6"])
            .env("PROP_REWRITER_MAX_LEVEL", v)
            .output()
            .unwrap()
    };
    assert_eq!(code(&["dim", "--algebra", "symmag", "--source", "0", "--target", "6"]), 4);
    let o = with_env("6");
    assert!(o.status.success());
    // 7! permutations times Catalan(6) = 132 Mag words.
    assert_eq!(String::from_utf8(o.stdout).unwrap(), format!("{}\n", 5040 * 132));
    assert_eq!(with_env("3").status.code(), Some(4));
}

#[test]
fn basis_and_dim() {
    assert_eq!(stdout(&["basis", "--algebra", "simp", "--source", "1", "--target", "3"]).lines().count(), 3);
    assert_eq!(stdout(&["basis", "--algebra", "mag", "--source", "2", "--target", "2"]), "1[2]\n");
    assert_eq!(stdout(&["dim", "--algebra", "leib", "--source", "0", "--target", "2"]), "6\n");
    assert_eq!(stdout(&["dim", "--algebra", "leibop", "--source", "1", "--target", "3"]), "72\n");
    assert_eq!(stdout(&["dim", "--algebra", "symsimp", "--source", "1", "--target", "3"]), "72\n");
    let leib = stdout(&["basis", "--algebra", "leib", "--source", "0", "--target", "1"]);
    assert_eq!(leib, "r[0,0]\nx[1,0]*r[0,0]\n");
}

#[test]
fn verify_writes_json_and_reports_mutations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&["verify", "--suite", "zeta-braid", "--max-level", "3", "--json", p]), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "zeta-braid");
    assert_eq!(v["passed"], true);
    assert!(v["elapsed_ms"].is_u64());
    assert!(v["bounds"].is_object());
    let first = &v["checks"][0];
    for key in ["name", "paper_ref", "params", "passed"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
    assert!(first.get("counterexample").is_none());

    assert_eq!(code(&["verify", "--suite", "zeta-braid", "--max-level", "3", "--mutate", "zeta-far-wrong-chi", "--json", p]), 1);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let failed: Vec<&serde_json::Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert!(!failed.is_empty());
    for c in failed {
        let cx = &c["counterexample"];
        // Counterexamples replay through the parser.
        prop_rewriter::parse_element(cx["lhs"].as_str().unwrap()).unwrap();
        prop_rewriter::parse_element(cx["rhs"].as_str().unwrap()).unwrap();
    }
    assert_eq!(code(&["verify", "--suite", "zeta-braid", "--mutate", "no-such-mutation"]), 2);
}

#[test]
fn diagram_output() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("g.svg");
    let g = "d[1,1]*d[0,0] - d[1,0]*d[0,0] + x[2,1]*d[1,0]*d[0,0]";
    assert_eq!(code(&["diagram", g, "--out", svg.to_str().unwrap()]), 0);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("class=\"panel\"").count(), 3);
    let tikz = stdout(&["diagram", "x[2,0]", "--format", "tikz"]);
    assert_eq!(tikz.matches("\\draw").count(), 3);
    assert_eq!(code(&["diagram", "d[0,0]", "--out", "/nonexistent-dir/x.svg"]), 2);
}

#[test]
fn leading_minus_is_an_expression() {
    assert_eq!(stdout(&["normalize", "--algebra", "mag", "-d[0,0]"]), "-d[0,0]\n");
    assert_eq!(code(&["equal", "--algebra", "simp", "-2*d[0,0]", "-d[0,0] - d[0,0]"]), 0);
}
