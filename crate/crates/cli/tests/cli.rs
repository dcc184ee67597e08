use std::path::PathBuf;
use std::process::{Command, Output};

use fideal_cli::{parse_ideal, parse_lines, render_record, render_text, run};
use fideal_core::{MonomialIdeal, SquareFreeMonomial};
use proptest::prelude::*;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn fideal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fideal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Runs in-process and returns (status, stdout, stderr).
fn call(args: &[&str], input: &str) -> (i32, String, String) {
    let mut argv = vec!["fideal"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let status = run(argv, &mut input.as_bytes(), &mut out, &mut err);
    (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn check_golden_example() {
    let path = golden("mixed.txt");
    let o = fideal(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "f-ideal: true; f = (1,5,8,2)\n");

    let path = golden("mixed.json");
    let o = fideal(&["check", "--strict", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "f-ideal: true; f = (1,5,8,2)\n");
}

#[test]
fn dual_golden_example() {
    let path = golden("mixed.txt");
    let o = fideal(&["dual", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "n=5; x1*x2, x4*x5, x1*x3*x4, x2*x3*x5\n");
    let o = fideal(&["dual", "--format", "records", golden("mixed.json").to_str().unwrap()]);
    assert_eq!(stdout(&o), "{\"n\":5,\"generators\":[[1,2],[4,5],[1,3,4],[2,3,5]],\"label\":\"mixed\"}\n");
}

#[test]
fn enumerate_small_census() {
    let o = fideal(&["enumerate", "--n", "2", "--d", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "V(2,1): count 2, candidates 2, budget exhausted: false\nn=2; x1\nn=2; x2\n");

    let o = fideal(&["enumerate", "--n", "2", "--d", "1", "--format", "records"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        r#"{"budget_exhausted":false,"candidates_tested":2,"count":2,"degree":1,"n":2}"#
    );
    assert_eq!(lines[1], r#"{"alpha":1,"generators":[[1]],"n":2,"omega":1}"#);
}

#[test]
fn strict_exit_codes() {
    let (status, out, _) = call(&["check", "-i", "n=3; x1*x2"], "");
    assert_eq!(status, 0);
    assert_eq!(out, "f-ideal: false; f(facet) = (1,2,1), f(nonface) = (1,3,2)\n");
    assert_eq!(call(&["check", "--strict", "-i", "n=3; x1*x2"], "").0, 1);
    assert_eq!(call(&["certify", "--strict", "-i", "n=3; x1*x2"], "").0, 1);
    assert_eq!(call(&["kk", "--strict", "1,4,2,1"], "").0, 1);
    assert_eq!(call(&["kk", "--strict", "1,2,2"], "").0, 2);
    assert_eq!(call(&["kk", "--strict", "1,5,8,2"], "").0, 0);
    assert_eq!(call(&["pair", "--strict", "--n", "4", "--d", "2"], "").0, 0);
}

#[test]
fn input_errors_exit_with_two() {
    let o = fideal(&["check", golden("bad_index.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o), "error: line 3, column 4: variable x7 outside x1..x3\n");

    let (status, _, err) = call(&["check", "-i", "x1*x2"], "");
    assert_eq!(status, 2);
    assert!(err.contains("missing `n=<count>;` header"));

    let (status, _, err) = call(&["check", "-i", "n=3; 1"], "");
    assert_eq!(status, 2);
    assert!(err.contains("--allow-unit"));

    let o = fideal(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Usage"));
    assert_eq!(fideal(&["check", "--frobnicate"]).status.code(), Some(2));
    assert_eq!(fideal(&["check", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(call(&["enumerate", "--n", "9", "--d", "2"], "").0, 2);
    assert_eq!(call(&["kk", "2,5"], "").0, 2);
    assert_eq!(fideal(&["--help"]).status.code(), Some(0));
}

#[test]
fn non_minimal_input_warns_on_stderr() {
    let o = fideal(&["fvector", golden("non_minimal.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "facet:   (1,2,1)\nnonface: (1,3,2)\n");
    assert!(stderr(&o).starts_with("warning: input was not minimal"));
}

#[test]
fn stdin_is_the_default_input() {
    let (status, out, _) = call(&["check"], "n=5; x1, x2*x3, x2*x4, x3*x4");
    assert_eq!(status, 0);
    assert_eq!(out, "f-ideal: true; f = (1,4,3)\n");
    let (_, out, _) = call(&["check", "-"], "n=5; x1, x2*x3, x2*x4, x3*x4");
    assert_eq!(out, "f-ideal: true; f = (1,4,3)\n");
}

#[test]
fn unit_ideal_round_trips_with_allow_unit() {
    assert_eq!(call(&["dual", "-i", "n=2; x1*x2"], "").0, 2);
    let (status, out, _) = call(&["dual", "--allow-unit", "-i", "n=2; x1*x2"], "");
    assert_eq!((status, out.as_str()), (0, "n=2; 1\n"));
    let (status, out, _) = call(&["dual", "--allow-unit", "--format", "records", "-i", "n=2; 1"], "");
    assert_eq!((status, out.as_str()), (0, "{\"n\":2,\"generators\":[[1,2]]}\n"));
    // f-ideal questions stay undefined for the unit ideal
    assert_eq!(call(&["check", "--allow-unit", "-i", "n=2; 1"], "").0, 2);
}

#[test]
fn numeric_subcommands() {
    assert_eq!(call(&["kk-expand", "5", "2"], "").1, "5 = C(3,2) + C(2,1)\n5^(2) = 2\n");
    assert_eq!(call(&["kk-expand", "0", "3"], "").1, "0 = (empty sum)\n0^(3) = 0\n");
    assert_eq!(
        call(&["complement", "1,4,3", "--n", "5"], "").1,
        "slots: (1,5,10,7,1,0)\ncomplement: (1,5,10,7,1) on 5 nominal vertices; f-vector: true\n"
    );
    let (_, out, _) = call(&["kk", "(1,5,8,2)"], "");
    assert_eq!(
        out,
        "f = (1,5,8,2), n = 5\n\
         (i)   some complex has this f-vector: true\n\
         (ii)  Macaulay bounds hold: true\n\
         (iii) complement (1,5,8,2) is an f-vector: true\n\
         (iv)  complementary bounds hold: true\n"
    );
    let (_, out, _) = call(&["kk", "--format", "records", "1,9", "--n", "9"], "");
    assert_eq!(
        out,
        "{\"complement\":[1,9,36,84,126,126,84,36],\"complement_valid\":true,\"dual_bounds\":true,\"fvector\":[1,9],\"macaulay\":true,\"n\":9,\"oracle\":null}\n"
    );
}

#[test]
fn structural_subcommands() {
    let m = "n=5; x1*x4, x2*x5, x1*x2*x3, x3*x4*x5";
    assert_eq!(
        call(&["complexes", "-i", m], "").1,
        "facet complex: <{1,4}, {2,5}, {1,2,3}, {3,4,5}>\n  f = (1,5,8,2), dim = 2\n\
         nonface complex: <{1,2}, {4,5}, {2,3,4}, {1,3,5}>\n  f = (1,5,8,2), dim = 2\n"
    );
    assert_eq!(
        call(&["primes", "-i", "n=4; x1*x2, x2*x3, x3*x4"], "").1,
        "height 2, unmixed: true\n<x1, x3>\n<x2, x3>\n<x2, x4>\n"
    );
    assert_eq!(
        call(&["partition", "--degree", "2", "-i", m], "").1,
        "A (2): x2*x4, x1*x5\nB (6): x1*x2, x1*x3, x2*x3, x3*x4, x3*x5, x4*x5\nC (2): x1*x4, x2*x5\nD (0):\n"
    );
    let (_, out, _) = call(&["partition", "--format", "records", "-i", m], "");
    assert_eq!(out.lines().nth(2).unwrap(), r#"{"degree":2,"a":2,"b":6,"c":2,"d":0}"#);
    assert_eq!(call(&["dual", "--beta", "1,1,1,1,1", "-i", m], "").1, "n=5; x1*x2, x4*x5, x1*x3*x4, x2*x3*x5\n");
    assert_eq!(call(&["dual", "--beta", "1,1", "-i", m], "").0, 2);
    let (status, out, _) = call(&["certify", "--format", "records", "-i", m], "");
    assert_eq!(status, 0);
    assert!(out.starts_with("{\"certificate\":{\"facet_fvector\":[1,5,8,2],"), "{out}");
}

#[test]
fn census_file_and_worker_independence() {
    let dir = std::env::temp_dir().join(format!("fideal-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("v42.txt");
    let (status, out, _) = call(
        &["enumerate", "--n", "4", "--d", "2", "--witness-cap", "1", "--output", file.to_str().unwrap()],
        "",
    );
    assert_eq!(status, 0);
    assert!(out.ends_with("... 11 more\n"), "{out}");
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("# n=4 d=2 count=12 budget_exhausted=false candidates=20\n"));
    let ideals = parse_lines(&text, false).unwrap();
    assert_eq!(ideals.len(), 12);
    assert!(ideals.iter().any(|p| render_text(&p.ideal) == "n=4; x1*x2, x2*x3, x3*x4"));
    std::fs::remove_dir_all(&dir).unwrap();

    let one = call(&["enumerate", "--n", "5", "--d", "2", "--workers", "1", "--format", "records"], "").1;
    let four = call(&["enumerate", "--n", "5", "--d", "2", "--workers", "4", "--format", "records"], "").1;
    assert_eq!(one, four);
    let (_, out, _) = call(&["enumerate", "--n", "4", "--d", "2", "--orbits", "--witness-cap", "0"], "");
    assert_eq!(out, "V(4,2): count 12, candidates 20, budget exhausted: false\norbits under variable permutations: 1\n... 12 more\n");
}

#[test]
fn budget_and_seed_flags() {
    let (_, out, _) = call(&["enumerate", "--n", "4", "--d", "2", "--budget", "5", "--witness-cap", "0"], "");
    assert!(out.starts_with("V(4,2): count "), "{out}");
    assert!(out.contains("candidates 5, budget exhausted: true"), "{out}");
    let a = call(&["enumerate", "--n", "6", "--sample", "500", "--seed", "9", "--format", "records"], "").1;
    let b = call(&["enumerate", "--n", "6", "--sample", "500", "--seed", "9", "--format", "records"], "").1;
    assert_eq!(a, b);
    assert_eq!(call(&["enumerate", "--n", "6", "--sample", "5", "--d", "2"], "").0, 2);
    let (_, out, _) = call(&["gap-search", "--n", "4", "--gap", "3"], "");
    assert_eq!(out, "f-ideals on 4 variables with omega - alpha = 3: count 0, candidates 166, budget exhausted: false\n");
}

fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=12).prop_flat_map(|n| {
        prop::collection::vec(0u32..1 << n, 0..=12).prop_map(move |bits| {
            let gens = bits
                .into_iter()
                .filter(|&b| b != 0)
                .map(|b| SquareFreeMonomial::from_bits(n, b).unwrap())
                .collect();
            MonomialIdeal::new(n, gens).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn text_round_trip(i in ideal_strategy()) {
        let back = parse_ideal(&render_text(&i), false).unwrap();
        prop_assert_eq!(back.ideal, i);
        prop_assert!(back.warning.is_none());
    }

    #[test]
    fn record_round_trip(i in ideal_strategy(), label in proptest::option::of("[a-z]{1,8}")) {
        let back = parse_ideal(&render_record(&i, label.as_deref()), false).unwrap();
        prop_assert_eq!(back.ideal, i);
        prop_assert_eq!(back.label, label);
    }
}
