//! End-to-end behaviour of the `tiescope` binary: exit codes, schema-valid
//! JSON, and agreement with direct library calls.

use monte_carlo::{exact_tie_probability, sweep, write_csv, Execution, Population};
use preference_core::{edge_order, weighted_majority_graph, PalindromicOrder, Profile};
use regime_classifier::{classify_ties, closed_form_regime, Adversary, ModelSpec};
use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};
use voting_rules::{put_structure, MRSERule, PUTStructure, RuleId};

const BIN: &str = env!("CARGO_BIN_EXE_tiescope");

fn tiescope(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", stdout(o)))
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(name);
    let text = std::fs::read_to_string(&path).expect("schema file exists");
    jsonschema::validator_for(&serde_json::from_str(&text).expect("schema is JSON")).expect("schema compiles")
}

fn assert_valid(schema_name: &str, v: &Value) {
    let validator = schema(schema_name);
    let errors: Vec<String> = validator.iter_errors(v).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    assert!(errors.is_empty(), "{schema_name} rejects output: {errors:?}\n{v:#}");
}

fn rule(s: &str) -> RuleId {
    s.parse().expect("rule parses")
}

#[test]
fn maximin_two_way_ties_are_inverse_square_root() {
    let o = tiescope(&["classify", "--rule", "maximin", "--m", "3", "--k", "2", "--n", "100", "--model", "ic"]);
    assert_eq!(code(&o), 0);
    let v = json_out(&o);
    assert_valid("classify.schema.json", &v);
    assert_eq!(v["regime"], "polynomial");
    assert_eq!(v["exponent"], "-1/2");
}

#[test]
fn stv_three_way_tie_is_impossible_at_thirty_five() {
    let o = tiescope(&["classify", "--rule", "stv", "--m", "3", "--k", "3", "--n", "35"]);
    assert_eq!(code(&o), 0);
    let v = json_out(&o);
    assert_valid("classify.schema.json", &v);
    assert_eq!(v["regime"], "zero");
}

#[test]
fn copeland_third_reports_its_denominator() {
    let o = tiescope(&[
        "classify", "--rule", "copeland:1/3", "--m", "8", "--k", "7", "--n", "100", "--method", "closed-form",
    ]);
    assert_eq!(code(&o), 0);
    let v = json_out(&o);
    assert_valid("classify.schema.json", &v);
    assert_eq!(v["witness"]["l_alpha"], 3);
    assert_eq!(v["exponent"], "0");
}

#[test]
fn classify_matches_library_calls() {
    for (r, m, k, n) in [("borda", 3, 2, 31), ("plurality", 3, 3, 33), ("schulze", 3, 2, 30), ("coombs", 3, 3, 35)] {
        let (ms, ks, ns) = (m.to_string(), k.to_string(), n.to_string());
        let o = tiescope(&["classify", "--rule", r, "--m", &ms, "--k", &ks, "--n", &ns, "--method", "both"]);
        assert_eq!(code(&o), 0, "{r}");
        let v = json_out(&o);
        assert_valid("classify.schema.json", &v);
        let model = ModelSpec::uniform(6);
        let generic = classify_ties(&rule(r), &model, m, k, n, Adversary::Max).unwrap();
        let closed = closed_form_regime(&rule(r), m, k, n).unwrap();
        assert_eq!(v["generic"], generic.to_json(), "{r}");
        assert_eq!(v["closed_form"], closed.to_json(), "{r}");
        assert_eq!(v["agree"], true, "{r}");
    }
}

#[test]
fn classify_reads_model_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("model.json");
    let model = serde_json::json!([["1/6", "1/6", "1/6", "1/6", "1/6", "1/6"], ["1/3", "1/3", "1/12", "1/12", "1/12", "1/12"]]);
    assert_valid("model.schema.json", &model);
    std::fs::write(&path, model.to_string()).unwrap();
    let p = path.to_str().unwrap();
    let o = tiescope(&["classify", "--rule", "borda", "--m", "3", "--k", "2", "--n", "30", "--model", p]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json_out(&o);
    assert_valid("classify.schema.json", &v);
    let lib = classify_ties(&rule("borda"), &ModelSpec::from_json(&model.to_string()).unwrap(), 3, 2, 30, Adversary::Max)
        .unwrap();
    assert_eq!(v["regime"], lib.to_json()["regime"]);
    assert_eq!(v["exponent"], lib.to_json()["exponent"]);
}

#[test]
fn invalid_inputs_exit_with_usage_status() {
    for args in [
        &["classify", "--rule", "nope", "--m", "3", "--k", "2", "--n", "10"][..],
        &["classify", "--rule", "borda", "--m", "3", "--k", "2", "--n", "10", "--model", "/nonexistent.json"],
        &["simulate", "--rule", "borda", "--m", "3", "--k", "2", "--n", "10", "--trials", "0"],
        &["verify", "--suite", "nope"],
        &["construct", "put", "--rule", "coombs", "--m", "3", "--n", "6480"],
    ] {
        assert_eq!(code(&tiescope(args)), 2, "{args:?}");
    }
}

#[test]
fn exact_prints_reduced_fractions() {
    let o = tiescope(&["exact", "--rule", "plurality", "--m", "3", "--k", "2", "--n", "2"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "2/3\n"));
    let o = tiescope(&["exact", "--rule", "borda", "--m", "3", "--k", "3", "--n", "2"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "1/6\n"));
    let uniform = ModelSpec::uniform(6).distributions()[0].clone();
    let lib = exact_tie_probability(&rule("maximin"), &uniform, 3, 2, 5, u128::MAX).unwrap();
    let o = tiescope(&["exact", "--rule", "maximin", "--m", "3", "--k", "2", "--n", "5"]);
    assert_eq!(stdout(&o), format!("{lib}\n"));
}

#[test]
fn exact_over_cap_exits_with_cap_status() {
    let o = tiescope(&["exact", "--rule", "borda", "--m", "3", "--k", "2", "--n", "40", "--cap", "1000"]);
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn simulate_writes_one_row_per_n_and_matches_the_library() {
    let args = ["simulate", "--rule", "borda", "--m", "3", "--k", "2", "--n", "10,20,40", "--trials", "2000", "--seed", "9"];
    let o = tiescope(&args);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    let pop = Population::impartial(3).unwrap();
    let rows = sweep(&rule("borda"), &pop, 3, 2, &[10, 20, 40], 2000, 9, Execution::Sequential).unwrap();
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf).unwrap();
    assert_eq!(text.as_bytes(), &buf[..]);
}

#[test]
fn simulate_is_byte_identical_across_runs_and_worker_counts() {
    let base = ["simulate", "--rule", "stv", "--m", "3", "--k", "2", "--n", "15,30", "--trials", "3000", "--seed", "4"];
    let first = tiescope(&base).stdout;
    assert_eq!(first, tiescope(&base).stdout);
    for w in ["1", "3"] {
        let mut args = base.to_vec();
        args.extend(["--workers", w]);
        assert_eq!(first, tiescope(&args).stdout, "workers {w}");
    }
}

#[test]
fn out_flag_writes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    let p = path.to_str().unwrap();
    let o = tiescope(&["--out", p, "exact", "--rule", "plurality", "--m", "3", "--k", "2", "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "2/3\n");
}

#[test]
fn fit_emits_schema_valid_json_and_a_comparison_line() {
    let dir = tempfile::tempdir().unwrap();
    let plot = dir.path().join("fit.dat");
    let o = tiescope(&[
        "fit", "--rule", "borda", "--m", "3", "--k", "2", "--n", "50,100,200,400", "--trials", "20000",
        "--compare-classifier", "--plot", plot.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let v = json_out(&o);
    assert_valid("fit.schema.json", &v);
    assert!(String::from_utf8_lossy(&o.stderr).contains("predicted exponent"));
    assert_eq!(v["comparison"]["predicted"]["exponent"], "-1/2");
    let slope = v["slope"].as_f64().unwrap();
    assert!((slope + 0.5).abs() < 0.2, "slope {slope}");
    let data = std::fs::read_to_string(&plot).unwrap();
    assert_eq!(data.lines().filter(|l| !l.starts_with('#')).count(), 4);
}

#[test]
fn fit_refuses_fewer_than_three_points() {
    let o = tiescope(&["fit", "--rule", "borda", "--m", "3", "--k", "2", "--n", "50,100", "--trials", "100"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn construct_eo_round_trips() {
    let target = "{(1,2),(1,3)} > {(2,3),(3,2)} > {(2,1),(3,1)}";
    let o = tiescope(&["construct", "eo", "--target", target, "--n", "82"]);
    assert_eq!(code(&o), 0);
    let profile = Profile::parse(&stdout(&o)).unwrap();
    assert_eq!(profile.n(), Some(82));
    let got = edge_order(&weighted_majority_graph(&profile.histogram().unwrap().tally()));
    assert_eq!(got, target.parse::<PalindromicOrder>().unwrap());
}

#[test]
fn construct_eo_rejects_odd_n_with_zero_edges() {
    let target = "{(1,2),(1,3)} > {(2,3),(3,2)} > {(2,1),(3,1)}";
    assert_eq!(code(&tiescope(&["construct", "eo", "--target", target, "--n", "81"])), 2);
}

#[test]
fn construct_put_round_trips_above_the_bound() {
    let o = tiescope(&["construct", "put", "--rule", "stv", "--m", "3", "--n", "6480"]);
    assert_eq!(code(&o), 0);
    let profile = Profile::parse(&stdout(&o)).unwrap();
    assert_eq!(profile.n(), Some(6480));
    let w = put_structure(&profile.histogram().unwrap().tally(), &MRSERule::stv(3)).unwrap();
    assert_eq!(w, tiescope_cli::construct::default_almost_linear(3).unwrap());
    let explicit = w.to_string();
    let o = tiescope(&["construct", "put", "--target", &explicit, "--n", "1000"]);
    assert_eq!(code(&o), 0);
    let again = Profile::parse(&stdout(&o)).unwrap();
    assert_eq!(put_structure(&again.histogram().unwrap().tally(), &MRSERule::stv(3)).unwrap(), explicit.parse::<PUTStructure>().unwrap());
}

#[test]
fn construct_put_rejects_n_below_the_bound() {
    assert_eq!(code(&tiescope(&["construct", "put", "--m", "3", "--n", "719"])), 2);
}

#[test]
fn verify_suites_pass_and_validate() {
    for suite in ["dimensions", "table1"] {
        let o = tiescope(&["verify", "--suite", suite]);
        let v = json_out(&o);
        assert_valid("verify.schema.json", &v);
        assert_eq!(code(&o), 0, "{suite}: {v:#}");
        assert_eq!(v["passed"], true);
    }
}
