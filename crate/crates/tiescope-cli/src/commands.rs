//! Argument definitions and dispatch for every subcommand.

use crate::construct::{construct_eo, construct_stv_put, default_almost_linear};
use crate::verify::run_suite;
use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use monte_carlo::{
    exact_tie_probability, fit_estimates, sweep, write_csv, write_gnuplot, Execution, McError, Population,
    DEFAULT_HISTOGRAM_CAP,
};
use num_traits::ToPrimitive;
use preference_core::{factorial, PalindromicOrder, Profile};
use regime_classifier::{
    classify_ties, closed_form_regime, regimes_agree, Adversary, ModelSpec, Regime, RegimeKind,
};
use serde_json::{json, Value};
use voting_rules::{PUTStructure, RuleId};

/// Exit status: success or decided.
pub const EXIT_OK: i32 = 0;
/// Exit status: a verification suite failed.
pub const EXIT_FAILED: i32 = 1;
/// Exit status: invalid arguments or inputs.
pub const EXIT_USAGE: i32 = 2;
/// Exit status: a decision procedure hit its search cap.
pub const EXIT_UNDECIDED: i32 = 3;
/// Exit status: an exact computation exceeded its size cap.
pub const EXIT_CAP: i32 = 4;

/// Likelihood of k-way ties under irresolute voting rules.
#[derive(Debug, Parser)]
#[command(name = "tiescope", version, about)]
pub struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Asymptotic regime of "exactly k winners" (JSON).
    Classify(ClassifyArgs),
    /// Monte Carlo estimates over a list of n (CSV).
    Simulate(SimulateArgs),
    /// Exact tie probability by enumerating histograms.
    Exact(ExactArgs),
    /// Log-log exponent fit of simulated tie probabilities (JSON).
    Fit(FitArgs),
    /// Build a profile realising a target structure (profile text).
    Construct(ConstructArgs),
    /// Run a built-in verification suite (JSON report).
    Verify(VerifyArgs),
}

/// Rule and election size.
#[derive(Debug, Args)]
pub struct Query {
    /// Rule id: plurality, borda, veto, scoring:3,1,0, maximin, copeland:1/2, schulze, rankedpairs, stv, coombs, baldwin.
    #[arg(long)]
    pub rule: RuleId,
    /// Number of alternatives.
    #[arg(long)]
    pub m: usize,
    /// Number of co-winners.
    #[arg(long)]
    pub k: usize,
}

/// Which procedure `classify` runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Polyhedral tie event.
    Generic,
    /// Per-rule closed form (needs the uniform distribution in the hull).
    ClosedForm,
    /// Both, with an agreement flag.
    Both,
}

/// `classify` arguments.
#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub query: Query,
    /// Number of agents.
    #[arg(long)]
    pub n: u64,
    /// `ic` or a JSON file with a list of distributions over the canonical ranking order.
    #[arg(long, default_value = "ic")]
    pub model: String,
    /// max or min.
    #[arg(long, default_value = "max")]
    pub adversary: Adversary,
    #[arg(long, value_enum, default_value_t = Method::Generic)]
    pub method: Method,
}

/// Sampling options shared by `simulate` and `fit`.
#[derive(Debug, Args)]
pub struct Sampling {
    #[command(flatten)]
    pub query: Query,
    /// Agent counts, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<u64>,
    /// `ic` or a JSON file: one distribution (i.i.d.) or one per agent.
    #[arg(long, default_value = "ic")]
    pub model: String,
    /// Profiles sampled per n.
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Worker threads (throughput only; results never change).
    #[arg(long)]
    pub workers: Option<usize>,
}

/// `simulate` arguments.
#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub sampling: Sampling,
}

/// `exact` arguments.
#[derive(Debug, Args)]
pub struct ExactArgs {
    #[command(flatten)]
    pub query: Query,
    #[arg(long)]
    pub n: u64,
    /// `ic` or a JSON file with a single distribution.
    #[arg(long, default_value = "ic")]
    pub model: String,
    /// Largest number of histograms to enumerate.
    #[arg(long, default_value_t = DEFAULT_HISTOGRAM_CAP)]
    pub cap: u128,
}

/// `fit` arguments.
#[derive(Debug, Args)]
pub struct FitArgs {
    #[command(flatten)]
    pub sampling: Sampling,
    /// Also write gnuplot columns `n p_hat lo hi fitted` here.
    #[arg(long)]
    pub plot: Option<std::path::PathBuf>,
    /// Compare the slope with the classifier's predicted exponent.
    #[arg(long)]
    pub compare_classifier: bool,
}

/// `construct` targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    /// Edge order of the weighted majority graph.
    Eo,
    /// PUT structure of an elimination rule.
    Put,
}

/// `construct` arguments.
#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub kind: ConstructKind,
    /// Target structure in its display form; `put` defaults to an
    /// index-ordered structure with a two-way bottom tie.
    #[arg(long)]
    pub target: Option<String>,
    #[arg(long)]
    pub n: u64,
    /// Elimination rule for `put` (only stv is supported).
    #[arg(long, default_value = "stv")]
    pub rule: RuleId,
    /// Alternatives for the default `put` target.
    #[arg(long, default_value_t = 3)]
    pub m: usize,
}

/// `verify` arguments.
#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// dimensions or table1.
    #[arg(long)]
    pub suite: String,
}

/// Rendered output and exit status of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, code: EXIT_OK }
    }
}

/// Exit status for an error: resource caps map to 4, everything else to 2.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<McError>() {
        Some(McError::CapExceeded { .. }) => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

fn load_model(spec: &str, m: usize) -> Result<ModelSpec> {
    let q = factorial(m) as usize;
    let model = if spec == "ic" {
        ModelSpec::uniform(q)
    } else {
        let text = std::fs::read_to_string(spec).with_context(|| format!("reading model file {spec}"))?;
        ModelSpec::from_json(&text)?
    };
    if model.q() != q {
        bail!("model has {} categories, m={m} needs {q}", model.q());
    }
    Ok(model)
}

fn population(spec: &str, m: usize, ns: &[u64]) -> Result<Population> {
    let model = load_model(spec, m)?;
    let pis = model.distributions().to_vec();
    if pis.len() == 1 {
        return Ok(Population::iid(m, pis[0].clone())?);
    }
    if ns.iter().all(|&n| n == pis.len() as u64) {
        return Ok(Population::per_agent(m, pis)?);
    }
    bail!("a model with {} distributions needs exactly one distribution or one per agent", pis.len())
}

fn execution(workers: Option<usize>) -> Execution {
    workers.map_or(Execution::Parallel, Execution::Workers)
}

fn query_json(q: &Query, n: Value) -> Value {
    json!({ "rule": q.rule.to_string(), "m": q.m, "k": q.k, "n": n })
}

fn regime_code(r: &Regime) -> i32 {
    if r.kind == RegimeKind::Undecided {
        EXIT_UNDECIDED
    } else {
        EXIT_OK
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialise") + "\n"
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Classify(a) => classify(a),
        Command::Simulate(a) => simulate(a),
        Command::Exact(a) => exact(a),
        Command::Fit(a) => fit(a),
        Command::Construct(a) => construct(a),
        Command::Verify(a) => {
            let report = run_suite(&a.suite)?;
            let code = if report.passed() { EXIT_OK } else { EXIT_FAILED };
            Ok(Outcome { output: pretty(&report.to_json()), code })
        }
    }
}

fn classify(a: &ClassifyArgs) -> Result<Outcome> {
    let q = &a.query;
    let model = load_model(&a.model, q.m)?;
    let closed = || -> Result<Regime> {
        if !model.hull_contains_uniform() {
            bail!("closed forms need the uniform distribution in the hull of the model");
        }
        Ok(closed_form_regime(&q.rule, q.m, q.k, a.n)?)
    };
    let generic = || -> Result<Regime> { Ok(classify_ties(&q.rule, &model, q.m, q.k, a.n, a.adversary)?) };
    let mut out = json!({ "query": query_json(q, json!(a.n)), "adversary": a.adversary.to_string() });
    let code = match a.method {
        Method::Generic | Method::ClosedForm => {
            let r = if a.method == Method::Generic { generic()? } else { closed()? };
            let body = r.to_json();
            for (key, v) in body.as_object().expect("regime JSON is an object") {
                out[key] = v.clone();
            }
            regime_code(&r)
        }
        Method::Both => {
            let (g, c) = (generic()?, closed()?);
            out["generic"] = g.to_json();
            out["closed_form"] = c.to_json();
            out["agree"] = json!(regimes_agree(&g, &c));
            regime_code(&g).max(regime_code(&c))
        }
    };
    Ok(Outcome { output: pretty(&out), code })
}

fn run_sweep(s: &Sampling) -> Result<Vec<monte_carlo::SampleEstimate>> {
    if s.trials == 0 {
        bail!("--trials must be positive");
    }
    let q = &s.query;
    let pop = population(&s.model, q.m, &s.n)?;
    Ok(sweep(&q.rule, &pop, q.m, q.k, &s.n, s.trials, s.seed, execution(s.workers))?)
}

fn simulate(a: &SimulateArgs) -> Result<Outcome> {
    let rows = run_sweep(&a.sampling)?;
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf)?;
    Ok(Outcome::ok(String::from_utf8(buf)?))
}

fn exact(a: &ExactArgs) -> Result<Outcome> {
    let q = &a.query;
    let model = load_model(&a.model, q.m)?;
    let [pi] = model.distributions() else {
        bail!("exact enumeration needs a single (i.i.d.) distribution");
    };
    let p = exact_tie_probability(&q.rule, pi, q.m, q.k, a.n, a.cap)?;
    Ok(Outcome::ok(format!("{p}\n")))
}

fn fit(a: &FitArgs) -> Result<Outcome> {
    let rows = run_sweep(&a.sampling)?;
    let fit = fit_estimates(&rows)?;
    let mut out = fit.to_json();
    out["query"] = query_json(&a.sampling.query, json!(a.sampling.n));
    out["estimates"] = serde_json::to_value(&rows)?;
    if let Some(path) = &a.plot {
        let file = std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        write_gnuplot(&rows, &fit, file)?;
    }
    if a.compare_classifier {
        let q = &a.sampling.query;
        let n_max = *a.sampling.n.iter().max().ok_or_else(|| anyhow!("empty n list"))?;
        let model = load_model(&a.sampling.model, q.m)?;
        let predicted = classify_ties(&q.rule, &model, q.m, q.k, n_max, Adversary::Max)?;
        let (lo, hi) = predicted
            .interval
            .map(|(l, h)| (l.to_f64().unwrap_or(f64::NAN), h.to_f64().unwrap_or(f64::NAN)))
            .unwrap_or((f64::NAN, f64::NAN));
        let line = format!(
            "predicted exponent {} vs fitted slope {:.4} ± {:.4}",
            predicted,
            fit.slope,
            fit.stderr
        );
        eprintln!("{line}");
        out["comparison"] = json!({
            "predicted": predicted.to_json(),
            "fitted_slope": fit.slope,
            "distance": if fit.slope < lo { lo - fit.slope } else if fit.slope > hi { fit.slope - hi } else { 0.0 },
            "line": line,
        });
    }
    Ok(Outcome::ok(pretty(&out)))
}

fn construct(a: &ConstructArgs) -> Result<Outcome> {
    let profile = match a.kind {
        ConstructKind::Eo => {
            let text = a.target.as_deref().ok_or_else(|| anyhow!("construct eo needs --target"))?;
            let order: PalindromicOrder = text.parse()?;
            construct_eo(&order, a.n)?
        }
        ConstructKind::Put => {
            if a.rule != RuleId::Stv {
                bail!("construct put supports only stv (got {})", a.rule);
            }
            let w = match &a.target {
                Some(text) => text.parse::<PUTStructure>()?,
                None => default_almost_linear(a.m)?,
            };
            Profile::from_histogram(&construct_stv_put(&w, a.n)?)
        }
    };
    Ok(Outcome::ok(profile.to_text()))
}
