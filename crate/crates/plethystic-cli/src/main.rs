//! `plethystic`: symmetric-function computations and identity verification
//! from the command line.
//!
//! Exit status: 0 on success, 1 when a check or verification fails, 2 for
//! bad input or configuration, 3 when a computation budget is exceeded.

mod config;

/// `println!` that exits quietly when stdout has gone away, as under `| head`.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout().lock(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use plethystic::oracle::{oracle_dual_pi_schur, oracle_pi_schur, oracle_plethysm, oracle_product, oracle_skew, plethysm_alphabet};
use plethystic::series::{cauchy_dual_pi_schur, cauchy_pi_schur, dual_pi_schur, pi_branch, pi_schur, series_term};
use plethystic::verifier::{replay, Interval, Suite, SuiteConfig, VerificationReport};
use plethystic::vertex::{mode_with, vertex_string_with, ChargedState, EvalConfig, Kind, ModeConvention, ReorderCase};
use plethystic::{plethysm_with_budget, Error, Family, Partition, SeriesSpec, SymFunc};

use config::{parse_interval, CliConfig, Format};

#[derive(Parser, Debug)]
#[command(name = "plethystic", version, about = "Plethystic vertex operators and symmetric functions")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for verification suites.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Largest degree any intermediate plethysm may reach.
    #[arg(long, global = true)]
    degree_budget: Option<usize>,
    /// Report zero elapsed time so that repeated runs print identical output.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The π-Schur function s^(π)_λ.
    PiSchur(PiSchurArgs),
    /// The dual π-Schur function s*^(π)_λ.
    DualPiSchur(PiSchurArgs),
    /// The expansion M_π^⊥ s_λ.
    Branch {
        #[arg(long, value_parser = parse_partition)]
        pi: Partition,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// The product s_μ s_ν.
    Product {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        #[arg(long)]
        check_oracle: bool,
    },
    /// The skew Schur function s_{λ/μ}.
    Skew {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long)]
        check_oracle: bool,
    },
    /// The plethysm s_outer[s_inner].
    Plethysm {
        #[arg(long, value_parser = parse_partition)]
        outer: Partition,
        #[arg(long, value_parser = parse_partition)]
        inner: Partition,
        #[arg(long)]
        check_oracle: bool,
    },
    /// Terms of the series M or L of a plethysm shape.
    Series {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        /// Skew the shape by this partition.
        #[arg(long, value_parser = parse_partition)]
        skew: Option<Partition>,
        #[arg(long)]
        max_r: usize,
    },
    /// Apply one mode X_m or X*_m of the π-vertex operator to a state.
    Mode {
        #[arg(long, value_parser = parse_partition)]
        pi: Partition,
        #[arg(long, value_parser = parse_kind)]
        kind: Kind,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        /// Charged state as JSON; the vacuum when omitted.
        #[arg(long, value_parser = parse_state)]
        state: Option<ChargedState>,
        #[arg(long, value_parser = parse_convention, default_value = "charge-aware")]
        convention: ModeConvention,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    #[value(name = "M", alias = "m")]
    M,
    #[value(name = "L", alias = "l")]
    L,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Route {
    Vertex,
    Perp,
    Cauchy,
    Oracle,
}

#[derive(Args, Debug)]
struct PiSchurArgs {
    #[arg(long, value_parser = parse_partition)]
    pi: Partition,
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    /// Route(s) to compute; several routes are cross-checked.
    #[arg(long, value_enum)]
    route: Vec<Route>,
    /// Add the polynomial oracle to the routes.
    #[arg(long)]
    check_oracle: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_parser = parse_suite)]
    suite: Suite,
    /// Restrict to these π (repeatable).
    #[arg(long, value_parser = parse_partition)]
    pi: Vec<Partition>,
    /// Reordering cases to run (repeatable).
    #[arg(long, value_parser = parse_case)]
    case: Vec<ReorderCase>,
    /// Mode indices m, n as lo,hi.
    #[arg(long, value_parser = parse_interval, allow_hyphen_values = true)]
    modes: Option<Interval>,
    /// Charges as lo,hi.
    #[arg(long, value_parser = parse_interval, allow_hyphen_values = true)]
    charges: Option<Interval>,
    /// Largest test-input degree.
    #[arg(long)]
    degree: Option<usize>,
    /// Exponent window as lo,hi.
    #[arg(long, value_parser = parse_interval, allow_hyphen_values = true)]
    window: Option<Interval>,
    /// Vertex-string lengths (repeatable).
    #[arg(long)]
    lengths: Vec<usize>,
    /// Longest λ in the four-route comparison.
    #[arg(long)]
    max_length: Option<usize>,
    /// Skip the polynomial oracle route.
    #[arg(long)]
    no_oracle: bool,
    /// Run the deliberately broken variant, which must fail.
    #[arg(long)]
    perturb: bool,
    /// Recompute a single recorded case from its JSON inputs.
    #[arg(long, conflicts_with = "perturb")]
    replay: Option<String>,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_convention(s: &str) -> Result<ModeConvention, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_case(s: &str) -> Result<ReorderCase, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_state(s: &str) -> Result<ChargedState, String> {
    serde_json::from_str(s).map_err(|e| e.to_string())
}

/// Why a command stopped, mapped onto the exit status.
enum Failure {
    /// A check ran and disagreed; the output has already been printed.
    Check,
    Usage(String),
    Kernel(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Kernel(e)
    }
}

type Outcome = Result<(), Failure>;

/// Settings after merging the config file with the flags.
struct Settings {
    format: Format,
    degree_budget: usize,
    no_timing: bool,
    file: CliConfig,
}

impl Settings {
    fn eval_config(&self) -> EvalConfig {
        EvalConfig { degree_budget: self.degree_budget, ..EvalConfig::default() }
    }

    fn emit<T: Serialize + std::fmt::Display>(&self, value: &T) {
        match self.format {
            Format::Text => say!("{value}"),
            Format::Json => say!("{}", to_json(value)),
        }
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("kernel values serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file = match CliConfig::from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let settings = Settings {
        format: cli.global.format.or(file.format).unwrap_or_default(),
        degree_budget: cli.global.degree_budget.or(file.degree_budget).unwrap_or(plethystic::DEFAULT_DEGREE_BUDGET),
        no_timing: cli.global.no_timing,
        file: file.clone(),
    };
    let jobs = cli.global.jobs.map(|j| j as usize).or(file.jobs);
    let outcome = match jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run(cli.command, &settings)),
            Err(e) => Err(Failure::Usage(format!("cannot start {n} workers: {e}"))),
        },
        None => run(cli.command, &settings),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Kernel(e)) => {
            eprintln!("error: {e}");
            if e.is_budget() || matches!(e, Error::Oracle(_)) {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn run(command: Command, s: &Settings) -> Outcome {
    match command {
        Command::PiSchur(args) => pi_schur_command(args, false, s),
        Command::DualPiSchur(args) => pi_schur_command(args, true, s),
        Command::Branch { pi, lambda } => {
            s.emit(&pi_branch(&pi, &lambda)?);
            Ok(())
        }
        Command::Product { mu, nu, check_oracle } => {
            let value = SymFunc::schur(mu.clone()).product(&SymFunc::schur(nu.clone()));
            checked(s, value, check_oracle.then(|| oracle_product(&mu, &nu)))
        }
        Command::Skew { lambda, mu, check_oracle } => {
            let value = SymFunc::schur(lambda.clone()).skew(&SymFunc::schur(mu.clone()));
            checked(s, value, check_oracle.then(|| oracle_skew(&lambda, &mu)))
        }
        Command::Plethysm { outer, inner, check_oracle } => {
            let value = plethysm_with_budget(&SymFunc::schur(outer.clone()), &SymFunc::schur(inner.clone()), s.degree_budget)?;
            let oracle = check_oracle.then(|| oracle_plethysm(&outer, &inner, plethysm_alphabet(&outer, &inner)));
            checked(s, value, oracle)
        }
        Command::Series { family, shape, skew, max_r } => series_command(family, shape, skew, max_r, s),
        Command::Mode { pi, kind, m, state, convention } => {
            let state = state.unwrap_or_else(ChargedState::vacuum);
            s.emit(&mode_with(&pi, kind, m, &state, convention, &s.eval_config())?);
            Ok(())
        }
        Command::Verify(args) => verify_command(args, s),
    }
}

/// Prints `value`; with an oracle value, a mismatch fails the command.
fn checked(s: &Settings, value: SymFunc, oracle: Option<plethystic::Result<SymFunc>>) -> Outcome {
    s.emit(&value);
    if let Some(oracle) = oracle {
        let oracle = oracle?;
        if oracle != value {
            eprintln!("oracle mismatch: oracle gives {oracle}");
            return Err(Failure::Check);
        }
    }
    Ok(())
}

fn pi_schur_command(args: PiSchurArgs, dual: bool, s: &Settings) -> Outcome {
    let mut routes = args.route;
    if routes.is_empty() {
        routes.push(Route::Perp);
    }
    if args.check_oracle {
        routes.push(Route::Oracle);
    }
    routes.sort();
    routes.dedup();
    let (pi, lambda) = (&args.pi, &args.lambda);
    let mut values = BTreeMap::new();
    for route in &routes {
        let value = match (route, dual) {
            (Route::Perp, false) => pi_schur(pi, lambda)?,
            (Route::Perp, true) => dual_pi_schur(pi, lambda)?,
            (Route::Cauchy, false) => cauchy_pi_schur(pi, lambda)?,
            (Route::Cauchy, true) => cauchy_dual_pi_schur(pi, lambda)?,
            (Route::Oracle, false) => oracle_pi_schur(pi, lambda, lambda.len().max(1))?,
            (Route::Oracle, true) => oracle_dual_pi_schur(pi, lambda, lambda.len().max(1))?,
            (Route::Vertex, _) => vertex_string_with(pi, lambda, dual, lambda.len().max(1), &s.eval_config())?,
        };
        values.insert(route_name(*route), value);
    }
    if values.len() == 1 {
        s.emit(values.values().next().expect("one route"));
        return Ok(());
    }
    let first = values.values().next().expect("several routes").clone();
    let agree = values.values().all(|v| *v == first);
    match s.format {
        Format::Json => say!("{}", to_json(&RouteReport { value: &first, routes: &values, agree })),
        Format::Text => {
            for (name, value) in &values {
                say!("{name}: {value}");
            }
            say!("{}", if agree { "routes agree" } else { "routes DISAGREE" });
        }
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

#[derive(Serialize)]
struct RouteReport<'a> {
    value: &'a SymFunc,
    routes: &'a BTreeMap<&'static str, SymFunc>,
    agree: bool,
}

#[derive(Serialize)]
struct SeriesRow<'a> {
    r: usize,
    value: &'a SymFunc,
}

fn route_name(route: Route) -> &'static str {
    match route {
        Route::Vertex => "vertex",
        Route::Perp => "perp",
        Route::Cauchy => "cauchy",
        Route::Oracle => "oracle",
    }
}

fn series_command(family: FamilyArg, shape: Partition, skew: Option<Partition>, max_r: usize, s: &Settings) -> Outcome {
    let family = match family {
        FamilyArg::M => Family::M,
        FamilyArg::L => Family::L,
    };
    let spec = match skew {
        Some(kappa) => SeriesSpec::skew(family, shape, kappa),
        None => SeriesSpec::plain(family, shape),
    };
    let mut rows = Vec::with_capacity(max_r + 1);
    for r in 0..=max_r {
        rows.push((r, series_term(&spec, r)?));
    }
    match s.format {
        Format::Json => {
            let rows: Vec<SeriesRow> = rows.iter().map(|(r, t)| SeriesRow { r: *r, value: t }).collect();
            say!("{}", to_json(&rows));
        }
        Format::Text => {
            for (r, t) in &rows {
                say!("{r}\t{t}");
            }
        }
    }
    Ok(())
}

fn verify_command(args: VerifyArgs, s: &Settings) -> Outcome {
    if let Some(inputs) = &args.replay {
        let inputs: Value = serde_json::from_str(inputs).map_err(|e| Failure::Usage(format!("--replay: {e}")))?;
        let (lhs, rhs) = replay(args.suite, &inputs)?;
        let equal = lhs == rhs;
        match s.format {
            Format::Json => say!("{}", to_json(&json!({ "inputs": inputs, "lhs": lhs, "rhs": rhs, "equal": equal }))),
            Format::Text => {
                say!("lhs: {lhs}");
                say!("rhs: {rhs}");
                say!("{}", if equal { "equal" } else { "NOT equal" });
            }
        }
        return if equal { Ok(()) } else { Err(Failure::Check) };
    }
    let mut config = suite_config(&args, s)?;
    if args.perturb {
        config = config.perturbed();
    }
    let mut report: VerificationReport = config.run()?;
    if s.no_timing {
        report.elapsed_ms = 0;
    }
    s.emit(&report);
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn unused(flag: &str, suite: Suite) -> Failure {
    Failure::Usage(format!("{flag} does not apply to the {} suite", suite.name()))
}

/// The suite's default configuration with the config file and flags applied.
fn suite_config(args: &VerifyArgs, s: &Settings) -> Result<SuiteConfig, Failure> {
    let suite = args.suite;
    let file = &s.file;
    let budget = s.degree_budget;
    let pis = (!args.pi.is_empty()).then(|| args.pi.clone());
    let charges = args.charges.or(file.charge_range);
    let window = args.window.or(file.window);
    let reject = |set: bool, flag: &str| if set { Err(unused(flag, suite)) } else { Ok(()) };

    let mut config = SuiteConfig::default_for(suite);
    match &mut config {
        SuiteConfig::Reordering(c) => {
            reject(args.modes.is_some(), "--modes")?;
            reject(args.charges.is_some(), "--charges")?;
            reject(!args.lengths.is_empty(), "--lengths")?;
            reject(args.max_length.is_some(), "--max-length")?;
            reject(args.no_oracle, "--no-oracle")?;
            if let Some(p) = pis {
                c.pis = p;
            }
            if !args.case.is_empty() {
                c.cases = args.case.clone();
            }
            if let Some(d) = args.degree {
                c.test_degree = d;
            }
            if let Some(w) = window {
                c.i_range = w;
                c.j_range = w;
            }
            c.degree_budget = budget;
        }
        SuiteConfig::ZeroModes(c) => {
            reject(pis.is_some(), "--pi")?;
            reject(!args.case.is_empty(), "--case")?;
            reject(args.modes.is_some(), "--modes")?;
            reject(args.degree.is_some(), "--degree")?;
            reject(args.window.is_some(), "--window")?;
            reject(!args.lengths.is_empty(), "--lengths")?;
            reject(args.max_length.is_some(), "--max-length")?;
            reject(args.no_oracle, "--no-oracle")?;
            if let Some(r) = charges {
                c.charges = r;
            }
        }
        SuiteConfig::Clifford(c) => {
            reject(!args.case.is_empty(), "--case")?;
            reject(args.window.is_some(), "--window")?;
            reject(!args.lengths.is_empty(), "--lengths")?;
            reject(args.max_length.is_some(), "--max-length")?;
            reject(args.no_oracle, "--no-oracle")?;
            if let Some(p) = pis {
                c.pis = p;
            }
            if let Some(m) = args.modes.or(file.mode_range) {
                c.modes = m;
            }
            if let Some(r) = charges {
                c.charges = r;
            }
            if let Some(d) = args.degree {
                c.degree_bound = d;
            }
            c.degree_budget = budget;
        }
        SuiteConfig::Multivertex(c) => {
            reject(!args.case.is_empty(), "--case")?;
            reject(args.modes.is_some(), "--modes")?;
            reject(args.charges.is_some(), "--charges")?;
            reject(args.degree.is_some(), "--degree")?;
            reject(args.max_length.is_some(), "--max-length")?;
            reject(args.no_oracle, "--no-oracle")?;
            if let Some(p) = pis {
                c.pis = p;
            }
            if !args.lengths.is_empty() {
                c.lengths = args.lengths.clone();
            }
            if let Some(w) = window {
                c.window = w;
            }
            c.degree_budget = budget;
        }
        SuiteConfig::Theorem2(c) => {
            reject(!args.case.is_empty(), "--case")?;
            reject(args.modes.is_some(), "--modes")?;
            reject(args.charges.is_some(), "--charges")?;
            reject(args.window.is_some(), "--window")?;
            reject(!args.lengths.is_empty(), "--lengths")?;
            if let Some(p) = pis {
                c.pis = p;
            }
            if let Some(d) = args.degree {
                c.max_weight = d;
            }
            if let Some(l) = args.max_length {
                c.max_length = l;
            }
            if args.no_oracle {
                c.oracle = false;
            }
            c.degree_budget = budget;
        }
        SuiteConfig::InverseSeries(c) => {
            reject(pis.is_some(), "--pi")?;
            reject(!args.case.is_empty(), "--case")?;
            reject(args.modes.is_some(), "--modes")?;
            reject(args.charges.is_some(), "--charges")?;
            reject(!args.lengths.is_empty(), "--lengths")?;
            reject(args.max_length.is_some(), "--max-length")?;
            reject(args.no_oracle, "--no-oracle")?;
            if let Some(d) = args.degree {
                c.test_degree = d;
            }
            if let Some(w) = window {
                c.diagonal_window = w;
            }
            c.degree_budget = budget;
        }
    }
    Ok(config)
}
