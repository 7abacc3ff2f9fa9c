//! Command-line front end.
//!
//! Subcommands: `analyze`, `phi-curve`, `simulate`, `estimate`, `sweep`.
//! Machine-readable payloads go to stdout (pretty JSON or CSV); `--out DIR`
//! additionally writes the data files plus a run manifest. Exit codes:
//! 0 success, 1 usage or domain error, 2 hypothesis (H) failure,
//! 3 estimation failure (front died, sweep did not converge, blow-up).
//!
//! Determinism contract: identical invocations produce byte-identical
//! stdout payloads and data files; only the manifest's wall time varies.
//! JSON numbers carry 6 significant digits; CSV numbers use full-precision
//! shortest round-trip formatting.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::asymptotics::{
    limiting_speed_path, verify_speed_continuity, ContinuityReport, ParametrizedTemplate,
    PathReport, TemplateSequence,
};
use crate::dispersion::{Direction, DispersionCurve, Template};
use crate::error::{Error, Result};
use crate::front::{estimate_speed, FrontTrace};
use crate::sim::{simulate, SimConfig};
use crate::speed::{analyze, MinimizerKind, SignClass, SpeedReport, DEFAULT_TOL, ZERO_BAND};

#[derive(Parser)]
#[command(
    name = "cnn-spread",
    version,
    about = "Spreading speeds of one-dimensional CNN lattices: formula, simulation, and sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve both directional speeds of a template and classify their signs
    Analyze(AnalyzeArgs),
    /// Tabulate the wave-speed candidate curve Phi(mu) = h(mu)/mu
    PhiCurve(PhiCurveArgs),
    /// Integrate the lattice from a plateau and export snapshots
    Simulate(SimulateArgs),
    /// Compare front-regression speeds against the formula speeds
    Estimate(EstimateArgs),
    /// Run a continuity (sequence) or limiting-case (limit) sweep
    Sweep(SweepArgs),
}

#[derive(Args, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct AnalyzeArgs {
    /// Left-neighbor coupling weight
    #[arg(long)]
    alpha: f64,
    /// Self coupling weight
    #[arg(long)]
    a: f64,
    /// Right-neighbor coupling weight
    #[arg(long)]
    beta: f64,
    /// Minimizer solve tolerance
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Directory for report.json and the run manifest
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON file whose keys override the flags above
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct PhiCurveArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    a: f64,
    #[arg(long)]
    beta: f64,
    /// Which directional curve to tabulate
    #[arg(long, value_enum, default_value_t = Direction::Rightward)]
    direction: Direction,
    /// Lower end of the mu grid (must be positive)
    #[arg(long, default_value_t = 0.01)]
    mu_min: f64,
    /// Upper end of the mu grid
    #[arg(long, default_value_t = 5.0)]
    mu_max: f64,
    /// Number of grid points (at least 2)
    #[arg(long, default_value_t = 500)]
    steps: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct SimulateArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    a: f64,
    #[arg(long)]
    beta: f64,
    /// RK4 time step, at most 0.1
    #[arg(long, default_value_t = 0.01)]
    dt: f64,
    /// Simulated horizon
    #[arg(long, default_value_t = 60.0)]
    t_end: f64,
    /// Window half-width L; omitted means auto-sized from the propagation
    /// bound
    #[arg(long)]
    half_width: Option<i64>,
    /// Initial plateau half-width (defaults to 5)
    #[arg(long)]
    init_half_width: Option<i64>,
    /// Initial plateau level in (0, K] (defaults to K)
    #[arg(long)]
    init_level: Option<f64>,
    /// Steps between stored snapshots (defaults to one per time unit)
    #[arg(long)]
    snapshot_stride: Option<usize>,
    /// Output directory (required: snapshots go to files, not stdout)
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct EstimateArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    a: f64,
    #[arg(long)]
    beta: f64,
    #[arg(long, default_value_t = 0.01)]
    dt: f64,
    #[arg(long, default_value_t = 60.0)]
    t_end: f64,
    #[arg(long)]
    half_width: Option<i64>,
    /// Initial plateau half-width; defaults to 5, raised to 20 when the
    /// solver predicts a retreating front
    #[arg(long)]
    init_half_width: Option<i64>,
    #[arg(long)]
    init_level: Option<f64>,
    #[arg(long)]
    snapshot_stride: Option<usize>,
    /// Front threshold in (0, K) (defaults to K/2)
    #[arg(long)]
    threshold: Option<f64>,
    /// Trailing fraction of the run used for the regression
    #[arg(long, default_value_t = 0.5)]
    fit_fraction: f64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum SweepMode {
    /// Explicit template sequence with a declared limit
    Sequence,
    /// Special model [alpha, a, beta + s] descending to the degenerate
    /// surface
    Limit,
}

#[derive(Args, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct SweepArgs {
    #[arg(long, value_enum)]
    mode: SweepMode,
    /// JSON sweep specification (see docs/formats.md)
    #[arg(long)]
    spec: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

fn default_sequence_eps() -> f64 {
    1e-3
}

fn default_tail_tol() -> f64 {
    1e-3
}

#[derive(Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct SequenceSpec {
    entries: Vec<Template>,
    limit: Template,
    /// Convergence tolerance on the final entry's speed errors
    #[serde(default = "default_sequence_eps")]
    eps: f64,
    /// Declared componentwise distance of the last entry from the limit
    #[serde(default = "default_tail_tol")]
    tail_tol: f64,
}

fn default_limit_eps() -> f64 {
    0.05
}

fn default_s_values() -> Vec<f64> {
    vec![1e-1, 1e-2, 1e-3, 1e-4, 1e-5]
}

fn default_s0() -> f64 {
    1.0
}

#[derive(Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct LimitSpec {
    base: Template,
    #[serde(default = "default_s_values")]
    s_values: Vec<f64>,
    /// Convergence tolerance on the final gap to the limiting speed
    #[serde(default = "default_limit_eps")]
    eps: f64,
    #[serde(default = "default_s0")]
    s0: f64,
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap reserves exit 2 for usage errors, which this contract
            // assigns to hypothesis failures; remap to 1
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            let object = serde_json::json!({
                "error": { "kind": error_kind(&err), "message": err.to_string() }
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&object).expect("error object serializes")
            );
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::Domain(_) => "domain",
        Error::Hypothesis { .. } => "hypothesis",
        Error::Overflow { .. } => "overflow",
        Error::Config(_) => "config",
        Error::InsufficientData(_) => "insufficient-data",
        Error::Inconsistency(_) => "inconsistency",
        Error::Blowup { .. } => "blowup",
        Error::Io(_) => "io",
        Error::Json(_) => "json",
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Hypothesis { .. } => 2,
        Error::InsufficientData(_) | Error::Blowup { .. } => 3,
        _ => 1,
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(apply_config(args)?),
        Command::PhiCurve(args) => cmd_phi_curve(apply_config(args)?),
        Command::Simulate(args) => cmd_simulate(apply_config(args)?),
        Command::Estimate(args) => cmd_estimate(apply_config(args)?),
        Command::Sweep(args) => cmd_sweep(apply_config(args)?),
    }
}

trait HasConfig {
    fn config_path(&self) -> Option<&Path>;
}

macro_rules! has_config {
    ($($ty:ty),*) => {
        $(impl HasConfig for $ty {
            fn config_path(&self) -> Option<&Path> {
                self.config.as_deref()
            }
        })*
    };
}

has_config!(
    AnalyzeArgs,
    PhiCurveArgs,
    SimulateArgs,
    EstimateArgs,
    SweepArgs
);

/// Overlays `--config` file keys onto the parsed flags (file wins), then
/// re-validates through the same deserializer, so unknown or ill-typed keys
/// fail as usage errors.
fn apply_config<T: Serialize + DeserializeOwned + HasConfig>(args: T) -> Result<T> {
    let Some(path) = args.config_path().map(Path::to_path_buf) else {
        return Ok(args);
    };
    let text = std::fs::read_to_string(&path)?;
    let overrides: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    let serde_json::Value::Object(overrides) = overrides else {
        return Err(Error::Config(format!(
            "{}: config must be a JSON object",
            path.display()
        )));
    };
    let mut merged = serde_json::to_value(&args)?;
    let object = merged
        .as_object_mut()
        .expect("flags serialize to an object");
    for (key, value) in overrides {
        object.insert(key, value);
    }
    serde_json::from_value(merged).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

/// Rounds to 6 significant digits through decimal scientific notation, the
/// JSON number-formatting rule.
fn round_sig(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    format!("{x:.5e}")
        .parse()
        .expect("scientific notation parses back")
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum MuStarJson {
    Finite(f64),
    AtInfinity(&'static str),
}

impl MuStarJson {
    fn from_kind(kind: MinimizerKind) -> Self {
        match kind {
            MinimizerKind::Interior { mu_star } => MuStarJson::Finite(round_sig(mu_star)),
            MinimizerKind::AtInfinity => MuStarJson::AtInfinity("infinity"),
        }
    }
}

#[derive(Debug, Serialize)]
struct AnalyzeOutput {
    template: Template,
    c_plus: f64,
    c_minus: f64,
    mu_star_plus: MuStarJson,
    mu_star_minus: MuStarJson,
    sign_plus: SignClass,
    sign_minus: SignClass,
    hypothesis_h: bool,
}

impl AnalyzeOutput {
    fn from_report(report: &SpeedReport) -> Result<Self> {
        let speeds = report
            .speeds
            .ok_or_else(|| hypothesis_failure(&report.template))?;
        Ok(AnalyzeOutput {
            template: report.template,
            c_plus: round_sig(speeds.plus.speed),
            c_minus: round_sig(speeds.minus.speed),
            mu_star_plus: MuStarJson::from_kind(speeds.plus.minimizer.kind),
            mu_star_minus: MuStarJson::from_kind(speeds.minus.minimizer.kind),
            sign_plus: speeds.plus.sign,
            sign_minus: speeds.minus.sign,
            hypothesis_h: report.h_flag,
        })
    }
}

fn hypothesis_failure(template: &Template) -> Error {
    Error::Hypothesis {
        alpha: template.alpha(),
        a: template.a(),
        beta: template.beta(),
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<i32> {
    let started = Instant::now();
    let template = Template::new(args.alpha, args.a, args.beta)?;
    let report = analyze(&template, args.tol)?;
    let output = AnalyzeOutput::from_report(&report)?;
    let payload = to_pretty_json(&output)?;
    print!("{payload}");
    if let Some(dir) = &args.out {
        let mut writer = OutputWriter::new(dir)?;
        writer.write("report.json", &payload)?;
        writer.manifest("analyze", parameters(&args)?, started)?;
    }
    Ok(0)
}

fn cmd_phi_curve(args: PhiCurveArgs) -> Result<i32> {
    let started = Instant::now();
    let template = Template::new(args.alpha, args.a, args.beta)?;
    if !(args.mu_min > 0.0 && args.mu_min < args.mu_max && args.mu_max.is_finite()) {
        return Err(Error::Domain(format!(
            "mu grid needs 0 < mu-min < mu-max, got [{}, {}]",
            args.mu_min, args.mu_max
        )));
    }
    if args.steps < 2 {
        return Err(Error::Domain(format!(
            "mu grid needs at least 2 steps, got {}",
            args.steps
        )));
    }
    let curve = DispersionCurve::new(template, args.direction);
    let mut csv = String::from("mu,phi\n");
    let span = args.mu_max - args.mu_min;
    for i in 0..args.steps {
        let mu = args.mu_min + span * i as f64 / (args.steps - 1) as f64;
        let phi = curve.phi(mu)?;
        csv.push_str(&format!("{mu},{phi}\n"));
    }
    print!("{csv}");
    if let Some(dir) = &args.out {
        let mut writer = OutputWriter::new(dir)?;
        writer.write("phi_curve.csv", &csv)?;
        writer.manifest("phi-curve", parameters(&args)?, started)?;
    }
    Ok(0)
}

struct SimFlags {
    dt: f64,
    t_end: f64,
    half_width: Option<i64>,
    init_half_width: Option<i64>,
    init_level: Option<f64>,
    snapshot_stride: Option<usize>,
}

fn build_sim_config(template: Template, flags: &SimFlags, default_w0: i64) -> Result<SimConfig> {
    let mut builder = SimConfig::builder(template)
        .dt(flags.dt)
        .t_end(flags.t_end)
        .init_half_width(flags.init_half_width.unwrap_or(default_w0));
    if let Some(l) = flags.half_width {
        builder = builder.half_width(l);
    }
    if let Some(level) = flags.init_level {
        builder = builder.init_level(level);
    }
    if let Some(stride) = flags.snapshot_stride {
        builder = builder.snapshot_stride(stride);
    }
    builder.build()
}

fn cmd_simulate(args: SimulateArgs) -> Result<i32> {
    let started = Instant::now();
    let template = Template::new(args.alpha, args.a, args.beta)?;
    let Some(dir) = args.out.clone() else {
        return Err(Error::Config(
            "simulate writes snapshot files and needs --out DIR".into(),
        ));
    };
    let flags = SimFlags {
        dt: args.dt,
        t_end: args.t_end,
        half_width: args.half_width,
        init_half_width: args.init_half_width,
        init_level: args.init_level,
        snapshot_stride: args.snapshot_stride,
    };
    let config = build_sim_config(template, &flags, 5)?;
    let snapshots = simulate(&config)?;

    let mut csv = String::from("t,i,x\n");
    for snap in &snapshots {
        let t = snap.time();
        for (i, x) in snap.sites() {
            csv.push_str(&format!("{t},{i},{x}\n"));
        }
    }
    let mut writer = OutputWriter::new(&dir)?;
    writer.write("snapshots.csv", &csv)?;
    writer.manifest("simulate", parameters(&args)?, started)?;
    Ok(0)
}

#[derive(Serialize)]
struct EstimateOutput {
    c_plus_sim: f64,
    c_minus_sim: f64,
    c_plus_formula: f64,
    c_minus_formula: f64,
    abs_gap_plus: f64,
    abs_gap_minus: f64,
}

fn front_trace_csv(trace: &FrontTrace) -> String {
    let mut csv = String::from("t,position\n");
    for (t, p) in &trace.samples {
        csv.push_str(&format!("{t},{p}\n"));
    }
    csv.push_str(&format!(
        "# fitted_speed={} residual={}\n",
        trace.fitted_speed, trace.fit_residual
    ));
    csv
}

fn cmd_estimate(args: EstimateArgs) -> Result<i32> {
    let started = Instant::now();
    let template = Template::new(args.alpha, args.a, args.beta)?;
    let report = analyze(&template, args.tol)?;
    let Some(speeds) = report.speeds else {
        return Err(hypothesis_failure(&template));
    };
    let (c_plus, c_minus) = (speeds.plus.speed, speeds.minus.speed);

    // a retreating level set eats into the plateau; keep enough of it alive
    // through the fit window
    let default_w0 = if c_plus < -ZERO_BAND || c_minus < -ZERO_BAND {
        20
    } else {
        5
    };
    let flags = SimFlags {
        dt: args.dt,
        t_end: args.t_end,
        half_width: args.half_width,
        init_half_width: args.init_half_width,
        init_level: args.init_level,
        snapshot_stride: args.snapshot_stride,
    };
    let config = build_sim_config(template, &flags, default_w0)?;

    let k = template.k();
    let threshold = args.threshold.unwrap_or(k / 2.0);
    if !(threshold > 0.0 && threshold < k) {
        return Err(Error::Domain(format!(
            "threshold must lie in (0, K) = (0, {k}), got {threshold}"
        )));
    }

    let snapshots = simulate(&config)?;
    let plus = estimate_speed(
        &snapshots,
        Direction::Rightward,
        threshold,
        args.fit_fraction,
    )?;
    let minus = estimate_speed(
        &snapshots,
        Direction::Leftward,
        threshold,
        args.fit_fraction,
    )?;

    let output = EstimateOutput {
        c_plus_sim: round_sig(plus.fitted_speed),
        c_minus_sim: round_sig(minus.fitted_speed),
        c_plus_formula: round_sig(c_plus),
        c_minus_formula: round_sig(c_minus),
        abs_gap_plus: round_sig((plus.fitted_speed - c_plus).abs()),
        abs_gap_minus: round_sig((minus.fitted_speed - c_minus).abs()),
    };
    let payload = to_pretty_json(&output)?;
    print!("{payload}");
    if let Some(dir) = &args.out {
        let mut writer = OutputWriter::new(dir)?;
        writer.write("estimate.json", &payload)?;
        writer.write("front_plus.csv", &front_trace_csv(&plus))?;
        writer.write("front_minus.csv", &front_trace_csv(&minus))?;
        writer.manifest("estimate", parameters(&args)?, started)?;
    }
    Ok(0)
}

const SWEEP_HEADER: &str =
    "n_or_s,c_plus,c_minus,mu_star_plus,mu_star_minus,abs_error_plus,abs_error_minus\n";

fn mu_star_csv(mu: Option<f64>) -> String {
    match mu {
        Some(value) => format!("{value}"),
        None => "infinity".into(),
    }
}

fn sequence_csv(report: &ContinuityReport) -> String {
    let mut csv = String::from(SWEEP_HEADER);
    for row in &report.rows {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.n,
            row.c_plus,
            row.c_minus,
            mu_star_csv(row.mu_star_plus),
            mu_star_csv(row.mu_star_minus),
            row.abs_error_plus,
            row.abs_error_minus
        ));
    }
    csv
}

fn limit_csv(plus: &PathReport, minus: &PathReport) -> String {
    let mut csv = String::from(SWEEP_HEADER);
    for (p, m) in plus.points.iter().zip(&minus.points) {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            p.s,
            p.speed,
            m.speed,
            mu_star_csv(p.minimizer.mu_star()),
            mu_star_csv(m.minimizer.mu_star()),
            (p.speed - plus.limit_speed).abs(),
            (m.speed - minus.limit_speed).abs()
        ));
    }
    csv
}

fn parse_spec<T: DeserializeOwned>(text: &str, path: &Path) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

fn cmd_sweep(args: SweepArgs) -> Result<i32> {
    let started = Instant::now();
    let text = std::fs::read_to_string(&args.spec)?;
    let (csv, converged) = match args.mode {
        SweepMode::Sequence => {
            let spec: SequenceSpec = parse_spec(&text, &args.spec)?;
            let sequence = TemplateSequence::new(spec.entries, spec.limit, spec.tail_tol)?;
            let report = verify_speed_continuity(&sequence, spec.eps)?;
            (sequence_csv(&report), report.converged)
        }
        SweepMode::Limit => {
            let spec: LimitSpec = parse_spec(&text, &args.spec)?;
            let family = ParametrizedTemplate::special(spec.base, spec.s0)?;
            let plus = limiting_speed_path(&family, &spec.s_values, Direction::Rightward)?;
            let minus = limiting_speed_path(&family, &spec.s_values, Direction::Leftward)?;
            let converged = plus.final_gap <= spec.eps && minus.final_gap <= spec.eps;
            (limit_csv(&plus, &minus), converged)
        }
    };
    print!("{csv}");
    if let Some(dir) = &args.out {
        let mut writer = OutputWriter::new(dir)?;
        writer.write("sweep.csv", &csv)?;
        writer.manifest("sweep", parameters(&args)?, started)?;
    }
    Ok(if converged { 0 } else { 3 })
}

fn to_pretty_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// Flags of the merged invocation as a sorted map, minus the plumbing keys.
fn parameters<T: Serialize>(args: &T) -> Result<BTreeMap<String, serde_json::Value>> {
    let value = serde_json::to_value(args)?;
    let serde_json::Value::Object(object) = value else {
        unreachable!("flags serialize to an object");
    };
    Ok(object
        .into_iter()
        .filter(|(key, _)| key != "out" && key != "config")
        .collect())
}

#[derive(Serialize)]
struct RunManifest {
    command: String,
    parameters: BTreeMap<String, serde_json::Value>,
    output_paths: Vec<String>,
    tool_version: String,
    wall_time_seconds: f64,
}

struct OutputWriter {
    dir: PathBuf,
    written: Vec<String>,
}

impl OutputWriter {
    fn new(dir: &Path) -> Result<Self> {
        std::fs::create_dir_all(dir)?;
        Ok(Self {
            dir: dir.to_path_buf(),
            written: Vec::new(),
        })
    }

    fn write(&mut self, name: &str, contents: &str) -> Result<()> {
        std::fs::write(self.dir.join(name), contents)?;
        self.written.push(name.to_string());
        Ok(())
    }

    fn manifest(
        &mut self,
        command: &str,
        parameters: BTreeMap<String, serde_json::Value>,
        started: Instant,
    ) -> Result<()> {
        let manifest = RunManifest {
            command: command.to_string(),
            parameters,
            output_paths: self.written.clone(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            wall_time_seconds: started.elapsed().as_secs_f64(),
        };
        let payload = to_pretty_json(&manifest)?;
        std::fs::write(self.dir.join("manifest.json"), payload)?;
        Ok(())
    }
}
