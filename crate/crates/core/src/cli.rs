//! Command-line front end.
//!
//! JSON on stdout is the machine interface. Every JSON document carries the
//! effective configuration (seed included) and a `timing` object, which is
//! the only part that varies between identical runs.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::BoundQuery;
use crate::coloring::{build_coloring, ColorKey};
use crate::combinatorics::binomial;
use crate::error::Error;
use crate::finder::{self, FindRequest, Mode, OracleLimits, Variant};
use crate::generators::GenSpec;
use crate::geometry::{parse_point_set, write_point_set, PointSet};
use crate::parallel;
use crate::rainbow::DEFAULT_MAX_RETRIES;
use crate::rational::Rational;

pub const DEFAULT_BUDGET_EDGES: u64 = 50_000_000;

#[derive(Debug, Parser)]
#[command(name = "distvol", version, about = "Distinct-volume subsets of exact rational point sets")]
pub struct Cli {
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Human-readable rendering instead of compact JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Refuse inputs with more than this many a-subsets.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET_EDGES)]
    pub budget_edges: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a point set.
    Gen(GenArgs),
    /// Dump the volume coloring.
    Color(ColorArgs),
    /// Exact goodness of the coloring.
    Goodness(GoodnessArgs),
    /// Search for a distinct-volume subset.
    Find(FindArgs),
    /// Check a subset exhaustively.
    Verify(VerifyArgs),
    /// Exhaustive maximum (small inputs only).
    Oracle(OracleArgs),
    /// Evaluate a closed-form bound.
    Bounds(BoundsArgs),
    /// Run a benchmark suite and print a CSV table.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    Locus,
    Fixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    H,
    Hprime,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::H => Variant::H,
            VariantArg::Hprime => Variant::HPrime,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Grid,
    Random,
    ParallelLines,
    Sphere2d,
    Collinear,
    CocircularNoise,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Number of points (grid: use --side).
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub side: usize,
    /// Integer coordinate range for `random`.
    #[arg(long, default_value_t = 1000)]
    pub bound: u64,
    /// Common denominator for `random` (default bound^2).
    #[arg(long)]
    pub denominator: Option<u64>,
    #[arg(long, default_value_t = 30)]
    pub n_circle: usize,
    #[arg(long, default_value_t = 0)]
    pub n_noise: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Point-set input: a path, or stdin when absent or `-`.
#[derive(Debug, Args)]
pub struct Input {
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[arg(long)]
    pub a: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub input: Input,
}

#[derive(Debug, Args)]
pub struct GoodnessArgs {
    #[arg(long)]
    pub a: usize,
    /// Stop at the first class larger than this.
    #[arg(long)]
    pub cap: Option<usize>,
    #[command(flatten)]
    pub input: Input,
}

#[derive(Debug, Args)]
pub struct FindArgs {
    #[arg(long)]
    pub a: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value_t = VariantArg::H)]
    pub variant: VariantArg,
    /// Target size override.
    #[arg(long)]
    pub t: Option<usize>,
    /// Goodness budget (locus: per level, default derived from n; fixed: required).
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_RETRIES)]
    pub max_retries: usize,
    /// Recursion depth cap (default: dimension).
    #[arg(long)]
    pub depth: Option<usize>,
    /// Greedily grow rainbow results.
    #[arg(long)]
    pub augment: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub input: Input,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Edge size; taken from `--result` when omitted.
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
    /// Comma-separated ids.
    #[arg(long, value_delimiter = ',', conflicts_with = "result")]
    pub subset: Option<Vec<usize>>,
    /// JSON document written by `find`.
    #[arg(long)]
    pub result: Option<PathBuf>,
    #[command(flatten)]
    pub input: Input,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub a: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::H)]
    pub variant: VariantArg,
    #[command(flatten)]
    pub input: Input,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(subcommand)]
    pub which: Bound,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Bound {
    /// 4 m t^(2k-1)
    G {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        t: u64,
    },
    /// Largest t with 4 m t^(2k-1) <= n
    LargestT {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        m: u64,
    },
    /// Upper bound on same-colored edge pairs sharing s vertices
    AsUpper {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
    },
    /// 4 m t^(2k) / n
    ExpectedConflicts {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        t: u64,
    },
    /// floor(n^(1/(2d+2))) / 2
    SimplexSubset {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: BigUint,
    },
    /// 8 t^(2d+2)
    SimplexThreshold {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        t: u64,
    },
    /// floor(c n^(1/((2a-1)d)))
    GeneralSubset {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: BigUint,
        #[arg(long)]
        c: Rational,
    },
    /// Threshold recurrence with explicit constants
    GeneralRecurrence {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        j: u64,
        #[arg(long)]
        base: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    #[value(name = "grids-2d")]
    Grids2d,
    #[value(name = "random-2d")]
    Random2d,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Maximum number of instances to run.
    #[arg(long)]
    pub budget: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Terminal states other than success.
enum Exit {
    Usage(String),
    /// Output was produced but reports a failed search or check.
    Failed(String),
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        match e {
            Error::Extraction(_) | Error::NotGeneralPosition { .. } => Exit::Failed(e.to_string()),
            other => Exit::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Exit {
    fn from(e: std::io::Error) -> Self {
        Exit::Usage(e.to_string())
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    pretty: bool,
    budget_edges: u64,
}

impl Io<'_> {
    fn points(&mut self, input: &Input) -> Result<PointSet, Exit> {
        let text = match &input.input {
            Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
                .map_err(|e| Exit::Usage(format!("{}: {e}", p.display())))?,
            _ => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s)?;
                s
            }
        };
        Ok(parse_point_set(&text)?)
    }

    fn guard(&self, n: usize, a: usize) -> Result<(), Exit> {
        let edges = binomial(n as u64, a as u64);
        if edges > self.budget_edges {
            return Err(Exit::Usage(format!(
                "C({n}, {a}) = {edges} edges exceeds --budget-edges {}",
                self.budget_edges
            )));
        }
        Ok(())
    }

    fn emit(&mut self, doc: &Value) -> Result<(), Exit> {
        if self.pretty {
            self.stdout.write_all(render_pretty(doc).as_bytes())?;
        } else {
            serde_json::to_writer(&mut *self.stdout, doc).map_err(|e| Exit::Usage(e.to_string()))?;
            self.stdout.write_all(b"\n")?;
        }
        Ok(())
    }
}

/// One `key  value` line per top-level field.
fn render_pretty(doc: &Value) -> String {
    let Value::Object(map) = doc else {
        return format!("{doc}\n");
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in map {
        let v = match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}

fn timing(start: Instant) -> Value {
    json!({ "wall_ms": start.elapsed().as_secs_f64() * 1e3 })
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn csv_error(e: csv::Error) -> Exit {
    Exit::Usage(e.to_string())
}

/// Parse `args` (program name first) and run the command. Returns the exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        pretty: cli.pretty,
        budget_edges: cli.budget_edges,
    };
    if let Some(n) = cli.threads {
        parallel::init_global_threads(n);
    }
    let result = dispatch(cli.command, &mut io);
    match result {
        Ok(()) => 0,
        Err(Exit::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Exit::Failed(msg)) => {
            let _ = writeln!(stderr, "failure: {msg}");
            1
        }
    }
}

/// Process entry point for the binary.
pub fn main_entry() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(std::env::args_os(), &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    code
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<(), Exit> {
    match command {
        Command::Gen(args) => gen(args, io),
        Command::Color(args) => color(args, io),
        Command::Goodness(args) => goodness(args, io),
        Command::Find(args) => find(args, io),
        Command::Verify(args) => verify(args, io),
        Command::Oracle(args) => oracle(args, io),
        Command::Bounds(args) => bounds(args, io),
        Command::Bench(args) => bench(args, io),
    }
}

fn gen(args: GenArgs, io: &mut Io<'_>) -> Result<(), Exit> {
    let spec = match args.kind {
        GenKind::Grid => GenSpec::Grid { d: args.d, side: args.side },
        GenKind::Random => GenSpec::Random {
            d: args.d,
            n: args.n,
            bound: args.bound,
            seed: args.seed,
            denominator: args.denominator,
        },
        GenKind::ParallelLines => GenSpec::ParallelLines { d: args.d, n: args.n },
        GenKind::Sphere2d => GenSpec::Sphere2d { n: args.n },
        GenKind::Collinear => GenSpec::Collinear { d: args.d, n: args.n },
        GenKind::CocircularNoise => GenSpec::CocircularPlusNoise {
            n_circle: args.n_circle,
            n_noise: args.n_noise,
            seed: args.seed,
        },
    };
    let points = spec.generate()?;
    io.stdout.write_all(write_point_set(&points).as_bytes())?;
    Ok(())
}

fn color(args: ColorArgs, io: &mut Io<'_>) -> Result<(), Exit> {
    let points = io.points(&args.input)?;
    io.guard(points.len(), args.a)?;
    let start = Instant::now();
    let coloring = build_coloring(&points, args.a)?;
    match args.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *io.stdout);
            w.write_record(["edge", "kind", "squared_volume"]).map_err(csv_error)?;
            for (edge, key) in coloring.edges() {
                let ids = edge.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                let (kind, vol) = match &key {
                    ColorKey::Volume { value } => ("volume", value.to_string()),
                    ColorKey::ZeroUnique { .. } => ("zero", "0".to_string()),
                };
                w.write_record([ids.as_str(), kind, vol.as_str()]).map_err(csv_error)?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Json => {
            let edges: Vec<Value> = coloring
                .edges()
                .map(|(edge, key)| json!({ "edge": edge, "color": to_value(&key) }))
                .collect();
            let doc = json!({
                "command": "color",
                "config": { "a": args.a },
                "n": points.len(),
                "d": points.dim(),
                "num_edges": coloring.num_edges(),
                "palette": to_value(&coloring.palette()),
                "class_sizes": coloring.class_sizes(),
                "zero_edges": coloring.zero_edges(),
                "edges": edges,
                "timing": timing(start),
            });
            io.emit(&doc)
        }
    }
}

fn goodness(args: GoodnessArgs, io: &mut Io<'_>) -> Result<(), Exit> {
    let points = io.points(&args.input)?;
    io.guard(points.len(), args.a)?;
    let start = Instant::now();
    let coloring = build_coloring(&points, args.a)?;
    let report = coloring.goodness(args.cap);
    let doc = json!({
        "command": "goodness",
        "config": { "a": args.a, "cap": args.cap },
        "n": points.len(),
        "num_edges": coloring.num_edges(),
        "distinct_colors": coloring.palette_len(),
        "observed_m": report.observed_m,
        "report": to_value(&report),
        "timing": timing(start),
    });
    io.emit(&doc)
}

fn find(args: FindArgs, io: &mut Io<'_>) -> Result<(), Exit> {
    let points = io.points(&args.input)?;
    io.guard(points.len(), args.a)?;
    let mode = match args.mode {
        ModeArg::Auto => Mode::Auto,
        ModeArg::Locus => Mode::Locus { m: args.m },
        ModeArg::Fixed => Mode::FixedM {
            m: args.m.ok_or_else(|| Exit::Usage("--mode fixed requires --m".into()))?,
        },
    };
    let req = FindRequest {
        a: args.a,
        mode,
        variant: args.variant.into(),
        seed: args.seed,
        t_override: args.t,
        max_retries: args.max_retries,
        recursion_depth_cap: args.depth,
        augment: args.augment,
    };
    let config = json!({
        "a": req.a,
        "mode": to_value(&req.mode),
        "variant": to_value(&req.variant),
        "seed": req.seed,
        "t": req.t_override,
        "max_retries": req.max_retries,
        "depth": req.recursion_depth_cap,
        "augment": req.augment,
    });
    let start = Instant::now();
    match finder::find_subset(&points, &req) {
        Ok(result) => match args.format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *io.stdout);
                w.write_record(["id"]).map_err(csv_error)?;
                for id in &result.subset {
                    w.write_record([id.to_string()]).map_err(csv_error)?;
                }
                w.flush()?;
                Ok(())
            }
            Format::Json => io.emit(&json!({
                "command": "find",
                "config": config,
                "result": to_value(&result),
                "timing": timing(start),
            })),
        },
        Err(Error::Extraction(failure)) => {
            io.emit(&json!({
                "command": "find",
                "config": config,
                "failure": to_value(&*failure),
                "timing": timing(start),
            }))?;
            Err(Exit::Failed(format!(
                "no rainbow sample within {} attempts",
                failure.samples_tried
            )))
        }
        Err(Error::NotGeneralPosition { a, witness }) => {
            io.emit(&json!({
                "command": "find",
                "config": config,
                "rejected": { "reason": "not_general_position", "a": a, "witness": witness },
                "timing": timing(start),
            }))?;
            Err(Exit::Failed(format!("ids {witness:?} are degenerate")))
        }
        Err(e) => Err(e.into()),
    }
}

fn verify(args: VerifyArgs, io: &mut Io<'_>) -> Result<(), Exit> {
    let (mut a, mut variant, mut subset) = (args.a, args.variant.map(Variant::from), args.subset);
    if let Some(path) = &args.result {
        let text = std::fs::read_to_string(path).map_err(|e| Exit::Usage(format!("{}: {e}", path.display())))?;
        let doc: Value = serde_json::from_str(&text).map_err(|e| Exit::Usage(format!("{}: {e}", path.display())))?;
        let ids = doc
            .pointer("/result/subset")
            .and_then(Value::as_array)
            .ok_or_else(|| Exit::Usage("result document has no result.subset".into()))?;
        subset = Some(
            ids.iter()
                .map(|v| v.as_u64().map(|x| x as usize))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Exit::Usage("result.subset must hold ids".into()))?,
        );
        if a.is_none() {
            a = doc.pointer("/config/a").and_then(Value::as_u64).map(|x| x as usize);
        }
        if variant.is_none() {
            variant = match doc.pointer("/config/variant").and_then(Value::as_str) {
                Some("h_prime") => Some(Variant::HPrime),
                Some(_) => Some(Variant::H),
                None => None,
            };
        }
    }
    let a = a.ok_or_else(|| Exit::Usage("--a is required".into()))?;
    let subset = subset.ok_or_else(|| Exit::Usage("one of --subset or --result is required".into()))?;
    let variant = variant.unwrap_or(Variant::H);
    let points = io.points(&args.input)?;
    io.guard(subset.len(), a)?;
    let start = Instant::now();
    let report = finder::verify_subset(&points, &subset, a, variant)?;
    let valid = report.valid;
    io.emit(&json!({
        "command": "verify",
        "config": { "a": a, "variant": to_value(&variant) },
        "subset": subset,
        "report": to_value(&report),
        "timing": timing(start),
    }))?;
    if valid {
        Ok(())
    } else {
        Err(Exit::Failed("subset is not valid".into()))
    }
}

fn oracle(args: OracleArgs, io: &mut Io<'_>) -> Result<(), Exit> {
    let points = io.points(&args.input)?;
    let start = Instant::now();
    let variant = Variant::from(args.variant);
    let best = finder::brute_force_max(&points, args.a, variant, OracleLimits::default())?;
    io.emit(&json!({
        "command": "oracle",
        "config": { "a": args.a, "variant": to_value(&variant) },
        "n": points.len(),
        "size": best.len(),
        "subset": best,
        "timing": timing(start),
    }))
}

fn bounds(args: BoundsArgs, io: &mut Io<'_>) -> Result<(), Exit> {
    let (name, query, params) = match args.which {
        Bound::G { k, m, t } => ("g_upper", BoundQuery::GUpper { k, m, t }, json!({ "k": k, "m": m, "t": t })),
        Bound::LargestT { n, k, m } => (
            "largest_t",
            BoundQuery::LargestT { n, k, m },
            json!({ "n": n, "k": k, "m": m }),
        ),
        Bound::AsUpper { k, m, n, s } => (
            "as_upper",
            BoundQuery::AsUpper { k, m, n, s },
            json!({ "k": k, "m": m, "n": n, "s": s }),
        ),
        Bound::ExpectedConflicts { n, k, m, t } => (
            "expected_conflict_bound",
            BoundQuery::ExpectedConflicts { n, k, m, t },
            json!({ "n": n, "k": k, "m": m, "t": t }),
        ),
        Bound::SimplexSubset { d, n } => {
            let params = json!({ "d": d, "n": n.to_string() });
            ("simplex_subset_lower", BoundQuery::SimplexSubsetLower { d, n }, params)
        }
        Bound::SimplexThreshold { d, t } => (
            "simplex_threshold_upper",
            BoundQuery::SimplexThresholdUpper { d, t },
            json!({ "d": d, "t": t }),
        ),
        Bound::GeneralSubset { a, d, n, c } => {
            let params = json!({ "a": a, "d": d, "n": n.to_string(), "c": c.to_string() });
            ("general_subset_lower", BoundQuery::GeneralSubsetLower { a, d, n, c }, params)
        }
        Bound::GeneralRecurrence { a, d, t, j, base } => (
            "general_threshold_recurrence",
            BoundQuery::GeneralThresholdRecurrence { a, d, t, j, base },
            json!({ "a": a, "d": d, "t": t, "j": j, "base": base }),
        ),
    };
    let value = query.evaluate()?;
    match args.format {
        Format::Csv => {
            writeln!(io.stdout, "{value}")?;
            Ok(())
        }
        Format::Json => io.emit(&json!({
            "command": "bounds",
            "bound": name,
            "params": params,
            "value": value.to_string(),
        })),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub a: usize,
    pub d: usize,
    pub observed_m: usize,
    pub distinct_colors: usize,
    pub t_target: usize,
    pub subset_size: usize,
    pub retries: usize,
    pub wall_ms: f64,
}

/// Instances of a suite, in run order.
pub fn suite_instances(suite: Suite, seed: u64) -> Vec<(String, GenSpec, usize)> {
    match suite {
        Suite::Grids2d => [4, 6, 8, 10]
            .into_iter()
            .map(|side| (format!("grid-{side}x{side}"), GenSpec::Grid { d: 2, side }, 2))
            .collect(),
        Suite::Random2d => [(50, 2), (100, 2), (200, 2), (400, 2), (40, 3)]
            .into_iter()
            .map(|(n, a)| {
                let spec = GenSpec::Random {
                    d: 2,
                    n,
                    bound: 1_000_000,
                    seed,
                    denominator: None,
                };
                (format!("random-n{n}-a{a}"), spec, a)
            })
            .collect(),
    }
}

/// Run up to `budget` instances of `suite` in auto mode.
pub fn run_bench(suite: Suite, budget: Option<usize>, seed: u64) -> Result<Vec<BenchRow>, Error> {
    let mut rows = Vec::new();
    for (instance, spec, a) in suite_instances(suite, seed).into_iter().take(budget.unwrap_or(usize::MAX)) {
        let points = spec.generate()?;
        let start = Instant::now();
        let coloring = build_coloring(&points, a)?;
        let distinct_colors = coloring.palette_len();
        drop(coloring);
        let mut req = FindRequest::new(a);
        req.seed = seed;
        let (observed_m, t_target, subset_size, retries) = match finder::find_subset(&points, &req) {
            Ok(r) => (r.observed_m, r.t_target, r.subset.len(), r.stats.retries_used),
            Err(Error::Extraction(f)) => {
                let m = build_coloring(&points, a)?.goodness(None).observed_m;
                (m, f.sample_size, 0, f.samples_tried)
            }
            Err(e) => return Err(e),
        };
        rows.push(BenchRow {
            instance,
            n: points.len(),
            a,
            d: points.dim(),
            observed_m,
            distinct_colors,
            t_target,
            subset_size,
            retries,
            wall_ms: start.elapsed().as_secs_f64() * 1e3,
        });
    }
    Ok(rows)
}

fn bench(args: BenchArgs, io: &mut Io<'_>) -> Result<(), Exit> {
    let rows = run_bench(args.suite, args.budget, args.seed)?;
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut *io.stdout);
    w.write_record([
        "instance",
        "n",
        "a",
        "d",
        "observed_m",
        "distinct_colors",
        "t_target",
        "subset_size",
        "retries",
        "wall_ms",
    ])
    .map_err(csv_error)?;
    for row in &rows {
        w.serialize(row).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}
