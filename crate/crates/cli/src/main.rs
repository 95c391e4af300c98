//! Command-line front end: build and export crystals, the quantum Bruhat graph and
//! alcove models, and run the verification checks.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use krdemazure::alcove::{AlcoveModel, ChainOrder};
use krdemazure::crystal::{components, FilterMode};
use krdemazure::experiments::{build_view, junit_xml, run_batch, CheckSpec, Report, TensorSpec, View};
use krdemazure::kr::Fixture;
use krdemazure::weyl::{build_qbg, DEFAULT_WEYL_CAP};
use krdemazure::{CartanData, ClassicalWeight, Error, Family};

const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "krdemazure", version, about = "KR crystals, Demazure filtrations and the quantum alcove model")]
struct Cli {
    /// Worker threads for batch checks (default: available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest crystal that may be explored.
    #[arg(long, global = true)]
    node_cap: Option<usize>,
    /// Largest finite Weyl group that may be enumerated.
    #[arg(long, global = true)]
    weyl_cap: Option<usize>,
    /// File of `key=value` lines supplying defaults for any long flag.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a tensor product of KR crystals, optionally filtered.
    Build(BuildArgs),
    /// Build the quantum Bruhat graph of a finite type.
    Qbg(QbgArgs),
    /// Build the level-l quantum alcove model of a dominant weight.
    Alcove(AlcoveArgs),
    /// Run one of the verification checks.
    Check(CheckArgs),
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[arg(long = "type")]
    cartan: Option<String>,
    /// Factors `r,s:r,s:...`, leftmost first; empty for the trivial crystal.
    #[arg(long)]
    factors: Option<String>,
    #[arg(long)]
    level: Option<usize>,
    #[arg(long)]
    view: Option<ViewArg>,
    /// `.dot` or `.json`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct QbgArgs {
    #[arg(long = "type")]
    cartan: Option<String>,
    /// `.dot` only.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct AlcoveArgs {
    #[arg(long = "type")]
    cartan: Option<String>,
    /// Coordinates of lambda in the fundamental weights, e.g. `1,1`.
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    level: Option<i64>,
    #[arg(long)]
    order: Option<OrderArg>,
    /// `.dot` or `.json`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(subcommand)]
    check: CheckCommand,
    /// Report file (`.json`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// JUnit XML file.
    #[arg(long, global = true)]
    junit: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum CheckCommand {
    /// Compare the extremal components of two filtered tensor products.
    Reduction {
        #[arg(long = "type")]
        cartan: Option<String>,
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
        #[arg(long)]
        level: Option<usize>,
        #[arg(long)]
        mode: Option<ModeArg>,
    },
    /// Minimal elements and dominantization on the components of D~_l(B).
    Bmin {
        #[arg(long = "type")]
        cartan: Option<String>,
        #[arg(long)]
        factors: Option<String>,
        #[arg(long)]
        level: Option<usize>,
        /// Use a hard-coded C2 fixture instead of `--factors`.
        #[arg(long)]
        fixture: Option<FixtureArg>,
    },
    /// Crystal-level Q-system in type A.
    Qsystem {
        #[arg(long = "type")]
        cartan: Option<String>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Character-level Q-system in type A.
    Qchar {
        #[arg(long = "type")]
        cartan: Option<String>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        m: Option<i64>,
    },
    /// Alcove model versus the dual Demazure tensor product of columns.
    Alcove {
        #[arg(long = "type")]
        cartan: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        level: Option<usize>,
        #[arg(long)]
        order: Option<OrderArg>,
    },
    /// The two C2 example crystals, node for node.
    Figure,
    /// A JSON array of check specifications, run in parallel.
    Batch {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ViewArg {
    None,
    Demazure,
    Dual,
}

impl From<ViewArg> for View {
    fn from(v: ViewArg) -> View {
        match v {
            ViewArg::None => View::None,
            ViewArg::Demazure => View::Demazure,
            ViewArg::Dual => View::Dual,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Head,
    Tail,
}

impl From<ModeArg> for FilterMode {
    fn from(m: ModeArg) -> FilterMode {
        match m {
            ModeArg::Head => FilterMode::Head,
            ModeArg::Tail => FilterMode::Tail,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Lex,
    ReverseLex,
}

impl From<OrderArg> for ChainOrder {
    fn from(o: OrderArg) -> ChainOrder {
        match o {
            OrderArg::Lex => ChainOrder::Lex,
            OrderArg::ReverseLex => ChainOrder::ReverseLex,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FixtureArg {
    Tensor11,
    B12,
}

impl From<FixtureArg> for Fixture {
    fn from(f: FixtureArg) -> Fixture {
        match f {
            FixtureArg::Tensor11 => Fixture::Tensor11,
            FixtureArg::B12 => Fixture::B12,
        }
    }
}

/// Failure of a command: usage problems exit with 2, failed checks with 1.
enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Defaults read from `--config`. Keys are long flag names without dashes.
struct Config(BTreeMap<String, String>);

impl Config {
    fn load(path: Option<&Path>) -> Result<Self, Failure> {
        let mut map = BTreeMap::new();
        let Some(path) = path else {
            return Ok(Config(map));
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read config {}: {e}", path.display())))?;
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Failure::Usage(format!("{}:{}: expected key=value", path.display(), k + 1)))?;
            let value = value.trim().trim_matches('"');
            map.insert(key.trim().trim_start_matches("--").to_string(), value.to_string());
        }
        Ok(Config(map))
    }

    /// The flag value, else the config value, else `default`.
    fn pick<T: FromStr>(&self, flag: Option<T>, key: &str, default: Option<T>) -> Result<T, Failure>
    where
        T::Err: Display,
    {
        if let Some(v) = flag {
            return Ok(v);
        }
        if let Some(text) = self.0.get(key) {
            return text
                .parse()
                .map_err(|e| Failure::Usage(format!("config key {key}={text:?}: {e}")));
        }
        default.ok_or_else(|| Failure::Usage(format!("missing --{key}")))
    }

    fn pick_enum<T: ValueEnum>(&self, flag: Option<T>, key: &str, default: T) -> Result<T, Failure> {
        if let Some(v) = flag {
            return Ok(v);
        }
        match self.0.get(key) {
            Some(text) => T::from_str(text, true).map_err(|e| Failure::Usage(format!("config key {key}: {e}"))),
            None => Ok(default),
        }
    }
}

struct Ctx {
    config: Config,
    node_cap: usize,
    weyl_cap: usize,
}

fn parse_lambda(text: &str) -> Result<ClassicalWeight, Failure> {
    let coords: Result<Vec<i64>, _> = text.split(',').map(|x| x.trim().parse::<i64>()).collect();
    coords
        .map(ClassicalWeight)
        .map_err(|_| Failure::Usage(format!("cannot parse lambda {text:?} (expected e.g. 1,0,2)")))
}

fn type_a_rank(cartan: &str) -> Result<usize, Failure> {
    let c = CartanData::parse(cartan)?;
    if c.family() != Family::A {
        return Err(Failure::Usage(format!("this check is implemented in type A only, got {cartan}")));
    }
    Ok(c.rank())
}

fn extension(out: &Path) -> Option<&str> {
    out.extension().and_then(|e| e.to_str())
}

fn write_file(path: &Path, contents: &str) -> Outcome {
    std::fs::write(path, contents).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn cmd_build(ctx: &Ctx, args: BuildArgs) -> Outcome {
    let cfg = &ctx.config;
    let cartan: String = cfg.pick(args.cartan, "type", None)?;
    let factors: String = cfg.pick(args.factors, "factors", Some(String::new()))?;
    let level: usize = cfg.pick(args.level, "level", Some(1))?;
    let view = cfg.pick_enum(args.view, "view", ViewArg::None)?;
    let spec = TensorSpec::parse(&cartan, &factors)?;
    let g = build_view(&spec, level, view.into(), ctx.node_cap)?;
    let sizes: Vec<usize> = components(&g).iter().map(|k| k.nodes.len()).collect();
    let zero = g.edges().iter().filter(|e| e.2 == 0).count();
    print!(
        "{spec} ({view:?}, level {level}): {} nodes, {} edges ({zero} of color 0), components {sizes:?}",
        g.len(),
        g.edge_count()
    );
    if let Some(out) = args.out.or_else(|| cfg.0.get("out").map(PathBuf::from)) {
        match extension(&out) {
            Some("dot") => write_file(&out, &g.to_dot())?,
            Some("json") => write_file(&out, &g.to_json())?,
            _ => return Err(Failure::Usage(format!("--out must end in .dot or .json: {}", out.display()))),
        }
        print!(" -> {}", out.display());
    }
    println!();
    Ok(())
}

fn cmd_qbg(ctx: &Ctx, args: QbgArgs) -> Outcome {
    let cartan: String = ctx.config.pick(args.cartan, "type", None)?;
    let c = Arc::new(CartanData::parse(&cartan)?);
    let g = build_qbg(Arc::clone(&c), ctx.weyl_cap)?;
    print!(
        "QBG of {}: {} vertices, {} edges, strongly connected: {}",
        c.name(),
        g.vertex_count(),
        g.edge_count(),
        g.is_strongly_connected()
    );
    if let Some(out) = args.out.or_else(|| ctx.config.0.get("out").map(PathBuf::from)) {
        if extension(&out) != Some("dot") {
            return Err(Failure::Usage(format!("--out must end in .dot: {}", out.display())));
        }
        write_file(&out, &g.to_dot())?;
        print!(" -> {}", out.display());
    }
    println!();
    Ok(())
}

fn cmd_alcove(ctx: &Ctx, args: AlcoveArgs) -> Outcome {
    let cfg = &ctx.config;
    let cartan: String = cfg.pick(args.cartan, "type", None)?;
    let lambda = parse_lambda(&cfg.pick::<String>(args.lambda, "lambda", None)?)?;
    let level: i64 = cfg.pick(args.level, "level", Some(1))?;
    let order = cfg.pick_enum(args.order, "order", OrderArg::Lex)?;
    let c = Arc::new(CartanData::parse(&cartan)?);
    let model = AlcoveModel::for_weight(&c, &lambda, order.into())?;
    let g = model.crystal(level)?;
    print!(
        "alcove model of {} lambda={lambda} level {level}: chain length {}, {} admissible subsets, {} edges",
        c.name(),
        model.chain.len(),
        g.len(),
        g.edge_count()
    );
    if let Some(out) = args.out.or_else(|| cfg.0.get("out").map(PathBuf::from)) {
        match extension(&out) {
            Some("json") => write_file(&out, &model.to_json(level)?)?,
            Some("dot") => write_file(&out, &g.to_dot())?,
            _ => return Err(Failure::Usage(format!("--out must end in .dot or .json: {}", out.display()))),
        }
        print!(" -> {}", out.display());
    }
    println!();
    Ok(())
}

fn check_spec(ctx: &Ctx, check: CheckCommand) -> Result<Vec<CheckSpec>, Failure> {
    let cfg = &ctx.config;
    let spec = match check {
        CheckCommand::Reduction {
            cartan,
            left,
            right,
            level,
            mode,
        } => {
            let cartan: String = cfg.pick(cartan, "type", None)?;
            CheckSpec::Reduction {
                left: TensorSpec::parse(&cartan, &cfg.pick::<String>(left, "left", None)?)?,
                right: TensorSpec::parse(&cartan, &cfg.pick::<String>(right, "right", None)?)?,
                level: cfg.pick(level, "level", None)?,
                mode: cfg.pick_enum(mode, "mode", ModeArg::Head)?.into(),
            }
        }
        CheckCommand::Bmin {
            cartan,
            factors,
            level,
            fixture,
        } => match fixture.or_else(|| cfg.0.get("fixture").and_then(|f| FixtureArg::from_str(f, true).ok())) {
            Some(f) => CheckSpec::BminFixture { fixture: f.into() },
            None => {
                let cartan: String = cfg.pick(cartan, "type", None)?;
                CheckSpec::Bmin {
                    spec: TensorSpec::parse(&cartan, &cfg.pick::<String>(factors, "factors", None)?)?,
                    level: cfg.pick(level, "level", None)?,
                }
            }
        },
        CheckCommand::Qsystem { cartan, a, m, level } => CheckSpec::Qsystem {
            n: type_a_rank(&cfg.pick::<String>(cartan, "type", None)?)?,
            a: cfg.pick(a, "a", None)?,
            m: cfg.pick(m, "m", None)?,
            level: cfg.pick(level, "level", None)?,
        },
        CheckCommand::Qchar { cartan, a, m } => CheckSpec::Qchar {
            n: type_a_rank(&cfg.pick::<String>(cartan, "type", None)?)?,
            a: cfg.pick(a, "a", None)?,
            m: cfg.pick(m, "m", None)?,
        },
        CheckCommand::Alcove {
            cartan,
            lambda,
            level,
            order,
        } => CheckSpec::Alcove {
            cartan: cfg.pick(cartan, "type", None)?,
            lambda: parse_lambda(&cfg.pick::<String>(lambda, "lambda", None)?)?.0,
            level: cfg.pick(level, "level", Some(1))?,
            order: cfg.pick_enum(order, "order", OrderArg::Lex)?.into(),
        },
        CheckCommand::Figure => CheckSpec::Figure,
        CheckCommand::Batch { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
            return serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("{}: not a list of check specifications: {e}", file.display())));
        }
    };
    Ok(vec![spec])
}

fn summary_line(r: &Report) -> String {
    let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let status = if r.passed() { "PASS" } else { "FAIL" };
    format!(
        "{status} {} ({}) [{:.3} s]",
        r.name,
        params.join(" "),
        r.elapsed.as_secs_f64()
    )
}

fn cmd_check(ctx: &Ctx, args: CheckArgs) -> Outcome {
    let specs = check_spec(ctx, args.check)?;
    let results = if specs.len() == 1 {
        vec![specs[0].run(ctx.node_cap)]
    } else {
        run_batch(&specs, ctx.node_cap)
    };
    let mut reports = Vec::with_capacity(results.len());
    for r in results {
        reports.push(r?);
    }
    for r in &reports {
        println!("{}", summary_line(r));
        for c in r.counterexamples() {
            println!("  counterexample: {c}");
        }
    }
    if let Some(out) = args.out {
        if extension(&out) != Some("json") {
            return Err(Failure::Usage(format!("report --out must end in .json: {}", out.display())));
        }
        let body = if reports.len() == 1 {
            reports[0].to_json()
        } else {
            let values: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| serde_json::from_str(&r.to_json()).expect("report JSON"))
                .collect();
            serde_json::to_string_pretty(&values).expect("serializable") + "\n"
        };
        write_file(&out, &body)?;
    }
    if let Some(junit) = args.junit {
        write_file(&junit, &junit_xml("krdemazure", &reports))?;
    }
    if reports.iter().all(Report::passed) {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run(cli: Cli) -> Outcome {
    let config = Config::load(cli.config.as_deref())?;
    let threads: usize = config.pick(cli.threads, "threads", Some(0))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Usage(format!("thread pool: {e}")))?;
    }
    let ctx = Ctx {
        node_cap: config.pick(cli.node_cap, "node-cap", Some(DEFAULT_NODE_CAP))?,
        weyl_cap: config.pick(cli.weyl_cap, "weyl-cap", Some(DEFAULT_WEYL_CAP))?,
        config,
    };
    match cli.command {
        Command::Build(a) => cmd_build(&ctx, a),
        Command::Qbg(a) => cmd_qbg(&ctx, a),
        Command::Alcove(a) => cmd_alcove(&ctx, a),
        Command::Check(a) => cmd_check(&ctx, a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
