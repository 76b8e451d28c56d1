use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rotcalc::genus2::{F2Route, PredictionRoute};
use rotcalc::verify::{self, IdentityReport};
use rotcalc::{Context, Engine, Expression};

/// Identities that build genus-2 quantities; they need t-levels up to 5.
const GENUS2: &[&str] = &[
    "f2-equivalence",
    "f2-structure",
    "l1-consistency",
    "l1f2-structure",
    "virasoro-main",
    "prediction-paths",
    "appendix-route",
    "appendix-definitions",
    "homogeneity",
];
const GENUS2_MIN_TAU: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "rotcalc", version, about = "Exact rotation-coefficient identities and the genus-2 L1 constraint")]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Dimension N of the semisimple Frobenius manifold.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,

    /// Highest t-level the engine may create.
    #[arg(long = "max-tau", global = true, default_value_t = Context::DEFAULT_MAX_TAU)]
    max_tau: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for parallel verification (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Print a named quantity instead of verifying.
    #[arg(long, value_enum)]
    dump: Option<Target>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check identities exactly.
    Verify {
        /// Identity id; may be repeated.
        #[arg(long = "identity", short = 'i')]
        identities: Vec<String>,
        /// Every identity that supports the chosen N.
        #[arg(long, conflicts_with = "identities")]
        all: bool,
    },
    /// Print a named quantity.
    Dump {
        #[arg(value_enum)]
        target: Target,
    },
    /// List registered identities.
    List,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    F2Rotation,
    F2Assembled,
    L1f2,
    Prediction,
    PredictionGstar,
    BDiag,
    LA,
    LB,
}

#[derive(Serialize)]
struct Record<'a> {
    identity: &'a str,
    n: usize,
    passed: bool,
    witness_terms: usize,
    elapsed_ms: u128,
    anchor: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    failed_check: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

#[derive(Serialize)]
struct DumpRecord<'a> {
    target: &'a str,
    n: usize,
    terms: usize,
    expression: String,
    /// Structured form; `Expression::from_json` reads it back.
    value: rotcalc::expr::ExprJson,
}

struct Usage(String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("rotcalc: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Usage> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().map_err(|e| Usage(e.to_string()))?;
    }
    let ctx = Context::new(cli.n, cli.max_tau).map_err(|e| Usage(e.to_string()))?;
    let engine = Engine::new(ctx);
    match (&cli.command, cli.dump) {
        (Some(Command::Dump { target }), _) => dump(&engine, *target, cli.format),
        (None, Some(target)) => dump(&engine, target, cli.format),
        (Some(Command::List), _) => {
            list(cli.format);
            Ok(true)
        }
        (Some(Command::Verify { identities, all }), dump_target) => {
            let ok = verify_cmd(&engine, identities, *all, cli.format)?;
            match dump_target {
                Some(target) => Ok(dump(&engine, target, cli.format)? && ok),
                None => Ok(ok),
            }
        }
        (None, None) => Err(Usage("nothing to do; try `rotcalc verify --all` or `rotcalc --help`".into())),
    }
}

fn select(engine: &Engine, ids: &[String], all: bool) -> Result<Vec<&'static str>, Usage> {
    let n = engine.n();
    if all {
        return Ok(verify::registry().iter().filter(|i| i.supports(n)).map(|i| i.id).collect());
    }
    if ids.is_empty() {
        return Err(Usage("give --identity <ID> or --all".into()));
    }
    ids.iter()
        .map(|id| {
            let identity = verify::find(id).map_err(|e| Usage(e.to_string()))?;
            if !identity.supports(n) {
                return Err(Usage(format!(
                    "{id} supports N in {}..={}, got {n}",
                    identity.support.0, identity.support.1
                )));
            }
            Ok(identity.id)
        })
        .collect()
}

fn verify_cmd(engine: &Engine, ids: &[String], all: bool, format: Format) -> Result<bool, Usage> {
    let selected = select(engine, ids, all)?;
    if engine.ctx().max_tau < GENUS2_MIN_TAU {
        if let Some(id) = selected.iter().find(|id| GENUS2.contains(id)) {
            return Err(Usage(format!("{id} needs --max-tau {GENUS2_MIN_TAU} or more")));
        }
    }
    let reports = verify::verify_many(engine, &selected)
        .into_iter()
        .collect::<rotcalc::Result<Vec<_>>>()
        .map_err(|e| Usage(e.to_string()))?;
    let width = selected.iter().map(|s| s.len()).max().unwrap_or(0);
    for r in &reports {
        match format {
            Format::Text => print_text(r, width),
            Format::Json => println!("{}", serde_json::to_string(&record(r)).expect("serializable")),
        }
    }
    let passed = reports.iter().all(|r| r.passed);
    if format == Format::Text {
        let failed = reports.iter().filter(|r| !r.passed).count();
        println!("{} identities, {} failed", reports.len(), failed);
    }
    Ok(passed)
}

fn record(r: &IdentityReport) -> Record<'_> {
    Record {
        identity: r.identity,
        n: r.n,
        passed: r.passed,
        witness_terms: r.witness_terms,
        elapsed_ms: r.elapsed.as_millis(),
        anchor: r.anchor,
        failed_check: r.failed_check.as_deref(),
        witness: (!r.passed).then(|| r.witness.to_string()),
    }
}

fn print_text(r: &IdentityReport, width: usize) {
    println!(
        "{:<width$}  N={}  {}  {:>4} checks  {:>5} witness terms  {:>8} ms  {}",
        r.identity,
        r.n,
        if r.passed { "PASS" } else { "FAIL" },
        r.checks,
        r.witness_terms,
        r.elapsed.as_millis(),
        r.anchor,
    );
    if let Some(label) = &r.failed_check {
        println!("    first failure: {label}");
        println!("    witness: {}", r.witness);
    }
}

fn list(format: Format) {
    let reg = verify::registry();
    let width = reg.iter().map(|i| i.id.len()).max().unwrap_or(0);
    for i in reg {
        match format {
            Format::Text => println!("{:<width$}  N {}..={}  {}", i.id, i.support.0, i.support.1, i.anchor),
            Format::Json => println!(
                "{}",
                serde_json::json!({ "identity": i.id, "support": [i.support.0, i.support.1], "anchor": i.anchor })
            ),
        }
    }
}

fn dump(engine: &Engine, target: Target, format: Format) -> Result<bool, Usage> {
    let name = target.to_possible_value().expect("no skipped variants").get_name().to_string();
    let values = build(engine, target).map_err(|e| Usage(e.to_string()))?;
    for (label, x) in values {
        let label = label.map_or(name.clone(), |l| format!("{name}[{l}]"));
        match format {
            Format::Text => println!("{label} = {x}"),
            Format::Json => {
                let rec = DumpRecord { target: &label, n: engine.n(), terms: x.num_terms(), expression: x.to_string(), value: x.to_json() };
                println!("{}", serde_json::to_string(&rec).expect("serializable"));
            }
        }
    }
    Ok(true)
}

fn build(e: &Engine, target: Target) -> rotcalc::Result<Vec<(Option<usize>, Expression)>> {
    let one = |x: rotcalc::Result<Expression>| x.map(|x| vec![(None, x)]);
    match target {
        Target::F2Rotation => one(e.f2(F2Route::Rotation)),
        Target::F2Assembled => one(e.f2(F2Route::Assembled)),
        Target::L1f2 => one(e.l1f2_target()),
        Target::Prediction => one(e.prediction(PredictionRoute::Rotation)),
        Target::PredictionGstar => one(e.prediction(PredictionRoute::GStar)),
        Target::BDiag => e.ctx().indices().map(|i| e.b_diag(i).map(|b| (Some(i), b))).collect(),
        Target::LA => one(e.l_a()),
        Target::LB => one(e.l_b()),
    }
}
