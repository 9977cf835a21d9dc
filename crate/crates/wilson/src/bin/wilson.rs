//! `wilson`: exact large-N Wilson loop expectations on Z².

use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use wilson_core::closedform::spectral::SpectralError;
use wilson_core::closedform::table1::{self, Table1Error};
use wilson_core::engine::{MemoStore, WilsonReport};
use wilson_core::{Engine, EngineError, Loop, Strategy};

use wilson::fixtures::{self, Fixture, FixtureError};
use wilson::loopfile::{self, FormatError};
use wilson::parallel::{wilson_polynomial_parallel, SharedMemo};
use wilson::report::{compute_text, polynomial_json, AnalyzeReport, ComputeReport, TermJson};
use wilson::spectrum::{spectrum_table, write_csv};
use wilson::suites::{self, Suite, SuiteConfig, SuiteReport};

/// Writes to stdout, ending the process quietly when the reader has gone.
fn emit(args: fmt::Arguments<'_>) {
    if let Err(e) = io::stdout().lock().write_fmt(args) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("failed writing to stdout: {e}");
    }
}

macro_rules! out {
    ($($t:tt)*) => { emit(format_args!($($t)*)) };
}

macro_rules! outln {
    ($($t:tt)*) => { emit(format_args!("{}\n", format_args!($($t)*))) };
}

const EXIT_VERIFY: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "wilson", version, about = "Exact large-N Wilson loop expectations on Z²")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum StrategyArg {
    First,
    Boundary,
    MinBranch,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::First => Strategy::First,
            StrategyArg::Boundary => Strategy::Boundary,
            StrategyArg::MinBranch => Strategy::MinBranch,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Vanishing,
    EdgeIndependence,
    Table1,
    Winding,
    Series,
    Spectrum,
    Geometry,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Vanishing => vec![Suite::Vanishing],
            SuiteArg::EdgeIndependence => vec![Suite::EdgeIndependence],
            SuiteArg::Table1 => vec![Suite::Table1],
            SuiteArg::Winding => vec![Suite::Winding],
            SuiteArg::Series => vec![Suite::Series],
            SuiteArg::Spectrum => vec![Suite::Spectrum],
            SuiteArg::Geometry => vec![Suite::Geometry],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute φ(ℓ) for a loop file.
    Compute {
        loop_file: PathBuf,
        #[arg(long, value_enum, default_value = "boundary")]
        strategy: StrategyArg,
        #[arg(long)]
        json: bool,
        /// Evaluate the canonical assignments concurrently.
        #[arg(long)]
        parallel: bool,
    },
    /// Heights, distances, regions and the canonical collection of a loop.
    Analyze {
        loop_file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites; exit 0 iff every case passes.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value = "boundary")]
        strategy: StrategyArg,
        /// Read fixtures from this directory instead of the built-in set.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Print failing cases only.
        #[arg(long)]
        quiet: bool,
    },
    /// Spectral density table as CSV.
    Spectrum {
        #[arg(long)]
        area: u32,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long, default_value_t = 64)]
        points: usize,
        #[arg(long, default_value_t = 1e-14)]
        tol: f64,
    },
    /// Evaluate catalogue rows on given areas, or on every fixture.
    Table1 {
        /// Row number; omitted means every catalogue fixture.
        #[arg(long)]
        row: Option<u32>,
        /// Areas as name=value, e.g. s=2 t=1.
        areas: Vec<String>,
    },
    /// Validate fixtures and run every suite.
    Selfcheck {
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Verify(String),
    Invariant(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Verify(_) => EXIT_VERIFY,
            CliError::Invariant(_) => EXIT_INVARIANT,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Verify(m) | CliError::Invariant(m) => m,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::InvalidRoot { .. } => CliError::Usage(e.to_string()),
            EngineError::Canonical(_) | EngineError::MemoLimit { .. } | EngineError::MemoConflict => {
                CliError::Invariant(e.to_string())
            }
        }
    }
}

impl From<FixtureError> for CliError {
    fn from(e: FixtureError) -> Self {
        match e {
            FixtureError::Manifest(_) | FixtureError::Io { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Verify(e.to_string()),
        }
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<Table1Error> for CliError {
    fn from(e: Table1Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn memo_limit() -> Result<Option<usize>, CliError> {
    match std::env::var("WILSON_MEMO_LIMIT") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("WILSON_MEMO_LIMIT must be a count, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn compute(path: &Path, strategy: Strategy, json: bool, parallel: bool) -> Result<(), CliError> {
    let l = loopfile::read_loop(path)?;
    let limit = memo_limit()?;
    let (report, stats, entries): (WilsonReport, _, usize) = if parallel {
        let memo = SharedMemo::new();
        let (r, s) = wilson_polynomial_parallel(&l, strategy, &memo, limit)?;
        (r, s, memo.len())
    } else {
        let mut engine = Engine::new(strategy).with_memo_limit(limit);
        let r = engine.wilson_polynomial(&l)?;
        (r, engine.stats(), engine.memo().len())
    };
    if json {
        outln!("{}", ComputeReport::new(&report, stats, entries, strategy).to_json());
    } else {
        out!("{}", compute_text(&l.reduced(), &report, stats, entries, strategy));
    }
    Ok(())
}

fn analyze(path: &Path, json: bool) -> Result<(), CliError> {
    let l = loopfile::read_loop(path)?;
    let report = AnalyzeReport::new(&l).map_err(|e| CliError::Invariant(e.to_string()))?;
    if json {
        outln!("{}", report.to_json());
    } else {
        out!("{}", report.to_text());
    }
    if !report.collection_size_ok {
        return Err(CliError::Invariant(
            "canonical collection size differs from the region product".into(),
        ));
    }
    Ok(())
}

fn load_fixtures(dir: Option<&PathBuf>) -> Result<Vec<Fixture>, CliError> {
    Ok(match dir {
        Some(d) => fixtures::from_dir(d)?,
        None => fixtures::builtin()?,
    })
}

fn print_suite(report: &SuiteReport, quiet: bool) {
    outln!("== {} ==", report.suite);
    for c in &report.cases {
        if !quiet || !c.passed() {
            outln!("{c}");
        }
    }
    let failed = report.failures().count();
    outln!(
        "{}: {} of {} cases passed in {:.2?}",
        report.suite,
        report.cases.len() - failed,
        report.cases.len(),
        report.elapsed
    );
}

fn run_suites(suites: &[Suite], config: &SuiteConfig, quiet: bool) -> Result<(), CliError> {
    let mut failed = Vec::new();
    let mut errored = false;
    for &s in suites {
        let report = suites::run(s, config);
        print_suite(&report, quiet);
        errored |= report.has_errors();
        if !report.passed() {
            failed.push(s.name());
        }
    }
    match (errored, failed.is_empty()) {
        (true, _) => Err(CliError::Invariant(format!("engine error in {}", failed.join(", ")))),
        (false, false) => Err(CliError::Verify(format!("failed suites: {}", failed.join(", ")))),
        (false, true) => Ok(()),
    }
}

fn verify(suite: SuiteArg, strategy: Strategy, dir: Option<&PathBuf>, quiet: bool) -> Result<(), CliError> {
    let mut config = SuiteConfig::new(load_fixtures(dir)?);
    config.strategy = strategy;
    config.memo_limit = memo_limit()?;
    run_suites(&suite.suites(), &config, quiet)
}

fn spectrum(area: u32, beta: f64, points: usize, tol: f64) -> Result<(), CliError> {
    if points == 0 {
        return Err(CliError::Usage("--points must be positive".into()));
    }
    let table = spectrum_table(area, beta, points, tol)?;
    if let Err(e) = write_csv(&table, io::stdout().lock()) {
        if matches!(e.kind(), csv::ErrorKind::Io(io) if io.kind() == io::ErrorKind::BrokenPipe) {
            return Ok(());
        }
        return Err(CliError::Usage(e.to_string()));
    }
    Ok(())
}

#[derive(Serialize)]
struct Table1Json {
    class: u32,
    slug: &'static str,
    areas: std::collections::BTreeMap<String, i64>,
    polynomial: Vec<TermJson>,
    canonical_count: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    fixture: Option<String>,
}

fn parse_areas(items: &[String]) -> Result<Vec<(String, i64)>, CliError> {
    items
        .iter()
        .map(|item| {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("expected name=value, got {item:?}")))?;
            let v: i64 = v
                .parse()
                .map_err(|_| CliError::Usage(format!("area {k} is not an integer")))?;
            Ok((k.to_string(), v))
        })
        .collect()
}

fn table1_cmd(row: Option<u32>, areas: &[String]) -> Result<(), CliError> {
    let rows: Vec<Table1Json> = match row {
        Some(id) => {
            let r = table1::row(id)?;
            let owned = parse_areas(areas)?;
            let named: Vec<(&str, i64)> = owned.iter().map(|(k, v)| (k.as_str(), *v)).collect();
            let p = r.evaluate(&named)?;
            vec![Table1Json {
                class: r.id,
                slug: r.slug,
                areas: owned.into_iter().collect(),
                polynomial: polynomial_json(&p),
                canonical_count: r.canonical_count,
                fixture: None,
            }]
        }
        None => {
            if !areas.is_empty() {
                return Err(CliError::Usage("areas need --row".into()));
            }
            fixtures::builtin()?
                .into_iter()
                .filter_map(|f| {
                    let class = f.spec.table1.clone()?;
                    let r = table1::row(class.row).ok()?;
                    Some(Table1Json {
                        class: r.id,
                        slug: r.slug,
                        areas: class.regions.iter().map(|(k, v)| (k.clone(), v.area as i64)).collect(),
                        polynomial: polynomial_json(f.expected.as_ref()?),
                        canonical_count: r.canonical_count,
                        fixture: Some(f.spec.name.clone()),
                    })
                })
                .collect()
        }
    };
    outln!("{}", serde_json::to_string_pretty(&rows).expect("rows serialize"));
    Ok(())
}

fn selfcheck(dir: Option<&PathBuf>) -> Result<(), CliError> {
    let start = Instant::now();
    let fixtures = load_fixtures(dir)?;
    outln!("fixtures: {} validated", fixtures.len());
    let unit = Loop::from_moves(wilson_core::Point::ORIGIN, "URDL").expect("valid loop");
    let phi = Engine::default().wilson_polynomial(&unit)?.polynomial;
    if phi.to_string() != "β^1" {
        return Err(CliError::Verify(format!("unit plaquette gives {phi}")));
    }
    outln!("unit plaquette: {phi}");
    let config = SuiteConfig {
        memo_limit: memo_limit()?,
        ..SuiteConfig::new(fixtures)
    };
    let result = run_suites(&Suite::ALL, &config, true);
    outln!("selfcheck finished in {:.2?}", start.elapsed());
    result
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Compute {
            loop_file,
            strategy,
            json,
            parallel,
        } => compute(&loop_file, strategy.into(), json, parallel),
        Command::Analyze { loop_file, json } => analyze(&loop_file, json),
        Command::Verify {
            suite,
            strategy,
            fixtures,
            quiet,
        } => verify(suite, strategy.into(), fixtures.as_ref(), quiet),
        Command::Spectrum {
            area,
            beta,
            points,
            tol,
        } => spectrum(area, beta, points, tol),
        Command::Table1 { row, areas } => table1_cmd(row, &areas),
        Command::Selfcheck { fixtures } => selfcheck(fixtures.as_ref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
