//! Command-line surface: table reproduction, single solves, oracle
//! spectra, wavefunction export, and an internal consistency check.
//!
//! Configuration comes from defaults, then an optional `key = value` config
//! file, then flags, in that order. Unknown flags and unknown config keys
//! are hard usage errors. Exit codes: 0 success, 1 usage, 2 solver
//! non-convergence, 3 I/O.

use std::ffi::OsString;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::closedform;
use crate::model::{Family, ModelError, Potential, TrialParams};
use crate::optimize::{solve_howf, solve_ppewf, OptimizeError};
use crate::oracle::{self, OracleError};
use crate::polygauss;
use crate::reference;
use crate::report::{
    emit_table, emit_wavefunction, fmt_sig, reproduce_table, sample_wavefunction, OutputFormat,
    ReportError, RunConfig, TableData, TableReport,
};

#[derive(Debug)]
enum CliError {
    Usage(String),
    Solver(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Solver(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Solver(m) | CliError::Io(m) => m,
        }
    }
}

impl From<ReportError> for CliError {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::Io { .. } => CliError::Io(e.to_string()),
            ReportError::BadTableId(_)
            | ReportError::BadConfig(_)
            | ReportError::TooFewSamples(_)
            | ReportError::BadWindow(_) => CliError::Usage(e.to_string()),
            ReportError::Model(ref m) if matches!(m, ModelError::InvalidPotential { .. }) => {
                CliError::Usage(e.to_string())
            }
            ReportError::Optimize(ref o)
                if matches!(
                    o,
                    OptimizeError::HowfLevelOutOfRange(_) | OptimizeError::PpewfLevelOutOfRange(_)
                ) =>
            {
                CliError::Usage(e.to_string())
            }
            ReportError::Oracle(ref o) if matches!(o, OracleError::TooManyLevels(_)) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Solver(other.to_string()),
        }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        ReportError::from(e).into()
    }
}

impl From<OptimizeError> for CliError {
    fn from(e: OptimizeError) -> Self {
        ReportError::from(e).into()
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        ReportError::from(e).into()
    }
}

/// λ accepted as a decimal or as fraction text like `3/10`.
fn parse_lambda(s: &str) -> Result<f64, String> {
    let parse = |t: &str| -> Result<f64, String> {
        t.trim()
            .parse::<f64>()
            .map_err(|_| format!("`{t}` is not a number"))
    };
    let value = match s.split_once('/') {
        Some((num, den)) => {
            let d = parse(den)?;
            if d == 0.0 {
                return Err(format!("`{s}` divides by zero"));
            }
            parse(num)? / d
        }
        None => parse(s)?,
    };
    if !(value >= 0.0) || !value.is_finite() {
        return Err(format!("λ must be finite and ≥ 0, got `{s}`"));
    }
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum FamilyArg {
    Howf,
    Ppewf,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Howf => Family::Howf,
            FamilyArg::Ppewf => Family::Ppewf,
        }
    }
}

#[derive(Debug, Clone)]
enum TableSelector {
    All,
    One(u8),
}

impl std::str::FromStr for TableSelector {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(TableSelector::All);
        }
        match s.parse::<u8>() {
            Ok(id @ 1..=8) => Ok(TableSelector::One(id)),
            _ => Err(format!("expected a table number 1..8 or `all`, got `{s}`")),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "qaovar",
    version,
    about = "Variational and exact energy levels of quadratic, pure-quartic, and quartic anharmonic oscillators"
)]
struct Cli {
    /// Config file with `key = value` lines (keys match the run-config fields)
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Directory for emitted tables and figure data
    #[arg(long, global = true, value_name = "DIR")]
    output_dir: Option<PathBuf>,

    /// Output format for emitted files: csv or json
    #[arg(long, global = true, value_parser = OutputFormat::from_str)]
    format: Option<OutputFormat>,

    /// Comma-separated λ values (decimals or fractions like 3/10)
    #[arg(long, global = true, value_name = "LIST")]
    lambda_grid: Option<String>,

    /// Quadratic coefficient g² of the potential
    #[arg(long = "g2", global = true, value_name = "G2")]
    g_squared: Option<f64>,

    /// Number of oracle levels
    #[arg(long, global = true)]
    levels: Option<usize>,

    /// Oracle basis-truncation drift tolerance
    #[arg(long, global = true)]
    oracle_tol: Option<f64>,

    /// Random restarts per five-parameter solve
    #[arg(long, global = true)]
    restarts: Option<usize>,

    /// Base seed for restart perturbations
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Pin the parity-breaking coefficients a and c to zero
    #[arg(long, global = true)]
    even_odd_only: bool,

    /// Worker threads for table rows (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Suppress progress output on stderr (also QAOVAR_QUIET=1)
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recompute published tables (1..8 or `all`) into the output directory
    Table {
        #[arg(value_name = "WHICH")]
        which: TableSelector,
    },
    /// One variational solve, printed to stdout
    Solve {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_lambda)]
        lambda: f64,
    },
    /// Exact spectrum by oscillator-basis diagonalization
    Oracle {
        #[arg(long, value_parser = parse_lambda)]
        lambda: f64,
        /// Drift tolerance (overrides --oracle-tol)
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Export normalized wavefunction samples for one optimized trial
    Wavefunction {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_lambda)]
        lambda: f64,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[arg(long, default_value_t = 5.0)]
        xmax: f64,
    },
    /// Run the internal consistency checks and diagnostics
    Selfcheck,
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let quiet = cli.quiet
        || std::env::var("QAOVAR_QUIET")
            .map(|v| !v.is_empty() && v != "0")
            .unwrap_or(false);
    match dispatch(cli, quiet) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, quiet: bool) -> Result<(), CliError> {
    let config = build_config(&cli)?;
    match cli.command {
        Command::Table { ref which } => run_table(which.clone(), &config, quiet),
        Command::Solve { family, n, lambda } => run_solve(family, n, lambda, &config),
        Command::Oracle { lambda, tol } => run_oracle(lambda, tol, &config, quiet),
        Command::Wavefunction {
            family,
            n,
            lambda,
            samples,
            xmax,
        } => run_wavefunction(family, n, lambda, samples, xmax, &config, quiet),
        Command::Selfcheck => run_selfcheck(&config),
    }
}

fn build_config(cli: &Cli) -> Result<RunConfig, CliError> {
    let mut config = RunConfig::default();
    if let Some(path) = &cli.config {
        apply_config_file(&mut config, path)?;
    }
    if let Some(grid) = &cli.lambda_grid {
        config.lambda_grid = parse_lambda_list(grid).map_err(CliError::Usage)?;
    }
    if let Some(g2) = cli.g_squared {
        config.g_squared = g2;
    }
    if let Some(levels) = cli.levels {
        config.levels = levels;
    }
    if let Some(tol) = cli.oracle_tol {
        config.oracle_tol = tol;
    }
    if let Some(restarts) = cli.restarts {
        config.restarts = restarts;
    }
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    if cli.even_odd_only {
        config.even_odd_only = true;
    }
    if let Some(dir) = &cli.output_dir {
        config.output_dir = dir.clone();
    }
    if let Some(format) = cli.format {
        config.format = format;
    }
    if let Some(jobs) = cli.jobs {
        config.jobs = Some(jobs);
    }
    config
        .validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(config)
}

fn parse_lambda_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|tok| parse_lambda(tok.trim()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("lambda_grid: {e}"))
}

fn apply_config_file(config: &mut RunConfig, path: &PathBuf) -> Result<(), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))?;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Usage(format!(
                "{}:{}: expected `key = value`, got `{raw}`",
                path.display(),
                lineno + 1
            )));
        };
        let key = key.trim();
        let value = value.trim();
        let bad = |what: &str| {
            CliError::Usage(format!(
                "{}:{}: invalid value for {key}: {what}",
                path.display(),
                lineno + 1
            ))
        };
        match key {
            "lambda_grid" => {
                config.lambda_grid = parse_lambda_list(value).map_err(|e| bad(&e))?;
            }
            "g_squared" => config.g_squared = value.parse().map_err(|_| bad(value))?,
            "levels" => config.levels = value.parse().map_err(|_| bad(value))?,
            "oracle_tol" => config.oracle_tol = value.parse().map_err(|_| bad(value))?,
            "restarts" => config.restarts = value.parse().map_err(|_| bad(value))?,
            "seed" => config.seed = value.parse().map_err(|_| bad(value))?,
            "even_odd_only" => config.even_odd_only = value.parse().map_err(|_| bad(value))?,
            "output_dir" => config.output_dir = PathBuf::from(value),
            "format" => {
                config.format = value.parse().map_err(|e: String| bad(&e))?;
            }
            "jobs" => config.jobs = Some(value.parse().map_err(|_| bad(value))?),
            other => {
                return Err(CliError::Usage(format!(
                    "{}:{}: unknown config key `{other}`",
                    path.display(),
                    lineno + 1
                )));
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct RunRecord<'a> {
    command: String,
    config: &'a RunConfig,
    wall_clock_seconds: f64,
    tables: &'a [TableReport],
    failed_rows: usize,
}

fn count_failures(report: &TableReport) -> usize {
    match &report.data {
        TableData::Howf(rows) => rows.iter().filter(|r| r.as_ok().is_none()).count(),
        TableData::Ground(rows) => rows.iter().filter(|r| r.as_ok().is_none()).count(),
        TableData::Params(rows) => rows.iter().filter(|r| r.as_ok().is_none()).count(),
    }
}

fn run_table(which: TableSelector, config: &RunConfig, quiet: bool) -> Result<(), CliError> {
    std::fs::create_dir_all(&config.output_dir)
        .map_err(|e| CliError::Io(format!("creating {}: {e}", config.output_dir.display())))?;
    let ids: Vec<u8> = match which {
        TableSelector::All => (1..=8).collect(),
        TableSelector::One(id) => vec![id],
    };

    let start = Instant::now();
    let compute = || -> Result<Vec<TableReport>, ReportError> {
        ids.iter().map(|&id| reproduce_table(id, config)).collect()
    };
    let reports = match config.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| CliError::Solver(format!("thread pool: {e}")))?;
            pool.install(compute)
        }
        None => compute(),
    }?;

    for report in &reports {
        let name = format!("table{}.{}", report.table_id, config.format.extension());
        let path = config.output_dir.join(&name);
        emit_table(report, config.format, &path)?;
        if !quiet {
            eprintln!("wrote {}", path.display());
        }
    }

    let failed_rows: usize = reports.iter().map(count_failures).sum();
    let record = RunRecord {
        command: match which {
            TableSelector::All => "table all".to_string(),
            TableSelector::One(id) => format!("table {id}"),
        },
        config,
        wall_clock_seconds: start.elapsed().as_secs_f64(),
        tables: &reports,
        failed_rows,
    };
    let record_path = config.output_dir.join("run_record.json");
    let json = serde_json::to_string_pretty(&record)
        .map_err(|e| CliError::Solver(format!("serializing run record: {e}")))?;
    std::fs::write(&record_path, json)
        .map_err(|e| CliError::Io(format!("writing {}: {e}", record_path.display())))?;
    if !quiet {
        eprintln!("wrote {}", record_path.display());
    }

    if failed_rows > 0 {
        return Err(CliError::Solver(format!(
            "{failed_rows} table row(s) failed; see {}",
            record_path.display()
        )));
    }
    Ok(())
}

fn solve_one(
    family: FamilyArg,
    n: usize,
    lambda: f64,
    config: &RunConfig,
) -> Result<crate::optimize::VariationalResult, CliError> {
    let pot = Potential::new(config.g_squared, lambda)?;
    let result = match family {
        FamilyArg::Howf => solve_howf(n, &pot)?,
        FamilyArg::Ppewf => {
            let opts = crate::optimize::PpewfOptions {
                seeds: Vec::new(),
                restarts: config.restarts,
                even_odd_only: config.even_odd_only,
                rng_seed: config.seed,
            };
            solve_ppewf(n, &pot, &opts)?
        }
    };
    Ok(result)
}

fn run_solve(family: FamilyArg, n: usize, lambda: f64, config: &RunConfig) -> Result<(), CliError> {
    let result = solve_one(family, n, lambda, config)?;
    let f = |v: f64| fmt_sig(v, 6);
    println!("family = {}", result.family);
    println!("n = {n}");
    println!("lambda = {}", f(lambda));
    println!("g2 = {}", f(config.g_squared));
    match result.params {
        TrialParams::Howf { alpha, .. } => {
            println!("alpha = {}", f(alpha));
        }
        TrialParams::Ppewf {
            alpha_prime,
            a,
            b,
            c,
            d,
            ..
        } => {
            println!("alpha_prime = {}", f(alpha_prime));
            println!("a = {}", f(a));
            println!("b = {}", f(b));
            println!("c = {}", f(c));
            println!("d = {}", f(d));
        }
    }
    println!("E = {}", f(result.energy));
    println!("evaluations = {}", result.evaluations);
    println!("converged = {}", result.converged);
    Ok(())
}

fn run_oracle(
    lambda: f64,
    tol: Option<f64>,
    config: &RunConfig,
    quiet: bool,
) -> Result<(), CliError> {
    let pot = Potential::new(config.g_squared, lambda)?;
    let tol = tol.unwrap_or(config.oracle_tol);
    let spectrum = oracle::exact_spectrum(&pot, config.levels, tol)?;
    if !quiet {
        eprintln!(
            "basis size {} at scale {}, drift {}",
            spectrum.basis_size,
            fmt_sig(spectrum.basis_scale, 6),
            fmt_sig(spectrum.drift, 3)
        );
    }
    for (k, e) in spectrum.eigenvalues.iter().enumerate() {
        println!("E_{k} = {}", fmt_sig(*e, 6));
    }
    Ok(())
}

fn run_wavefunction(
    family: FamilyArg,
    n: usize,
    lambda: f64,
    samples: usize,
    xmax: f64,
    config: &RunConfig,
    quiet: bool,
) -> Result<(), CliError> {
    let result = solve_one(family, n, lambda, config)?;
    let data = sample_wavefunction(&result, xmax, samples)?;
    std::fs::create_dir_all(&config.output_dir)
        .map_err(|e| CliError::Io(format!("creating {}: {e}", config.output_dir.display())))?;
    let name = format!(
        "wavefunction_{}_n{}_lambda{}.{}",
        result.family,
        n,
        fmt_sig(lambda, 6),
        config.format.extension()
    );
    let path = config.output_dir.join(&name);
    emit_wavefunction(&data, config.format, &path)?;
    if !quiet {
        eprintln!(
            "nodes = {}, rms width = {}",
            data.node_count,
            fmt_sig(data.rms_width, 6)
        );
    }
    println!("{}", path.display());
    Ok(())
}

// ---------------------------------------------------------------------------
// Selfcheck

struct Check {
    name: &'static str,
    outcome: Result<String, String>,
}

fn run_selfcheck(config: &RunConfig) -> Result<(), CliError> {
    let checks = vec![
        Check {
            name: "closed-form qao energy vs moment quotient",
            outcome: check_closedform_qao(),
        },
        Check {
            name: "closed-form pure-quartic energy vs moment quotient",
            outcome: check_closedform_quartic(),
        },
        Check {
            name: "closed-form quadratic energy vs moment quotient",
            outcome: check_closedform_quadratic(),
        },
        Check {
            name: "quotient scale invariance",
            outcome: check_scale_invariance(),
        },
        Check {
            name: "oscillator ladder at lambda = 0",
            outcome: check_sho_ladder(),
        },
        Check {
            name: "quartic level-coefficient identity",
            outcome: check_level_coefficient(),
        },
        Check {
            name: "hermite orthogonality",
            outcome: check_hermite_orthogonality(),
        },
        Check {
            name: "oracle reproduces the oscillator spectrum",
            outcome: check_oracle_sho(config),
        },
    ];

    let mut failed = 0;
    for check in &checks {
        match &check.outcome {
            Ok(detail) => println!("ok   {} ({detail})", check.name),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} ({detail})", check.name);
            }
        }
    }

    // Diagnostic only: the printed polynomial-exponential expressions are
    // transcribed verbatim and compared against the Rayleigh quotient at the
    // published parameters. They disagree; the lines record by how much.
    for n in 0..=5usize {
        for &lambda in &[0.1, 1.0] {
            let Some(rows) = reference::ppewf_reference(n) else {
                continue;
            };
            let Some(row) = rows.iter().find(|r| r.lambda == lambda) else {
                continue;
            };
            let pot = Potential::new(1.0, lambda).map_err(CliError::from)?;
            match closedform::ppewf_printed_comparison(
                n,
                row.alpha_prime,
                row.a,
                row.b,
                row.c,
                row.d,
                &pot,
            ) {
                Ok(cmp) => println!(
                    "info printed-expression diff n={n} lambda={}: printed={} rayleigh={} diff={}",
                    fmt_sig(lambda, 6),
                    fmt_sig(cmp.printed, 6),
                    fmt_sig(cmp.rayleigh, 6),
                    fmt_sig(cmp.difference, 6)
                ),
                Err(e) => println!("info printed-expression diff n={n} lambda={lambda}: {e}"),
            }
        }
    }

    println!(
        "selfcheck: {} passed, {failed} failed",
        checks.len() - failed
    );
    if failed > 0 {
        return Err(CliError::Solver(format!("{failed} selfcheck(s) failed")));
    }
    Ok(())
}

fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn check_closedform_qao() -> Result<String, String> {
    let mut worst: f64 = 0.0;
    for n in 0..=10usize {
        for &alpha in &[0.3, 0.7, 1.0, 1.6] {
            for &lambda in &[0.0, 0.25, 1.0, 10.0] {
                let closed =
                    closedform::energy_howf_qao(n, alpha, lambda).map_err(|e| e.to_string())?;
                let pot = Potential::new(1.0, lambda).map_err(|e| e.to_string())?;
                let quotient =
                    crate::model::rayleigh_quotient(&TrialParams::Howf { n, alpha }, &pot)
                        .map_err(|e| e.to_string())?;
                worst = worst.max(rel_diff(closed, quotient));
            }
        }
    }
    if worst < 1e-10 {
        Ok(format!("worst relative difference {worst:.2e}"))
    } else {
        Err(format!(
            "worst relative difference {worst:.2e} exceeds 1e-10"
        ))
    }
}

fn check_closedform_quartic() -> Result<String, String> {
    let pot = Potential::new(0.0, 0.25).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for n in 0..=10usize {
        for &alpha in &[0.3, 0.7, 1.0, 1.6] {
            let closed = closedform::energy_howf_quartic(n, alpha).map_err(|e| e.to_string())?;
            let quotient = crate::model::rayleigh_quotient(&TrialParams::Howf { n, alpha }, &pot)
                .map_err(|e| e.to_string())?;
            worst = worst.max(rel_diff(closed, quotient));
        }
    }
    if worst < 1e-10 {
        Ok(format!("worst relative difference {worst:.2e}"))
    } else {
        Err(format!(
            "worst relative difference {worst:.2e} exceeds 1e-10"
        ))
    }
}

fn check_closedform_quadratic() -> Result<String, String> {
    let pot = Potential::new(1.0, 0.0).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for n in 0..=10usize {
        for &alpha in &[0.3, 0.7, 1.0, 1.6] {
            let closed = closedform::energy_howf_quadratic(n, alpha).map_err(|e| e.to_string())?;
            let quotient = crate::model::rayleigh_quotient(&TrialParams::Howf { n, alpha }, &pot)
                .map_err(|e| e.to_string())?;
            worst = worst.max(rel_diff(closed, quotient));
        }
    }
    if worst < 1e-10 {
        Ok(format!("worst relative difference {worst:.2e}"))
    } else {
        Err(format!(
            "worst relative difference {worst:.2e} exceeds 1e-10"
        ))
    }
}

fn check_scale_invariance() -> Result<String, String> {
    let pot = Potential::new(1.0, 1.0).map_err(|e| e.to_string())?;
    let params = TrialParams::Ppewf {
        n: 0,
        alpha_prime: 1.8188,
        a: 0.0,
        b: 0.9985,
        c: 0.0,
        d: 0.4403,
    };
    let base = crate::model::rayleigh_quotient(&params, &pot).map_err(|e| e.to_string())?;
    let psi = crate::model::build_trial(&params).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for &s in &[1e-6, 0.017, 3.0, 8.5e5] {
        let scaled = psi.scale(s);
        let kinetic = 0.5 * scaled.derivative().norm_squared();
        let weighted =
            polygauss::GaussPoly::new(scaled.poly().mul(&pot.as_polynomial()), scaled.rate())
                .map_err(|e| e.to_string())?;
        let v = weighted.inner_product(&scaled);
        let e = (kinetic + v) / scaled.norm_squared();
        worst = worst.max(rel_diff(e, base));
    }
    if worst < 1e-12 {
        Ok(format!("worst relative drift {worst:.2e}"))
    } else {
        Err(format!("worst relative drift {worst:.2e} exceeds 1e-12"))
    }
}

fn check_sho_ladder() -> Result<String, String> {
    let pot = Potential::new(1.0, 0.0).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for n in 0..=10usize {
        let e = crate::model::rayleigh_quotient(&TrialParams::Howf { n, alpha: 1.0 }, &pot)
            .map_err(|e| e.to_string())?;
        worst = worst.max(rel_diff(e, (2 * n + 1) as f64 / 2.0));
    }
    if worst < 1e-12 {
        Ok(format!("worst relative error {worst:.2e}"))
    } else {
        Err(format!("worst relative error {worst:.2e} exceeds 1e-12"))
    }
}

fn check_level_coefficient() -> Result<String, String> {
    for n in 0..=20u64 {
        let brute: u64 = 4 * (0..=n).map(|i| n - i).sum::<u64>() + 1;
        if closedform::quartic_level_coefficient(n as usize) != brute {
            return Err(format!("mismatch at n = {n}"));
        }
    }
    Ok("exact for n ≤ 20".to_string())
}

fn check_hermite_orthogonality() -> Result<String, String> {
    let mut worst: f64 = 0.0;
    for m in 0..=8usize {
        for n in 0..=8usize {
            let f =
                polygauss::GaussPoly::new(polygauss::hermite(m), 0.5).map_err(|e| e.to_string())?;
            let g =
                polygauss::GaussPoly::new(polygauss::hermite(n), 0.5).map_err(|e| e.to_string())?;
            let got = f.inner_product(&g);
            if m == n {
                let mut expect = std::f64::consts::PI.sqrt();
                for k in 1..=n {
                    expect *= 2.0 * k as f64;
                }
                worst = worst.max(rel_diff(got, expect));
            } else {
                let scale = polygauss::gaussian_moment(2 * ((m + n) / 2) as u32, 1.0)
                    .map_err(|e| e.to_string())?;
                worst = worst.max(got.abs() / scale.abs().max(1.0));
            }
        }
    }
    if worst < 1e-10 {
        Ok(format!("worst relative deviation {worst:.2e}"))
    } else {
        Err(format!(
            "worst relative deviation {worst:.2e} exceeds 1e-10"
        ))
    }
}

fn check_oracle_sho(config: &RunConfig) -> Result<String, String> {
    let pot = Potential::new(1.0, 0.0).map_err(|e| e.to_string())?;
    let s = oracle::exact_spectrum(&pot, config.levels.min(6), config.oracle_tol)
        .map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for (k, e) in s.eigenvalues.iter().enumerate() {
        worst = worst.max((e - (k as f64 + 0.5)).abs());
    }
    if worst < 1e-9 {
        Ok(format!("worst absolute error {worst:.2e}"))
    } else {
        Err(format!("worst absolute error {worst:.2e} exceeds 1e-9"))
    }
}
