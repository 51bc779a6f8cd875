//! `gsq` — spectral radii of graph powers from the command line.
//!
//! Ad-hoc certified radius queries, graph squaring, family construction,
//! class enumeration, minimal-forbidden-subgraph search, claim verification,
//! and conjecture scans. Graphs travel as graph6, one per line, on stdin and
//! stdout, so the verbs compose in pipelines.
//!
//! Exit codes: 0 success (or verdict HOLDS), 1 verdict VIOLATED, 2 usage or
//! input error, 3 verdict UNDECIDED (or an undecidable boundary).

use std::io::{self, BufRead};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num::rational::BigRational;
use num::BigInt;

use gsq::enumerate::{all_connected, all_trees, all_trees_with_diameter, all_unicyclic};
use gsq::families::FamilySpec;
use gsq::graph::Graph;
use gsq::iso::{minimal_forbidden, ForbiddenMode, GraphClass, IsoError};
use gsq::spectral::{exact_radius, spectral_radius, DEFAULT_TOL, EXACT_ORDER_CAP};
use gsq::verify::{
    check_connected_min, check_diameter_candidates, check_girth_lemma, check_girth_max,
    check_lemma_properties, check_tree_extremes, check_unicyclic_min, check_upper_bound_connected,
    scan_conjecture1, scan_conjecture2, ClaimReport,
};
use gsq::{from_graph6, to_graph6};

/// Environment variable supplying the default worker count.
const JOBS_ENV: &str = "GSQ_JOBS";

#[derive(Parser)]
#[command(
    name = "gsq",
    version,
    about = "Certified spectral radii of graph powers: queries, enumeration, verification"
)]
struct Cli {
    /// Worker threads (default: the GSQ_JOBS variable, then all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius of each input graph (graph6 argument or stdin lines)
    Rho {
        /// graph6 bytes; read stdin when omitted or "-"
        graph6: Option<String>,
        /// Raise the graph to this power before measuring
        #[arg(long, default_value_t = 1)]
        power: usize,
        /// Residual bound for the iterative solver
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Use the exact characteristic-polynomial oracle (order <= 12)
        #[arg(long)]
        exact: bool,
    },
    /// Square each input graph, emitting graph6
    Square {
        /// graph6 bytes; read stdin when omitted or "-"
        graph6: Option<String>,
    },
    /// Construct a named family member, e.g. "broom:n=9,d=4,i=3"
    Family {
        /// Family spec: name:key=value,... (path, cycle, star, star_plus,
        /// complete, tadpole, cycle_star, broom, spider)
        spec: String,
    },
    /// Enumerate one representative per isomorphism class, as graph6 lines
    Enum {
        class: EnumClass,
        #[arg(long)]
        n: usize,
        /// Restrict unicyclic graphs to one girth
        #[arg(long)]
        girth: Option<usize>,
        /// Restrict trees to one diameter
        #[arg(long)]
        diameter: Option<usize>,
    },
    /// Minimal graphs in a class whose square radius passes a threshold
    Forbidden {
        #[arg(long)]
        class: ForbiddenClass,
        /// Threshold as an integer, fraction "p/q", or decimal
        #[arg(long)]
        threshold: String,
        #[arg(long)]
        n_max: usize,
        /// Keep graphs with radius strictly above the threshold (default)
        #[arg(long, conflicts_with = "proper")]
        strict: bool,
        /// Keep graphs with radius at or above the threshold
        #[arg(long)]
        proper: bool,
    },
    /// Verify one claim over an exhaustive range, reporting HOLDS/VIOLATED
    Verify {
        /// One of: check_upper_bound_connected, check_tree_extremes,
        /// check_connected_min, check_unicyclic_min, check_girth_lemma,
        /// check_girth_max, check_diameter_candidates, check_lemma_properties
        claim: String,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        /// Girth range for check_girth_max
        #[arg(long)]
        g_min: Option<usize>,
        #[arg(long)]
        g_max: Option<usize>,
        /// Diameter range for check_diameter_candidates
        #[arg(long)]
        d_min: Option<usize>,
        #[arg(long)]
        d_max: Option<usize>,
        /// Admitted instances per randomized property suite
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include wall-clock runtime in the report (breaks byte-identity)
        #[arg(long)]
        timings: bool,
    },
    /// Scan a conjecture, producing its numeric table
    Scan {
        /// conjecture1 (tadpole gap to 4) or conjecture2 (broom argmax)
        target: String,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include wall-clock runtime in the report (breaks byte-identity)
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumClass {
    Trees,
    Unicyclic,
    Connected,
}

#[derive(Clone, Copy, ValueEnum)]
enum ForbiddenClass {
    Tree,
    Unicyclic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }
}

macro_rules! usage_from {
    ($($ty:ty),*) => {$(
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError::usage(e.to_string())
            }
        }
    )*};
}

usage_from!(
    gsq::GraphError,
    gsq::graph6::Graph6Error,
    gsq::families::FamilyError,
    gsq::enumerate::EnumerateError,
    gsq::spectral::SpectralError,
    gsq::verify::VerifyError
);

impl From<IsoError> for CliError {
    fn from(e: IsoError) -> Self {
        let code = match e {
            // a boundary the float guard refuses to call is a verdict, not a
            // usage mistake
            IsoError::UndecidedBoundary { .. } => 3,
            _ => 2,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_jobs(cli.jobs);
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn configure_jobs(jobs: Option<usize>) {
    let jobs = jobs.or_else(|| {
        std::env::var(JOBS_ENV)
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
    });
    if let Some(n) = jobs.filter(|&n| n > 0) {
        // a failure here means a pool already exists, which is fine
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Rho {
            graph6,
            power,
            tol,
            exact,
        } => rho(graph6, power, tol, exact),
        Command::Square { graph6 } => {
            for g in input_graphs(graph6.as_deref())? {
                println!("{}", to_graph6(&g.square()));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Family { spec } => {
            let spec = FamilySpec::from_str(&spec)?;
            println!("{}", to_graph6(&spec.build()?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Enum {
            class,
            n,
            girth,
            diameter,
        } => enumerate(class, n, girth, diameter),
        Command::Forbidden {
            class,
            threshold,
            n_max,
            strict: _,
            proper,
        } => forbidden(class, &threshold, n_max, proper),
        Command::Verify {
            claim,
            n_min,
            n_max,
            g_min,
            g_max,
            d_min,
            d_max,
            trials,
            seed,
            format,
            timings,
        } => {
            let started = Instant::now();
            let mut report = dispatch_verify(
                &claim, n_min, n_max, g_min, g_max, d_min, d_max, trials, seed,
            )?;
            if timings {
                report.runtime_ms = Some(started.elapsed().as_millis() as u64);
            }
            emit(&report, format)
        }
        Command::Scan {
            target,
            n_max,
            format,
            timings,
        } => {
            let started = Instant::now();
            let mut report = match target.as_str() {
                "conjecture1" => scan_conjecture1(n_max)?,
                "conjecture2" => scan_conjecture2(n_max)?,
                other => {
                    return Err(CliError::usage(format!(
                        "unknown scan target {other:?} (expected conjecture1 or conjecture2)"
                    )))
                }
            };
            if timings {
                report.runtime_ms = Some(started.elapsed().as_millis() as u64);
            }
            emit(&report, format)
        }
    }
}

/// Graphs from the positional argument, or one per non-empty stdin line.
fn input_graphs(arg: Option<&str>) -> Result<Vec<Graph>, CliError> {
    let mut lines: Vec<String> = Vec::new();
    match arg {
        Some(s) if s != "-" => lines.push(s.to_string()),
        _ => {
            for line in io::stdin().lock().lines() {
                let line = line.map_err(|e| CliError::usage(format!("reading stdin: {e}")))?;
                let trimmed = line.trim();
                if !trimmed.is_empty() {
                    lines.push(trimmed.to_string());
                }
            }
        }
    }
    if lines.is_empty() {
        return Err(CliError::usage(
            "no input graphs (pass graph6 or pipe lines)",
        ));
    }
    lines
        .iter()
        .map(|l| from_graph6(l).map_err(CliError::from))
        .collect()
}

fn rho(graph6: Option<String>, power: usize, tol: f64, exact: bool) -> Result<ExitCode, CliError> {
    for g in input_graphs(graph6.as_deref())? {
        let powered = if power == 1 { g } else { g.power(power)? };
        if exact {
            if powered.n() > EXACT_ORDER_CAP {
                return Err(CliError::usage(format!(
                    "exact oracle capped at n <= {EXACT_ORDER_CAP}, got n = {}",
                    powered.n()
                )));
            }
            let width = BigRational::new(BigInt::from(1), BigInt::from(10u64).pow(12));
            let r = exact_radius(&powered, &width)?;
            println!("{:.12} width={:.1e} exact", r.midpoint_f64(), r.width_f64());
        } else {
            let r = spectral_radius(&powered, tol)?;
            println!("{:.12} residual={:.1e}", r.radius, r.residual);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn enumerate(
    class: EnumClass,
    n: usize,
    girth: Option<usize>,
    diameter: Option<usize>,
) -> Result<ExitCode, CliError> {
    if !matches!(class, EnumClass::Unicyclic) && girth.is_some() {
        return Err(CliError::usage("--girth applies to unicyclic graphs only"));
    }
    if !matches!(class, EnumClass::Trees) && diameter.is_some() {
        return Err(CliError::usage("--diameter applies to trees only"));
    }
    let stream = match class {
        EnumClass::Trees => match diameter {
            Some(d) => all_trees_with_diameter(n, d)?,
            None => all_trees(n)?,
        },
        EnumClass::Unicyclic => all_unicyclic(n, girth)?,
        EnumClass::Connected => all_connected(n)?,
    };
    let mut out = io::stdout().lock();
    stream
        .write_graph6(&mut out)
        .map_err(|e| CliError::usage(format!("writing stdout: {e}")))?;
    Ok(ExitCode::SUCCESS)
}

fn forbidden(
    class: ForbiddenClass,
    threshold: &str,
    n_max: usize,
    proper: bool,
) -> Result<ExitCode, CliError> {
    let class = match class {
        ForbiddenClass::Tree => GraphClass::Tree,
        ForbiddenClass::Unicyclic => GraphClass::Unicyclic,
    };
    let mode = if proper {
        ForbiddenMode::Proper
    } else {
        ForbiddenMode::Strict
    };
    let threshold = parse_rational(threshold)?;
    for g in minimal_forbidden(class, &threshold, n_max, mode)? {
        println!("{}", to_graph6(&g));
    }
    Ok(ExitCode::SUCCESS)
}

/// Accepts "4", "9/2", or "4.25".
fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::usage(format!("cannot parse {s:?} as a rational threshold"));
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den == BigInt::from(0) {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let digits = format!("{whole}{frac}");
        let num = BigInt::from_str(&digits).map_err(|_| bad())?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(BigRational::new(num, den));
    }
    let num = BigInt::from_str(s.trim()).map_err(|_| bad())?;
    Ok(BigRational::from_integer(num))
}

#[allow(clippy::too_many_arguments)]
fn dispatch_verify(
    claim: &str,
    n_min: Option<usize>,
    n_max: Option<usize>,
    g_min: Option<usize>,
    g_max: Option<usize>,
    d_min: Option<usize>,
    d_max: Option<usize>,
    trials: usize,
    seed: u64,
) -> Result<ClaimReport, CliError> {
    // per-claim default sweeps, chosen to finish at desk scale
    let range = |lo: usize, hi: usize| (n_min.unwrap_or(lo), n_max.unwrap_or(hi));
    let report = match claim {
        "check_upper_bound_connected" => {
            let (a, b) = range(1, 8);
            check_upper_bound_connected(a, b)?
        }
        "check_tree_extremes" => {
            let (a, b) = range(4, 12);
            check_tree_extremes(a, b)?
        }
        "check_connected_min" => {
            let (a, b) = range(4, 8);
            check_connected_min(a, b)?
        }
        "check_unicyclic_min" => {
            let (a, b) = range(4, 10);
            check_unicyclic_min(a, b)?
        }
        "check_girth_lemma" => {
            let (a, b) = range(6, 10);
            check_girth_lemma(a, b)?
        }
        "check_girth_max" => {
            let (a, b) = range(6, 10);
            check_girth_max(a, b, g_min.unwrap_or(3), g_max.unwrap_or(b))?
        }
        "check_diameter_candidates" => {
            let (a, b) = range(5, 10);
            check_diameter_candidates(a, b, d_min.unwrap_or(2), d_max.unwrap_or(b - 1))?
        }
        "check_lemma_properties" => check_lemma_properties(trials, seed)?,
        other => {
            return Err(CliError::usage(format!(
                "unknown claim {other:?}; see `gsq verify --help` for the list"
            )))
        }
    };
    Ok(report)
}

fn emit(report: &ClaimReport, format: Format) -> Result<ExitCode, CliError> {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => print!("{}", report.to_csv()),
    }
    Ok(ExitCode::from(report.status.exit_code() as u8))
}
