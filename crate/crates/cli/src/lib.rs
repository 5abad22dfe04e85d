//! Command-line front end: argument parsing, dispatch and report encoding.
//!
//! Reports go to `out` (JSON or CSV), diagnostics to `err`. Exit codes are
//! 0 on success, 1 when a checked property fails and 2 for invalid input.

use std::ffi::OsString;
use std::io::Write;

use bosonic_polytope::config::Configuration;
use bosonic_polytope::figure::{minkowski_figure, sigma_figure, FigureLoops};
use bosonic_polytope::halfspace::{analytic_halfspaces, numeric_facets_with, FacetOptions};
use bosonic_polytope::lineups::{count_lineups, enumerate_lineups};
use bosonic_polytope::oracle::{
    boundary_slack, build_bose_hubbard, gok_minimizer, reduce_1rdm, sample_generic_energies,
    schur_horn_check, verify_vertex_sequence_in, HubbardParameters, SchurHornReport,
};
use bosonic_polytope::polytope::SpectralPolytope;
use bosonic_polytope::rational::{parse_rational, to_f64, Q, DEFAULT_DENOMINATOR_BOUND};
use bosonic_polytope::spectrum::Spectrum;
use bosonic_polytope::weights::WeightVector;
use bosonic_polytope::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub const THREADS_ENV: &str = "BOSONIC_POLYTOPE_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bosonic-polytope", version, about = "Spectral polytopes of bosonic weighted ensembles")]
pub struct RunConfig {
    /// Report format; figure-data defaults to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate lineups of length r.
    Lineups(LineupsArgs),
    /// Vertices of, or membership in, the spectral polytope.
    #[command(subcommand)]
    Polytope(PolytopeCommand),
    /// Halfspace representation of the ordered polytope.
    Facets(FacetsArgs),
    /// Exact-diagonalization checks.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Plot data for two-dimensional sections (d = 3).
    #[command(subcommand, name = "figure-data")]
    FigureData(FigureCommand),
    /// Vertex and inequality counts per r.
    Table1(Table1Args),
}

#[derive(Debug, Args)]
pub struct LineupsArgs {
    #[arg(long = "N", value_name = "N")]
    pub particles: usize,
    #[arg(long = "d", value_name = "d")]
    pub orbitals: u32,
    #[arg(long = "r", value_name = "r")]
    pub length: usize,
    /// Report only the number of lineups.
    #[arg(long)]
    pub count_only: bool,
}

#[derive(Debug, Args)]
pub struct PolytopeArgs {
    #[arg(long = "N", value_name = "N")]
    pub particles: usize,
    #[arg(long = "d", value_name = "d")]
    pub orbitals: u32,
    /// Comma-separated weights, e.g. `1/2,1/3,1/6` or `0.5,0.3,0.2`.
    #[arg(long = "w", value_name = "w", allow_hyphen_values = true)]
    pub weights: String,
}

#[derive(Debug, Subcommand)]
pub enum PolytopeCommand {
    Vertices(PolytopeArgs),
    Contains {
        #[command(flatten)]
        polytope: PolytopeArgs,
        /// Comma-separated occupation numbers summing to N.
        #[arg(long, allow_hyphen_values = true)]
        spectrum: String,
        /// Largest denominator used when rationalizing inexact entries.
        #[arg(long, default_value_t = DEFAULT_DENOMINATOR_BOUND)]
        denominator_bound: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FacetMode {
    Analytic,
    Numeric,
}

#[derive(Debug, Args)]
pub struct FacetsArgs {
    #[arg(long = "N", value_name = "N")]
    pub particles: usize,
    /// Defaults to the length of `--w`.
    #[arg(long = "r", value_name = "r")]
    pub rank: Option<usize>,
    /// Defaults to weights proportional to 2^(r-j).
    #[arg(long = "w", value_name = "w", allow_hyphen_values = true)]
    pub weights: Option<String>,
    /// Defaults to r.
    #[arg(long = "d", value_name = "d")]
    pub orbitals: Option<u32>,
    #[arg(long, value_enum, default_value_t = FacetMode::Numeric)]
    pub mode: FacetMode,
    /// Permit numeric facet enumeration beyond r = 5.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Random non-interacting Hamiltonians: ground-ensemble spectra must hit vertices.
    Verify {
        #[arg(long = "N", value_name = "N")]
        particles: usize,
        #[arg(long = "d", value_name = "d")]
        orbitals: u32,
        #[arg(long = "r", value_name = "r")]
        rank: Option<usize>,
        #[arg(long = "w", value_name = "w", allow_hyphen_values = true)]
        weights: Option<String>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Bose-Hubbard chain with open ends.
    Hubbard {
        #[arg(long = "J", value_name = "J", allow_hyphen_values = true)]
        hopping: f64,
        #[arg(long = "U", value_name = "U", allow_hyphen_values = true)]
        interaction: f64,
        #[arg(long = "N", value_name = "N")]
        particles: usize,
        #[arg(long)]
        sites: usize,
        #[arg(long = "w", value_name = "w", allow_hyphen_values = true)]
        weights: String,
        /// Comma-separated on-site potentials; zero if omitted.
        #[arg(long = "v", value_name = "v", allow_hyphen_values = true)]
        potentials: Option<String>,
        /// Allowed negative membership slack.
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum FigureCommand {
    Sigma {
        #[arg(long = "N", value_name = "N")]
        particles: usize,
        #[arg(long = "d", value_name = "d", default_value_t = 3)]
        orbitals: u32,
        #[arg(long = "w", value_name = "w", allow_hyphen_values = true)]
        weights: String,
    },
    Minkowski {
        #[arg(long = "N", value_name = "N")]
        particles: usize,
        #[arg(long = "Nprime", value_name = "Nprime")]
        new_particles: usize,
        #[arg(long = "d", value_name = "d", default_value_t = 3)]
        orbitals: u32,
        #[arg(long = "w", value_name = "w", allow_hyphen_values = true)]
        weights: String,
    },
}

#[derive(Debug, Args)]
pub struct Table1Args {
    #[arg(long, default_value_t = 8)]
    pub rmax: usize,
    /// Largest r for which inequalities are enumerated; defaults to min(rmax, 5).
    #[arg(long)]
    pub facets_rmax: Option<usize>,
    /// Permit facet enumeration beyond r = 5.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => CliError::Failed(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Report plus whether every checked property held.
struct Outcome {
    body: String,
    passed: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Self { body, passed: true }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(config, out, err),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            }
        }
    }
}

pub fn run(config: RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let pool = match thread_pool() {
        Ok(pool) => pool,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let mut diagnostics = Vec::new();
    let result = pool.install(|| dispatch(&config, &mut diagnostics));
    let _ = err.write_all(&diagnostics);
    match result {
        Ok(outcome) => {
            if out.write_all(outcome.body.as_bytes()).is_err() {
                return EXIT_FAILED;
            }
            if outcome.passed {
                EXIT_OK
            } else {
                let _ = writeln!(err, "check failed");
                EXIT_FAILED
            }
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Failed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILED
        }
    }
}

fn thread_pool() -> std::result::Result<rayon::ThreadPool, String> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => n,
            _ => return Err(format!("{THREADS_ENV} must be a positive integer, got {v:?}")),
        },
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| e.to_string())
}

fn dispatch(config: &RunConfig, err: &mut Vec<u8>) -> CliResult<Outcome> {
    let format = config.format;
    match &config.command {
        Command::Lineups(args) => lineups(args, format.unwrap_or(Format::Json)),
        Command::Polytope(PolytopeCommand::Vertices(args)) => {
            json_only(format)?;
            polytope_vertices(args, err)
        }
        Command::Polytope(PolytopeCommand::Contains {
            polytope,
            spectrum,
            denominator_bound,
        }) => {
            json_only(format)?;
            polytope_contains(polytope, spectrum, *denominator_bound, err)
        }
        Command::Facets(args) => {
            json_only(format)?;
            facets(args, err)
        }
        Command::Oracle(OracleCommand::Verify {
            particles,
            orbitals,
            rank,
            weights,
            trials,
            seed,
        }) => {
            json_only(format)?;
            let w = resolve_weights(*rank, weights.as_deref(), err)?;
            oracle_verify(*particles, *orbitals, &w, *trials, *seed)
        }
        Command::Oracle(OracleCommand::Hubbard {
            hopping,
            interaction,
            particles,
            sites,
            weights,
            potentials,
            tolerance,
        }) => {
            json_only(format)?;
            let w = parse_weights(weights, err)?;
            let potentials = match potentials {
                Some(text) => parse_floats(text)?,
                None => vec![0.0; *sites],
            };
            let params = HubbardParameters {
                hopping: *hopping,
                interaction: *interaction,
                potentials,
            };
            oracle_hubbard(&params, *particles, *sites, &w, *tolerance, err)
        }
        Command::FigureData(figure) => figure_data(figure, format.unwrap_or(Format::Csv), err),
        Command::Table1(args) => table1(args, format.unwrap_or(Format::Json)),
    }
}

fn json_only(format: Option<Format>) -> CliResult<()> {
    match format {
        Some(Format::Csv) => Err(CliError::Usage("csv output is not available for this command".into())),
        _ => Ok(()),
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Failed(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn strings(values: &[Q]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn parse_weights(text: &str, err: &mut Vec<u8>) -> CliResult<WeightVector> {
    let parsed = WeightVector::parse(text)?;
    if parsed.was_rescaled_noticeably() {
        let _ = writeln!(
            err,
            "warning: weights sum to {}, rescaled to {}",
            parsed.raw_sum,
            strings(parsed.weights.weights()).join(",")
        );
    }
    Ok(parsed.weights)
}

/// Explicit weights must have rank `r` when both are given; with neither,
/// there is nothing to infer `r` from.
fn resolve_weights(rank: Option<usize>, weights: Option<&str>, err: &mut Vec<u8>) -> CliResult<WeightVector> {
    match (rank, weights) {
        (_, Some(text)) => {
            let w = parse_weights(text, err)?;
            if let Some(r) = rank {
                if r != w.rank() {
                    return Err(CliError::Usage(format!(
                        "--r {r} does not match the {} nonzero weights given",
                        w.rank()
                    )));
                }
            }
            Ok(w)
        }
        (Some(0), None) => Err(CliError::Usage("--r must be positive".into())),
        (Some(r), None) => Ok(WeightVector::dyadic(r)),
        (None, None) => Err(CliError::Usage("give --r or --w".into())),
    }
}

fn parse_floats(text: &str) -> CliResult<Vec<f64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| CliError::Usage(format!("not a finite number: {s:?}")))
        })
        .collect()
}

/// Exact when the entries already sum to `N`; otherwise rationalized with the
/// rounding residual moved onto the largest entry.
fn parse_spectrum(text: &str, particles: usize, denominator_bound: u64) -> CliResult<Spectrum> {
    let exact = text
        .split(',')
        .map(parse_rational)
        .collect::<bosonic_polytope::Result<Vec<Q>>>()?;
    let total = Q::from_integer((particles as i64).into());
    if exact.iter().sum::<Q>() == total {
        return Ok(Spectrum::with_total(exact, &total)?);
    }
    let floats: Vec<f64> = exact.iter().map(to_f64).collect();
    Ok(Spectrum::from_f64(&floats, particles, denominator_bound)?)
}

fn lineups(args: &LineupsArgs, format: Format) -> CliResult<Outcome> {
    if args.count_only {
        let count = count_lineups(args.particles, args.orbitals, args.length)?;
        #[derive(Serialize)]
        struct Count {
            #[serde(rename = "N")]
            particles: usize,
            d: u32,
            r: usize,
            count: u64,
        }
        let report = Count {
            particles: args.particles,
            d: args.orbitals,
            r: args.length,
            count,
        };
        return Ok(Outcome::ok(match format {
            Format::Json => to_json(&report)?,
            Format::Csv => format!("N,d,r,count\n{},{},{},{}\n", report.particles, report.d, report.r, count),
        }));
    }
    let all = enumerate_lineups(args.particles, args.orbitals, args.length)?;
    Ok(Outcome::ok(match format {
        Format::Json => to_json(&all)?,
        Format::Csv => {
            let mut s = String::from("lineup,step,configuration\n");
            for (k, lineup) in all.iter().enumerate() {
                for (j, c) in lineup.configurations().iter().enumerate() {
                    s.push_str(&format!("{k},{j},{}\n", indices(c)));
                }
            }
            s
        }
    }))
}

fn indices(c: &Configuration) -> String {
    c.indices().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn polytope_vertices(args: &PolytopeArgs, err: &mut Vec<u8>) -> CliResult<Outcome> {
    let w = parse_weights(&args.weights, err)?;
    let p = SpectralPolytope::build(args.particles, args.orbitals, &w)?;
    #[derive(Serialize)]
    struct Report<'a> {
        #[serde(rename = "N")]
        particles: usize,
        d: u32,
        w: Vec<String>,
        vertices: Vec<Vec<String>>,
        vertices_f64: Vec<Vec<f64>>,
        /// Generating lineups of each vertex, as indices into `lineups`.
        vertex_lineups: Vec<&'a [usize]>,
        lineups: &'a [bosonic_polytope::lineups::Lineup],
    }
    let report = Report {
        particles: args.particles,
        d: args.orbitals,
        w: strings(w.weights()),
        vertices: p.vertices().iter().map(|v| strings(v.coords())).collect(),
        vertices_f64: p.vertices().iter().map(|v| v.to_f64()).collect(),
        vertex_lineups: p.vertices().iter().map(|v| v.lineup_ids()).collect(),
        lineups: p.lineups(),
    };
    Ok(Outcome::ok(to_json(&report)?))
}

fn polytope_contains(args: &PolytopeArgs, spectrum: &str, bound: u64, err: &mut Vec<u8>) -> CliResult<Outcome> {
    let w = parse_weights(&args.weights, err)?;
    let lambda = parse_spectrum(spectrum, args.particles, bound)?;
    if lambda.len() != args.orbitals as usize {
        return Err(CliError::Usage(format!(
            "spectrum has {} entries, expected d = {}",
            lambda.len(),
            args.orbitals
        )));
    }
    let p = SpectralPolytope::build(args.particles, args.orbitals, &w)?;
    let m = p.contains(&lambda)?;
    #[derive(Serialize)]
    struct Report {
        #[serde(rename = "N")]
        particles: usize,
        d: u32,
        w: Vec<String>,
        spectrum: Vec<String>,
        member: bool,
        boundary: bool,
        slack: String,
        slack_f64: f64,
    }
    let report = Report {
        particles: args.particles,
        d: args.orbitals,
        w: strings(w.weights()),
        spectrum: strings(lambda.values()),
        member: m.member,
        boundary: m.boundary,
        slack_f64: to_f64(&m.slack),
        slack: m.slack.to_string(),
    };
    Ok(Outcome::ok(to_json(&report)?))
}

fn facets(args: &FacetsArgs, err: &mut Vec<u8>) -> CliResult<Outcome> {
    let w = resolve_weights(args.rank, args.weights.as_deref(), err)?;
    let d = args.orbitals.unwrap_or(w.rank() as u32);
    let system = match args.mode {
        FacetMode::Analytic => analytic_halfspaces(args.particles, d, &w)?,
        FacetMode::Numeric => {
            let p = SpectralPolytope::build(args.particles, d, &w)?;
            numeric_facets_with(
                &p,
                FacetOptions {
                    allow_large: args.allow_large,
                },
            )?
        }
    };
    Ok(Outcome::ok(to_json(system.constraints())?))
}

fn oracle_verify(particles: usize, orbitals: u32, w: &WeightVector, trials: usize, seed: u64) -> CliResult<Outcome> {
    let p = SpectralPolytope::build(particles, orbitals, w)?;
    // Draw sequentially so the trial set does not depend on the pool size.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hs = (0..trials)
        .map(|_| sample_generic_energies(orbitals, particles, &mut rng))
        .collect::<bosonic_polytope::Result<Vec<_>>>()?;
    let reports = hs
        .par_iter()
        .map(|h| verify_vertex_sequence_in(&p, h))
        .collect::<bosonic_polytope::Result<Vec<_>>>()?;
    let missed: Vec<usize> = (0..trials).filter(|&k| !reports[k].hit()).collect();
    #[derive(Serialize)]
    struct Report {
        #[serde(rename = "N")]
        particles: usize,
        d: u32,
        r: usize,
        w: Vec<String>,
        trials: usize,
        seed: u64,
        hits: usize,
        misses: usize,
        max_deviation: f64,
        missed_trials: Vec<usize>,
    }
    let report = Report {
        particles,
        d: orbitals,
        r: w.rank(),
        w: strings(w.weights()),
        trials,
        seed,
        hits: trials - missed.len(),
        misses: missed.len(),
        max_deviation: reports.iter().map(|r| r.deviation).fold(0.0, f64::max),
        missed_trials: missed,
    };
    Ok(Outcome {
        passed: report.misses == 0,
        body: to_json(&report)?,
    })
}

fn oracle_hubbard(
    params: &HubbardParameters,
    particles: usize,
    sites: usize,
    w: &WeightVector,
    tolerance: f64,
    err: &mut Vec<u8>,
) -> CliResult<Outcome> {
    if params.potentials.len() != sites {
        return Err(CliError::Usage(format!(
            "--v has {} entries, expected {sites}",
            params.potentials.len()
        )));
    }
    let p = SpectralPolytope::build(particles, sites as u32, w)?;
    let h = build_bose_hubbard(params, particles)?;
    let gok = gok_minimizer(&h, w)?;
    if gok.degenerate {
        let _ = writeln!(err, "warning: degenerate levels; eigenvectors chosen canonically");
    }
    let gamma = reduce_1rdm(&gok.state);
    let spectrum = gamma.spectrum();
    let slack = boundary_slack(&p, &spectrum)?;
    let schur_horn = if w.rank() <= 3 {
        Some(schur_horn_check(&gamma, &analytic_halfspaces(particles, sites as u32, w)?))
    } else {
        None
    };
    #[derive(Serialize)]
    struct Report {
        #[serde(rename = "N")]
        particles: usize,
        sites: usize,
        #[serde(rename = "J")]
        hopping: f64,
        #[serde(rename = "U")]
        interaction: f64,
        v: Vec<f64>,
        w: Vec<String>,
        #[serde(rename = "E_w")]
        energy: f64,
        levels: Vec<f64>,
        spectrum: Vec<f64>,
        diag: Vec<f64>,
        membership: bool,
        slack: f64,
        degenerate: bool,
        schur_horn: Option<SchurHornReport>,
    }
    let membership = slack >= -tolerance;
    let passed = membership && schur_horn.as_ref().is_none_or(SchurHornReport::consistent);
    let report = Report {
        particles,
        sites,
        hopping: params.hopping,
        interaction: params.interaction,
        v: params.potentials.clone(),
        w: strings(w.weights()),
        energy: gok.energy,
        levels: gok.levels,
        diag: gamma.diagonal(),
        spectrum,
        membership,
        slack,
        degenerate: gok.degenerate,
        schur_horn,
    };
    Ok(Outcome {
        passed,
        body: to_json(&report)?,
    })
}

fn figure_data(figure: &FigureCommand, format: Format, err: &mut Vec<u8>) -> CliResult<Outcome> {
    let (orbitals, loops) = match figure {
        FigureCommand::Sigma {
            particles,
            orbitals,
            weights,
        } => (*orbitals, sigma_figure(*particles, &parse_weights(weights, err)?)),
        FigureCommand::Minkowski {
            particles,
            new_particles,
            orbitals,
            weights,
        } => (
            *orbitals,
            minkowski_figure(*particles, *new_particles, &parse_weights(weights, err)?),
        ),
    };
    if orbitals != 3 {
        return Err(CliError::Usage(format!("figure data needs d = 3, got {orbitals}")));
    }
    let loops = loops?;
    Ok(Outcome::ok(match format {
        Format::Csv => loops.to_csv(),
        Format::Json => to_json(&figure_json(&loops))?,
    }))
}

#[derive(Serialize)]
struct FigurePoint {
    lambda1: f64,
    lambda2: f64,
    lambda1_exact: String,
    lambda2_exact: String,
}

#[derive(Serialize)]
struct FigureShape {
    shape: String,
    vertices: Vec<FigurePoint>,
}

fn figure_json(loops: &FigureLoops) -> Vec<FigureShape> {
    loops
        .loops
        .iter()
        .map(|(name, points)| FigureShape {
            shape: name.clone(),
            vertices: points
                .iter()
                .map(|p| FigurePoint {
                    lambda1: to_f64(&p[0]),
                    lambda2: to_f64(&p[1]),
                    lambda1_exact: p[0].to_string(),
                    lambda2_exact: p[1].to_string(),
                })
                .collect(),
        })
        .collect()
}

fn table1(args: &Table1Args, format: Format) -> CliResult<Outcome> {
    if args.rmax == 0 {
        return Err(CliError::Usage("--rmax must be positive".into()));
    }
    let facets_rmax = args.facets_rmax.unwrap_or(args.rmax.min(5));
    if facets_rmax > 5 && !args.allow_large {
        return Err(CliError::Usage(
            "facet enumeration beyond r = 5 needs --allow-large".into(),
        ));
    }
    #[derive(Serialize)]
    struct Row {
        r: usize,
        vertices: u64,
        inequalities: Option<usize>,
    }
    let rows = (1..=args.rmax)
        .map(|r| {
            // Counts are independent of N >= r - 1 and d >= r.
            let n = r.saturating_sub(1).max(1);
            let vertices = count_lineups(n, r as u32, r)?;
            let inequalities = if r <= facets_rmax {
                let p = SpectralPolytope::build(n, r as u32, &WeightVector::dyadic(r))?;
                let options = FacetOptions {
                    allow_large: args.allow_large,
                };
                Some(numeric_facets_with(&p, options)?.len())
            } else {
                None
            };
            Ok(Row { r, vertices, inequalities })
        })
        .collect::<bosonic_polytope::Result<Vec<_>>>()?;
    Ok(Outcome::ok(match format {
        Format::Json => to_json(&rows)?,
        Format::Csv => {
            let mut s = String::from("r,vertices,inequalities\n");
            for row in &rows {
                let ineq = row.inequalities.map(|k| k.to_string()).unwrap_or_default();
                s.push_str(&format!("{},{},{ineq}\n", row.r, row.vertices));
            }
            s
        }
    }))
}
