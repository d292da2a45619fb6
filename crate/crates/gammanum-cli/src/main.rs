//! Command-line front end for the gammanum verification suites.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use gammanum::dirac::{
    currents, dirac_residual, klein_gordon_residual, CurrentKind, MassTerm, PlaneWaveDoc,
};
use gammanum::gauge::{dym_covariance_error, dym_residual, source_j, DymConfig, DymDoc};
use gammanum::jet::{jet_eval, FieldDescription};
use gammanum::lie::{builtin_generators, BUILTIN_NAMES};
use gammanum::sampling::{halton_points, DEFAULT_POINTS};
use gammanum::verify::{
    explore_n6, run_suite, ExploreReport, Suite, SuiteReport, VerifyOptions, ALGEBRAIC_TOLERANCE, DEFAULT_SAMPLES,
    QUADRATIC_TOLERANCE, REPORT_SCHEMA,
};
use gammanum::{Error, Gamma};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "gammanum", version, about = "Verify gamma-number field identities")]
struct Cli {
    /// Run seed, decimal or 0x-prefixed hexadecimal
    #[arg(long, global = true, value_parser = parse_seed, default_value = "0x5EED")]
    seed: u64,

    /// Random instances per check (sample points for field commands)
    #[arg(long, global = true)]
    samples: Option<usize>,

    /// Write the full record to this file
    #[arg(long, global = true)]
    json: Option<PathBuf>,

    /// Factor applied to every tolerance
    #[arg(long, global = true, default_value_t = 1.0)]
    tolerance_scale: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite: all, clifford, matrix, lie, dirac or gauge
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
    },
    /// Evaluate a plane-wave document
    Planewave { spec: PathBuf },
    /// Evaluate a Dirac-Yang-Mills configuration document
    Dym { config: PathBuf },
    /// Summarize a saved report given with --json
    Report,
    /// Scan grade preservation in the six-generator algebras
    ExploreN6,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16).map_err(|e| e.to_string()),
        None => s.parse().map_err(|e: std::num::ParseIntError| e.to_string()),
    }
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure that maps to a nonzero exit status.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Input(m) => write!(f, "input error: {m}"),
        }
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Input(_) => EXIT_INPUT,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Schema(_)
            | Error::InvalidMask { .. }
            | Error::UnknownGeneratorSet(_)
            | Error::InvalidContext(_)
            | Error::GradeOutOfRange { .. } => Failure::Usage(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn read_doc<D: for<'de> Deserialize<'de>>(path: &Path) -> Result<D, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let field = e.path().to_string();
        let at = if field == "." { String::new() } else { format!(" at field `{field}`") };
        Failure::Usage(format!("{}{at}: {}", path.display(), e.inner()))
    })
}

fn write_json<S: Serialize>(path: &Option<PathBuf>, value: &S) -> Result<(), Failure> {
    if let Some(p) = path {
        let text = serde_json::to_string_pretty(value).expect("report serializes");
        fs::write(p, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

/// Residual summary of one plane-wave document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct PlaneWaveReport {
    schema: u32,
    kind: String,
    points: usize,
    /// Largest Dirac residual relative to `1 + |Ψ|`.
    dirac_residual: f64,
    /// Largest Klein-Gordon residual relative to `1 + |Ψ|`.
    klein_gordon_residual: f64,
    /// `max ‖ΨΨ^* − e‖` for the standard wave.
    normalization: Option<f64>,
    currents: Vec<CurrentRow>,
    tolerance: f64,
    current_tolerance: f64,
    pass: bool,
}

/// Current of one generator at the first sample point and its largest divergence.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct CurrentRow {
    set: String,
    generator: usize,
    j: [f64; 4],
    max_divergence: f64,
}

fn doc_kind(doc: &PlaneWaveDoc) -> &'static str {
    match doc {
        PlaneWaveDoc::General { .. } => "general",
        PlaneWaveDoc::Standard { .. } => "standard",
        PlaneWaveDoc::Real { .. } => "real",
        PlaneWaveDoc::Hestenes { .. } => "hestenes",
    }
}

fn admissible_sets(mt: &MassTerm<f64>) -> Vec<gammanum::lie::GeneratorSet<f64>> {
    BUILTIN_NAMES
        .iter()
        .filter_map(|n| builtin_generators::<f64>(n).ok())
        .filter(|gs| gs.ctx() == mt.ctx() && gs.commutes_with(&[&mt.n, &mt.k], 1e-12))
        .collect()
}

fn planewave(cli: &Cli, path: &Path) -> Result<bool, Failure> {
    let doc: PlaneWaveDoc = read_doc(path)?;
    let (field, mt) = doc.build::<f64>()?;
    let ctx = mt.ctx().clone();
    let points = halton_points::<f64>(cli.samples.unwrap_or(DEFAULT_POINTS));
    let mut dirac = 0.0f64;
    let mut kg = 0.0f64;
    let mut norm: Option<f64> = matches!(doc, PlaneWaveDoc::Standard { .. }).then_some(0.0);
    let sets = if ctx.is_real() { Vec::new() } else { admissible_sets(&mt) };
    let mut rows: Vec<CurrentRow> = Vec::new();
    for (i, x) in points.iter().enumerate() {
        let j2 = jet_eval(&field, &ctx, x);
        let j1 = j2.to_jet1();
        let scale = 1.0 + j1.max_norm();
        dirac = dirac.max(dirac_residual(&j1, &mt, None)?.max_norm() / scale);
        kg = kg.max(klein_gordon_residual(&j2, mt.m).max_norm() / scale);
        if let Some(n) = norm.as_mut() {
            *n = n.max((&j2.value * &j2.value.star()).distance(&Gamma::one(&ctx)));
        }
        let mut row = 0;
        for gs in &sets {
            let rep = currents(&j1, gs, CurrentKind::Imaginary)?;
            for (k, (jk, dk)) in rep.j.iter().zip(&rep.divergence).enumerate() {
                let d = dk.abs() / scale.powi(2);
                if i == 0 {
                    rows.push(CurrentRow {
                        set: gs.name().to_string(),
                        generator: k,
                        j: *jk,
                        max_divergence: d,
                    });
                } else {
                    rows[row].max_divergence = rows[row].max_divergence.max(d);
                }
                row += 1;
            }
        }
    }
    let tol = ALGEBRAIC_TOLERANCE * cli.tolerance_scale;
    let ctol = QUADRATIC_TOLERANCE * cli.tolerance_scale;
    let pass = dirac < tol
        && kg < tol
        && norm.map_or(true, |n| n < tol)
        && rows.iter().all(|r| r.max_divergence < ctol);
    let report = PlaneWaveReport {
        schema: REPORT_SCHEMA,
        kind: doc_kind(&doc).to_string(),
        points: points.len(),
        dirac_residual: dirac,
        klein_gordon_residual: kg,
        normalization: norm,
        currents: rows,
        tolerance: tol,
        current_tolerance: ctol,
        pass,
    };
    println!("plane wave ({}) at {} points", report.kind, report.points);
    println!("  dirac residual         {:.3e}", report.dirac_residual);
    println!("  klein-gordon residual  {:.3e}", report.klein_gordon_residual);
    if let Some(n) = report.normalization {
        println!("  normalization          {n:.3e}");
    }
    if !report.currents.is_empty() {
        println!("  {:<16} {:>3} {:>12} {:>12} {:>12} {:>12} {:>12}", "set", "k", "j^0", "j^1", "j^2", "j^3", "max div");
        for r in &report.currents {
            println!(
                "  {:<16} {:>3} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.3e}",
                r.set, r.generator, r.j[0], r.j[1], r.j[2], r.j[3], r.max_divergence
            );
        }
    }
    println!("{}", if pass { "PASS" } else { "FAIL" });
    write_json(&cli.json, &report)?;
    Ok(pass)
}

/// Residual summary of one Dirac-Yang-Mills configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct DymReport {
    schema: u32,
    generators: String,
    points: usize,
    /// Max norms of the Dirac, first, second and grade-3 residuals.
    before: [f64; 4],
    after: Option<[f64; 4]>,
    /// Largest source norm `|J|`.
    source: f64,
    covariance_error: Option<f64>,
    tolerance: f64,
    pass: bool,
}

fn max4(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    std::array::from_fn(|i| a[i].max(b[i]))
}

fn dym(cli: &Cli, path: &Path) -> Result<bool, Failure> {
    let doc: DymDoc = read_doc(path)?;
    let base_doc = DymDoc {
        gauge: None,
        ..doc.clone()
    };
    let cfg: DymConfig<f64> = base_doc.build()?;
    let gauge: Option<FieldDescription<f64>> = match &doc.gauge {
        None => None,
        Some(spec) => Some(spec.build(cfg.gs().ctx())?),
    };
    let after_cfg = match &gauge {
        None => None,
        Some(u) => Some(cfg.gauge_transform(u.clone())?),
    };
    let points = halton_points::<f64>(cli.samples.unwrap_or(DEFAULT_POINTS));
    let mut before = [0.0; 4];
    let mut after = after_cfg.as_ref().map(|_| [0.0; 4]);
    let mut source = 0.0f64;
    let mut cov = gauge.as_ref().map(|_| 0.0f64);
    for x in &points {
        let r = dym_residual(&cfg, x)?;
        before = max4(before, r.max_norms());
        let (psi, _) = cfg.jets(x)?;
        source = source.max(source_j(&psi.value, cfg.gs(), cfg.epsilon)?.max_norm());
        if let (Some(a), Some(c)) = (after.as_mut(), after_cfg.as_ref()) {
            *a = max4(*a, dym_residual(c, x)?.max_norms());
        }
        if let (Some(e), Some(u)) = (cov.as_mut(), gauge.as_ref()) {
            let scale = 1.0 + r.max_norms().into_iter().fold(0.0, f64::max);
            *e = e.max(dym_covariance_error(&cfg, u, x)? / scale);
        }
    }
    let tol = QUADRATIC_TOLERANCE * cli.tolerance_scale;
    let pass = cov.map_or(true, |e| e < tol);
    let report = DymReport {
        schema: REPORT_SCHEMA,
        generators: doc.generators.clone(),
        points: points.len(),
        before,
        after,
        source,
        covariance_error: cov,
        tolerance: tol,
        pass,
    };
    let names = ["dirac", "first field equation", "second field equation", "grade-3 part"];
    println!("dirac-yang-mills ({}) at {} points", report.generators, report.points);
    for (i, name) in names.iter().enumerate() {
        match report.after {
            Some(a) => println!("  {name:<24} {:>12.3e} -> {:>12.3e}", report.before[i], a[i]),
            None => println!("  {name:<24} {:>12.3e}", report.before[i]),
        }
    }
    println!("  {:<24} {:>12.3e}", "source", report.source);
    if let Some(e) = report.covariance_error {
        println!("  {:<24} {:>12.3e}", "covariance error", e);
    }
    println!("{}", if pass { "PASS" } else { "FAIL" });
    write_json(&cli.json, &report)?;
    Ok(pass)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SavedReport {
    Suite(SuiteReport),
    Explore(ExploreReport),
    PlaneWave(PlaneWaveReport),
    Dym(DymReport),
}

fn print_explore(r: &ExploreReport) {
    println!("six-generator scan, seed {:#x}, {} samples per signature", r.seed, r.samples);
    println!(
        "  {:<22} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "signature", "UU*-e", "grade 1", "grade 2", "grade 3", "grade 4", "grade 5", "grade 6"
    );
    for row in &r.rows {
        let sig: String = row.signature.iter().map(|s| if *s > 0 { '+' } else { '-' }).collect();
        print!("  {:<22} {:>10.2e} {:>10.2e}", sig, row.unitarity, row.vector_leakage);
        for l in row.leakage {
            print!(" {l:>10.2e}");
        }
        println!();
    }
}

fn report(cli: &Cli) -> Result<bool, Failure> {
    let path = cli
        .json
        .as_ref()
        .ok_or_else(|| Failure::Usage("report needs --json PATH".into()))?;
    match read_doc::<SavedReport>(path)? {
        SavedReport::Suite(r) => {
            print!("{}", r.summary());
            Ok(r.pass)
        }
        SavedReport::Explore(r) => {
            print_explore(&r);
            Ok(true)
        }
        SavedReport::PlaneWave(r) => {
            println!("plane wave ({}): dirac {:.3e}, {}", r.kind, r.dirac_residual, if r.pass { "PASS" } else { "FAIL" });
            Ok(r.pass)
        }
        SavedReport::Dym(r) => {
            println!("dirac-yang-mills ({}): {}", r.generators, if r.pass { "PASS" } else { "FAIL" });
            Ok(r.pass)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    if !(cli.tolerance_scale.is_finite() && cli.tolerance_scale >= 0.0) {
        return Err(Failure::Usage("--tolerance-scale must be a nonnegative number".into()));
    }
    match &cli.command {
        Command::Verify { suite } => {
            let opts = VerifyOptions {
                seed: cli.seed,
                samples: cli.samples.unwrap_or(DEFAULT_SAMPLES),
                tolerance_scale: cli.tolerance_scale,
            };
            let r = run_suite(*suite, &opts);
            print!("{}", r.summary());
            write_json(&cli.json, &r)?;
            Ok(r.pass)
        }
        Command::Planewave { spec } => planewave(cli, spec),
        Command::Dym { config } => dym(cli, config),
        Command::Report => report(cli),
        Command::ExploreN6 => {
            let r = explore_n6(cli.samples.unwrap_or(1000), cli.seed)?;
            print_explore(&r);
            write_json(&cli.json, &r)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(f) => {
            eprintln!("{f}");
            ExitCode::from(f.code())
        }
    }
}
