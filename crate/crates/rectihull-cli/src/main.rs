//! Command-line surface: hull construction, angle estimation, region
//! sampling, set distances, and the benchmark experiment.
//!
//! Exit codes: 0 ok, 2 usage or parse error, 3 empty input, 4 numerical
//! failure (stalled rejection sampling). `RECTIHULL_THREADS` caps the worker
//! pool; all outputs are byte-deterministic for fixed flags regardless of
//! the thread count.

mod svg;

use std::f64::consts::FRAC_PI_4;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rectihull_core::estimate::{estimate_angle, run_alpha_baseline, run_convergence};
use rectihull_core::hull::build_hull;
use rectihull_core::io::{
    parse_points_csv, write_alpha_csv, write_angle_scan_json, write_convergence_csv,
    write_hull_json, write_points_csv, HullJsonMembership,
};
use rectihull_core::metrics::{
    dmu_mc, hausdorff_memberships, hausdorff_points, hausdorff_region_points, SetMembership,
};
use rectihull_core::region::{s5_region, uniform_sample, Region};
use rectihull_core::{Error, Point2};

#[derive(Parser)]
#[command(name = "rectihull", version, about = "Rectilinear hull estimation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the hull of a point file at a fixed axis angle.
    Hull(HullArgs),
    /// Scan hull area over the angle grid and report the minimizing angle.
    Angle(AngleArgs),
    /// Draw a uniform sample from a region file.
    Sample(SampleArgs),
    /// Distance between two sets given as csv:/region:/hull: specs.
    Distance(DistanceArgs),
    /// Run a named benchmark experiment.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct HullArgs {
    /// Input CSV of points, one `x,y` per line.
    #[arg(long)]
    points: PathBuf,
    /// Axis angle in radians (reduced modulo a quarter turn).
    #[arg(long)]
    theta: f64,
    /// Output hull JSON path.
    #[arg(long)]
    out: PathBuf,
    /// Optional SVG figure path.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct AngleArgs {
    #[arg(long)]
    points: PathBuf,
    /// Number of grid angles in [0, pi/2); at least 8.
    #[arg(long)]
    grid: usize,
    /// Golden-section refinement inside the bracketing grid cells.
    #[arg(long)]
    refine: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SampleArgs {
    /// Region JSON file.
    #[arg(long)]
    region: PathBuf,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct DistanceArgs {
    /// `hausdorff` or `measure`.
    #[arg(long)]
    mode: String,
    /// First set: `csv:FILE`, `region:FILE.json`, or `hull:FILE.json`.
    #[arg(long)]
    a: String,
    /// Second set, same forms.
    #[arg(long)]
    b: String,
    /// Monte Carlo sample size for `measure`.
    #[arg(long, default_value_t = 50_000)]
    mc: usize,
    /// Grid pitch for discretized Hausdorff distances.
    #[arg(long, default_value_t = 0.005)]
    h: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Experiment name; `s5` is the shipped benchmark.
    name: String,
    /// Comma-separated sample sizes.
    #[arg(long, default_value = "1000,2000")]
    n: String,
    /// Number of seeds (0..seeds-1).
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    /// Alpha for the baseline hull.
    #[arg(long, default_value_t = 1.0 / 3.0)]
    alpha: f64,
    /// Axis angle for the hull estimator.
    #[arg(long, default_value_t = FRAC_PI_4)]
    theta: f64,
    /// Output CSV path; the alpha baseline goes to `<stem>_alpha.csv`.
    #[arg(long)]
    out: PathBuf,
    /// Optional directory for SVG figures.
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long, default_value_t = 50_000)]
    mc: usize,
    #[arg(long, default_value_t = 0.005)]
    h: f64,
}

/// Failure with a process exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: 2,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::EmptySample | Error::EmptySet => 3,
            Error::RejectionStall { .. } => 4,
            _ => 2,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 2,
            msg: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("rectihull: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn init_thread_pool() {
    if let Ok(v) = std::env::var("RECTIHULL_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn read_points(path: &Path) -> Result<Vec<Point2>, Failure> {
    let text = std::fs::read_to_string(path)?;
    let pts = parse_points_csv(&text)?;
    if pts.is_empty() {
        return Err(Error::EmptySample.into());
    }
    Ok(pts)
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Hull(a) => cmd_hull(a),
        Command::Angle(a) => cmd_angle(a),
        Command::Sample(a) => cmd_sample(a),
        Command::Distance(a) => cmd_distance(a),
        Command::Experiment(a) => cmd_experiment(a),
    }
}

fn cmd_hull(a: HullArgs) -> Result<(), Failure> {
    let pts = read_points(&a.points)?;
    let hull = build_hull(&pts, a.theta)?;
    std::fs::write(&a.out, write_hull_json(&hull))?;
    if let Some(svg_path) = a.svg {
        let fig = svg::Figure {
            hull: &hull,
            region_outline: Vec::new(),
        };
        std::fs::write(svg_path, svg::render(&fig))?;
    }
    Ok(())
}

fn cmd_angle(a: AngleArgs) -> Result<(), Failure> {
    if a.grid < 8 {
        return Err(Failure::usage(format!(
            "--grid must be at least 8, got {}",
            a.grid
        )));
    }
    let pts = read_points(&a.points)?;
    let scan = estimate_angle(&pts, a.grid, a.refine)?;
    std::fs::write(&a.out, write_angle_scan_json(&scan))?;
    Ok(())
}

fn cmd_sample(a: SampleArgs) -> Result<(), Failure> {
    let text = std::fs::read_to_string(&a.region)?;
    let region = Region::from_json(&text)?;
    let batch = uniform_sample(&region, a.n, a.seed)?;
    std::fs::write(&a.out, write_points_csv(&batch.points))?;
    Ok(())
}

enum SpecSet {
    Points(Vec<Point2>),
    Member(Box<dyn SetMembership + Send + Sync>),
}

fn parse_spec(spec: &str) -> Result<SpecSet, Failure> {
    let (kind, path) = spec
        .split_once(':')
        .ok_or_else(|| Failure::usage(format!("bad spec {spec:?}: expected kind:path")))?;
    let text = std::fs::read_to_string(path)?;
    match kind {
        "csv" => {
            let pts = parse_points_csv(&text)?;
            if pts.is_empty() {
                return Err(Error::EmptySample.into());
            }
            Ok(SpecSet::Points(pts))
        }
        "region" => Ok(SpecSet::Member(Box::new(Region::from_json(&text)?))),
        "hull" => Ok(SpecSet::Member(Box::new(HullJsonMembership::from_json(
            &text,
        )?))),
        other => Err(Failure::usage(format!(
            "unknown spec kind {other:?}: expected csv, region, or hull"
        ))),
    }
}

fn cmd_distance(a: DistanceArgs) -> Result<(), Failure> {
    let sa = parse_spec(&a.a)?;
    let sb = parse_spec(&a.b)?;
    match a.mode.as_str() {
        "hausdorff" => {
            let (value, bound) = match (&sa, &sb) {
                (SpecSet::Points(pa), SpecSet::Points(pb)) => {
                    (hausdorff_points(pa, pb)?, 0.0)
                }
                (SpecSet::Member(f), SpecSet::Points(p))
                | (SpecSet::Points(p), SpecSet::Member(f)) => {
                    let rep = hausdorff_region_points(f.as_ref(), p, a.h)?;
                    (rep.value, rep.error_bound)
                }
                (SpecSet::Member(f), SpecSet::Member(g)) => {
                    let rep = hausdorff_memberships(f.as_ref(), g.as_ref(), a.h)?;
                    (rep.value, rep.error_bound)
                }
            };
            let mut out = String::new();
            let _ = writeln!(out, "value {}", rectihull_core::io::fmt_real(value));
            let _ = writeln!(out, "error_bound {}", rectihull_core::io::fmt_real(bound));
            print!("{out}");
            Ok(())
        }
        "measure" => {
            let (f, g) = match (&sa, &sb) {
                (SpecSet::Member(f), SpecSet::Member(g)) => (f, g),
                _ => {
                    return Err(Failure::usage(
                        "measure mode needs two region:/hull: specs (point sets have measure zero)",
                    ))
                }
            };
            let window = f.window().union(&g.window());
            let est = dmu_mc(f.as_ref(), g.as_ref(), window, a.mc, a.seed);
            let mut out = String::new();
            let _ = writeln!(out, "value {}", rectihull_core::io::fmt_real(est.value));
            let _ = writeln!(
                out,
                "std_error {}",
                rectihull_core::io::fmt_real(est.std_error)
            );
            print!("{out}");
            Ok(())
        }
        other => Err(Failure::usage(format!(
            "unknown mode {other:?}: expected hausdorff or measure"
        ))),
    }
}

fn parse_n_list(text: &str) -> Result<Vec<usize>, Failure> {
    let mut ns = Vec::new();
    for part in text.split(',') {
        let n: usize = part
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("bad sample size {part:?}")))?;
        if n == 0 {
            return Err(Failure::usage("sample sizes must be positive"));
        }
        ns.push(n);
    }
    Ok(ns)
}

fn cmd_experiment(a: ExperimentArgs) -> Result<(), Failure> {
    if a.name != "s5" {
        return Err(Failure::usage(format!(
            "unknown experiment {:?}: available: s5",
            a.name
        )));
    }
    if a.seeds == 0 {
        return Err(Failure::usage("--seeds must be positive"));
    }
    let region = s5_region();
    let ns = parse_n_list(&a.n)?;
    let seeds: Vec<u64> = (0..a.seeds).collect();
    let rows = run_convergence(&region, a.theta, &ns, &seeds, a.h, a.mc)?;
    std::fs::write(&a.out, write_convergence_csv(&rows))?;
    let alpha_rows = run_alpha_baseline(&region, a.alpha, &ns, &seeds, a.mc)?;
    std::fs::write(alpha_out_path(&a.out), write_alpha_csv(&alpha_rows))?;
    if let Some(dir) = a.svg {
        std::fs::create_dir_all(&dir)?;
        let outline = s5_outline();
        for &n in &ns {
            let batch = uniform_sample(&region, n, seeds[0])?;
            let hull = build_hull(&batch.points, a.theta)?;
            let fig = svg::Figure {
                hull: &hull,
                region_outline: outline.clone(),
            };
            std::fs::write(dir.join(format!("s5_n{n}.svg")), svg::render(&fig))?;
        }
    }
    Ok(())
}

fn alpha_out_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".to_string());
    out.with_file_name(format!("{stem}_alpha.csv"))
}

fn s5_outline() -> Vec<Vec<Point2>> {
    vec![
        vec![
            Point2::new(0.0, 0.0),
            Point2::new(0.5, 0.5),
            Point2::new(0.0, 1.0),
        ],
        vec![
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.5, 0.5),
        ],
    ]
}
