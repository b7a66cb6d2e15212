//! Command-line front end: argument parsing, curve and report writers.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::area::{
    circumcenter, closed_form_area, curvature_centroid_polygon, curvature_centroid_samples,
    curvature_centroid_support, curvature_samples, pedal_polygon, polygon_signed_area, AreaFamily,
    Polygon,
};
use crate::error::GeometryError;
use crate::harness::{
    conjecture_check_contrapedal, family_area, family_evaluator, grid_for, identity_suite, scan,
    support_identity_suite, ConjectureStatus, LocusSpec,
};
use crate::kernel::{sample_curve, Ellipse, ParamGrid, Point2, SampledCurve, SupportCurve};

/// Environment variable overriding the default report threshold.
pub const TOL_ENV: &str = "PEDALLAB_TOL";
pub const DEFAULT_THRESHOLD: f64 = 1e-6;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_GEOMETRY: i32 = 65;

#[derive(Debug, Error)]
pub enum CliError {
    /// `--help` or `--version` output; not a failure.
    #[error("{0}")]
    Info(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Info(_) => EXIT_PASS,
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
            CliError::Geometry(_) => EXIT_GEOMETRY,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Sample a curve to csv, json or svg.
    Sample,
    /// Area of one curve by quadrature and in closed form.
    Area,
    /// Sweep M over a locus and report area invariance.
    Scan,
    /// Run the area identity suites.
    Identities,
    /// Curvature centroid of a polygon (--vertices) or of the ellipse.
    Centroid,
    /// Pedal polygon of --vertices with respect to M.
    Polygon,
    /// Check where the contrapedal crosses itself.
    Conjecture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LocusArg {
    Circle,
    Ellipse,
}

#[derive(Parser, Debug)]
#[command(name = "pedallab", version, about = "Pedal curves of the ellipse and their areas")]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Debug)]
struct Opts {
    /// Semi-major axis
    #[arg(long, global = true, default_value_t = 2.0)]
    a: f64,
    /// Semi-minor axis
    #[arg(long, global = true, default_value_t = 1.0)]
    b: f64,
    /// Pedal point "x,y"
    #[arg(long, global = true, allow_hyphen_values = true)]
    m: Option<String>,
    /// Place M on the ellipse at this parameter
    #[arg(long, global = true, allow_hyphen_values = true)]
    s: Option<f64>,
    /// ellipse, pedal, contrapedal, rotated, interpolated, evolutoid, hybrid, pseudo-talbot, negative-pedal
    #[arg(long, global = true, default_value = "pedal")]
    family: String,
    /// Rotation angle for rotated and evolutoid
    #[arg(long, global = true, allow_hyphen_values = true, default_value_t = 0.0)]
    theta: f64,
    /// Interpolation weight for interpolated
    #[arg(long, global = true, allow_hyphen_values = true, default_value_t = 0.5)]
    mu: f64,
    /// Grid size
    #[arg(long, global = true, default_value_t = 2048)]
    n: usize,
    /// Grid offset in steps, in [0, 1)
    #[arg(long, global = true, default_value_t = 0.0)]
    offset: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file (stdout when absent)
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = LocusArg::Circle)]
    locus: LocusArg,
    /// Locus circle radius
    #[arg(long, global = true, default_value_t = 0.5)]
    r: f64,
    /// Number of locus points
    #[arg(long, global = true, default_value_t = 64)]
    count: usize,
    /// Locus start angle
    #[arg(long, global = true, allow_hyphen_values = true, default_value_t = 0.0)]
    phase: f64,
    /// Polygon vertices "x,y;x,y;..."
    #[arg(long, global = true, allow_hyphen_values = true)]
    vertices: Option<String>,
    /// Pass/fail threshold (overrides PEDALLAB_TOL)
    #[arg(long, global = true)]
    tol: Option<f64>,
}

/// Validated invocation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub a: f64,
    pub b: f64,
    pub m: Point2<f64>,
    /// Ellipse parameter of `m` when it was placed with `--s`.
    pub s: Option<f64>,
    pub family: AreaFamily<f64>,
    pub n: usize,
    pub offset: f64,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub locus: LocusArg,
    pub r: f64,
    pub count: usize,
    pub phase: f64,
    pub vertices: Option<Vec<Point2<f64>>>,
    pub threshold: f64,
}

impl RunConfig {
    pub fn ellipse(&self) -> Ellipse<f64> {
        Ellipse::new(self.a, self.b).expect("validated in parse_args")
    }

    pub fn grid(&self) -> ParamGrid<f64> {
        ParamGrid::with_layout(0.0, self.n, self.offset).expect("validated in parse_args")
    }

    pub fn locus_spec(&self) -> Result<LocusSpec<f64>, CliError> {
        match self.locus {
            LocusArg::Circle => LocusSpec::concentric_circle(self.r, self.count, self.phase),
            LocusArg::Ellipse => LocusSpec::ellipse_boundary(self.count, self.phase),
        }
        .map_err(|e| CliError::Usage(format!("--r/--count: {e}")))
    }
}

fn parse_point(flag: &str, s: &str) -> Result<Point2<f64>, CliError> {
    let bad = || CliError::Usage(format!("{flag}: expected \"x,y\", got \"{s}\""));
    let (x, y) = s.split_once(',').ok_or_else(bad)?;
    let x: f64 = x.trim().parse().map_err(|_| bad())?;
    let y: f64 = y.trim().parse().map_err(|_| bad())?;
    if !(x.is_finite() && y.is_finite()) {
        return Err(bad());
    }
    Ok(Point2::new(x, y))
}

fn parse_vertices(s: &str) -> Result<Vec<Point2<f64>>, CliError> {
    s.split(';')
        .filter(|v| !v.trim().is_empty())
        .map(|v| parse_point("--vertices", v))
        .collect()
}

/// Parses a family name; `theta` and `mu` parametrize the families that take them.
pub fn parse_family(name: &str, theta: f64, mu: f64) -> Result<AreaFamily<f64>, CliError> {
    Ok(match name {
        "ellipse" => AreaFamily::Ellipse,
        "pedal" => AreaFamily::Pedal,
        "contrapedal" => AreaFamily::Contrapedal,
        "rotated" => AreaFamily::Rotated(theta),
        "interpolated" => AreaFamily::Interpolated(mu),
        "evolutoid" => AreaFamily::Evolutoid(theta),
        "hybrid" => AreaFamily::Hybrid,
        "pseudo-talbot" => AreaFamily::PseudoTalbot,
        "negative-pedal" => AreaFamily::NegativePedal,
        other => {
            return Err(CliError::Usage(format!(
                "--family: unknown family \"{other}\""
            )))
        }
    })
}

/// Threshold from `--tol`, else `PEDALLAB_TOL`, else the default.
pub fn resolve_threshold(flag: Option<f64>, env: Option<&str>) -> Result<f64, CliError> {
    let t = match (flag, env) {
        (Some(t), _) => t,
        (None, Some(v)) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{TOL_ENV}: not a number: \"{v}\"")))?,
        (None, None) => DEFAULT_THRESHOLD,
    };
    if !(t > 0.0 && t.is_finite()) {
        return Err(CliError::Usage(format!("--tol: must be positive, got {t}")));
    }
    Ok(t)
}

/// Parses `argv` (program name first) into a validated [`RunConfig`].
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError::Info(e.to_string()),
        _ => CliError::Usage(e.to_string().trim_end().to_string()),
    })?;
    let o = cli.opts;
    if !(o.a.is_finite() && o.b.is_finite() && o.a >= o.b && o.b > 0.0) {
        return Err(CliError::Usage(format!(
            "--a/--b: need a >= b > 0, got a={}, b={} (swap the axes to rotate the ellipse)",
            o.a, o.b
        )));
    }
    if o.n < ParamGrid::<f64>::MIN_COUNT {
        return Err(CliError::Usage(format!("--n: need at least 8 nodes, got {}", o.n)));
    }
    if !(0.0..1.0).contains(&o.offset) {
        return Err(CliError::Usage(format!("--offset: must lie in [0, 1), got {}", o.offset)));
    }
    if o.count < LocusSpec::<f64>::MIN_COUNT {
        return Err(CliError::Usage(format!("--count: need at least 4, got {}", o.count)));
    }
    let family = parse_family(&o.family, o.theta, o.mu)?;
    let e = Ellipse::new(o.a, o.b)?;
    let m = match (&o.m, o.s) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage("--m and --s are mutually exclusive".into()))
        }
        (Some(m), None) => parse_point("--m", m)?,
        (None, Some(s)) => e.point(s),
        (None, None) => Point2::origin(),
    };
    let vertices = o.vertices.as_deref().map(parse_vertices).transpose()?;
    let env = std::env::var(TOL_ENV).ok();
    let threshold = resolve_threshold(o.tol, env.as_deref())?;
    let command = cli.command.ok_or_else(|| {
        CliError::Usage(
            "missing subcommand (sample, area, scan, identities, centroid, polygon, conjecture)"
                .into(),
        )
    })?;
    Ok(RunConfig {
        command,
        a: o.a,
        b: o.b,
        m,
        s: o.s,
        family,
        n: o.n,
        offset: o.offset,
        format: o.format,
        output: o.output,
        locus: o.locus,
        r: o.r,
        count: o.count,
        phase: o.phase,
        vertices,
        threshold,
    })
}

fn io_err(cfg: &RunConfig) -> impl Fn(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: cfg
            .output
            .as_ref()
            .map_or_else(|| "<stdout>".into(), |p| p.display().to_string()),
        source,
    }
}

fn write_output(cfg: &RunConfig, body: &str) -> Result<(), CliError> {
    let err = io_err(cfg);
    match &cfg.output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path).map_err(&err)?);
            w.write_all(body.as_bytes()).map_err(&err)?;
            w.flush().map_err(&err)
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(body.as_bytes()).map_err(&err)?;
            out.flush().map_err(&err)
        }
    }
}

/// CSV rendering: `t,x,y` header, one row per node, 17 significant digits.
pub fn curve_csv(c: &SampledCurve<f64>) -> String {
    let mut s = String::from("t,x,y\n");
    for (t, p) in c.iter() {
        let _ = writeln!(s, "{t:.16e},{:.16e},{:.16e}", p.x, p.y);
    }
    s
}

/// JSON rendering with a `meta` block describing the run.
pub fn curve_json(c: &SampledCurve<f64>, cfg: &RunConfig) -> String {
    let points: Vec<[f64; 3]> = c.iter().map(|(t, p)| [t, p.x, p.y]).collect();
    let doc = json!({
        "meta": {
            "family": cfg.family,
            "a": cfg.a,
            "b": cfg.b,
            "m": [cfg.m.x, cfg.m.y],
            "params": {
                "n": c.len(),
                "offset": cfg.offset,
                "s": cfg.s,
            },
        },
        "points": points,
    });
    serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n"
}

/// SVG rendering: one closed stroked path, y axis pointing up, viewBox
/// fitted to the bounding box plus a 5% margin.
pub fn curve_svg(c: &SampledCurve<f64>) -> String {
    let pts = c.points();
    let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) =
        (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in pts {
        lo_x = lo_x.min(p.x);
        hi_x = hi_x.max(p.x);
        lo_y = lo_y.min(-p.y);
        hi_y = hi_y.max(-p.y);
    }
    let span = (hi_x - lo_x).max(hi_y - lo_y).max(f64::MIN_POSITIVE);
    let pad_x = 0.05 * (hi_x - lo_x).max(0.01 * span);
    let pad_y = 0.05 * (hi_y - lo_y).max(0.01 * span);
    let (vx, vy) = (lo_x - pad_x, lo_y - pad_y);
    let (vw, vh) = (hi_x - lo_x + 2.0 * pad_x, hi_y - lo_y + 2.0 * pad_y);

    let mut d = String::new();
    for (k, p) in pts.iter().enumerate() {
        let cmd = if k == 0 { 'M' } else { 'L' };
        let _ = write!(d, "{cmd}{} {} ", p.x, -p.y);
    }
    d.push('Z');
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vx} {vy} {vw} {vh}\">\n\
         <path d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n\
         </svg>\n"
    )
}

/// Writes `c` in the configured format to the configured output.
pub fn write_curve(c: &SampledCurve<f64>, cfg: &RunConfig) -> Result<(), CliError> {
    let body = match cfg.format {
        Format::Csv => curve_csv(c),
        Format::Json => curve_json(c, cfg),
        Format::Svg => curve_svg(c),
    };
    write_output(cfg, &body)
}

/// Writes `report` as pretty JSON to the output file, or to stdout when none is set.
pub fn write_report<T: Serialize>(report: &T, cfg: &RunConfig) -> Result<(), CliError> {
    let body = serde_json::to_string_pretty(report).expect("reports serialize") + "\n";
    write_output(cfg, &body)
}

// Summary lines go to stdout when the report goes to a file, stderr otherwise.
fn summary(cfg: &RunConfig, line: &str) {
    if cfg.output.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn verdict(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Executes a parsed invocation; returns the process exit status.
pub fn run(cfg: &RunConfig) -> Result<i32, CliError> {
    let e = cfg.ellipse();
    let grid = cfg.grid();
    match cfg.command {
        Command::Sample => {
            let f = family_evaluator(cfg.family, e, cfg.m, cfg.s)?;
            let g = grid_for(cfg.family, cfg.s, &grid)?;
            let c = sample_curve(f, &g)?;
            write_curve(&c, cfg)?;
            Ok(EXIT_PASS)
        }
        Command::Area => {
            let q = family_area(cfg.family, &e, cfg.m, cfg.s, &grid)?;
            let closed = closed_form_area(cfg.family, &e, cfg.m).ok();
            let rel_err = closed.map(|c| (q - c).abs() / c.abs());
            write_report(
                &json!({
                    "family": cfg.family,
                    "a": cfg.a,
                    "b": cfg.b,
                    "m": cfg.m,
                    "n": cfg.n,
                    "area_quadrature": q,
                    "area_closed_form": closed,
                    "rel_err": rel_err,
                }),
                cfg,
            )?;
            let err = rel_err.map_or_else(|| "n/a".into(), |r| format!("{r:.3e}"));
            summary(cfg, &format!("{} area {q:.12e} rel_err {err}", cfg.family));
            Ok(verdict(rel_err.is_none_or(|r| r < cfg.threshold)))
        }
        Command::Scan => {
            let r = scan(&e, cfg.family, &cfg.locus_spec()?, &grid)?;
            write_report(&r, cfg)?;
            summary(
                cfg,
                &format!(
                    "{} mean {:.12e} max_abs_dev {:.3e} max_rel_dev {:.3e} failed {} threshold {:.1e}",
                    r.family, r.mean, r.max_abs_dev, r.max_rel_dev, r.failed_samples, cfg.threshold
                ),
            );
            Ok(verdict(r.passes(cfg.threshold)))
        }
        Command::Identities => {
            let ms = probe_points();
            let thetas = [0.0, 0.5, 1.0, 1.5];
            let mus = [-0.5, 0.0, 0.25, 0.5, 1.0, 1.5];
            let mut reps = identity_suite(&e, &ms, &thetas, &mus, &grid)?;
            let s = SupportCurve::fourier(10.0, &[(3, 1.0, 0.0)]);
            reps.extend(support_identity_suite(&s, &ms, &thetas, &grid)?);
            write_report(&reps, cfg)?;
            let mut pass = true;
            for r in &reps {
                // residuals are absolute; scale the threshold by the base area
                let ok = r.max_residual < cfg.threshold * e.area();
                pass &= ok;
                summary(cfg, &format!("{:<46} max_residual {:.3e}", r.name, r.max_residual));
            }
            Ok(verdict(pass))
        }
        Command::Centroid => {
            let k = match &cfg.vertices {
                Some(v) => {
                    let p = Polygon::new(v.clone())?;
                    json!({ "polygon": v, "centroid": curvature_centroid_polygon(&p)? })
                }
                None => {
                    let support = curvature_centroid_support(&e.support());
                    let cs = curvature_samples(
                        |t| (e.point(t), e.velocity(t), e.acceleration(t)),
                        &grid,
                    );
                    let sampled =
                        curvature_centroid_samples(&cs.points, &cs.curvatures, &cs.arc_steps)?;
                    json!({ "a": cfg.a, "b": cfg.b, "support": support, "samples": sampled })
                }
            };
            write_report(&k, cfg)?;
            Ok(EXIT_PASS)
        }
        Command::Polygon => {
            let v = cfg
                .vertices
                .clone()
                .ok_or_else(|| CliError::Usage("--vertices: required for polygon".into()))?;
            let p = Polygon::new(v)?;
            let pedal = pedal_polygon(&p, cfg.m)?;
            let area = polygon_signed_area(&pedal);
            let closed = SampledCurve::from_points(pedal.vertices().to_vec())?;
            match cfg.format {
                Format::Svg => write_curve(&closed, cfg)?,
                Format::Csv => write_curve(&closed, cfg)?,
                Format::Json => write_report(
                    &json!({
                        "polygon": p.vertices(),
                        "m": cfg.m,
                        "pedal": pedal.vertices(),
                        "pedal_area": area,
                        "circumcenter": circumcenter(&p).ok(),
                    }),
                    cfg,
                )?,
            }
            summary(cfg, &format!("pedal polygon area {area:.12e}"));
            Ok(EXIT_PASS)
        }
        Command::Conjecture => {
            let r = conjecture_check_contrapedal(&e, cfg.m, &grid)?;
            write_report(&r, cfg)?;
            let pass = match r.status {
                ConjectureStatus::DegenerateM => true,
                ConjectureStatus::Checked => r
                    .max_distance()
                    .is_some_and(|d| d < cfg.threshold.max(1e-4)),
            };
            summary(
                cfg,
                &format!(
                    "{:?} crossings {} max_distance {}",
                    r.status,
                    r.crossings.len(),
                    r.max_distance()
                        .map_or_else(|| "n/a".into(), |d| format!("{d:.3e}"))
                ),
            );
            Ok(verdict(pass))
        }
    }
}

/// Fixed pedal points used by the `identities` subcommand.
pub fn probe_points() -> Vec<Point2<f64>> {
    (0..12)
        .map(|k| {
            let k = k as f64;
            // golden-angle spiral out to radius 3
            let angle = k * 2.399_963_229_728_653;
            Point2::from_angle(angle) * (0.25 * (k + 1.0))
        })
        .collect()
}

/// Parses, runs, and reports errors on stderr; returns the exit status.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let outcome = parse_args(argv).and_then(|cfg| run(&cfg));
    match outcome {
        Ok(code) => code,
        Err(CliError::Info(text)) => {
            print!("{text}");
            EXIT_PASS
        }
        Err(e) => {
            eprintln!("pedallab: {e}");
            e.exit_code()
        }
    }
}
