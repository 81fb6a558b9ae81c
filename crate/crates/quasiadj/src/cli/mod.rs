//! Command-line surface: input loading by file extension, table and JSON
//! rendering, and an SVG plot of the two-branch face arrangement.
//!
//! Inputs ending in `.germ` are parsed and resolved by blowups (so the
//! blowup trace is available); inputs ending in `.graph` load resolution
//! data directly (trace-dependent reports are then unavailable). Exit
//! codes: 0 on success, 2 for unsupported requests, 3 for failed data
//! validation, 1 for every other error. JSON output renders rationals as
//! `p/q` strings.

mod svg;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{parse_germ, Rat};
use crate::lattice::IdealHandle;
use crate::resolution::{
    load_resolution_graph, resolve_embedded, BlowupTrace, ResolutionData,
};
use crate::spectra::{self, SpectrumElement, WeightVector};
use crate::walls::{self, CubePoint, WallCandidate};
use crate::{Error, Result};

/// Exact invariants of plane-curve germs at the origin.
#[derive(Parser)]
#[command(
    name = "quasiadj",
    version,
    about = "Exact invariants of plane-curve germs at the origin"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Resolve the input and print the exceptional-divisor data
    Resolve(CommonArgs),
    /// List the faces of quasiadjunction (one or two branches)
    Faces(FacesArgs),
    /// Quasiadjunction ideal and its log variant at a cube point
    Ideal(IdealArgs),
    /// Spectrum slice along a weight line (s-convention)
    Spectrum(SpectrumArgs),
    /// Diagonal spectrum plus the number of faces met
    Diagonal(CommonArgs),
    /// Bernstein hyperplane factors from the face arrangement
    Bernstein(CommonArgs),
    /// Milnor-number consistency report (germ input only)
    Milnor(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Input file: .germ (resolved by blowups) or .graph (loaded directly)
    input: PathBuf,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct FacesArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Use only rupture-divisor candidate walls
    #[arg(long)]
    rupture_only: bool,
    /// Also write an SVG plot of the arrangement (two branches only)
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct IdealArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Cube point: comma-separated rationals in [0,1), e.g. 1/2,1/3
    #[arg(long, value_name = "COORDS")]
    at: String,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Positive integer weights with gcd 1, one per branch, e.g. 1,2
    #[arg(long, value_name = "WEIGHTS")]
    weights: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

/// Parses the process arguments, runs the command, prints the report to
/// stdout (errors go to stderr), and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(report) => {
            print!("{report}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

struct Input {
    data: ResolutionData,
    trace: Option<BlowupTrace>,
}

fn load_input(path: &Path) -> Result<Input> {
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    match ext {
        "germ" => {
            let text = fs::read_to_string(path)?;
            let spec = parse_germ(&text)?;
            let (data, trace) = resolve_embedded(&spec)?;
            Ok(Input {
                data,
                trace: Some(trace),
            })
        }
        "graph" => {
            let text = fs::read_to_string(path)?;
            Ok(Input {
                data: load_resolution_graph(&text)?,
                trace: None,
            })
        }
        _ => Err(Error::Unsupported {
            msg: format!(
                "input must end in .germ or .graph: {}",
                path.display()
            ),
        }),
    }
}

fn execute(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Resolve(args) => {
            let input = load_input(&args.input)?;
            cmd_resolve(&input.data, args.format)
        }
        Command::Faces(args) => {
            let input = load_input(&args.common.input)?;
            cmd_faces(&input.data, args)
        }
        Command::Ideal(args) => {
            let input = load_input(&args.common.input)?;
            cmd_ideal(&input.data, &args.at, args.common.format)
        }
        Command::Spectrum(args) => {
            let input = load_input(&args.common.input)?;
            cmd_spectrum(&input.data, &args.weights, args.common.format)
        }
        Command::Diagonal(args) => {
            let input = load_input(&args.input)?;
            cmd_diagonal(&input.data, args.format)
        }
        Command::Bernstein(args) => {
            let input = load_input(&args.input)?;
            cmd_bernstein(&input.data, args.format)
        }
        Command::Milnor(args) => {
            let input = load_input(&args.input)?;
            let trace = input.trace.as_ref().ok_or_else(|| Error::Unsupported {
                msg: "the Milnor report needs the blowup trace; supply a .germ input"
                    .into(),
            })?;
            cmd_milnor(&input.data, trace, args.format)
        }
    }
}

/// Parses `p/q` or integer rationals separated by commas.
fn parse_rationals(text: &str) -> Result<Vec<Rat>> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<Rat>().map_err(|_| Error::InvalidCubePoint {
                msg: format!("cannot parse rational `{part}` (expected p/q or integer)"),
            })
        })
        .collect()
}

fn parse_point(text: &str) -> Result<CubePoint> {
    CubePoint::new(parse_rationals(text)?)
}

fn parse_weights(text: &str) -> Result<WeightVector> {
    let weights = text
        .split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<i64>().map_err(|_| Error::InvalidWeights {
                msg: format!("cannot parse weight `{part}` (expected an integer)"),
            })
        })
        .collect::<Result<Vec<i64>>>()?;
    WeightVector::new(weights)
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Error::Unsupported {
        msg: format!("json serialization failed: {e}"),
    })?;
    text.push('\n');
    Ok(text)
}

/// Renders `4*x1+6*x2 = 5` style wall equations; a unit coefficient
/// drops the `1*`.
fn render_wall(coeffs: &[i64], level: i64) -> String {
    let mut out = String::new();
    for (i, &m) in coeffs.iter().enumerate() {
        if i > 0 {
            out.push('+');
        }
        if m == 1 {
            out.push_str(&format!("x{}", i + 1));
        } else {
            out.push_str(&format!("{m}*x{}", i + 1));
        }
    }
    out.push_str(&format!(" = {level}"));
    out
}

fn render_point(coords: &[Rat]) -> String {
    let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn render_closure(handle: &IdealHandle) -> String {
    let parts: Vec<String> = handle.closure.iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

#[derive(Serialize)]
struct IdealDto {
    closure: Vec<i64>,
    codim: u64,
}

impl IdealDto {
    fn new(handle: &IdealHandle) -> IdealDto {
        IdealDto {
            closure: handle.closure.clone(),
            codim: handle.codim,
        }
    }
}

#[derive(Serialize)]
struct WallDto {
    coeffs: Vec<i64>,
    divisor: usize,
    level: i64,
}

impl WallDto {
    fn new(wall: &WallCandidate) -> WallDto {
        WallDto {
            coeffs: wall.coeffs.clone(),
            divisor: wall.divisor + 1,
            level: wall.level,
        }
    }
}

#[derive(Serialize)]
struct ResolveDto {
    adjacency: Vec<(usize, usize)>,
    attach: Vec<usize>,
    branches: Vec<String>,
    canonical: Vec<i64>,
    mult: Vec<Vec<i64>>,
    rupture: Vec<usize>,
    selfint: Vec<i64>,
}

fn cmd_resolve(data: &ResolutionData, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(&ResolveDto {
            adjacency: data
                .lattice
                .adjacency()
                .map(|(i, j)| (i + 1, j + 1))
                .collect(),
            attach: data.attach.iter().map(|&k| k + 1).collect(),
            branches: data.labels.clone(),
            canonical: data.canonical.clone(),
            mult: data.mult.clone(),
            rupture: data.rupture().iter().map(|&k| k + 1).collect(),
            selfint: data.lattice.selfint().to_vec(),
        }),
        Format::Table => {
            let n = data.n_divisors();
            let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
            for (i, j) in data.lattice.adjacency() {
                neighbors[i].push(j + 1);
                neighbors[j].push(i + 1);
            }
            let mut out = format!("divisors {n}  branches {}\n", data.n_branches());
            for (k, nb) in neighbors.iter_mut().enumerate() {
                nb.sort_unstable();
                let adj: Vec<String> = nb.iter().map(|j| format!("E{j}")).collect();
                out.push_str(&format!(
                    "E{}  self {}  canonical {}  neighbors {}\n",
                    k + 1,
                    data.lattice.selfint()[k],
                    data.canonical[k],
                    if adj.is_empty() {
                        "-".to_string()
                    } else {
                        adj.join(" ")
                    }
                ));
            }
            for (i, label) in data.labels.iter().enumerate() {
                let vals: Vec<String> =
                    data.mult[i].iter().map(|v| v.to_string()).collect();
                out.push_str(&format!(
                    "branch {label}  attach E{}  valuations {}\n",
                    data.attach[i] + 1,
                    vals.join(" ")
                ));
            }
            let rupture: Vec<String> =
                data.rupture().iter().map(|k| format!("E{}", k + 1)).collect();
            out.push_str(&format!(
                "rupture {}\n",
                if rupture.is_empty() {
                    "-".to_string()
                } else {
                    rupture.join(" ")
                }
            ));
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct FaceDto {
    coeffs: Vec<i64>,
    depth: u64,
    dim: usize,
    divisor: usize,
    end: Vec<String>,
    end_closed: bool,
    ideal_above: IdealDto,
    ideal_below: IdealDto,
    level: i64,
    start: Vec<String>,
    start_closed: bool,
}

#[derive(Serialize)]
struct FacesDto {
    candidates: usize,
    faces: Vec<FaceDto>,
}

fn cmd_faces(data: &ResolutionData, args: &FacesArgs) -> Result<String> {
    let faces = walls::faces_with_candidates(data, args.rupture_only)?;
    let candidates = walls::wall_candidates_filtered(data, args.rupture_only);
    if let Some(path) = &args.svg {
        if data.n_branches() != 2 {
            return Err(Error::Unsupported {
                msg: "the SVG plot draws the two-branch arrangement only".into(),
            });
        }
        fs::write(path, svg::render(&faces, &candidates))?;
    }
    match args.common.format {
        Format::Json => to_json(&FacesDto {
            candidates: candidates.len(),
            faces: faces
                .iter()
                .map(|f| FaceDto {
                    coeffs: f.coeffs.clone(),
                    depth: f.depth,
                    dim: f.dim,
                    divisor: f.divisor + 1,
                    end: f.end.iter().map(|c| c.to_string()).collect(),
                    end_closed: f.end_closed,
                    ideal_above: IdealDto::new(&f.ideal_above),
                    ideal_below: IdealDto::new(&f.ideal_below),
                    level: f.level,
                    start: f.start.iter().map(|c| c.to_string()).collect(),
                    start_closed: f.start_closed,
                })
                .collect(),
        }),
        Format::Table => {
            let mut out = format!("candidate walls {}\n", candidates.len());
            if faces.is_empty() {
                out.push_str("no faces inside the cube\n");
            }
            for f in &faces {
                let closed = |c: bool| if c { "closed" } else { "open" };
                if f.start == f.end {
                    out.push_str(&format!(
                        "{}  E{}  depth {}  at {}  ideal {}  log {}\n",
                        render_wall(&f.coeffs, f.level),
                        f.divisor + 1,
                        f.depth,
                        render_point(&f.start),
                        render_closure(&f.ideal_below),
                        render_closure(&f.ideal_above),
                    ));
                } else {
                    out.push_str(&format!(
                        "{}  E{}  depth {}  from {} {}  to {} {}  ideal {}  log {}\n",
                        render_wall(&f.coeffs, f.level),
                        f.divisor + 1,
                        f.depth,
                        render_point(&f.start),
                        closed(f.start_closed),
                        render_point(&f.end),
                        closed(f.end_closed),
                        render_closure(&f.ideal_below),
                        render_closure(&f.ideal_above),
                    ));
                }
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct PointDto {
    at: Vec<String>,
    depth: u64,
    hyperplanes: Vec<WallDto>,
    ideal: IdealDto,
    log_ideal: IdealDto,
    on_face: bool,
}

fn cmd_ideal(data: &ResolutionData, at: &str, format: Format) -> Result<String> {
    let x = parse_point(at)?;
    let ideal = walls::quasiadjunction_ideal(data, &x)?;
    let log_ideal = walls::log_quasiadjunction_ideal(data, &x)?;
    let face = walls::face_at(data, &x)?;
    match format {
        Format::Json => to_json(&PointDto {
            at: x.coords().iter().map(|c| c.to_string()).collect(),
            depth: face.as_ref().map_or(0, |f| f.depth),
            hyperplanes: face
                .as_ref()
                .map_or_else(Vec::new, |f| f.hyperplanes.iter().map(WallDto::new).collect()),
            ideal: IdealDto::new(&ideal),
            log_ideal: IdealDto::new(&log_ideal),
            on_face: face.is_some(),
        }),
        Format::Table => {
            let mut out = format!("at {}\n", render_point(x.coords()));
            out.push_str(&format!(
                "quasiadjunction ideal  closure {}  codim {}\n",
                render_closure(&ideal),
                ideal.codim
            ));
            out.push_str(&format!(
                "log variant            closure {}  codim {}\n",
                render_closure(&log_ideal),
                log_ideal.codim
            ));
            match face {
                Some(f) => {
                    out.push_str(&format!("on face: yes  depth {}\n", f.depth));
                    for wall in &f.hyperplanes {
                        out.push_str(&format!(
                            "wall {}  (E{})\n",
                            render_wall(&wall.coeffs, wall.level),
                            wall.divisor + 1
                        ));
                    }
                }
                None => out.push_str("on face: no\n"),
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct ElementDto {
    mirrored: String,
    multiplicity: u64,
    s: String,
}

impl ElementDto {
    fn new(e: &SpectrumElement) -> ElementDto {
        ElementDto {
            mirrored: e.mirrored().to_string(),
            multiplicity: e.multiplicity,
            s: e.value.to_string(),
        }
    }
}

#[derive(Serialize)]
struct SpectrumDto {
    elements: Vec<ElementDto>,
    weights: Vec<i64>,
}

fn render_spectrum_rows(elements: &[SpectrumElement]) -> String {
    if elements.is_empty() {
        return "no spectrum elements in (0,1)\n".to_string();
    }
    let mut out = String::new();
    for e in elements {
        out.push_str(&format!(
            "s = {}  multiplicity {}  mirrored {}\n",
            e.value,
            e.multiplicity,
            e.mirrored()
        ));
    }
    out
}

fn cmd_spectrum(data: &ResolutionData, weights: &str, format: Format) -> Result<String> {
    let w = parse_weights(weights)?;
    let elements = spectra::spectrum_line(data, &w)?;
    match format {
        Format::Json => to_json(&SpectrumDto {
            elements: elements.iter().map(ElementDto::new).collect(),
            weights: w.weights().to_vec(),
        }),
        Format::Table => {
            let parts: Vec<String> =
                w.weights().iter().map(|v| v.to_string()).collect();
            Ok(format!(
                "weights {}\n{}",
                parts.join(","),
                render_spectrum_rows(&elements)
            ))
        }
    }
}

#[derive(Serialize)]
struct DiagonalDto {
    elements: Vec<ElementDto>,
    faces_met: usize,
}

fn cmd_diagonal(data: &ResolutionData, format: Format) -> Result<String> {
    let report = spectra::spectrum_diagonal(data)?;
    match format {
        Format::Json => to_json(&DiagonalDto {
            elements: report.elements.iter().map(ElementDto::new).collect(),
            faces_met: report.faces_met,
        }),
        Format::Table => Ok(format!(
            "{}faces met {}\n",
            render_spectrum_rows(&report.elements),
            report.faces_met
        )),
    }
}

#[derive(Serialize)]
struct FactorDto {
    coefficients: Vec<i64>,
    constant: i64,
    rendered: String,
}

#[derive(Serialize)]
struct BernsteinDto {
    factors: Vec<FactorDto>,
}

fn cmd_bernstein(data: &ResolutionData, format: Format) -> Result<String> {
    let factors = spectra::bernstein_hyperplanes(data)?;
    match format {
        Format::Json => to_json(&BernsteinDto {
            factors: factors
                .iter()
                .map(|f| FactorDto {
                    coefficients: f.coefficients.clone(),
                    constant: f.constant,
                    rendered: f.to_string(),
                })
                .collect(),
        }),
        Format::Table => {
            if factors.is_empty() {
                return Ok("no factors (no faces inside the cube)\n".to_string());
            }
            let mut out = String::new();
            for f in &factors {
                out.push_str(&format!("{f}\n"));
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct MilnorDto {
    matches: bool,
    mu_direct: u64,
    mu_formula: u64,
    weight_zero_assumed: bool,
}

fn cmd_milnor(
    data: &ResolutionData,
    trace: &BlowupTrace,
    format: Format,
) -> Result<String> {
    let report = spectra::milnor_consistency(data, trace)?;
    match format {
        Format::Json => to_json(&MilnorDto {
            matches: report.matches,
            mu_direct: report.mu_direct,
            mu_formula: report.mu_formula,
            weight_zero_assumed: report.weight_zero_assumed,
        }),
        Format::Table => Ok(format!(
            "mu from blowup trace {}\nmu from face formula {}\nmatches {}\nassumption: measured depth equals holomorphic depth (not verified)\n",
            report.mu_direct,
            report.mu_formula,
            if report.matches { "yes" } else { "no" }
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(p: i64, q: i64) -> Rat {
        Rat::new(BigInt::from(p), BigInt::from(q))
    }

    fn cusp_data() -> ResolutionData {
        let spec = parse_germ("f1 = x^2 + y^3\n").unwrap();
        resolve_embedded(&spec).unwrap().0
    }

    #[test]
    fn rational_and_weight_parsing() {
        assert_eq!(
            parse_rationals("1/2, 1/3").unwrap(),
            vec![rat(1, 2), rat(1, 3)]
        );
        assert_eq!(parse_rationals("0").unwrap(), vec![rat(0, 1)]);
        assert!(matches!(
            parse_rationals("x"),
            Err(Error::InvalidCubePoint { .. })
        ));
        assert!(matches!(
            parse_point("3/2"),
            Err(Error::InvalidCubePoint { .. })
        ));
        assert_eq!(parse_weights("1, 2").unwrap().weights(), &[1, 2]);
        assert!(matches!(
            parse_weights("1,a"),
            Err(Error::InvalidWeights { .. })
        ));
        assert!(matches!(
            parse_weights("2,4"),
            Err(Error::InvalidWeights { .. })
        ));
    }

    #[test]
    fn wall_and_point_rendering() {
        assert_eq!(render_wall(&[4, 6], 5), "4*x1+6*x2 = 5");
        assert_eq!(render_wall(&[1, 1, 1], 1), "x1+x2+x3 = 1");
        assert_eq!(render_point(&[rat(1, 2), rat(0, 1)]), "(1/2, 0)");
    }

    #[test]
    fn resolve_table_lists_divisors_and_branches() {
        let data = cusp_data();
        let table = cmd_resolve(&data, Format::Table).unwrap();
        assert!(table.contains("divisors 3  branches 1"));
        assert!(table.contains("E3  self -1  canonical 4  neighbors E1 E2"));
        assert!(table.contains("branch f1  attach E3  valuations 2 3 6"));
        assert!(table.contains("rupture E3"));
    }

    #[test]
    fn resolve_json_is_stable() {
        let data = cusp_data();
        let json = cmd_resolve(&data, Format::Json).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["attach"], serde_json::json!([3]));
        assert_eq!(value["canonical"], serde_json::json!([1, 2, 4]));
        assert_eq!(value["selfint"], serde_json::json!([-3, -2, -1]));
    }

    #[test]
    fn spectrum_and_diagonal_tables() {
        let data = cusp_data();
        let table = cmd_spectrum(&data, "1", Format::Table).unwrap();
        assert!(table.contains("s = 1/6  multiplicity 1  mirrored -5/6"));
        let diag = cmd_diagonal(&data, Format::Table).unwrap();
        assert!(diag.contains("faces met 1"));
    }

    #[test]
    fn ideal_report_both_sides() {
        let data = cusp_data();
        let on = cmd_ideal(&data, "1/6", Format::Table).unwrap();
        assert!(on.contains("on face: yes  depth 1"));
        assert!(on.contains("wall 6*x1 = 1  (E3)"));
        let off = cmd_ideal(&data, "1/8", Format::Table).unwrap();
        assert!(off.contains("on face: no"));
        let json = cmd_ideal(&data, "1/6", Format::Json).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["on_face"], serde_json::json!(true));
        assert_eq!(value["ideal"]["closure"], serde_json::json!([1, 1, 2]));
    }

    #[test]
    fn bernstein_table_renders_factor() {
        let data = cusp_data();
        let table = cmd_bernstein(&data, Format::Table).unwrap();
        assert_eq!(table, "6*s1+5\n");
    }
}
