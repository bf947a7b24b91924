//! `degspec`: degree-adjacency spectra, Randić indices, alternating
//! polynomials and spectral distance bounds from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

mod output;
mod report;
mod verify;

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{ArgGroup, Parser, Subcommand};
use degspec::{
    alternating_polynomial_lp, alternating_polynomial_oracle, char_poly_from_spectrum, degree_adjacency_spectrum,
    mesh_from_spectrum, parse_edge_list, verify_all, Graph, Mesh64, ORACLE_MAX_POINTS,
};
use serde::Serialize;

use output::{list, num, to_json, Format};
use report::{BoundSummary, GraphSummary, PolynomialRow, Spectra};

#[derive(Debug, Parser)]
#[command(name = "degspec", version, about = "Degree-adjacency spectra and the distance bounds they imply")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report: spectra, characteristic polynomial, Randić indices,
    /// alternating polynomials and every bound.
    Analyze {
        /// Edge-list file (`-` for standard input).
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Degree-adjacency and standard spectra with multiplicities.
    Spectrum {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Every bound compared with its exact value; exit 1 on any violation.
    Bounds {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// k-alternating polynomials on a graph's mesh or an explicit mesh.
    #[command(group(ArgGroup::new("source").required(true).args(["file", "mesh"])))]
    Altpoly {
        file: Option<PathBuf>,
        /// Comma-separated, strictly descending points below 1.
        #[arg(long, allow_hyphen_values = true)]
        mesh: Option<String>,
        /// A single k or an inclusive range `a..b`; defaults to every valid k.
        #[arg(long)]
        k: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the invariant suite and every bound over a family or random graphs.
    #[command(group(ArgGroup::new("source").required(true).args(["family", "random"])))]
    Verify {
        /// path, cycle, star, complete, complete_bipartite or c4_pendant.
        #[arg(long)]
        family: Option<String>,
        /// Erdős–Rényi graphs with edge probability from {0.3, 0.5, 0.7}.
        #[arg(long, requires = "seed")]
        random: bool,
        /// Inclusive order range `a..b` (or a single order).
        #[arg(long)]
        n: Option<String>,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_range(s: &str) -> anyhow::Result<RangeInclusive<usize>> {
    let parse = |t: &str| t.trim().parse::<usize>().with_context(|| format!("bad range bound {t:?} in {s:?}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if a > b {
        bail!("empty range {s:?}");
    }
    Ok(a..=b)
}

fn read_graph(path: &PathBuf) -> anyhow::Result<Graph> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).context("reading standard input")?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) -> anyhow::Result<()> {
    match format {
        Format::Json => println!("{}", to_json(value)?),
        Format::Text => print!("{}", text(value)),
    }
    Ok(())
}

#[derive(Serialize)]
struct SpectrumReport {
    graph: GraphSummary,
    spectra: Spectra,
    /// `(value, multiplicity)` for the degree-adjacency spectrum.
    clusters: Vec<(f64, usize)>,
    char_poly: Vec<f64>,
}

#[derive(Serialize)]
struct BoundsReport {
    graph: GraphSummary,
    values_at_1: Vec<f64>,
    summary: BoundSummary,
    reports: Vec<degspec::BoundReport>,
}

#[derive(Serialize)]
struct AltpolyRow {
    #[serde(flatten)]
    lp: PolynomialRow,
    /// Exhaustive alternation search, present for meshes of at most 25 points.
    oracle_value_at_1: Option<f64>,
}

#[derive(Serialize)]
struct AltpolyReport {
    mesh: Vec<f64>,
    polynomials: Vec<AltpolyRow>,
}

fn parse_mesh(s: &str) -> anyhow::Result<Mesh64> {
    let points = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().with_context(|| format!("bad mesh point {p:?}")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Mesh64::new(points)?)
}

fn altpoly(mesh: &Mesh64, k: Option<&str>) -> anyhow::Result<AltpolyReport> {
    let b = mesh.len();
    let ks = match k {
        Some(spec) => parse_range(spec)?,
        None => 0..=b - 1,
    };
    if *ks.end() >= b {
        bail!("k = {} is out of range; valid k is 0..={} for a mesh of {b} points", ks.end(), b - 1);
    }
    let mut polynomials = Vec::new();
    for k in ks {
        let lp = alternating_polynomial_lp(mesh, k)?;
        let oracle_value_at_1 =
            if b <= ORACLE_MAX_POINTS { Some(alternating_polynomial_oracle(mesh, k)?.value_at_1) } else { None };
        polynomials.push(AltpolyRow { lp: lp.into(), oracle_value_at_1 });
    }
    Ok(AltpolyReport { mesh: mesh.points().to_vec(), polynomials })
}

fn altpoly_text(r: &AltpolyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "mesh ({} points): {}", r.mesh.len(), list(&r.mesh));
    let rows: Vec<PolynomialRow> = r
        .polynomials
        .iter()
        .map(|p| PolynomialRow {
            k: p.lp.k,
            value_at_1: p.lp.value_at_1,
            sup_norm_on_mesh: p.lp.sup_norm_on_mesh,
            coefficients: p.lp.coefficients.clone(),
        })
        .collect();
    report::polynomials_text(&mut out, &rows);
    if let Some(worst) = r
        .polynomials
        .iter()
        .filter_map(|p| p.oracle_value_at_1.map(|o| (p.lp.value_at_1 - o).abs() / o.abs()))
        .reduce(f64::max)
    {
        let _ = writeln!(out, "  linear program vs alternation search: max relative difference {}", num(worst));
    }
    out
}

/// `Ok(false)` signals a verification failure.
fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Analyze { file, format } => {
            let g = read_graph(&file)?;
            let r = report::analyze(&g)?;
            emit(format, &r, report::analysis_text)?;
            Ok(true)
        }
        Command::Spectrum { file, format } => {
            let g = read_graph(&file)?;
            let ds = degree_adjacency_spectrum::<f64>(&g)?;
            let r = SpectrumReport {
                graph: report::summarize(&g)?,
                clusters: ds.clusters(),
                char_poly: char_poly_from_spectrum(&ds).c,
                spectra: report::spectra(&g)?,
            };
            emit(format, &r, |r| {
                let mut out = String::new();
                report::summary_text(&mut out, &r.graph);
                report::spectra_text(&mut out, &r.spectra);
                let clusters: Vec<String> = r.clusters.iter().map(|(v, m)| format!("{} (x{m})", num(*v))).collect();
                let _ = writeln!(out, "  distinct degree-adjacency eigenvalues: {}", clusters.join(", "));
                let _ = writeln!(out, "  c_1..c_n: {}", list(&r.char_poly));
                out
            })?;
            Ok(true)
        }
        Command::Bounds { file, format } => {
            let g = read_graph(&file)?;
            let reports = verify_all::<f64>(&g)?;
            let mesh = mesh_from_spectrum(&degree_adjacency_spectrum::<f64>(&g)?)?;
            let r = BoundsReport {
                graph: report::summarize(&g)?,
                values_at_1: degspec::values_at_one(&mesh)?,
                summary: BoundSummary::of(&reports),
                reports,
            };
            emit(format, &r, |r| {
                let mut out = String::new();
                report::summary_text(&mut out, &r.graph);
                let _ = writeln!(out, "P_k(1), k = 0..: {}", list(&r.values_at_1));
                report::bounds_text(&mut out, &r.reports);
                out
            })?;
            Ok(r.summary.unsound == 0)
        }
        Command::Altpoly { file, mesh, k, format } => {
            let mesh = match (file, mesh) {
                (_, Some(m)) => parse_mesh(&m)?,
                (Some(f), None) => mesh_from_spectrum(&degree_adjacency_spectrum::<f64>(&read_graph(&f)?)?)?,
                (None, None) => unreachable!("clap requires a source"),
            };
            let r = altpoly(&mesh, k.as_deref())?;
            emit(format, &r, altpoly_text)?;
            Ok(true)
        }
        Command::Verify { family, random, n, count, seed, format } => {
            let r = if random {
                let orders = parse_range(n.as_deref().unwrap_or("5..10"))?;
                verify::verify_random(seed.expect("clap requires --seed"), orders, count)?
            } else {
                let name = family.expect("clap requires a source");
                let orders = parse_range(n.as_deref().unwrap_or("3..10"))?;
                verify::verify_families(&verify::family_members(&name, orders)?)?
            };
            emit(format, &r, verify::verify_text)?;
            Ok(r.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
