//! Command-line front end: `embed`, `diagnose`, and `triangle` subcommands
//! over CSV dissimilarity matrices.
//!
//! Reports go to stdout as text or JSON; errors are emitted as JSON objects
//! on stderr with exit code 2 for input problems and 3 for numerical
//! failures. Non-Euclidean triangle inputs are a verdict, not an error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::closed_form::{self, TriangleSides, Verdict};
use crate::diagnostics;
use crate::error::{Error, Result};
use crate::io::parse_matrix_csv;
use crate::pipeline::{self, DissimilarityMatrix};
use crate::report::{self, ReportDocument, TriangleSection};
use crate::svg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "cmdscale", version, about = "Classical MDS from dissimilarity matrices")]
pub struct Cli {
    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    /// Write a scatter plot of the 2-dimensional solution to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub svg: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Embed a dissimilarity matrix into p principal coordinates.
    Embed(EmbedArgs),
    /// Decompose per-pair distortion into per-eigenvalue contributions.
    Diagnose(DiagnoseArgs),
    /// Exact solution for a three-point configuration.
    Triangle(TriangleArgs),
}

#[derive(Debug, Args)]
pub struct EmbedArgs {
    /// CSV file with the dissimilarity matrix.
    pub file: PathBuf,
    /// Number of principal coordinates to keep.
    #[arg(long, default_value_t = 2)]
    pub dims: usize,
}

#[derive(Debug, Args)]
pub struct DiagnoseArgs {
    /// CSV file with the dissimilarity matrix.
    pub file: PathBuf,
    /// Dimension of the fitted solution.
    #[arg(long, default_value_t = 2)]
    pub dims: usize,
    /// Restrict the report to these 1-based pairs, e.g. --pair 2,3
    /// (repeatable). Default: all pairs.
    #[arg(long = "pair", value_name = "I,J")]
    pub pairs: Vec<String>,
}

#[derive(Debug, Args)]
pub struct TriangleArgs {
    /// Side lengths a,b,c of the matrix [[0,a,b],[a,0,c],[b,c,0]].
    #[arg(long, value_name = "A,B,C")]
    pub sides: String,
    /// Shift the origin onto this vertex (1..3) before reporting.
    #[arg(long, value_name = "K")]
    pub shift_vertex: Option<usize>,
}

fn read_matrix(path: &PathBuf) -> Result<(DissimilarityMatrix, Option<Vec<String>>)> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix_csv(&content)
}

fn parse_pair(text: &str, n: usize) -> Result<(usize, usize)> {
    let bad = || Error::Parse { row: 0, col: 0, token: text.to_string() };
    let mut parts = text.split(',');
    let i: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let j: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    if parts.next().is_some() {
        return Err(bad());
    }
    for idx in [i, j] {
        if idx < 1 || idx > n {
            return Err(Error::IndexOutOfRange { index: idx, n });
        }
    }
    if i == j {
        return Err(Error::SameIndex { index: i });
    }
    Ok((i - 1, j - 1))
}

fn parse_sides(text: &str) -> Result<TriangleSides> {
    let bad = || Error::Parse { row: 0, col: 0, token: text.to_string() };
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let mut v = [0.0f64; 3];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p.trim().parse().map_err(|_| bad())?;
    }
    TriangleSides::new(v[0], v[1], v[2])
}

/// Run `embed` and build its report.
pub fn cmd_embed(args: &EmbedArgs, svg_path: Option<&PathBuf>) -> Result<ReportDocument> {
    let (d, labels) = read_matrix(&args.file)?;
    let labels = report::labels_or_default(labels, d.n());
    let embedding = pipeline::embed(&d, args.dims)?;
    let (lhs, rhs) = pipeline::verify_trace_identity(&d)?;
    let spectrum = pipeline::mds_spectrum(&d)?;
    if let Some(path) = svg_path {
        svg::emit_svg(&embedding, &labels, path)?;
    }
    Ok(ReportDocument::Embed(report::EmbedSection {
        eigenvalues: spectrum.eigenvalues().to_vec(),
        coordinates: report::coordinate_rows(&embedding, &labels),
        trace_identity: report::TraceIdentitySection { lhs, rhs },
    }))
}

/// Run `diagnose` and build its report.
pub fn cmd_diagnose(args: &DiagnoseArgs) -> Result<ReportDocument> {
    let (d, labels) = read_matrix(&args.file)?;
    let n = d.n();
    let labels = report::labels_or_default(labels, n);
    let selected: Vec<(usize, usize)> = if args.pairs.is_empty() {
        (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect()
    } else {
        args.pairs
            .iter()
            .map(|p| parse_pair(p, n))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .map(|(i, j)| if i < j { (i, j) } else { (j, i) })
            .collect()
    };
    let distortion = diagnostics::distortion_report(&d, args.dims)?;
    let spectrum = pipeline::mds_spectrum(&d)?;
    let all_ells: Vec<usize> = (0..n).collect();
    let table = diagnostics::eigenvector_difference_table(&spectrum, &selected, &all_ells)?;
    let violations = diagnostics::scan_triangle_violations(&d);
    Ok(ReportDocument::Diagnose(report::diagnose_section(
        &distortion,
        &table,
        &labels,
        &violations,
        &selected,
    )))
}

/// Run `triangle` and build its report.
pub fn cmd_triangle(args: &TriangleArgs) -> Result<ReportDocument> {
    let sides = parse_sides(&args.sides)?;
    let check = closed_form::euclidean_check(&sides);
    if check.verdict == Verdict::NonEuclidean {
        // a verdict, not a failure: report eigenvalues with no coordinates
        return Ok(ReportDocument::Triangle(TriangleSection {
            verdict: report::verdict_name(check.verdict).to_string(),
            margin: check.margin,
            delta: closed_form::triangle_delta(&sides),
            lambda1: {
                let (p, q, r) = (sides.a * sides.a, sides.b * sides.b, sides.c * sides.c);
                (p + q + r + 2.0 * closed_form::triangle_delta(&sides)) / 6.0
            },
            lambda2: check.lambda2(),
            method: "none".to_string(),
            coordinates: Vec::new(),
        }));
    }
    let (solution, method) = match closed_form::solve_triangle(&sides) {
        Ok(sol) => (sol, "closed_form"),
        Err(Error::DegenerateFormula { .. }) => {
            (closed_form::solve_triangle_general(&sides)?, "general_pipeline")
        }
        Err(e) => return Err(e),
    };
    let solution = match args.shift_vertex {
        Some(k) => closed_form::shift_to_vertex(&solution, k)?,
        None => solution,
    };
    Ok(ReportDocument::Triangle(report::triangle_section(
        &solution,
        check.verdict,
        check.margin,
        method,
    )))
}

/// Dispatch a parsed invocation; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = match &cli.command {
        Command::Embed(args) => cmd_embed(args, cli.svg.as_ref()),
        Command::Diagnose(args) => cmd_diagnose(args),
        Command::Triangle(args) => cmd_triangle(args),
    };
    match result {
        Ok(doc) => {
            let rendered = match cli.format {
                Format::Text => doc.to_text(),
                Format::Json => doc.to_json(),
            };
            print!("{rendered}");
            0
        }
        Err(err) => {
            eprint!("{}", report::error_json(&err));
            err.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    run(&Cli::parse())
}
