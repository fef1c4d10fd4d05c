//! Report documents emitted by the command-line front end.
//!
//! Text output prints values to 6 significant digits; JSON carries full
//! double precision. Key order is fixed by struct declaration order so
//! identical inputs serialize byte-identically.

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::closed_form::{TriangleSolution, Verdict};
use crate::diagnostics::DistortionReport;
use crate::error::Error;
use crate::pipeline::Embedding;

/// Format with 6 significant digits for the text reports.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (5 - exponent).max(0) as usize;
    format!("{:.*}", decimals, x)
}

/// A labeled coordinate row, serialized as ["label", x1, .., xp].
#[derive(Debug, Clone)]
pub struct CoordRow {
    pub label: String,
    pub coords: Vec<f64>,
}

impl Serialize for CoordRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(1 + self.coords.len()))?;
        seq.serialize_element(&self.label)?;
        for c in &self.coords {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceIdentitySection {
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct EmbedSection {
    pub eigenvalues: Vec<f64>,
    pub coordinates: Vec<CoordRow>,
    pub trace_identity: TraceIdentitySection,
}

#[derive(Debug, Clone, Serialize)]
pub struct GTermEntry {
    pub ell: usize,
    pub eigenvalue: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairSection {
    pub i: usize,
    pub j: usize,
    pub label_i: String,
    pub label_j: String,
    pub dissimilarity: f64,
    pub fitted_distance: f64,
    pub delta_sq: f64,
    pub d_sq: f64,
    pub gap: f64,
    pub excluded_terms: Vec<GTermEntry>,
    pub dominant: Option<GTermEntry>,
    /// |gamma_{i,l} - gamma_{j,l}| for l = 1..n.
    pub eigenvector_abs_diff: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ViolationSection {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub excess: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagnoseSection {
    pub eigenvalues: Vec<f64>,
    pub dims: usize,
    pub pairs: Vec<PairSection>,
    pub violations: Vec<ViolationSection>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TriangleSection {
    pub verdict: String,
    pub margin: f64,
    pub delta: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    pub method: String,
    pub coordinates: Vec<CoordRow>,
}

/// One report per CLI invocation.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum ReportDocument {
    Embed(EmbedSection),
    Diagnose(DiagnoseSection),
    Triangle(TriangleSection),
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        match self {
            ReportDocument::Embed(e) => embed_text(e),
            ReportDocument::Diagnose(d) => diagnose_text(d),
            ReportDocument::Triangle(t) => triangle_text(t),
        }
    }
}

fn eigenvalue_line(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| sig6(*v)).collect();
    format!("Eigenvalues: {}\n", parts.join(", "))
}

fn embed_text(e: &EmbedSection) -> String {
    let mut out = String::new();
    out.push_str(&eigenvalue_line(&e.eigenvalues));
    out.push_str(&format!(
        "Trace identity: sum(lambda) = {}, sum d^2 / n = {}\n",
        sig6(e.trace_identity.lhs),
        sig6(e.trace_identity.rhs)
    ));
    out.push_str("Coordinates:\n");
    for row in &e.coordinates {
        let coords: Vec<String> = row.coords.iter().map(|v| sig6(*v)).collect();
        out.push_str(&format!("  {}: {}\n", row.label, coords.join(", ")));
    }
    out
}

fn gterm_text(t: &GTermEntry) -> String {
    format!("g({}) = {} (lambda = {})", t.ell, sig6(t.value), sig6(t.eigenvalue))
}

fn diagnose_text(d: &DiagnoseSection) -> String {
    let mut out = String::new();
    out.push_str(&eigenvalue_line(&d.eigenvalues));
    out.push_str(&format!("Solution dimension: {}\n", d.dims));
    for p in &d.pairs {
        out.push_str(&format!(
            "Pair ({},{}) {} - {}: dissimilarity {}, fitted {}, gap(delta^2 - d^2) {}\n",
            p.i,
            p.j,
            p.label_i,
            p.label_j,
            sig6(p.dissimilarity),
            sig6(p.fitted_distance),
            sig6(p.gap)
        ));
        for t in &p.excluded_terms {
            out.push_str(&format!("  excluded {}\n", gterm_text(t)));
        }
        if let Some(dom) = &p.dominant {
            out.push_str(&format!("  dominant {}\n", gterm_text(dom)));
        }
        let diffs: Vec<String> = p.eigenvector_abs_diff.iter().map(|v| sig6(*v)).collect();
        out.push_str(&format!("  |eigenvector difference|: {}\n", diffs.join(", ")));
    }
    if d.violations.is_empty() {
        out.push_str("Triangle inequality: no violations\n");
    } else {
        out.push_str("Triangle inequality violations:\n");
        for v in &d.violations {
            out.push_str(&format!(
                "  d({},{}) = {} > d({},{}) + d({},{}) = {} (excess {})\n",
                v.i,
                v.k,
                sig6(v.lhs),
                v.i,
                v.j,
                v.j,
                v.k,
                sig6(v.rhs),
                sig6(v.excess)
            ));
        }
    }
    out
}

fn triangle_text(t: &TriangleSection) -> String {
    let mut out = String::new();
    out.push_str(&format!("Verdict: {} (margin {})\n", t.verdict, sig6(t.margin)));
    out.push_str(&format!("Delta: {}\n", sig6(t.delta)));
    out.push_str(&format!(
        "Eigenvalues: lambda1 = {}, lambda2 = {}\n",
        sig6(t.lambda1),
        sig6(t.lambda2)
    ));
    if !t.coordinates.is_empty() {
        out.push_str(&format!("Coordinates ({}):\n", t.method));
        for row in &t.coordinates {
            let coords: Vec<String> = row.coords.iter().map(|v| sig6(*v)).collect();
            out.push_str(&format!("  {}: {}\n", row.label, coords.join(", ")));
        }
    }
    out
}

/// Default labels "1".."n" when the input carries none.
pub fn labels_or_default(labels: Option<Vec<String>>, n: usize) -> Vec<String> {
    labels.unwrap_or_else(|| (1..=n).map(|i| i.to_string()).collect())
}

pub fn coordinate_rows(embedding: &Embedding, labels: &[String]) -> Vec<CoordRow> {
    embedding
        .coords
        .iter()
        .zip(labels)
        .map(|(coords, label)| CoordRow { label: label.clone(), coords: coords.clone() })
        .collect()
}

pub fn triangle_section(
    sol: &TriangleSolution,
    verdict: Verdict,
    margin: f64,
    method: &str,
) -> TriangleSection {
    let labels = ["A", "B", "C"];
    TriangleSection {
        verdict: verdict_name(verdict).to_string(),
        margin,
        delta: sol.delta,
        lambda1: sol.lambda1,
        lambda2: sol.lambda2,
        method: method.to_string(),
        coordinates: sol
            .coords
            .iter()
            .zip(labels)
            .map(|(c, l)| CoordRow { label: l.to_string(), coords: c.to_vec() })
            .collect(),
    }
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Euclidean => "euclidean",
        Verdict::NonEuclidean => "non_euclidean",
    }
}

/// Distortion report plus labels -> serializable section (1-based indices).
pub fn diagnose_section(
    report: &DistortionReport,
    table: &[Vec<f64>],
    labels: &[String],
    violations: &[crate::diagnostics::MetricViolation],
    selected: &[(usize, usize)],
) -> DiagnoseSection {
    let gterm = |t: &crate::diagnostics::GTerm| GTermEntry {
        ell: t.ell + 1,
        eigenvalue: report.eigenvalues[t.ell],
        value: t.value,
    };
    let pairs = selected
        .iter()
        .enumerate()
        .filter_map(|(row, &(i, j))| {
            report.pair(i, j).map(|p| PairSection {
                i: p.i + 1,
                j: p.j + 1,
                label_i: labels[p.i].clone(),
                label_j: labels[p.j].clone(),
                dissimilarity: p.delta_sq.sqrt(),
                fitted_distance: p.fitted_distance(),
                delta_sq: p.delta_sq,
                d_sq: p.d_sq,
                gap: p.gap,
                excluded_terms: p.excluded_terms.iter().map(gterm).collect(),
                dominant: p.dominant_term.as_ref().map(gterm),
                eigenvector_abs_diff: table[row].clone(),
            })
        })
        .collect();
    DiagnoseSection {
        eigenvalues: report.eigenvalues.clone(),
        dims: report.p,
        pairs,
        violations: violations
            .iter()
            .map(|v| ViolationSection {
                i: v.i + 1,
                j: v.j + 1,
                k: v.k + 1,
                lhs: v.lhs,
                rhs: v.rhs,
                excess: v.excess,
            })
            .collect(),
    }
}

/// Machine-readable error object for the error stream.
pub fn error_json(err: &Error) -> String {
    #[derive(Serialize)]
    struct ErrorDoc<'a> {
        error: &'a str,
        message: String,
    }
    let doc = ErrorDoc { error: err.code(), message: err.to_string() };
    let mut s = serde_json::to_string(&doc).expect("error serialization");
    s.push('\n');
    s
}
