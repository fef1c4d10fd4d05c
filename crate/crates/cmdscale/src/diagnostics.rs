//! Per-eigenvalue decomposition of the gap between input dissimilarities
//! and fitted distances, plus a triangle-inequality scan.
//!
//! All indices in this module are 0-based; the CLI layer renders them
//! 1-based for reports.

use crate::error::{Error, Result};
use crate::matrix::Spectrum;
use crate::pipeline::{self, DissimilarityMatrix};

/// Eigenvalue clusters closer than this (relative to scale) are aggregated
/// before naming a dominant term, since individual terms are basis-dependent
/// inside a degenerate eigenspace.
pub const CLUSTER_TOL_FACTOR: f64 = 1e-8;

/// Relative slack for the triangle-inequality scan so exact-equality triples
/// (collinear points) are not reported from rounding noise.
const VIOLATION_EPS_FACTOR: f64 = 1e-9;

/// One contribution g^(l)_ij = lambda_l (gamma_{i,l} - gamma_{j,l})^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GTerm {
    pub i: usize,
    pub j: usize,
    pub ell: usize,
    pub value: f64,
}

/// All n contributions for a pair; they sum to the squared dissimilarity.
pub fn g_terms(spectrum: &Spectrum, i: usize, j: usize) -> Result<Vec<GTerm>> {
    let n = spectrum.n();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, n });
    }
    if i == j {
        return Err(Error::SameIndex { index: i });
    }
    Ok((0..n)
        .map(|ell| {
            let diff = spectrum.entry(i, ell) - spectrum.entry(j, ell);
            GTerm { i, j, ell, value: spectrum.eigenvalue(ell) * diff * diff }
        })
        .collect())
}

/// Distortion bookkeeping for one pair of points.
#[derive(Debug, Clone)]
pub struct PairDistortion {
    pub i: usize,
    pub j: usize,
    /// Input squared dissimilarity.
    pub delta_sq: f64,
    /// Fitted squared distance from the retained components.
    pub d_sq: f64,
    /// delta_sq - d_sq, equal to the sum of the excluded terms.
    pub gap: f64,
    pub excluded_terms: Vec<GTerm>,
    /// Largest-magnitude excluded contribution after aggregating degenerate
    /// eigenvalue clusters; `ell` is the lowest index of the winning cluster.
    pub dominant_term: Option<GTerm>,
}

impl PairDistortion {
    /// Fitted distance in the input units.
    pub fn fitted_distance(&self) -> f64 {
        self.d_sq.max(0.0).sqrt()
    }
}

/// Full distortion decomposition for a p-dimensional solution.
#[derive(Debug, Clone)]
pub struct DistortionReport {
    pub p: usize,
    pub eigenvalues: Vec<f64>,
    pub pairs: Vec<PairDistortion>,
}

impl DistortionReport {
    pub fn pair(&self, i: usize, j: usize) -> Option<&PairDistortion> {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        self.pairs.iter().find(|p| p.i == lo && p.j == hi)
    }
}

fn dominant_excluded(terms: &[GTerm], eigenvalues: &[f64], scale: f64) -> Option<GTerm> {
    if terms.is_empty() {
        return None;
    }
    let tol = CLUSTER_TOL_FACTOR * scale;
    // terms come ordered by ell with eigenvalues descending; group adjacent
    // near-equal eigenvalues and score each cluster by its summed term
    let mut best: Option<GTerm> = None;
    let mut idx = 0;
    while idx < terms.len() {
        let start = idx;
        let mut sum = terms[idx].value;
        while idx + 1 < terms.len()
            && (eigenvalues[terms[idx].ell] - eigenvalues[terms[idx + 1].ell]).abs() < tol
        {
            idx += 1;
            sum += terms[idx].value;
        }
        let candidate = GTerm { value: sum, ..terms[start] };
        match &best {
            Some(b) if b.value.abs() >= candidate.value.abs() => {}
            _ => best = Some(candidate),
        }
        idx += 1;
    }
    best
}

/// Decompose every pair's gap into excluded per-eigenvalue contributions.
pub fn distortion_report(d: &DissimilarityMatrix, p: usize) -> Result<DistortionReport> {
    let n = d.n();
    if p < 1 || p >= n {
        return Err(Error::DimensionOutOfRange { p, n });
    }
    let spectrum = pipeline::mds_spectrum(d)?;
    // same retained-eigenvalue rule as the embedding
    pipeline::embed_with_spectrum(d, &spectrum, p)?;
    let scale = d.scale();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let terms = g_terms(&spectrum, i, j)?;
            let d_sq: f64 = terms[..p].iter().map(|t| t.value).sum();
            let excluded_terms: Vec<GTerm> = terms[p..].to_vec();
            let delta_sq = d.get(i, j) * d.get(i, j);
            let dominant_term = dominant_excluded(&excluded_terms, spectrum.eigenvalues(), scale);
            pairs.push(PairDistortion {
                i,
                j,
                delta_sq,
                d_sq,
                gap: delta_sq - d_sq,
                excluded_terms,
                dominant_term,
            });
        }
    }
    Ok(DistortionReport { p, eigenvalues: spectrum.eigenvalues().to_vec(), pairs })
}

/// Absolute eigenvector-entry differences |gamma_{i,l} - gamma_{j,l}| for the
/// requested pairs and eigenvalue indices; one row per pair.
pub fn eigenvector_difference_table(
    spectrum: &Spectrum,
    pairs: &[(usize, usize)],
    ells: &[usize],
) -> Result<Vec<Vec<f64>>> {
    let n = spectrum.n();
    for &(i, j) in pairs {
        for idx in [i, j] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx, n });
            }
        }
    }
    for &ell in ells {
        if ell >= n {
            return Err(Error::IndexOutOfRange { index: ell, n });
        }
    }
    Ok(pairs
        .iter()
        .map(|&(i, j)| {
            ells.iter()
                .map(|&ell| (spectrum.entry(i, ell) - spectrum.entry(j, ell)).abs())
                .collect()
        })
        .collect())
}

/// A triple (i, j, k) with d_ik > d_ij + d_jk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub excess: f64,
}

/// Check every triple (i < k, any intermediate j) once; violations are
/// sorted by excess descending, ties by index.
pub fn scan_triangle_violations(d: &DissimilarityMatrix) -> Vec<MetricViolation> {
    let n = d.n();
    let eps = VIOLATION_EPS_FACTOR * d.matrix().max_norm();
    let mut out = Vec::new();
    for i in 0..n {
        for k in (i + 1)..n {
            for j in 0..n {
                if j == i || j == k {
                    continue;
                }
                let lhs = d.get(i, k);
                let rhs = d.get(i, j) + d.get(j, k);
                let excess = lhs - rhs;
                if excess > eps {
                    out.push(MetricViolation { i, j, k, lhs, rhs, excess });
                }
            }
        }
    }
    out.sort_by(|a, b| {
        b.excess
            .partial_cmp(&a.excess)
            .unwrap()
            .then(a.i.cmp(&b.i))
            .then(a.j.cmp(&b.j))
            .then(a.k.cmp(&b.k))
    });
    out
}
