//! The general classical-MDS pipeline: dissimilarities -> A -> doubly
//! centered B -> spectrum -> principal coordinates.

use crate::error::{Error, Result};
use crate::matrix::{Spectrum, SymMatrix};

/// Retained eigenvalues below `-TOL_NEG_FACTOR * max|lambda|` are an error;
/// above it they are treated as numerical zeros and clamped.
pub const TOL_NEG_FACTOR: f64 = 1e-8;

/// Square symmetric nonnegative matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DissimilarityMatrix {
    mat: SymMatrix,
}

impl DissimilarityMatrix {
    /// Validate a symmetric matrix as a dissimilarity matrix.
    pub fn new(mat: SymMatrix) -> Result<Self> {
        let n = mat.n();
        for i in 0..n {
            if mat.get(i, i) != 0.0 {
                return Err(Error::NonzeroDiagonal { i, value: mat.get(i, i) });
            }
            for j in (i + 1)..n {
                if mat.get(i, j) < 0.0 {
                    return Err(Error::NegativeEntry { i, j, value: mat.get(i, j) });
                }
            }
        }
        Ok(DissimilarityMatrix { mat })
    }

    /// Build from full rows; mirrored entries must agree exactly.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::new(SymMatrix::symmetrized(rows, 0.0)?)
    }

    /// Euclidean distance matrix of a point cloud (rows are points).
    pub fn from_points(points: &[Vec<f64>]) -> Self {
        let mat = SymMatrix::from_fn(points.len(), |i, j| {
            points[i]
                .iter()
                .zip(&points[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt()
        });
        DissimilarityMatrix { mat }
    }

    /// The 3-point matrix [[0,a,b],[a,0,c],[b,c,0]].
    pub fn from_triangle(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::from_rows(&[vec![0.0, a, b], vec![a, 0.0, c], vec![b, c, 0.0]])
    }

    pub fn n(&self) -> usize {
        self.mat.n()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.mat.get(i, j)
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.mat
    }

    /// Unit-free tolerance scale: the largest squared entry.
    pub fn scale(&self) -> f64 {
        let m = self.mat.max_norm();
        m * m
    }

    pub fn is_zero(&self) -> bool {
        self.mat.max_norm() == 0.0
    }

    /// Sum of squared dissimilarities over unordered pairs, divided by n.
    pub fn pair_sum_of_squares_over_n(&self) -> f64 {
        let n = self.n();
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += self.get(i, j) * self.get(i, j);
            }
        }
        s / n as f64
    }
}

/// The doubly centered matrix B = HAH.
#[derive(Debug, Clone)]
pub struct CenteredGram {
    pub b: SymMatrix,
}

/// A = (-1/2 d_ij^2).
pub fn build_a(d: &DissimilarityMatrix) -> SymMatrix {
    SymMatrix::from_fn(d.n(), |i, j| -0.5 * d.get(i, j) * d.get(i, j))
}

/// Double centering B = HAH with H = I - 11'/n.
pub fn double_center(a: &SymMatrix) -> CenteredGram {
    let n = a.n();
    let nf = n as f64;
    let row_means: Vec<f64> = (0..n).map(|i| a.row(i).iter().sum::<f64>() / nf).collect();
    let grand = row_means.iter().sum::<f64>() / nf;
    let b = SymMatrix::from_fn(n, |i, j| a.get(i, j) - row_means[i] - row_means[j] + grand);
    CenteredGram { b }
}

/// B for a dissimilarity matrix in one step.
pub fn gram(d: &DissimilarityMatrix) -> CenteredGram {
    double_center(&build_a(d))
}

/// Spectrum of the doubly centered matrix.
pub fn mds_spectrum(d: &DissimilarityMatrix) -> Result<Spectrum> {
    Spectrum::compute(&gram(d).b)
}

/// Principal-coordinate embedding in `p` dimensions.
#[derive(Debug, Clone)]
pub struct Embedding {
    /// n rows of p coordinates each.
    pub coords: Vec<Vec<f64>>,
    pub retained_eigenvalues: Vec<f64>,
    pub excluded_eigenvalues: Vec<f64>,
}

impl Embedding {
    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn dims(&self) -> usize {
        self.retained_eigenvalues.len()
    }

    /// Fitted Euclidean distance between points `i` and `j`.
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.coords[i]
            .iter()
            .zip(&self.coords[j])
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }
}

/// Embed into the leading `p` principal coordinates (columns lambda_k^1/2 gamma_k).
pub fn embed(d: &DissimilarityMatrix, p: usize) -> Result<Embedding> {
    let spectrum = mds_spectrum(d)?;
    embed_with_spectrum(d, &spectrum, p)
}

/// Same as [`embed`] but reusing an already computed spectrum of B.
pub fn embed_with_spectrum(
    d: &DissimilarityMatrix,
    spectrum: &Spectrum,
    p: usize,
) -> Result<Embedding> {
    let n = d.n();
    if p < 1 || p > n {
        return Err(Error::DimensionOutOfRange { p, n });
    }
    let lambdas = spectrum.eigenvalues();
    let max_abs = lambdas.iter().fold(0.0f64, |m, l| m.max(l.abs()));
    let tol_neg = TOL_NEG_FACTOR * max_abs;
    let max_p = lambdas.iter().take_while(|&&l| l >= -tol_neg).count();
    for &l in &lambdas[..p] {
        if l < -tol_neg {
            return Err(Error::NegativeEigenvalueRetained { lambda: l, max_p });
        }
    }
    let coords: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..p)
                .map(|k| lambdas[k].max(0.0).sqrt() * spectrum.entry(i, k))
                .collect()
        })
        .collect();
    Ok(Embedding {
        coords,
        retained_eigenvalues: lambdas[..p].to_vec(),
        excluded_eigenvalues: lambdas[p..].to_vec(),
    })
}

/// Both sides of the trace identity: (sum of eigenvalues, sum_{i<j} d_ij^2 / n).
pub fn verify_trace_identity(d: &DissimilarityMatrix) -> Result<(f64, f64)> {
    if d.n() < 2 || d.is_zero() {
        return Err(Error::DegenerateAllZero);
    }
    let spectrum = mds_spectrum(d)?;
    let lhs: f64 = spectrum.eigenvalues().iter().sum();
    let rhs = d.pair_sum_of_squares_over_n();
    debug_assert!(spectrum.eigenvalue(0) > 0.0);
    Ok((lhs, rhs))
}

/// The single nonzero eigenvalue for n collinear points at 1..n:
/// n(n^2-1)/12, or n(n^2-1)/(12(n-1)^2) when the distances are rescaled
/// to span (0,1).
pub fn collinear_lambda(n: usize, scaled: bool) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidDimension { n, min: 2 });
    }
    let nf = n as f64;
    let base = nf * (nf * nf - 1.0) / 12.0;
    Ok(if scaled { base / ((nf - 1.0) * (nf - 1.0)) } else { base })
}
