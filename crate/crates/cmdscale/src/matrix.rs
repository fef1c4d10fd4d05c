//! Dense symmetric matrices and a self-contained symmetric eigensolver.
//!
//! The solver is a cyclic Jacobi iteration: adequate for the desk-scale
//! problems this crate targets and orthogonal eigenvectors come out of the
//! rotations directly.

use crate::error::{Error, Result};

/// Default relative off-diagonal tolerance for [`jacobi_eigh`].
pub const DEFAULT_TOL: f64 = 1e-12;
/// Default sweep budget for [`jacobi_eigh`].
pub const DEFAULT_MAX_SWEEPS: usize = 100;

/// Dense symmetric matrix, row-major full storage.
///
/// Symmetry is an invariant: constructors either build both halves from the
/// same value or check and average the two halves.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Build from a generator called once per `i <= j`; the result is
    /// symmetric by construction.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        assert!(n >= 1, "SymMatrix requires n >= 1");
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        SymMatrix { n, data }
    }

    /// Build from full rows, averaging the two halves. Fails if any pair of
    /// mirrored entries differs by more than `asym_tol`.
    pub fn symmetrized(rows: &[Vec<f64>], asym_tol: f64) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidDimension { n: 0, min: 1 });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: i, got: row.len(), expected: n });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let diff = (rows[i][j] - rows[j][i]).abs();
                if diff > asym_tol {
                    return Err(Error::AsymmetryExceedsTolerance { i, j, diff, tol: asym_tol });
                }
            }
        }
        Ok(Self::from_fn(n, |i, j| 0.5 * (rows[i][j] + rows[j][i])))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_norm(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }
}

/// Eigenvalues and orthonormal eigenvectors of a symmetric matrix.
///
/// Eigenvalues are sorted descending by signed value. Each eigenvector has
/// unit norm and a deterministic sign: the entry of largest absolute value
/// is nonnegative, ties broken by lowest index.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    /// `vectors[k]` is the eigenvector paired with `eigenvalues[k]`.
    vectors: Vec<Vec<f64>>,
}

impl Spectrum {
    /// Decompose `m` with the default tolerance and sweep budget.
    pub fn compute(m: &SymMatrix) -> Result<Spectrum> {
        jacobi_eigh(m, DEFAULT_TOL, DEFAULT_MAX_SWEEPS)
    }

    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvalue(&self, k: usize) -> f64 {
        self.eigenvalues[k]
    }

    /// Eigenvector for the `k`-th eigenvalue.
    pub fn vector(&self, k: usize) -> &[f64] {
        &self.vectors[k]
    }

    /// Entry `i` of eigenvector `k` (gamma_{i,k}).
    pub fn entry(&self, i: usize, k: usize) -> f64 {
        self.vectors[k][i]
    }

    /// Index of the eigenvector most aligned with the ones vector.
    pub fn ones_component(&self) -> usize {
        let n = self.n();
        let mut best = 0;
        let mut best_dot = f64::NEG_INFINITY;
        for k in 0..n {
            let dot: f64 = self.vectors[k].iter().sum::<f64>().abs();
            if dot > best_dot {
                best_dot = dot;
                best = k;
            }
        }
        best
    }
}

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.
///
/// Converges when the off-diagonal Frobenius norm drops below
/// `tol * ||m||_F`. Fails with [`Error::NonConvergence`] if `max_sweeps`
/// is exhausted first.
pub fn jacobi_eigh(m: &SymMatrix, tol: f64, max_sweeps: usize) -> Result<Spectrum> {
    assert!(tol > 0.0, "tolerance must be positive");
    assert!(max_sweeps >= 1, "need at least one sweep");
    let n = m.n();
    let mut a = m.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let norm = m.frobenius_norm();
    let threshold = tol * norm;
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                s += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        s.sqrt()
    };

    let mut converged = norm == 0.0 || off(&a) <= threshold;
    let mut sweeps = 0;
    while !converged && sweeps < max_sweeps {
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                // smaller-angle root of t^2 + 2 t theta - 1 = 0
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k != p && k != q {
                        let akp = a[k * n + p];
                        let akq = a[k * n + q];
                        a[k * n + p] = c * akp - s * akq;
                        a[p * n + k] = a[k * n + p];
                        a[k * n + q] = s * akp + c * akq;
                        a[q * n + k] = a[k * n + q];
                    }
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        sweeps += 1;
        converged = off(&a) <= threshold;
    }
    if !converged {
        return Err(Error::NonConvergence { residual: off(&a), sweeps });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].partial_cmp(&a[i * n + i]).unwrap().then(i.cmp(&j)));

    let mut eigenvalues = Vec::with_capacity(n);
    let mut vectors = Vec::with_capacity(n);
    for &k in &order {
        eigenvalues.push(a[k * n + k]);
        let mut col: Vec<f64> = (0..n).map(|i| v[i * n + k]).collect();
        // sign convention: largest-magnitude entry nonnegative, lowest index wins ties
        let mut lead = 0;
        for (i, &x) in col.iter().enumerate() {
            if x.abs() > col[lead].abs() {
                lead = i;
            }
        }
        if col[lead] < 0.0 {
            for x in &mut col {
                *x = -*x;
            }
        }
        vectors.push(col);
    }
    Ok(Spectrum { eigenvalues, vectors })
}

/// Orthogonal matrix whose first row is the normalized ones vector; the
/// remaining rows are normalized polynomial contrasts on equispaced points
/// (for n = 3 these are (-1,0,1)/sqrt(2) and (1,-2,1)/sqrt(6)).
///
/// Returned as a list of rows.
pub fn helmert_matrix(n: usize) -> Result<Vec<Vec<f64>>> {
    if n < 2 {
        return Err(Error::InvalidDimension { n, min: 2 });
    }
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(n);
    rows.push(vec![1.0 / (n as f64).sqrt(); n]);
    for k in 1..n {
        // Stieltjes step: multiply the previous row by the grid coordinate,
        // then re-orthogonalize twice for stability at larger n.
        let mut v: Vec<f64> = (0..n).map(|i| i as f64 * rows[k - 1][i]).collect();
        for _ in 0..2 {
            for row in &rows {
                let dot: f64 = v.iter().zip(row).map(|(a, b)| a * b).sum();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= dot * r;
                }
            }
        }
        let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in &mut v {
            *x /= norm;
        }
        // orthogonal polynomials keep a positive value at the right endpoint
        if v[n - 1] < 0.0 {
            for x in &mut v {
                *x = -*x;
            }
        }
        rows.push(v);
    }
    Ok(rows)
}
