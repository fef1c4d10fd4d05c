//! CSV parsing for dissimilarity matrices.
//!
//! The format is a plain comma-separated square of numbers, optionally
//! wrapped in a label header row plus label column (detected by a
//! non-numeric first data cell, as in the bundled rail fixture).

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;
use crate::pipeline::DissimilarityMatrix;

const ASYM_TOL_FACTOR: f64 = 1e-9;

fn parse_cell(token: &str, row: usize, col: usize) -> Result<f64> {
    token.trim().parse::<f64>().map_err(|_| Error::Parse {
        row,
        col,
        token: token.trim().to_string(),
    })
}

/// Parse matrix CSV content into a dissimilarity matrix and optional labels.
///
/// Mirrored entries may differ by up to `1e-9 * max_entry` and are averaged;
/// the diagonal must be zero within the same tolerance.
pub fn parse_matrix_csv(content: &str) -> Result<(DissimilarityMatrix, Option<Vec<String>>)> {
    let lines: Vec<&str> = content
        .lines()
        .map(|l| l.trim_end_matches('\r'))
        .filter(|l| !l.trim().is_empty())
        .collect();
    if lines.is_empty() {
        return Err(Error::Parse { row: 0, col: 0, token: String::new() });
    }
    let cells: Vec<Vec<&str>> = lines.iter().map(|l| l.split(',').collect()).collect();

    // labeled iff the corner cell is empty or non-numeric (label header
    // row plus label column, as in the bundled fixture)
    let corner = cells[0][0].trim();
    let labeled = cells.len() > 1 && (corner.is_empty() || corner.parse::<f64>().is_err());

    let (labels, body_rows, col_offset) = if labeled {
        let labels: Vec<String> = cells[0][1..].iter().map(|s| s.trim().to_string()).collect();
        for (idx, l) in labels.iter().enumerate() {
            if labels[..idx].contains(l) {
                return Err(Error::DuplicateLabel { label: l.clone() });
            }
        }
        (Some(labels), &cells[1..], 1usize)
    } else {
        (None, &cells[..], 0usize)
    };

    let n = body_rows.len();
    if let Some(labels) = &labels {
        if labels.len() != n {
            return Err(Error::NotSquare { row: 0, got: labels.len(), expected: n });
        }
    }
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(n);
    for (i, cell_row) in body_rows.iter().enumerate() {
        let row_number = i + if labeled { 1 } else { 0 };
        if cell_row.len() != n + col_offset {
            return Err(Error::NotSquare {
                row: row_number,
                got: cell_row.len() - col_offset.min(cell_row.len()),
                expected: n,
            });
        }
        let mut row = Vec::with_capacity(n);
        for (j, token) in cell_row[col_offset..].iter().enumerate() {
            row.push(parse_cell(token, row_number, j + col_offset)?);
        }
        rows.push(row);
    }

    let max_entry = rows
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |m, v| m.max(v.abs()));
    let tol = ASYM_TOL_FACTOR * max_entry;
    let mut mat = SymMatrix::symmetrized(&rows, tol)?;

    // enforce a clean zero diagonal within tolerance
    let n = mat.n();
    for i in 0..n {
        let v = mat.get(i, i);
        if v.abs() > tol {
            return Err(Error::NonzeroDiagonal { i, value: v });
        }
    }
    mat = SymMatrix::from_fn(n, |i, j| if i == j { 0.0 } else { mat.get(i, j) });

    Ok((DissimilarityMatrix::new(mat)?, labels))
}
