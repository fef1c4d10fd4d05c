//! Classical multidimensional scaling (principal coordinates analysis).
//!
//! Given a symmetric dissimilarity matrix `D`, the pipeline forms
//! `A = (-1/2 d_ij^2)`, double-centers it to `B = HAH`, diagonalizes `B`,
//! and places the points at the rows of `X = Gamma Lambda^(1/2)` restricted
//! to the leading nonnegative eigenvalues. On top of that this crate
//! provides:
//!
//! - exact closed-form solutions for 2- and 3-point configurations,
//!   including the isosceles family and the Euclidean condition
//!   `a^2 + b^2 + c^2 >= 2 Delta` ([`closed_form`]);
//! - a per-eigenvalue decomposition of the reconstruction error
//!   `delta_ij^2 - d_ij^2 = sum of excluded g terms`, which attributes the
//!   distortion of a low-dimensional solution to the positive and negative
//!   eigenvalues it leaves out ([`diagnostics`]);
//! - a self-contained Jacobi eigensolver ([`matrix`]), CSV input,
//!   text/JSON reports, and a deterministic SVG scatter plotter behind the
//!   `cmdscale` binary ([`cli`]).
//!
//! See the `examples/` directory for one runnable example per capability,
//! and `fixtures/rail_yorkshire.csv` for the bundled journey-time matrix
//! used throughout the tests.

pub mod cli;
pub mod closed_form;
pub mod diagnostics;
pub mod error;
pub mod io;
pub mod matrix;
pub mod pipeline;
pub mod report;
pub mod svg;

pub use error::{Error, Result};
pub use matrix::{helmert_matrix, jacobi_eigh, Spectrum, SymMatrix};
pub use pipeline::{
    build_a, collinear_lambda, double_center, embed, gram, mds_spectrum,
    verify_trace_identity, DissimilarityMatrix, Embedding,
};
