use thiserror::Error;

/// Crate-wide error type. Every variant carries a stable machine-readable
/// code (see [`Error::code`]) so front ends can report errors uniformly.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("eigensolver did not converge: off-diagonal residual {residual:e} after {sweeps} sweeps")]
    NonConvergence { residual: f64, sweeps: usize },

    #[error("dimension {n} is invalid (minimum {min})")]
    InvalidDimension { n: usize, min: usize },

    #[error("requested dimension {p} is out of range for {n} points")]
    DimensionOutOfRange { p: usize, n: usize },

    #[error("eigenvalue {lambda} of retained component is negative; at most p = {max_p} is usable")]
    NegativeEigenvalueRetained { lambda: f64, max_p: usize },

    #[error("all dissimilarities are zero; the spectrum is identically zero")]
    DegenerateAllZero,

    #[error("distance must be positive, got {d}")]
    NonPositiveDistance { d: f64 },

    #[error("sides do not satisfy the Euclidean condition (lambda2 = {lambda2} < 0)")]
    NonEuclidean { lambda2: f64 },

    #[error("closed-form weights are degenerate (delta = {delta:e}, little delta = {little_delta:e}); use the general solver")]
    DegenerateFormula { delta: f64, little_delta: f64 },

    #[error("isosceles case requires b < 2a, got a = {a}, b = {b}")]
    FlatOrNonEuclidean { a: f64, b: f64 },

    #[error("index {index} out of range for size {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("pair indices must differ, both are {index}")]
    SameIndex { index: usize },

    #[error("expected a {expected}-dimensional embedding, got {got}")]
    WrongDimension { expected: usize, got: usize },

    #[error("cannot parse {token:?} at row {row}, column {col}")]
    Parse { row: usize, col: usize, token: String },

    #[error("matrix is not square: row {row} has {got} entries, expected {expected}")]
    NotSquare { row: usize, got: usize, expected: usize },

    #[error("entries ({i},{j}) and ({j},{i}) differ by {diff} which exceeds tolerance {tol:e}")]
    AsymmetryExceedsTolerance { i: usize, j: usize, diff: f64, tol: f64 },

    #[error("negative entry {value} at ({i},{j})")]
    NegativeEntry { i: usize, j: usize, value: f64 },

    #[error("nonzero diagonal entry {value} at index {i}")]
    NonzeroDiagonal { i: usize, value: f64 },

    #[error("labels are not unique: {label:?} appears twice")]
    DuplicateLabel { label: String },

    #[error("i/o failure: {0}")]
    Io(String),
}

impl Error {
    /// Stable identifier for machine-readable error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonConvergence { .. } => "non_convergence",
            Error::InvalidDimension { .. } => "invalid_dimension",
            Error::DimensionOutOfRange { .. } => "dimension_out_of_range",
            Error::NegativeEigenvalueRetained { .. } => "negative_eigenvalue_retained",
            Error::DegenerateAllZero => "degenerate_all_zero",
            Error::NonPositiveDistance { .. } => "non_positive_distance",
            Error::NonEuclidean { .. } => "non_euclidean",
            Error::DegenerateFormula { .. } => "degenerate_formula",
            Error::FlatOrNonEuclidean { .. } => "flat_or_non_euclidean",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::SameIndex { .. } => "same_index",
            Error::WrongDimension { .. } => "wrong_dimension",
            Error::Parse { .. } => "parse_error",
            Error::NotSquare { .. } => "not_square",
            Error::AsymmetryExceedsTolerance { .. } => "asymmetry_exceeds_tolerance",
            Error::NegativeEntry { .. } => "negative_entry",
            Error::NonzeroDiagonal { .. } => "nonzero_diagonal",
            Error::DuplicateLabel { .. } => "duplicate_label",
            Error::Io(_) => "io_error",
        }
    }

    /// Process exit code for the CLI: 3 for numerical failures, 2 for
    /// everything else (bad input or unusable request).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NonConvergence { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
