//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by parsing, validation, and the rank calculators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input document is not syntactically valid.
    #[error("parse error: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A simplex in `maximal_simplices` repeats a vertex label.
    #[error("maximal_simplices[{index}]: duplicate vertex {label} within a simplex")]
    DuplicateVertex { index: usize, label: u32 },

    /// A simplex in `maximal_simplices` has no vertices.
    #[error("maximal_simplices[{index}]: a simplex must have at least one vertex")]
    EmptySimplex { index: usize },

    /// `maximal_simplices` itself is empty; the empty complex is rejected.
    #[error("maximal_simplices is empty; the empty complex is not accepted")]
    EmptyComplex,

    /// A dimension of the closure exceeds the dense-matrix threshold.
    #[error("capacity exceeded: {count} simplices in dimension {dimension} (limit {limit})")]
    Capacity {
        dimension: usize,
        count: usize,
        limit: usize,
    },

    /// A wedge basepoint is not a vertex of its complex.
    #[error("basepoint {label} is not a vertex of the complex")]
    InvalidBasepoint { label: u32 },

    /// A numeric argument is outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A group-spec string does not match the documented grammar.
    #[error("invalid group spec {spec:?}: {message}")]
    GroupSpec { spec: String, message: String },

    /// Factorization input is not the Poincaré polynomial of a
    /// finite-dimensional rational H-space.
    #[error("not the Poincaré polynomial of a finite-dimensional rational H-space: {0}")]
    PoincareFactor(String),

    /// The cohomology-recovery bound n > s/2 + 1 is violated.
    #[error("stability range violated: recovering degree s = {s} requires n > {bound} (minimal valid n is {min_n}); got n = {n}")]
    StabilityRange {
        n: i64,
        s: i64,
        min_n: i64,
        bound: String,
    },
}

impl Error {
    /// Stable machine-facing code for each error class.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::DuplicateVertex { .. } => "duplicate-vertex",
            Error::EmptySimplex { .. } => "empty-simplex",
            Error::EmptyComplex => "empty-complex",
            Error::Capacity { .. } => "capacity",
            Error::InvalidBasepoint { .. } => "invalid-basepoint",
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::GroupSpec { .. } => "group-spec",
            Error::PoincareFactor(_) => "poincare-factor",
            Error::StabilityRange { .. } => "stability-range",
        }
    }

    /// Builds the stability-range error for `recover_cohomology`.
    ///
    /// The bound is rendered exactly, as an integer when `s` is even and as
    /// a half-integer fraction otherwise.
    pub fn stability_range(n: i64, s: i64) -> Self {
        let min_n = if s % 2 == 0 { s / 2 + 2 } else { (s + 3) / 2 };
        let bound = if s % 2 == 0 {
            format!("{}", s / 2 + 1)
        } else {
            format!("{}/2 + 1", s)
        };
        Error::StabilityRange { n, s, min_n, bound }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
