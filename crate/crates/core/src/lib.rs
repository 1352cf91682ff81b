//! Exact calculators for the rational homotopy of matrix groups and gauge
//! groups over C(X), for X a finite simplicial complex.
//!
//! The pipeline: [`complex`] ingests finite complexes and [`cohomology`]
//! computes their rational (Čech = simplicial) cohomology dimensions by
//! exact integer elimination. [`hspace`] catalogs rational H-space models
//! by homotopy ranks. [`gauge`] evaluates the rank formulas for the gauge
//! spaces F(X, G)° and F•(X, G)°, for GL_n(C(X))°, and for the space of
//! last columns Lc_n(C(X))°, including the inversion recovering cohomology
//! ranks from the Lc ranks. [`les`] materializes the rationalized long
//! exact sequence of the column fibration and machine-checks exactness.
//!
//! Everything is exact: no floating point appears on any computation path.

pub mod builders;
pub mod cohomology;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod gauge;
pub mod graded;
pub mod hspace;
pub mod les;
pub mod matrix;
pub mod poincare;

pub use cohomology::{betti, betti_with_coefficients, coboundary, euler_characteristic, reduced_betti, CoboundaryMatrix};
pub use complex::{SimplicialComplex, MAX_SIMPLICES_PER_DIM};
pub use error::{Error, Result};
pub use gauge::{gauge_ranks, gl_ranks, lc_ranks, recover_cohomology, stabilization, GaugeResult, StabilizationReport, StabilizationRow};
pub use graded::GradedDims;
pub use hspace::{hnil_report, parse_group_spec, HnilReport, RationalHSpace};
pub use les::{build_les, verify_exactness, Junction, LesRow, LesTable, LesViolation};
pub use poincare::{factor_poincare, PoincarePoly};
