//! The rationalized long exact sequence of GL_{n-1} -> GL_n -> Lc_n as a
//! table of dimensions and map ranks, plus an independent exactness check.
//!
//! The fiber of the column fibration deformation-retracts onto GL_{n-1},
//! so the table never materializes it separately. Degree-0 entries are
//! excluded: tensoring with Q is meaningful only for degrees >= 1.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::gauge::{gl_ranks, lc_ranks};
use serde::Serialize;
use std::fmt;

/// One degree of the rationalized sequence.
///
/// `rank_inclusion` is the rank of the stabilization map into pi_k(GL_n),
/// `rank_projection` the rank of the map onto pi_k(Lc_n), and
/// `rank_connecting` the rank of the connecting map out of pi_k(Lc_n).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesRow {
    pub degree: i64,
    pub gl_prev: usize,
    pub gl_n: usize,
    pub lc_n: usize,
    pub rank_inclusion: usize,
    pub rank_projection: usize,
    pub rank_connecting: usize,
}

/// The rationalized long exact sequence, rows from `k_max` down to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesTable {
    pub n: i64,
    pub k_max: i64,
    pub rows: Vec<LesRow>,
    pub exact: bool,
}

/// Where an exactness condition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Junction {
    /// Exactness at pi_k(GL_n): rank(i) + rank(gamma) = dim.
    AtGlN,
    /// Exactness at pi_k(Lc_n): rank(gamma) + rank(del) = dim; the outgoing
    /// map is the connecting map Lc_n -> GL_{n-1}.
    AtLc,
    /// Exactness at pi_{k-1}(GL_{n-1}): rank(del_k) + rank(i_{k-1}) = dim.
    AtGlPrev,
    /// The inclusion must have full rank on its source.
    InclusionInjectivity,
    /// A stored map rank exceeds the dimension of its source or target.
    RankFeasibility,
}

impl fmt::Display for Junction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            Junction::AtGlN => "GL_{n-1} -> GL_n -> Lc_n (at GL_n)",
            Junction::AtLc => "GL_n -> Lc_n -> GL_{n-1} (at Lc_n)",
            Junction::AtGlPrev => "Lc_n -> GL_{n-1} -> GL_n (at GL_{n-1})",
            Junction::InclusionInjectivity => "inclusion injectivity",
            Junction::RankFeasibility => "rank feasibility",
        };
        f.write_str(label)
    }
}

/// A violated exactness condition, naming the degree and the junction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesViolation {
    pub degree: i64,
    pub junction: Junction,
    pub detail: String,
}

impl fmt::Display for LesViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k = {}, {}: {}", self.degree, self.junction, self.detail)
    }
}

/// Builds the rationalized table for `x` and matrix size `n >= 2`.
///
/// `k_max` defaults to 2n - 1 + dim(x), past which every row vanishes.
/// Dimensions come from the GL/Lc rank formulas; the inclusion has full
/// rank on its source, the projection takes the rest of the middle term,
/// and every connecting rank is 0. The `exact` verdict is recomputed from
/// the rank-sum conditions by `verify_exactness`, not assumed.
pub fn build_les(x: &SimplicialComplex, n: i64, k_max: Option<i64>) -> Result<LesTable> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "the sequence needs n >= 2, got {n}"
        )));
    }
    let k_max = k_max.unwrap_or(2 * n - 1 + x.dim() as i64);
    if k_max < 1 {
        return Err(Error::InvalidParameter(format!(
            "k_max must be >= 1, got {k_max}"
        )));
    }
    let prev = gl_ranks(x, n - 1)?;
    let next = gl_ranks(x, n)?;
    let lc = lc_ranks(x, n)?;
    let mut rows = Vec::with_capacity(k_max as usize);
    for degree in (1..=k_max).rev() {
        let gl_prev = prev.get(degree);
        let gl_n = next.get(degree);
        let lc_n = lc.get(degree);
        debug_assert!(gl_n >= gl_prev);
        rows.push(LesRow {
            degree,
            gl_prev,
            gl_n,
            lc_n,
            rank_inclusion: gl_prev,
            rank_projection: gl_n - gl_prev,
            rank_connecting: 0,
        });
    }
    let mut table = LesTable {
        n,
        k_max,
        rows,
        exact: false,
    };
    table.exact = verify_exactness(&table).is_empty();
    Ok(table)
}

/// Checks every junction rank-sum condition of the table and returns the
/// violations; an empty list certifies exactness of the displayed window.
///
/// Checked per degree k: rank(i_k) + rank(gamma_k) = dim pi_k(GL_n);
/// rank(gamma_k) + rank(del_k) = dim pi_k(Lc_n); for the next row down,
/// rank(del_k) + rank(i_{k-1}) = dim pi_{k-1}(GL_{n-1}). The inclusion
/// must additionally have full rank on its source (it is the summand
/// inclusion on rational homotopy), and no stored rank may exceed the
/// dimensions of its source and target.
pub fn verify_exactness(table: &LesTable) -> Vec<LesViolation> {
    let mut violations = Vec::new();
    let mut report = |degree: i64, junction: Junction, detail: String| {
        violations.push(LesViolation {
            degree,
            junction,
            detail,
        });
    };
    for (idx, row) in table.rows.iter().enumerate() {
        let k = row.degree;
        if row.rank_inclusion != row.gl_prev {
            report(
                k,
                Junction::InclusionInjectivity,
                format!(
                    "rank(i) = {} but dim pi_{k}(GL_{{n-1}}) = {}",
                    row.rank_inclusion, row.gl_prev
                ),
            );
        }
        if row.rank_inclusion > row.gl_n {
            report(
                k,
                Junction::RankFeasibility,
                format!(
                    "rank(i) = {} exceeds dim pi_{k}(GL_n) = {}",
                    row.rank_inclusion, row.gl_n
                ),
            );
        }
        if row.rank_projection > row.gl_n.min(row.lc_n) {
            report(
                k,
                Junction::RankFeasibility,
                format!(
                    "rank(gamma) = {} exceeds source or target dimension",
                    row.rank_projection
                ),
            );
        }
        if row.rank_connecting > row.lc_n {
            report(
                k,
                Junction::RankFeasibility,
                format!(
                    "rank(del) = {} exceeds dim pi_{k}(Lc_n) = {}",
                    row.rank_connecting, row.lc_n
                ),
            );
        }
        if row.rank_inclusion + row.rank_projection != row.gl_n {
            report(
                k,
                Junction::AtGlN,
                format!(
                    "rank(i) + rank(gamma) = {} + {} != dim pi_{k}(GL_n) = {}",
                    row.rank_inclusion, row.rank_projection, row.gl_n
                ),
            );
        }
        if row.rank_projection + row.rank_connecting != row.lc_n {
            report(
                k,
                Junction::AtLc,
                format!(
                    "rank(gamma) + rank(del) = {} + {} != dim pi_{k}(Lc_n) = {}",
                    row.rank_projection, row.rank_connecting, row.lc_n
                ),
            );
        }
        if let Some(below) = table.rows.get(idx + 1) {
            if row.rank_connecting + below.rank_inclusion != below.gl_prev {
                report(
                    below.degree,
                    Junction::AtGlPrev,
                    format!(
                        "rank(del_{k}) + rank(i) = {} + {} != dim pi_{}(GL_{{n-1}}) = {}",
                        row.rank_connecting,
                        below.rank_inclusion,
                        below.degree,
                        below.gl_prev
                    ),
                );
            }
        }
    }
    violations
}

impl fmt::Display for LesTable {
    /// Fixed-width rendering, one row per degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>4}  {:>10} {:>8} {:>8}  {:>7} {:>11} {:>9}",
            "k", "GL_{n-1}", "GL_n", "Lc_n", "rank i", "rank gamma", "rank del"
        )?;
        for row in &self.rows {
            writeln!(
                f,
                "{:>4}  {:>10} {:>8} {:>8}  {:>7} {:>11} {:>9}",
                row.degree,
                row.gl_prev,
                row.gl_n,
                row.lc_n,
                row.rank_inclusion,
                row.rank_projection,
                row.rank_connecting
            )?;
        }
        write!(f, "exact: {}", self.exact)
    }
}
