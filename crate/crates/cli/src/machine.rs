//! Machine-readable output documents.
//!
//! Every invocation in machine mode emits exactly one self-describing JSON
//! document on a single line. The schema is versioned by the single
//! integer [`SCHEMA_VERSION`]; field order is fixed by the struct
//! definitions, so identical inputs produce byte-identical output.

use gaugerank_core::{
    GradedDims, HnilReport, LesRow, LesViolation, RationalHSpace, SimplicialComplex,
};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// Shape summary of the complex an invocation ran on.
#[derive(Serialize)]
pub struct ComplexSummary {
    pub source: String,
    pub name: Option<String>,
    pub dim: usize,
    pub f_vector: Vec<usize>,
}

impl ComplexSummary {
    pub fn new(source: &str, x: &SimplicialComplex) -> Self {
        Self {
            source: source.to_string(),
            name: x.name().map(str::to_string),
            dim: x.dim(),
            f_vector: x.f_vector(),
        }
    }
}

#[derive(Serialize)]
pub struct CohomologyDoc {
    pub schema_version: u32,
    pub command: &'static str,
    pub complex: ComplexSummary,
    pub coeff_dim: usize,
    pub reduced: bool,
    pub ranks: GradedDims,
    pub euler_characteristic: i64,
}

#[derive(Serialize)]
pub struct GaugeDoc {
    pub schema_version: u32,
    pub command: &'static str,
    pub complex: ComplexSummary,
    pub group: RationalHSpace,
    pub free_ranks: GradedDims,
    pub based_ranks: GradedDims,
    pub em_decomposition: Vec<(i64, usize)>,
    pub habelian: bool,
    pub hnil: HnilReport,
}

/// Shared by `gl` and `lc`: a single graded rank table for one matrix size.
#[derive(Serialize)]
pub struct RanksDoc {
    pub schema_version: u32,
    pub command: &'static str,
    pub complex: ComplexSummary,
    pub n: i64,
    pub ranks: GradedDims,
}

#[derive(Serialize)]
pub struct LesDoc {
    pub schema_version: u32,
    pub command: &'static str,
    pub complex: ComplexSummary,
    pub n: i64,
    pub k_max: i64,
    pub rows: Vec<LesRow>,
    pub exact: bool,
    pub violations: Vec<LesViolation>,
}

#[derive(Serialize)]
pub struct RecoverDoc {
    pub schema_version: u32,
    pub command: &'static str,
    pub source: String,
    pub n: i64,
    pub s: i64,
    pub lc_degree: i64,
    pub rank: usize,
}

#[derive(Serialize)]
pub struct FactorDoc {
    pub schema_version: u32,
    pub command: &'static str,
    pub coeffs: Vec<i64>,
    pub generator_degrees: Vec<i64>,
}

#[derive(Serialize)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub dim: usize,
    pub f_vector: Vec<usize>,
}

#[derive(Serialize)]
pub struct CorpusDoc {
    pub schema_version: u32,
    pub command: &'static str,
    pub entries: Vec<CorpusEntry>,
}

/// One line of JSON, newline terminated.
pub fn render<T: Serialize>(doc: &T) -> String {
    let mut line = serde_json::to_string(doc).expect("documents always serialize");
    line.push('\n');
    line
}
