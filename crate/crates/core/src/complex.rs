//! Finite abstract simplicial complexes given by their maximal simplices.

use crate::error::{Error, Result};
use serde::Deserialize;
use std::collections::BTreeSet;

/// Dense-matrix threshold: a complex with more simplices than this in any
/// single dimension is rejected with a capacity error instead of silently
/// degrading.
pub const MAX_SIMPLICES_PER_DIM: usize = 10_000;

/// A finite abstract simplicial complex.
///
/// The closure is computed once at construction: `closure[k]` holds every
/// k-simplex as a strictly increasing vertex tuple, and each per-dimension
/// list is sorted lexicographically. Values are immutable afterwards and
/// safe to share between threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    name: Option<String>,
    vertices: Vec<u32>,
    maximal: Vec<Vec<u32>>,
    closure: Vec<Vec<Vec<u32>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    maximal_simplices: Vec<Vec<u32>>,
    #[serde(default)]
    name: Option<String>,
}

impl SimplicialComplex {
    /// Validates and closes a list of maximal simplices.
    ///
    /// Each simplex is normalized to increasing vertex order. Rejected
    /// inputs: an empty list, an empty simplex, a duplicated vertex within
    /// a simplex, and closures exceeding [`MAX_SIMPLICES_PER_DIM`].
    pub fn from_maximal_simplices(maximal: Vec<Vec<u32>>) -> Result<Self> {
        if maximal.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let mut normalized: Vec<Vec<u32>> = Vec::with_capacity(maximal.len());
        for (index, simplex) in maximal.into_iter().enumerate() {
            if simplex.is_empty() {
                return Err(Error::EmptySimplex { index });
            }
            let mut simplex = simplex;
            simplex.sort_unstable();
            if let Some(w) = simplex.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertex {
                    index,
                    label: w[0],
                });
            }
            // A single huge simplex already blows the per-dimension cap in
            // its middle dimension; refuse before enumerating 2^n faces.
            if simplex.len() >= 16 {
                let mid = simplex.len() / 2;
                return Err(Error::Capacity {
                    dimension: mid - 1,
                    count: binomial_saturating(simplex.len(), mid),
                    limit: MAX_SIMPLICES_PER_DIM,
                });
            }
            normalized.push(simplex);
        }
        normalized.sort();
        normalized.dedup();

        let dim = normalized.iter().map(|s| s.len() - 1).max().unwrap_or(0);
        let mut closure: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); dim + 1];
        for simplex in &normalized {
            let n = simplex.len();
            // all nonempty subsets, via bitmask; n <= 15 here
            for mask in 1u32..(1 << n) {
                let face: Vec<u32> = (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| simplex[i])
                    .collect();
                closure[face.len() - 1].insert(face);
            }
        }
        for (dimension, faces) in closure.iter().enumerate() {
            if faces.len() > MAX_SIMPLICES_PER_DIM {
                return Err(Error::Capacity {
                    dimension,
                    count: faces.len(),
                    limit: MAX_SIMPLICES_PER_DIM,
                });
            }
        }
        let closure: Vec<Vec<Vec<u32>>> = closure
            .into_iter()
            .map(|faces| faces.into_iter().collect())
            .collect();
        let vertices: Vec<u32> = closure[0].iter().map(|v| v[0]).collect();
        Ok(Self {
            name: None,
            vertices,
            maximal: normalized,
            closure,
        })
    }

    /// Parses the complex-file format: a UTF-8 JSON object with the key
    /// `"maximal_simplices"` (a list of lists of nonnegative integers) and
    /// an optional `"name"`. Syntax errors carry line and column.
    pub fn parse(text: &str) -> Result<Self> {
        let file: ComplexFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let complex = Self::from_maximal_simplices(file.maximal_simplices)?;
        Ok(match file.name {
            Some(name) => complex.with_name(name),
            None => complex,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Dimension: maximal simplex cardinality minus one.
    pub fn dim(&self) -> usize {
        self.closure.len() - 1
    }

    /// Sorted distinct vertex labels.
    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// The normalized maximal simplices the complex was built from.
    pub fn maximal_simplices(&self) -> &[Vec<u32>] {
        &self.maximal
    }

    /// All k-simplices in lexicographic order; empty above the dimension.
    pub fn simplices(&self, k: usize) -> &[Vec<u32>] {
        self.closure.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn simplex_count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    /// Position of a simplex inside its dimension list.
    pub fn simplex_index(&self, simplex: &[u32]) -> Option<usize> {
        let list = self.simplices(simplex.len().checked_sub(1)?);
        list.binary_search_by(|probe| probe.as_slice().cmp(simplex)).ok()
    }

    /// Simplex counts per dimension, `f_vector()[k]` = number of k-simplices.
    pub fn f_vector(&self) -> Vec<usize> {
        self.closure.iter().map(Vec::len).collect()
    }

    /// Largest vertex label; the complex is never empty.
    pub fn max_vertex(&self) -> u32 {
        *self.vertices.last().expect("complex is nonempty")
    }
}

fn binomial_saturating(n: usize, k: usize) -> usize {
    let mut value: u128 = 1;
    for i in 0..k.min(n - k) {
        value = value.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    usize::try_from(value).unwrap_or(usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_boundary_closure() {
        let text = r#"{"maximal_simplices": [[0,1],[1,2],[0,2]]}"#;
        let x = SimplicialComplex::parse(text).unwrap();
        assert_eq!(x.dim(), 1);
        assert_eq!(x.vertices(), &[0, 1, 2]);
        assert_eq!(x.simplex_count(0), 3);
        assert_eq!(x.simplex_count(1), 3);
        assert_eq!(x.simplices(1), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn single_point() {
        let x = SimplicialComplex::parse(r#"{"maximal_simplices": [[0]]}"#).unwrap();
        assert_eq!(x.dim(), 0);
        assert_eq!(x.f_vector(), vec![1]);
    }

    #[test]
    fn duplicate_vertex_is_rejected() {
        let err = SimplicialComplex::parse(r#"{"maximal_simplices": [[0,0,1]]}"#).unwrap_err();
        assert_eq!(err, Error::DuplicateVertex { index: 0, label: 0 });
    }

    #[test]
    fn empty_inputs_are_rejected() {
        assert_eq!(
            SimplicialComplex::parse(r#"{"maximal_simplices": []}"#).unwrap_err(),
            Error::EmptyComplex
        );
        assert_eq!(
            SimplicialComplex::parse(r#"{"maximal_simplices": [[]]}"#).unwrap_err(),
            Error::EmptySimplex { index: 0 }
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = SimplicialComplex::parse("{\"maximal_simplices\": [[0,1]\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        // negative labels are a syntax-level type error with a position
        let err = SimplicialComplex::parse(r#"{"maximal_simplices": [[-1]]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err =
            SimplicialComplex::parse(r#"{"maximal_simplices": [[0]], "extra": 1}"#).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn name_is_preserved() {
        let x = SimplicialComplex::parse(r#"{"name": "tri", "maximal_simplices": [[0,1,2]]}"#)
            .unwrap();
        assert_eq!(x.name(), Some("tri"));
    }

    #[test]
    fn oversized_simplex_hits_capacity() {
        let big: Vec<u32> = (0..16).collect();
        let err = SimplicialComplex::from_maximal_simplices(vec![big]).unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }));
    }

    #[test]
    fn faces_of_faces_are_present() {
        let x = SimplicialComplex::from_maximal_simplices(vec![vec![0, 1, 2, 3]]).unwrap();
        for k in (1..=x.dim()).rev() {
            for simplex in x.simplices(k) {
                for drop in 0..simplex.len() {
                    let mut face = simplex.clone();
                    face.remove(drop);
                    assert!(x.simplex_index(&face).is_some(), "missing face {face:?}");
                }
            }
        }
    }
}
