//! Finitely supported rank tables indexed by integer degree.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A finitely supported mapping from integer degree to a nonnegative rank.
///
/// Only nonzero ranks are stored; `get` at any integer, including negative
/// degrees, returns 0 outside the support. Used for Betti vectors and for
/// rational homotopy ranks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedDims {
    ranks: BTreeMap<i64, usize>,
}

impl GradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a table from `(degree, rank)` pairs; zero ranks are dropped
    /// and duplicate degrees are summed.
    pub fn from_pairs<I: IntoIterator<Item = (i64, usize)>>(pairs: I) -> Self {
        let mut dims = Self::new();
        for (degree, rank) in pairs {
            dims.add_rank(degree, rank);
        }
        dims
    }

    /// Rank at `degree`; 0 outside the support.
    pub fn get(&self, degree: i64) -> usize {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    /// Adds `rank` to the entry at `degree`, keeping the support minimal.
    pub fn add_rank(&mut self, degree: i64, rank: usize) {
        if rank == 0 {
            return;
        }
        *self.ranks.entry(degree).or_insert(0) += rank;
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Support and ranks in increasing degree order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.ranks.iter().map(|(&d, &r)| (d, r))
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.ranks.keys().next_back().copied()
    }

    /// Sum of all stored ranks.
    pub fn total_rank(&self) -> usize {
        self.ranks.values().sum()
    }

    /// Degreewise sum.
    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (degree, rank) in other.iter() {
            out.add_rank(degree, rank);
        }
        out
    }

    /// Every rank multiplied by `factor`.
    pub fn scaled(&self, factor: usize) -> Self {
        Self::from_pairs(self.iter().map(|(d, r)| (d, r * factor)))
    }

    /// Degreewise difference `self - other`, or `None` if any entry would
    /// go negative.
    pub fn minus(&self, other: &Self) -> Option<Self> {
        let mut out = Self::new();
        let degrees: std::collections::BTreeSet<i64> = self
            .ranks
            .keys()
            .chain(other.ranks.keys())
            .copied()
            .collect();
        for degree in degrees {
            let a = self.get(degree);
            let b = other.get(degree);
            if a < b {
                return None;
            }
            out.add_rank(degree, a - b);
        }
        Some(out)
    }
}

impl FromIterator<(i64, usize)> for GradedDims {
    fn from_iter<I: IntoIterator<Item = (i64, usize)>>(iter: I) -> Self {
        Self::from_pairs(iter)
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ranks.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (i, (degree, rank)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", degree, rank)?;
        }
        write!(f, "}}")
    }
}
