//! Dense integer matrices with exact rank computation.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination over arbitrary
//! precision integers. No floating point enters any computation here.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A dense integer matrix in row-major order.
///
/// Coboundary operators only ever hold entries in {-1, 0, +1}, so entries
/// are stored as `i8`; the rank computation promotes to `BigInt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i8>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        i64::from(self.data[r * self.cols + c])
    }

    pub fn set(&mut self, r: usize, c: usize, value: i8) {
        self.data[r * self.cols + c] = value;
    }

    /// Row-major matrix product `self * other` with exact `i64` entries.
    ///
    /// Panics if the shapes do not compose. Intended for invariant checks
    /// such as verifying that consecutive coboundaries compose to zero.
    pub fn matmul(&self, other: &IntMatrix) -> Vec<i64> {
        assert_eq!(self.cols, other.rows, "shape mismatch in matmul");
        let mut out = vec![0i64; self.rows * other.cols];
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    out[r * other.cols + c] += a * other.get(k, c);
                }
            }
        }
        out
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| BigInt::from(self.get(r, c))).collect())
            .collect();
        bareiss_rank(rows)
    }
}

/// Rank of an integer matrix by fraction-free Gaussian elimination.
///
/// The Bareiss update keeps every intermediate entry an exact minor of the
/// input, so the division by the previous pivot is exact and no rational
/// arithmetic is needed. Rows may be empty; an empty matrix has rank 0.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    if nrows == 0 || ncols == 0 {
        return 0;
    }
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..nrows {
            let lead = std::mem::replace(&mut m[r][col], BigInt::zero());
            for c in col + 1..ncols {
                let value = &m[r][c] * &pivot - &lead * &m[rank][c];
                debug_assert!((&value % &prev).is_zero(), "Bareiss division must be exact");
                m[r][c] = value / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Convenience wrapper for `i64` row data.
pub fn rank_of_rows(rows: &[Vec<i64>]) -> usize {
    bareiss_rank(
        rows.iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}
