//! Shared test oracles.
//!
//! The rank oracle is a naive dense Gaussian elimination over exact
//! rationals, and the Betti oracle assembles its own coboundary matrices
//! from the closure by linear search. Neither touches the fraction-free
//! elimination or matrix assembly used by the library, so agreement is a
//! genuine cross-check of both layers.

use gaugerank_core::{GradedDims, SimplicialComplex};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Rank by textbook row reduction over Q.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    if nrows == 0 || ncols == 0 {
        return 0;
    }
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_value = m[rank][col].clone();
        for r in 0..nrows {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot_value;
            for c in col..ncols {
                let delta = &factor * &m[rank][c];
                m[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Coboundary entries assembled independently: faces found by scanning the
/// k-simplex list rather than binary search.
pub fn oracle_coboundary(x: &SimplicialComplex, k: usize) -> Vec<Vec<i64>> {
    let lower = x.simplices(k);
    let upper = x.simplices(k + 1);
    let mut rows = Vec::with_capacity(upper.len());
    for simplex in upper {
        let mut row = vec![0i64; lower.len()];
        for (drop, _) in simplex.iter().enumerate() {
            let face: Vec<u32> = simplex
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, &v)| v)
                .collect();
            let col = lower
                .iter()
                .position(|candidate| candidate == &face)
                .expect("closure contains every face");
            row[col] = if drop % 2 == 0 { 1 } else { -1 };
        }
        rows.push(row);
    }
    rows
}

/// Betti numbers computed entirely through the oracle path.
pub fn oracle_betti(x: &SimplicialComplex) -> GradedDims {
    let dim = x.dim();
    let ranks: Vec<usize> = (0..=dim)
        .map(|k| rational_rank(&oracle_coboundary(x, k)))
        .collect();
    let mut out = GradedDims::new();
    for k in 0..=dim {
        let below = if k == 0 { 0 } else { ranks[k - 1] };
        out.add_rank(k as i64, x.simplex_count(k) - ranks[k] - below);
    }
    out
}

/// Reduced variant of the oracle.
pub fn oracle_reduced_betti(x: &SimplicialComplex) -> GradedDims {
    let full = oracle_betti(x);
    GradedDims::from_pairs(
        full.iter()
            .map(|(d, r)| (d, if d == 0 { r - 1 } else { r })),
    )
}
