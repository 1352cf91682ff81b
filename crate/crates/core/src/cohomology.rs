//! Simplicial coboundary operators and rational cohomology dimensions.
//!
//! On a finite complex, simplicial and Čech cohomology agree, so ranks
//! computed here are labeled Ȟ in the user-facing output. All ranks come
//! from exact integer elimination; no floating point is involved.

use crate::complex::SimplicialComplex;
use crate::graded::GradedDims;
use crate::matrix::IntMatrix;

/// The coboundary operator from k-cochains to (k+1)-cochains as an integer
/// matrix of shape `#(k+1)-simplices x #k-simplices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryMatrix {
    degree: usize,
    matrix: IntMatrix,
}

impl CoboundaryMatrix {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Exact rank over the rationals (fraction-free elimination).
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Builds the degree-k coboundary of `x`.
///
/// Entry (sigma, tau) is (-1)^i when tau is sigma with its i-th vertex
/// (in increasing label order) deleted, and 0 otherwise. For k at or above
/// the dimension of `x` the matrix has zero rows.
pub fn coboundary(x: &SimplicialComplex, k: usize) -> CoboundaryMatrix {
    let rows = x.simplex_count(k + 1);
    let cols = x.simplex_count(k);
    let mut matrix = IntMatrix::zeros(rows, cols);
    for (row, simplex) in x.simplices(k + 1).iter().enumerate() {
        let mut face = Vec::with_capacity(simplex.len() - 1);
        for drop in 0..simplex.len() {
            face.clear();
            face.extend(simplex.iter().take(drop));
            face.extend(simplex.iter().skip(drop + 1));
            let col = x
                .simplex_index(&face)
                .expect("closure contains every face");
            matrix.set(row, col, if drop % 2 == 0 { 1 } else { -1 });
        }
    }
    CoboundaryMatrix { degree: k, matrix }
}

/// Ranks of all coboundaries, `ranks[k]` = rank of the degree-k operator.
fn coboundary_ranks(x: &SimplicialComplex) -> Vec<usize> {
    (0..=x.dim()).map(|k| coboundary(x, k).rank()).collect()
}

/// Rational Betti numbers: `b_k = dim C^k - rank d_k - rank d_{k-1}`.
pub fn betti(x: &SimplicialComplex) -> GradedDims {
    betti_with_coefficients(x, 1)
}

/// Betti numbers with coefficients in a rational vector space of dimension
/// `coeff_dim`; every rank scales by that factor.
pub fn betti_with_coefficients(x: &SimplicialComplex, coeff_dim: usize) -> GradedDims {
    let ranks = coboundary_ranks(x);
    let mut out = GradedDims::new();
    for k in 0..=x.dim() {
        let below = if k == 0 { 0 } else { ranks[k - 1] };
        let b_k = x.simplex_count(k) - ranks[k] - below;
        out.add_rank(k as i64, b_k * coeff_dim);
    }
    out
}

/// Reduced Betti numbers: the degree-0 rank drops by one (components minus
/// one); other degrees are unchanged.
pub fn reduced_betti(x: &SimplicialComplex) -> GradedDims {
    let full = betti(x);
    GradedDims::from_pairs(
        full.iter()
            .map(|(degree, rank)| (degree, if degree == 0 { rank - 1 } else { rank })),
    )
}

/// Euler characteristic as the alternating sum of simplex counts.
pub fn euler_characteristic(x: &SimplicialComplex) -> i64 {
    x.f_vector()
        .iter()
        .enumerate()
        .map(|(k, &count)| if k % 2 == 0 { count as i64 } else { -(count as i64) })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::from_maximal_simplices(vec![vec![0, 1], vec![1, 2], vec![0, 2]])
            .unwrap()
    }

    #[test]
    fn triangle_coboundary_has_rank_two() {
        let d0 = coboundary(&triangle(), 0);
        assert_eq!((d0.rows(), d0.cols()), (3, 3));
        assert_eq!(d0.rank(), 2);
    }

    #[test]
    fn point_coboundary_is_empty() {
        let d0 = coboundary(&builders::point(), 0);
        assert_eq!((d0.rows(), d0.cols()), (0, 1));
        assert_eq!(d0.rank(), 0);
    }

    #[test]
    fn coboundaries_compose_to_zero() {
        let s2 = builders::simplex_boundary(3).unwrap();
        let d0 = coboundary(&s2, 0);
        let d1 = coboundary(&s2, 1);
        assert_eq!((d1.rows(), d1.cols()), (4, 6));
        assert!(d1.matrix().matmul(d0.matrix()).iter().all(|&v| v == 0));
    }

    #[test]
    fn each_row_has_k_plus_two_nonzeros() {
        let t = builders::torus7();
        for k in 0..t.dim() {
            let d = coboundary(&t, k);
            for r in 0..d.rows() {
                let nonzeros = (0..d.cols()).filter(|&c| d.matrix().get(r, c) != 0).count();
                assert_eq!(nonzeros, k + 2);
            }
        }
    }

    #[test]
    fn sphere_betti() {
        let s2 = builders::simplex_boundary(3).unwrap();
        assert_eq!(betti(&s2), GradedDims::from_pairs([(0, 1), (2, 1)]));
        assert_eq!(reduced_betti(&s2), GradedDims::from_pairs([(2, 1)]));
    }

    #[test]
    fn torus_betti() {
        assert_eq!(
            betti(&builders::torus7()),
            GradedDims::from_pairs([(0, 1), (1, 2), (2, 1)])
        );
    }

    #[test]
    fn projective_plane_is_rationally_trivial() {
        assert_eq!(betti(&builders::rp2_6()), GradedDims::from_pairs([(0, 1)]));
    }

    #[test]
    fn klein_bottle_betti() {
        assert_eq!(
            betti(&builders::klein8()),
            GradedDims::from_pairs([(0, 1), (1, 1)])
        );
    }

    #[test]
    fn coefficient_dimension_scales_ranks() {
        let t = builders::torus7();
        assert_eq!(
            betti_with_coefficients(&t, 3),
            GradedDims::from_pairs([(0, 3), (1, 6), (2, 3)])
        );
    }

    #[test]
    fn reduced_betti_of_components_and_point() {
        let two = builders::disjoint_union(&builders::point(), &builders::point()).unwrap();
        assert_eq!(betti(&two), GradedDims::from_pairs([(0, 2)]));
        assert_eq!(reduced_betti(&two), GradedDims::from_pairs([(0, 1)]));
        assert!(reduced_betti(&builders::point()).is_empty());
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(euler_characteristic(&builders::simplex_boundary(3).unwrap()), 2);
        assert_eq!(euler_characteristic(&builders::torus7()), 0);
        assert_eq!(euler_characteristic(&builders::point()), 1);
    }

    #[test]
    fn suspension_of_circle_is_a_sphere() {
        let s1 = builders::simplex_boundary(2).unwrap();
        let susp = builders::suspension(&s1).unwrap();
        assert_eq!(betti(&susp), GradedDims::from_pairs([(0, 1), (2, 1)]));
    }
}
