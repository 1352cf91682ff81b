//! Rational homotopy ranks of gauge groups F(X, G), of GL_n(C(X)), and of
//! the space of last columns Lc_n(C(X)), together with the inversion that
//! recovers cohomology ranks from the Lc ranks.
//!
//! The free function-space rank in degree j is the sum over l >= j of
//! rank pi_l(G) times dim H^{l-j}(X; Q); the based variant uses reduced
//! cohomology. GL_n uses the U(n) degrees 1, 3, ..., 2n-1, and Lc_n the
//! single degree 2n-1. All results concern basepoint components, so the
//! degree range starts at 1.

use crate::cohomology::{betti, reduced_betti};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graded::GradedDims;
use crate::hspace::RationalHSpace;
use serde::Serialize;

/// Rational homotopy ranks of the free and based gauge spaces on one model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaugeResult {
    /// pi_j(F(X, G)°) ⊗ Q.
    pub free_ranks: GradedDims,
    /// pi_j(F•(X, G)°) ⊗ Q.
    pub based_ranks: GradedDims,
    /// The product-of-Eilenberg-Mac-Lane presentation of the free space:
    /// one (degree, rank) entry per nonzero degree.
    pub em_decomposition: Vec<(i64, usize)>,
    /// Whether the free and based spaces are rationally homotopy-abelian;
    /// true whenever the model has finite-dimensional cohomology.
    pub habelian: bool,
}

/// Per-degree data for the stabilization map GL_{n-1} -> GL_n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationRow {
    pub degree: i64,
    pub rank_prev: usize,
    pub rank_next: usize,
    pub cokernel: usize,
}

/// The stabilization map on rational homotopy: always injective, with
/// cokernel the new top summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub n: i64,
    pub rows: Vec<StabilizationRow>,
    /// Injectivity is structural: the map is the inclusion of a direct-sum
    /// decomposition, degree by degree.
    pub injective: bool,
}

/// Evaluates the gauge-group rank formulas for a complex and a model.
pub fn gauge_ranks(x: &SimplicialComplex, g: &RationalHSpace) -> GaugeResult {
    let b = betti(x);
    let b_reduced = reduced_betti(x);
    let mut free_ranks = GradedDims::new();
    let mut based_ranks = GradedDims::new();
    if let Some(max_degree) = g.max_degree() {
        for j in 1..=max_degree {
            let mut free = 0;
            let mut based = 0;
            for (l, rank) in g.homotopy_ranks().iter().filter(|&(l, _)| l >= j) {
                free += rank * b.get(l - j);
                based += rank * b_reduced.get(l - j);
            }
            free_ranks.add_rank(j, free);
            based_ranks.add_rank(j, based);
        }
    }
    let em_decomposition = free_ranks.iter().collect();
    GaugeResult {
        free_ranks,
        based_ranks,
        em_decomposition,
        habelian: g.finite_dim_cohomology(),
    }
}

/// pi_h(GL_n(C(X))°) ⊗ Q: the sum over j = 1..n of dim H^{2j-1-h}(X; Q).
pub fn gl_ranks(x: &SimplicialComplex, n: i64) -> Result<GradedDims> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!(
            "GL_n requires n >= 1, got {n}"
        )));
    }
    let b = betti(x);
    let mut ranks = GradedDims::new();
    for h in 1..=(2 * n - 1) {
        let total = (1..=n).map(|j| b.get(2 * j - 1 - h)).sum();
        ranks.add_rank(h, total);
    }
    Ok(ranks)
}

/// pi_k(Lc_n(C(X))°) ⊗ Q: dim H^{2n-1-k}(X; Q) in each degree k >= 1.
pub fn lc_ranks(x: &SimplicialComplex, n: i64) -> Result<GradedDims> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!(
            "Lc_n requires n >= 1, got {n}"
        )));
    }
    let b = betti(x);
    let mut ranks = GradedDims::new();
    for k in 1..=(2 * n - 1) {
        ranks.add_rank(k, b.get(2 * n - 1 - k));
    }
    Ok(ranks)
}

/// Compares GL_{n-1} and GL_n ranks degree by degree.
pub fn stabilization(x: &SimplicialComplex, n: i64) -> Result<StabilizationReport> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "stabilization requires n >= 2, got {n}"
        )));
    }
    let prev = gl_ranks(x, n - 1)?;
    let next = gl_ranks(x, n)?;
    let mut rows = Vec::new();
    for degree in 1..=(2 * n - 1) {
        let rank_prev = prev.get(degree);
        let rank_next = next.get(degree);
        debug_assert!(rank_next >= rank_prev, "stabilization never loses rank");
        if rank_prev == 0 && rank_next == 0 {
            continue;
        }
        rows.push(StabilizationRow {
            degree,
            rank_prev,
            rank_next,
            cokernel: rank_next - rank_prev,
        });
    }
    Ok(StabilizationReport {
        n,
        rows,
        injective: true,
    })
}

/// Recovers dim H^s(X; Q) from the Lc_n ranks: the rank in degree
/// 2n-1-s, valid in the stable range n > s/2 + 1 (enforced strictly).
///
/// Takes the ranks as data rather than the complex, so externally supplied
/// tables can be inverted as well.
pub fn recover_cohomology(lc: &GradedDims, n: i64, s: i64) -> Result<usize> {
    if s < 0 {
        return Err(Error::InvalidParameter(format!(
            "cohomological degree s must be >= 0, got {s}"
        )));
    }
    if 2 * n <= s + 2 {
        return Err(Error::stability_range(n, s));
    }
    Ok(lc.get(2 * n - 1 - s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    #[test]
    fn sphere_with_u2() {
        let s2 = builders::simplex_boundary(3).unwrap();
        let u2 = RationalHSpace::unitary(2).unwrap();
        let result = gauge_ranks(&s2, &u2);
        assert_eq!(result.free_ranks, GradedDims::from_pairs([(1, 2), (3, 1)]));
        // splitting: free(1) = based(1) + rank 1 of U(2), so based(1) = 1;
        // in degree 3 the reduced H^0 term vanishes.
        assert_eq!(result.based_ranks, GradedDims::from_pairs([(1, 1)]));
        assert!(result.habelian);
        assert_eq!(result.em_decomposition, vec![(1, 2), (3, 1)]);
    }

    #[test]
    fn point_domain_gives_the_model_back() {
        let pt = builders::point();
        for g in [
            RationalHSpace::unitary(3).unwrap(),
            RationalHSpace::odd_sphere(5).unwrap(),
            RationalHSpace::em_product(&[(1, 1), (2, 1)]).unwrap(),
        ] {
            let result = gauge_ranks(&pt, &g);
            assert_eq!(&result.free_ranks, g.homotopy_ranks());
            assert!(result.based_ranks.is_empty());
        }
    }

    #[test]
    fn torus_against_a_single_em_factor() {
        let torus = builders::torus7();
        let k3 = RationalHSpace::em_product(&[(3, 1)]).unwrap();
        let result = gauge_ranks(&torus, &k3);
        assert_eq!(
            result.free_ranks,
            GradedDims::from_pairs([(1, 1), (2, 2), (3, 1)])
        );
    }

    #[test]
    fn gl_rank_examples() {
        let s2 = builders::simplex_boundary(3).unwrap();
        assert_eq!(
            gl_ranks(&s2, 2).unwrap(),
            GradedDims::from_pairs([(1, 2), (3, 1)])
        );
        let pt = builders::point();
        assert_eq!(
            gl_ranks(&pt, 3).unwrap(),
            GradedDims::from_pairs([(1, 1), (3, 1), (5, 1)])
        );
        let torus = builders::torus7();
        assert_eq!(
            gl_ranks(&torus, 2).unwrap(),
            GradedDims::from_pairs([(1, 2), (2, 2), (3, 1)])
        );
        assert!(gl_ranks(&pt, 0).is_err());
    }

    #[test]
    fn lc_rank_examples() {
        let s2 = builders::simplex_boundary(3).unwrap();
        assert_eq!(
            lc_ranks(&s2, 2).unwrap(),
            GradedDims::from_pairs([(1, 1), (3, 1)])
        );
        let pt = builders::point();
        assert_eq!(lc_ranks(&pt, 2).unwrap(), GradedDims::from_pairs([(3, 1)]));
        let torus = builders::torus7();
        assert_eq!(
            lc_ranks(&torus, 3).unwrap(),
            GradedDims::from_pairs([(3, 1), (4, 2), (5, 1)])
        );
    }

    #[test]
    fn stabilization_examples() {
        let s2 = builders::simplex_boundary(3).unwrap();
        let report = stabilization(&s2, 2).unwrap();
        assert_eq!(
            report.rows,
            vec![
                StabilizationRow { degree: 1, rank_prev: 1, rank_next: 2, cokernel: 1 },
                StabilizationRow { degree: 3, rank_prev: 0, rank_next: 1, cokernel: 1 },
            ]
        );
        assert!(report.injective);

        let pt = builders::point();
        let report = stabilization(&pt, 2).unwrap();
        assert_eq!(
            report.rows,
            vec![
                StabilizationRow { degree: 1, rank_prev: 1, rank_next: 1, cokernel: 0 },
                StabilizationRow { degree: 3, rank_prev: 0, rank_next: 1, cokernel: 1 },
            ]
        );
        assert!(stabilization(&pt, 1).is_err());
    }

    #[test]
    fn cokernel_column_equals_lc_ranks() {
        let torus = builders::torus7();
        for n in 2..=5 {
            let report = stabilization(&torus, n).unwrap();
            let lc = lc_ranks(&torus, n).unwrap();
            let cokernel = GradedDims::from_pairs(
                report.rows.iter().map(|r| (r.degree, r.cokernel)),
            );
            assert_eq!(cokernel, lc, "n = {n}");
        }
    }

    #[test]
    fn recovery_roundtrip_and_range() {
        let torus = builders::torus7();
        let lc = lc_ranks(&torus, 3).unwrap();
        assert_eq!(recover_cohomology(&lc, 3, 1).unwrap(), 2);

        let s2 = builders::simplex_boundary(3).unwrap();
        let lc = lc_ranks(&s2, 3).unwrap();
        assert_eq!(recover_cohomology(&lc, 3, 0).unwrap(), 1);

        let err = recover_cohomology(&lc, 3, 4).unwrap_err();
        assert!(err.to_string().contains("requires n > 3"), "{err}");
        match err {
            Error::StabilityRange { min_n, .. } => assert_eq!(min_n, 4),
            other => panic!("unexpected error {other:?}"),
        }
        // boundary: s = 2 needs n > 2, so n = 2 fails and n = 3 works
        assert!(recover_cohomology(&lc, 2, 2).is_err());
        assert!(recover_cohomology(&lc, 3, 2).is_ok());
        // odd s renders the bound as a half integer
        let err = recover_cohomology(&lc, 2, 3).unwrap_err();
        assert!(err.to_string().contains("3/2 + 1"), "{err}");
    }
}
