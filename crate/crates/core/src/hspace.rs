//! Rational H-space models: a name, homotopy ranks per degree, and a flag
//! recording whether the rational cohomology is finite-dimensional.
//!
//! A model with finite-dimensional cohomology is an exterior algebra on
//! odd-degree generators, so its supported degrees must all be odd; the
//! constructors enforce this. The generator degrees of the classical
//! groups shipped here are validated in tests by expanding the exterior
//! Poincaré polynomial and factoring it back.

use crate::error::{Error, Result};
use crate::graded::GradedDims;
use crate::poincare::PoincarePoly;
use serde::Serialize;

/// A rational H-space model determined by its homotopy ranks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalHSpace {
    name: String,
    homotopy_ranks: GradedDims,
    finite_dim_cohomology: bool,
}

impl RationalHSpace {
    /// Validates the model: degrees must be >= 1, and a model flagged with
    /// finite-dimensional cohomology may only support odd degrees.
    pub fn new(
        name: impl Into<String>,
        homotopy_ranks: GradedDims,
        finite_dim_cohomology: bool,
    ) -> Result<Self> {
        if let Some((degree, _)) = homotopy_ranks.iter().find(|&(d, _)| d < 1) {
            return Err(Error::InvalidParameter(format!(
                "homotopy ranks live in degrees >= 1, got degree {degree}"
            )));
        }
        if finite_dim_cohomology {
            if let Some((degree, _)) = homotopy_ranks.iter().find(|&(d, _)| d % 2 == 0) {
                return Err(Error::InvalidParameter(format!(
                    "finite-dimensional cohomology forces odd generator degrees, got degree {degree}"
                )));
            }
        }
        Ok(Self {
            name: name.into(),
            homotopy_ranks,
            finite_dim_cohomology,
        })
    }

    /// The one-point group: no homotopy, finite-dimensional cohomology.
    pub fn trivial() -> Self {
        Self {
            name: "trivial".into(),
            homotopy_ranks: GradedDims::new(),
            finite_dim_cohomology: true,
        }
    }

    /// U(n) (equally GL_n(C), by polar retraction): one generator in each
    /// odd degree 1, 3, ..., 2n-1.
    pub fn unitary(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!("U(n) requires n >= 1, got {n}")));
        }
        let ranks = GradedDims::from_pairs((1..=n).map(|j| (2 * j - 1, 1)));
        Self::new(format!("U({n})"), ranks, true)
    }

    /// SU(n): odd degrees 3, 5, ..., 2n-1 (trivial for n = 1).
    pub fn special_unitary(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!("SU(n) requires n >= 1, got {n}")));
        }
        let ranks = GradedDims::from_pairs((2..=n).map(|j| (2 * j - 1, 1)));
        Self::new(format!("SU({n})"), ranks, true)
    }

    /// Sp(n): odd degrees 3, 7, ..., 4n-1.
    pub fn symplectic(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!("Sp(n) requires n >= 1, got {n}")));
        }
        let ranks = GradedDims::from_pairs((1..=n).map(|j| (4 * j - 1, 1)));
        Self::new(format!("Sp({n})"), ranks, true)
    }

    /// The rational model of an odd sphere S^m: K(Q, m). Even spheres are
    /// rejected; they carry two nontrivial rational homotopy groups and are
    /// not modeled here.
    pub fn odd_sphere(m: i64) -> Result<Self> {
        if m < 1 || m % 2 == 0 {
            return Err(Error::InvalidParameter(format!(
                "S(m) requires odd m >= 1, got {m}: an even sphere is not a rational H-space model here"
            )));
        }
        Self::new(format!("S({m})"), GradedDims::from_pairs([(m, 1)]), true)
    }

    /// A finite product of Eilenberg-Mac Lane spaces, given as
    /// `(degree, rank)` pairs. Duplicate degrees merge by summing ranks;
    /// the cohomology is finite-dimensional exactly when every degree is
    /// odd. The empty product is the trivial model.
    pub fn em_product(spec: &[(i64, i64)]) -> Result<Self> {
        for &(degree, rank) in spec {
            if degree < 1 {
                return Err(Error::InvalidParameter(format!(
                    "K(degree:rank) requires degree >= 1, got {degree}"
                )));
            }
            if rank < 1 {
                return Err(Error::InvalidParameter(format!(
                    "K(degree:rank) requires rank >= 1, got {rank}"
                )));
            }
        }
        let ranks = GradedDims::from_pairs(spec.iter().map(|&(d, r)| (d, r as usize)));
        let all_odd = ranks.iter().all(|(d, _)| d % 2 != 0);
        let name = if ranks.is_empty() {
            "trivial".to_string()
        } else {
            let body: Vec<String> = ranks.iter().map(|(d, r)| format!("{d}:{r}")).collect();
            format!("K({})", body.join(","))
        };
        Self::new(name, ranks, all_odd)
    }

    /// Product of two models: homotopy ranks add degreewise, and the
    /// cohomology stays finite-dimensional only if both factors are.
    pub fn product(&self, other: &Self) -> Self {
        Self {
            name: format!("{} x {}", self.name, other.name),
            homotopy_ranks: self.homotopy_ranks.sum(&other.homotopy_ranks),
            finite_dim_cohomology: self.finite_dim_cohomology && other.finite_dim_cohomology,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn homotopy_ranks(&self) -> &GradedDims {
        &self.homotopy_ranks
    }

    pub fn finite_dim_cohomology(&self) -> bool {
        self.finite_dim_cohomology
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.homotopy_ranks.max_degree()
    }

    /// Poincaré polynomial of the cohomology in the finite-dimensional
    /// case: the exterior algebra on the supported degrees with
    /// multiplicity. `None` when the cohomology is not finite-dimensional.
    pub fn poincare_polynomial(&self) -> Option<PoincarePoly> {
        if !self.finite_dim_cohomology {
            return None;
        }
        let degrees: Vec<i64> = self
            .homotopy_ranks
            .iter()
            .flat_map(|(d, r)| std::iter::repeat(d).take(r))
            .collect();
        Some(PoincarePoly::exterior(&degrees).expect("degrees validated at construction"))
    }
}

/// Homotopical-nilpotency report for a model or for function spaces into it.
///
/// `None` fields mean "unknown": no finite procedure is attempted outside
/// the finite-dimensional case, where the value is forced to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HnilReport {
    pub subject: String,
    pub hnil_q: Option<u32>,
    pub rationally_homotopy_abelian: Option<bool>,
    pub em_decomposition_is_h_equivalence: Option<bool>,
}

/// Reports the rational homotopical nilpotency of `g`, or of the gauge
/// space F(X, g) when `using_full_function_space` is set.
///
/// Finite-dimensional cohomology forces odd generators, a trivial Samelson
/// bracket, and hence Hnil_Q = 1; the same value transfers to F(X, G). In
/// that case the Eilenberg-Mac Lane decomposition is a rational
/// H-equivalence for the standard multiplication. Otherwise every field is
/// reported unknown.
pub fn hnil_report(g: &RationalHSpace, using_full_function_space: bool) -> HnilReport {
    let subject = if using_full_function_space {
        format!("F(X, {})°", g.name())
    } else {
        g.name().to_string()
    };
    if g.finite_dim_cohomology() {
        HnilReport {
            subject,
            hnil_q: Some(1),
            rationally_homotopy_abelian: Some(true),
            em_decomposition_is_h_equivalence: Some(true),
        }
    } else {
        HnilReport {
            subject,
            hnil_q: None,
            rationally_homotopy_abelian: None,
            em_decomposition_is_h_equivalence: None,
        }
    }
}

/// Parses the group-spec grammar used on the command line:
/// `U(n)`, `SU(n)`, `Sp(n)`, `S(m)` with m odd, `K(d:r,...)`, `trivial`.
pub fn parse_group_spec(spec: &str) -> Result<RationalHSpace> {
    let s = spec.trim();
    if s.eq_ignore_ascii_case("trivial") {
        return Ok(RationalHSpace::trivial());
    }
    let (family, rest) = s
        .split_once('(')
        .ok_or_else(|| group_err(spec, "expected FAMILY(...) or \"trivial\""))?;
    let body = rest
        .strip_suffix(')')
        .ok_or_else(|| group_err(spec, "missing closing parenthesis"))?;
    let family = family.trim();
    let parse_int = |text: &str, what: &str| -> Result<i64> {
        text.trim()
            .parse::<i64>()
            .map_err(|_| group_err(spec, &format!("{what} {text:?} is not an integer")))
    };
    match family {
        "U" => RationalHSpace::unitary(parse_int(body, "matrix size")?),
        "SU" => RationalHSpace::special_unitary(parse_int(body, "matrix size")?),
        "Sp" => RationalHSpace::symplectic(parse_int(body, "matrix size")?),
        "S" => RationalHSpace::odd_sphere(parse_int(body, "sphere dimension")?),
        "K" => {
            let body = body.trim();
            if body.is_empty() {
                return RationalHSpace::em_product(&[]);
            }
            let mut pairs = Vec::new();
            for item in body.split(',') {
                let (d, r) = item
                    .split_once(':')
                    .ok_or_else(|| group_err(spec, &format!("expected degree:rank, got {item:?}")))?;
                pairs.push((parse_int(d, "degree")?, parse_int(r, "rank")?));
            }
            RationalHSpace::em_product(&pairs)
        }
        other => Err(group_err(
            spec,
            &format!("unknown family {other:?} (expected U, SU, Sp, S, or K)"),
        )),
    }
}

fn group_err(spec: &str, message: &str) -> Error {
    Error::GroupSpec {
        spec: spec.to_string(),
        message: message.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poincare::factor_poincare;

    #[test]
    fn unitary_degrees() {
        assert_eq!(
            RationalHSpace::unitary(1).unwrap().homotopy_ranks(),
            &GradedDims::from_pairs([(1, 1)])
        );
        assert_eq!(
            RationalHSpace::unitary(2).unwrap().homotopy_ranks(),
            &GradedDims::from_pairs([(1, 1), (3, 1)])
        );
        assert_eq!(
            RationalHSpace::unitary(4).unwrap().homotopy_ranks(),
            &GradedDims::from_pairs([(1, 1), (3, 1), (5, 1), (7, 1)])
        );
        assert!(RationalHSpace::unitary(0).is_err());
    }

    #[test]
    fn odd_sphere_degrees_and_rejection() {
        assert_eq!(
            RationalHSpace::odd_sphere(3).unwrap().homotopy_ranks(),
            &GradedDims::from_pairs([(3, 1)])
        );
        assert_eq!(
            RationalHSpace::odd_sphere(1).unwrap().homotopy_ranks(),
            &GradedDims::from_pairs([(1, 1)])
        );
        assert!(RationalHSpace::odd_sphere(2).is_err());
        assert!(RationalHSpace::odd_sphere(-3).is_err());
    }

    #[test]
    fn em_product_merges_and_flags() {
        let loops_on_s2 = RationalHSpace::em_product(&[(1, 1), (2, 1)]).unwrap();
        assert_eq!(
            loops_on_s2.homotopy_ranks(),
            &GradedDims::from_pairs([(1, 1), (2, 1)])
        );
        assert!(!loops_on_s2.finite_dim_cohomology());

        let merged = RationalHSpace::em_product(&[(3, 1), (3, 1)]).unwrap();
        assert_eq!(merged.homotopy_ranks(), &GradedDims::from_pairs([(3, 2)]));
        assert!(merged.finite_dim_cohomology());

        let empty = RationalHSpace::em_product(&[]).unwrap();
        assert!(empty.homotopy_ranks().is_empty());
        assert!(empty.finite_dim_cohomology());

        assert!(RationalHSpace::em_product(&[(0, 1)]).is_err());
        assert!(RationalHSpace::em_product(&[(3, 0)]).is_err());
    }

    #[test]
    fn products_add_ranks() {
        let torus = RationalHSpace::unitary(1)
            .unwrap()
            .product(&RationalHSpace::unitary(1).unwrap());
        assert_eq!(torus.homotopy_ranks(), &GradedDims::from_pairs([(1, 2)]));

        let u2 = RationalHSpace::unitary(2).unwrap();
        let with_identity = u2.product(&RationalHSpace::trivial());
        assert_eq!(with_identity.homotopy_ranks(), u2.homotopy_ranks());

        let spheres = RationalHSpace::odd_sphere(3)
            .unwrap()
            .product(&RationalHSpace::odd_sphere(5).unwrap());
        assert_eq!(
            spheres.homotopy_ranks(),
            &GradedDims::from_pairs([(3, 1), (5, 1)])
        );
    }

    #[test]
    fn finite_flag_requires_odd_degrees() {
        let err =
            RationalHSpace::new("bad", GradedDims::from_pairs([(2, 1)]), true).unwrap_err();
        assert!(err.to_string().contains("odd"));
        // same ranks are fine without the flag
        assert!(RationalHSpace::new("ok", GradedDims::from_pairs([(2, 1)]), false).is_ok());
    }

    #[test]
    fn catalog_degree_tables_roundtrip_through_factorization() {
        for n in 1..=8 {
            let u = RationalHSpace::unitary(n).unwrap();
            let p = u.poincare_polynomial().unwrap();
            let expected: Vec<i64> = (1..=n).map(|j| 2 * j - 1).collect();
            assert_eq!(factor_poincare(&p).unwrap(), expected);

            let su = RationalHSpace::special_unitary(n).unwrap();
            let expected: Vec<i64> = (2..=n).map(|j| 2 * j - 1).collect();
            assert_eq!(factor_poincare(&su.poincare_polynomial().unwrap()).unwrap(), expected);

            let sp = RationalHSpace::symplectic(n).unwrap();
            let expected: Vec<i64> = (1..=n).map(|j| 4 * j - 1).collect();
            assert_eq!(factor_poincare(&sp.poincare_polynomial().unwrap()).unwrap(), expected);
        }
    }

    #[test]
    fn hnil_verdicts() {
        let u3 = RationalHSpace::unitary(3).unwrap();
        let report = hnil_report(&u3, false);
        assert_eq!(report.hnil_q, Some(1));
        assert_eq!(report.em_decomposition_is_h_equivalence, Some(true));

        let gauge = hnil_report(&u3, true);
        assert!(gauge.subject.contains("F(X, U(3))"));
        assert_eq!(gauge.hnil_q, Some(1));

        let loops_on_s2 = RationalHSpace::em_product(&[(1, 1), (2, 1)]).unwrap();
        let unknown = hnil_report(&loops_on_s2, false);
        assert_eq!(unknown.hnil_q, None);
        assert_eq!(unknown.em_decomposition_is_h_equivalence, None);

        assert_eq!(hnil_report(&RationalHSpace::trivial(), false).hnil_q, Some(1));
    }

    #[test]
    fn group_spec_grammar() {
        assert_eq!(parse_group_spec("U(3)").unwrap().name(), "U(3)");
        assert_eq!(parse_group_spec(" SU( 4 ) ").unwrap().name(), "SU(4)");
        assert_eq!(parse_group_spec("Sp(2)").unwrap().name(), "Sp(2)");
        assert_eq!(parse_group_spec("S(7)").unwrap().name(), "S(7)");
        assert_eq!(
            parse_group_spec("K(3:1,7:2)").unwrap().homotopy_ranks(),
            &GradedDims::from_pairs([(3, 1), (7, 2)])
        );
        assert_eq!(parse_group_spec("trivial").unwrap().name(), "trivial");

        assert!(parse_group_spec("X(2)").is_err());
        assert!(parse_group_spec("U(2").is_err());
        assert!(parse_group_spec("K(3)").is_err());
        assert!(parse_group_spec("S(2)").is_err());
        assert!(parse_group_spec("U(zebra)").is_err());
    }
}
