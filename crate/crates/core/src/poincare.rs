//! Poincaré polynomials of finite-dimensional free graded-commutative
//! algebras and their factorization into exterior generators.

use crate::error::{Error, Result};
use serde::Serialize;

/// Integer coefficients of a Poincaré polynomial, index = degree.
///
/// Invariants: the constant term is exactly 1, no coefficient is negative,
/// and trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PoincarePoly {
    coeffs: Vec<i64>,
}

impl PoincarePoly {
    pub fn new(mut coeffs: Vec<i64>) -> Result<Self> {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.first() != Some(&1) {
            return Err(Error::PoincareFactor(
                "constant term must be exactly 1".into(),
            ));
        }
        if let Some(&bad) = coeffs.iter().find(|&&c| c < 0) {
            return Err(Error::PoincareFactor(format!(
                "coefficient {bad} is negative"
            )));
        }
        Ok(Self { coeffs })
    }

    /// The polynomial 1 (trivial algebra).
    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// Expands the exterior algebra on the given generator degrees:
    /// the product of (1 + t^d) over all d. Degrees must be >= 1.
    pub fn exterior(degrees: &[i64]) -> Result<Self> {
        let mut coeffs = vec![1i64];
        for &d in degrees {
            if d < 1 {
                return Err(Error::InvalidParameter(format!(
                    "generator degree {d} must be >= 1"
                )));
            }
            let d = d as usize;
            let mut next = vec![0i64; coeffs.len() + d];
            for (j, &c) in coeffs.iter().enumerate() {
                next[j] += c;
                next[j + d] += c;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Recovers the sorted multiset of generator degrees of an exterior algebra
/// from its Poincaré polynomial.
///
/// Greedy: repeatedly take the smallest positive degree d with a nonzero
/// coefficient, record it, and divide exactly by (1 + t^d). Fails when an
/// even degree is forced, or when a division leaves a negative coefficient
/// or a nonzero remainder; such a polynomial is not the Poincaré polynomial
/// of a finite-dimensional rational H-space.
pub fn factor_poincare(p: &PoincarePoly) -> Result<Vec<i64>> {
    let mut coeffs = p.coeffs().to_vec();
    let mut degrees = Vec::new();
    loop {
        let Some(d) = coeffs.iter().skip(1).position(|&c| c != 0).map(|i| i + 1) else {
            return Ok(degrees);
        };
        if d % 2 == 0 {
            return Err(Error::PoincareFactor(format!(
                "a generator of even degree {d} is forced (Hopf parity requires odd generators)"
            )));
        }
        coeffs = divide_by_one_plus_td(&coeffs, d)?;
        degrees.push(d as i64);
    }
}

/// Exact division by (1 + t^d); errors on negative quotient coefficients
/// or a nonzero remainder.
fn divide_by_one_plus_td(coeffs: &[i64], d: usize) -> Result<Vec<i64>> {
    let deg = coeffs.len() - 1;
    if deg < d {
        return Err(Error::PoincareFactor(format!(
            "division by (1 + t^{d}) leaves a nonzero remainder"
        )));
    }
    let qlen = deg - d + 1;
    let mut q = vec![0i64; qlen];
    for j in 0..qlen {
        let borrowed = if j >= d { q[j - d] } else { 0 };
        q[j] = coeffs[j] - borrowed;
        if q[j] < 0 {
            return Err(Error::PoincareFactor(format!(
                "division by (1 + t^{d}) leaves a negative coefficient in degree {j}"
            )));
        }
    }
    // remainder: the top d coefficients must be reproduced by q shifted up
    for j in qlen..=deg {
        let expected = if j >= d { q[j - d] } else { 0 };
        if coeffs[j] != expected {
            return Err(Error::PoincareFactor(format!(
                "division by (1 + t^{d}) leaves a nonzero remainder in degree {j}"
            )));
        }
    }
    let mut q = q;
    while q.len() > 1 && q.last() == Some(&0) {
        q.pop();
    }
    Ok(q)
}
