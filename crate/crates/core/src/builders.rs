//! Standard constructions for assembling test complexes.
//!
//! All builders relabel vertices where needed to avoid collisions. The
//! three surface triangulations are vertex-minimal and were checked to be
//! closed surfaces (every edge in exactly two triangles, vertex links
//! single cycles) with the expected rational cohomology.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// A single vertex.
pub fn point() -> SimplicialComplex {
    SimplicialComplex::from_maximal_simplices(vec![vec![0]])
        .expect("valid")
        .with_name("point")
}

/// The boundary of the m-simplex, a triangulated (m-1)-sphere; m >= 1.
pub fn simplex_boundary(m: usize) -> Result<SimplicialComplex> {
    if m < 1 {
        return Err(Error::InvalidParameter(
            "simplex_boundary requires m >= 1".into(),
        ));
    }
    let vertices: Vec<u32> = (0..=m as u32).collect();
    let maximal: Vec<Vec<u32>> = (0..=m)
        .map(|skip| {
            vertices
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect();
    Ok(SimplicialComplex::from_maximal_simplices(maximal)?
        .with_name(format!("boundary(Delta^{m})")))
}

/// The 7-vertex triangulation of the torus: faces {i, i+1, i+3} and
/// {i, i+2, i+3} mod 7.
pub fn torus7() -> SimplicialComplex {
    let mut faces = Vec::with_capacity(14);
    for i in 0..7u32 {
        faces.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        faces.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    SimplicialComplex::from_maximal_simplices(faces)
        .expect("valid torus triangulation")
        .with_name("torus7")
}

/// The 6-vertex triangulation of the real projective plane (antipodal
/// quotient of the icosahedron).
pub fn rp2_6() -> SimplicialComplex {
    let faces = vec![
        vec![0, 1, 2],
        vec![0, 1, 4],
        vec![0, 2, 3],
        vec![0, 3, 5],
        vec![0, 4, 5],
        vec![1, 2, 5],
        vec![1, 3, 4],
        vec![1, 3, 5],
        vec![2, 3, 4],
        vec![2, 4, 5],
    ];
    SimplicialComplex::from_maximal_simplices(faces)
        .expect("valid projective-plane triangulation")
        .with_name("rp2_6")
}

/// An 8-vertex triangulation of the Klein bottle.
pub fn klein8() -> SimplicialComplex {
    let faces = vec![
        vec![0, 1, 2],
        vec![0, 1, 3],
        vec![0, 2, 4],
        vec![0, 3, 4],
        vec![1, 2, 5],
        vec![1, 3, 6],
        vec![1, 4, 5],
        vec![1, 4, 6],
        vec![2, 3, 5],
        vec![2, 3, 7],
        vec![2, 4, 6],
        vec![2, 6, 7],
        vec![3, 4, 7],
        vec![3, 5, 6],
        vec![4, 5, 7],
        vec![5, 6, 7],
    ];
    SimplicialComplex::from_maximal_simplices(faces)
        .expect("valid Klein-bottle triangulation")
        .with_name("klein8")
}

/// Disjoint union; the right complex is relabeled past the left labels.
pub fn disjoint_union(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    let offset = shift_offset(x)?;
    let mut maximal = x.maximal_simplices().to_vec();
    maximal.extend(shifted(y, offset));
    SimplicialComplex::from_maximal_simplices(maximal)
}

/// One-point union identifying `basepoint_y` (in `y`) with `basepoint_x`
/// (in `x`); the rest of `y` is relabeled past the labels of `x`.
pub fn wedge(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
    basepoint_x: u32,
    basepoint_y: u32,
) -> Result<SimplicialComplex> {
    if x.simplex_index(&[basepoint_x]).is_none() {
        return Err(Error::InvalidBasepoint { label: basepoint_x });
    }
    if y.simplex_index(&[basepoint_y]).is_none() {
        return Err(Error::InvalidBasepoint { label: basepoint_y });
    }
    let offset = shift_offset(x)?;
    let mut maximal = x.maximal_simplices().to_vec();
    for simplex in y.maximal_simplices() {
        maximal.push(
            simplex
                .iter()
                .map(|&v| if v == basepoint_y { basepoint_x } else { v + offset })
                .collect(),
        );
    }
    SimplicialComplex::from_maximal_simplices(maximal)
}

/// The cone: every maximal simplex extended by one new apex vertex.
pub fn cone(x: &SimplicialComplex) -> Result<SimplicialComplex> {
    let apex = next_label(x, 1)?;
    let maximal = x
        .maximal_simplices()
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.push(apex);
            s
        })
        .collect();
    SimplicialComplex::from_maximal_simplices(maximal)
}

/// The suspension: two cones over `x` glued along `x`.
pub fn suspension(x: &SimplicialComplex) -> Result<SimplicialComplex> {
    let north = next_label(x, 2)?;
    let south = north + 1;
    let mut maximal = Vec::with_capacity(2 * x.maximal_simplices().len());
    for simplex in x.maximal_simplices() {
        for apex in [north, south] {
            let mut s = simplex.clone();
            s.push(apex);
            maximal.push(s);
        }
    }
    SimplicialComplex::from_maximal_simplices(maximal)
}

fn shift_offset(x: &SimplicialComplex) -> Result<u32> {
    x.max_vertex()
        .checked_add(1)
        .ok_or_else(|| Error::InvalidParameter("vertex label overflow".into()))
}

fn next_label(x: &SimplicialComplex, needed: u32) -> Result<u32> {
    let last = x.max_vertex();
    if last.checked_add(needed).is_none() {
        return Err(Error::InvalidParameter("vertex label overflow".into()));
    }
    Ok(last + 1)
}

fn shifted(y: &SimplicialComplex, offset: u32) -> Vec<Vec<u32>> {
    y.maximal_simplices()
        .iter()
        .map(|s| s.iter().map(|&v| v + offset).collect())
        .collect()
}
