//! The built-in corpus of complexes exposed by the CLI and exercised by
//! the test suite: orientable and non-orientable surfaces, spheres,
//! disconnected complexes, and a wedge.

use crate::builders;
use crate::complex::SimplicialComplex;

/// Names and one-line descriptions of every built-in complex.
pub const NAMES: &[(&str, &str)] = &[
    ("point", "a single vertex"),
    ("two_points", "two disjoint vertices"),
    ("s1", "circle: boundary of the triangle"),
    ("s2", "2-sphere: boundary of the tetrahedron"),
    ("s3", "3-sphere: suspension of s2"),
    ("torus7", "7-vertex triangulation of the torus"),
    ("rp2_6", "6-vertex triangulation of the real projective plane"),
    ("klein8", "8-vertex triangulation of the Klein bottle"),
    ("wedge_s1_s2", "one-point union of s1 and s2"),
];

/// Looks up a built-in complex by name.
pub fn builtin(name: &str) -> Option<SimplicialComplex> {
    let complex = match name {
        "point" => builders::point(),
        "two_points" => builders::disjoint_union(&builders::point(), &builders::point())
            .expect("valid")
            .with_name("two_points"),
        "s1" => builders::simplex_boundary(2).expect("valid").with_name("s1"),
        "s2" => builders::simplex_boundary(3).expect("valid").with_name("s2"),
        "s3" => {
            let s2 = builders::simplex_boundary(3).expect("valid");
            builders::suspension(&s2).expect("valid").with_name("s3")
        }
        "torus7" => builders::torus7(),
        "rp2_6" => builders::rp2_6(),
        "klein8" => builders::klein8(),
        "wedge_s1_s2" => {
            let s1 = builders::simplex_boundary(2).expect("valid");
            let s2 = builders::simplex_boundary(3).expect("valid");
            builders::wedge(&s1, &s2, 0, 0)
                .expect("valid basepoints")
                .with_name("wedge_s1_s2")
        }
        _ => return None,
    };
    Some(complex)
}

/// Every built-in complex, in the order of [`NAMES`].
pub fn all() -> Vec<SimplicialComplex> {
    NAMES
        .iter()
        .map(|(name, _)| builtin(name).expect("every listed name resolves"))
        .collect()
}
