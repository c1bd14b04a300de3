//! Small embedded instances shipped with the crate (`fixtures/*.pmap`).

use crate::map::{validate, PlaneMultigraph, RotationSystem};
use crate::pmap::parse;

/// Every shipped document, valid or not, by file stem.
pub const DOCUMENTS: &[(&str, &str)] = &[
    ("d2", include_str!("../fixtures/d2.pmap")),
    ("c3", include_str!("../fixtures/c3.pmap")),
    ("d3", include_str!("../fixtures/d3.pmap")),
    ("c4", include_str!("../fixtures/c4.pmap")),
    ("k4", include_str!("../fixtures/k4.pmap")),
    ("doubled-triangle", include_str!("../fixtures/doubled-triangle.pmap")),
    ("cube", include_str!("../fixtures/cube.pmap")),
    ("octahedron", include_str!("../fixtures/octahedron.pmap")),
    ("k4-torus", include_str!("../fixtures/k4-torus.pmap")),
    ("bowtie", include_str!("../fixtures/bowtie.pmap")),
    ("loop", include_str!("../fixtures/loop.pmap")),
    ("bridge", include_str!("../fixtures/bridge.pmap")),
];

/// Stems of the documents that are members of the family.
pub const VALID: &[&str] =
    &["d2", "c3", "d3", "c4", "k4", "doubled-triangle", "cube", "octahedron"];

pub fn document(name: &str) -> Option<&'static str> {
    DOCUMENTS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Parses a shipped document; panics on an unknown name.
pub fn parse_fixture(name: &str) -> RotationSystem {
    let text = document(name).unwrap_or_else(|| panic!("no fixture named {name}"));
    parse(text).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// Parses and validates a shipped document; panics if it is not valid.
pub fn load(name: &str) -> PlaneMultigraph {
    validate(parse_fixture(name)).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// All valid fixtures, in [`VALID`] order.
pub fn all() -> Vec<(&'static str, PlaneMultigraph)> {
    VALID.iter().map(|&n| (n, load(n))).collect()
}

pub fn d2() -> PlaneMultigraph {
    load("d2")
}

pub fn c3() -> PlaneMultigraph {
    load("c3")
}

pub fn d3() -> PlaneMultigraph {
    load("d3")
}

pub fn c4() -> PlaneMultigraph {
    load("c4")
}

pub fn k4() -> PlaneMultigraph {
    load("k4")
}

pub fn doubled_triangle() -> PlaneMultigraph {
    load("doubled-triangle")
}

pub fn cube() -> PlaneMultigraph {
    load("cube")
}

pub fn octahedron() -> PlaneMultigraph {
    load("octahedron")
}

/// The cycle `C_n` with edge `i` joining `i` and `i + 1 (mod n)`.
pub fn cycle(n: usize) -> PlaneMultigraph {
    assert!(n >= 2);
    let cycles: Vec<Vec<usize>> =
        (0..n).map(|i| if i == 0 { vec![0, 2 * n - 1] } else { vec![2 * i - 1, 2 * i] }).collect();
    validate(RotationSystem::from_cycles(n, &cycles).expect("cycle rotation")).expect("cycle")
}

/// The dipole `D_k`: two vertices joined by `k` parallel edges.
pub fn dipole(k: usize) -> PlaneMultigraph {
    assert!(k >= 2);
    let a = (0..k).map(|i| 2 * i).collect();
    let b = (0..k).rev().map(|i| 2 * i + 1).collect();
    validate(RotationSystem::from_cycles(k, &[a, b]).expect("dipole rotation")).expect("dipole")
}
