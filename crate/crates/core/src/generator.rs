//! Seeded random members of the family, grown from a dipole or a triangle by
//! moves that keep a graph loopless, 2-connected and plane.
//!
//! The RNG is ChaCha8 seeded through `seed_from_u64` (rand_chacha 0.3), and
//! every candidate list is built in ascending id order, so a [`GenConfig`]
//! always yields the same document.

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::fixtures;
use crate::map::{validate, Dart, PlaneMultigraph, RotationSystem};
use crate::pmap::serialize;

pub const RNG_NAME: &str = "chacha8";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Mutation {
    /// A new edge parallel to `edge`, drawn inside `face` (one of the two
    /// faces along `edge`), which it splits off a new 2-gon from.
    AddParallel { edge: usize, face: usize },
    /// A new edge `u`-`v` across `face`, splitting it in two.
    AddChord { face: usize, u: usize, v: usize },
    /// A new vertex in the middle of `edge`.
    Subdivide { edge: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MutationError {
    #[error("edge {0} does not exist")]
    NoSuchEdge(usize),
    #[error("face {0} does not exist")]
    NoSuchFace(usize),
    #[error("edge {edge} does not border face {face}")]
    EdgeNotOnFace { edge: usize, face: usize },
    #[error("vertex {vertex} is not on face {face}")]
    VertexNotOnFace { vertex: usize, face: usize },
    #[error("a chord needs two distinct endpoints")]
    DegenerateChord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum StartGraph {
    #[default]
    D2,
    C3,
}

impl StartGraph {
    pub fn name(self) -> &'static str {
        match self {
            StartGraph::D2 => "d2",
            StartGraph::C3 => "c3",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    pub steps: usize,
    /// Relative weights of AddParallel, AddChord, Subdivide.
    pub weights: [f64; 3],
    pub start: StartGraph,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig { seed: 0, steps: 0, weights: [1.0, 1.0, 1.0], start: StartGraph::D2 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenConfigError {
    #[error("weights must be finite and non-negative")]
    BadWeight,
    #[error("at least one weight must be positive when steps > 0")]
    AllZero,
}

impl GenConfig {
    pub fn new(seed: u64, steps: usize) -> Self {
        GenConfig { seed, steps, ..Default::default() }
    }

    pub fn check(&self) -> Result<(), GenConfigError> {
        if self.weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(GenConfigError::BadWeight);
        }
        if self.steps > 0 && self.weights.iter().all(|&w| w == 0.0) {
            return Err(GenConfigError::AllZero);
        }
        Ok(())
    }

    /// The `# generated:` comment line recorded in emitted documents.
    pub fn header(&self) -> String {
        let [a, b, c] = self.weights;
        format!(
            "# generated: seed={} steps={} weights={a},{b},{c} start={} rng={RNG_NAME}",
            self.seed,
            self.steps,
            self.start.name()
        )
    }
}

fn insert_before(rotations: &mut [Vec<Dart>], vertex: usize, target: Dart, new: Dart) {
    let cycle = &mut rotations[vertex];
    let at = cycle.iter().position(|&d| d == target).expect("dart at its vertex");
    cycle.insert(at, new);
}

fn rebuild(n_edges: usize, rotations: &[Vec<Dart>]) -> PlaneMultigraph {
    let map = RotationSystem::from_cycles(n_edges, rotations).expect("mutation keeps a rotation");
    validate(map.canonical()).unwrap_or_else(|e| panic!("mutation left the family: {e}"))
}

/// Applies one move. The result is relabelled canonically (vertex ids in
/// order of smallest dart); dart and edge ids of existing edges are kept and
/// the new edge takes the next id.
pub fn apply_mutation(g: &PlaneMultigraph, m: Mutation) -> Result<PlaneMultigraph, MutationError> {
    let n_edges = g.n_edges();
    let mut rotations = g.rotations();
    let new_a = 2 * n_edges;
    let new_b = new_a + 1;
    match m {
        Mutation::AddParallel { edge, face } => {
            if edge >= n_edges {
                return Err(MutationError::NoSuchEdge(edge));
            }
            if face >= g.n_faces() {
                return Err(MutationError::NoSuchFace(face));
            }
            let d = if g.face_of(2 * edge) == face {
                2 * edge
            } else if g.face_of(2 * edge + 1) == face {
                2 * edge + 1
            } else {
                return Err(MutationError::EdgeNotOnFace { edge, face });
            };
            // new 2-gon (new_b, d): new_a sits just before d, new_b just
            // after the mate of d
            let next = g.sigma(d ^ 1);
            insert_before(&mut rotations, g.vertex_of(d), d, new_a);
            insert_before(&mut rotations, g.vertex_of(d ^ 1), next, new_b);
        }
        Mutation::AddChord { face, u, v } => {
            let f = g.faces().get(face).ok_or(MutationError::NoSuchFace(face))?;
            if u == v {
                return Err(MutationError::DegenerateChord);
            }
            let pos = |w| {
                f.vertices
                    .iter()
                    .position(|&x| x == w)
                    .ok_or(MutationError::VertexNotOnFace { vertex: w, face })
            };
            let (i, j) = (pos(u)?, pos(v)?);
            insert_before(&mut rotations, u, f.darts[i], new_a);
            insert_before(&mut rotations, v, f.darts[j], new_b);
        }
        Mutation::Subdivide { edge } => {
            if edge >= n_edges {
                return Err(MutationError::NoSuchEdge(edge));
            }
            let far = 2 * edge + 1;
            let v = g.vertex_of(far);
            let slot = rotations[v].iter().position(|&d| d == far).expect("dart at its vertex");
            rotations[v][slot] = new_b;
            rotations.push(vec![far, new_a]);
        }
    }
    Ok(rebuild(n_edges + 1, &rotations))
}

/// Every move available on `g` for one kind (0 parallel, 1 chord,
/// 2 subdivide), in ascending id order.
pub fn candidates(g: &PlaneMultigraph, kind: usize) -> Vec<Mutation> {
    match kind {
        0 => (0..g.n_edges())
            .flat_map(|edge| {
                let (a, b) = g.faces_of_edge(edge);
                [a.min(b), a.max(b)].map(|face| Mutation::AddParallel { edge, face })
            })
            .collect(),
        1 => g
            .faces()
            .iter()
            .flat_map(|f| {
                let mut vs = f.vertices.clone();
                vs.sort_unstable();
                let face = f.id;
                (0..vs.len()).flat_map(move |i| {
                    let vs = vs.clone();
                    (i + 1..vs.len()).map(move |j| Mutation::AddChord { face, u: vs[i], v: vs[j] })
                })
            })
            .collect(),
        2 => (0..g.n_edges()).map(|edge| Mutation::Subdivide { edge }).collect(),
        _ => Vec::new(),
    }
}

pub fn start_graph(start: StartGraph) -> PlaneMultigraph {
    match start {
        StartGraph::D2 => fixtures::dipole(2),
        StartGraph::C3 => fixtures::cycle(3),
    }
}

pub fn generate(cfg: &GenConfig) -> Result<PlaneMultigraph, GenConfigError> {
    cfg.check()?;
    let mut g = start_graph(cfg.start);
    if cfg.steps == 0 {
        return Ok(g);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let kinds = WeightedIndex::new(cfg.weights).map_err(|_| GenConfigError::AllZero)?;
    for _ in 0..cfg.steps {
        let kind = kinds.sample(&mut rng);
        let options = candidates(&g, kind);
        let m = options[rng.gen_range(0..options.len())];
        g = apply_mutation(&g, m).expect("candidate moves are well-formed");
    }
    Ok(g)
}

/// The generated instance as a pmap document: `pmap 1`, the `# generated:`
/// comment, then the body.
pub fn generate_document(cfg: &GenConfig) -> Result<String, GenConfigError> {
    let g = generate(cfg)?;
    let body = serialize(&g);
    let (first, rest) = body.split_once('\n').expect("pmap header line");
    Ok(format!("{first}\n{}\n{rest}", cfg.header()))
}

/// The standard property-test corpus entry for `seed`: `seed % 9` steps
/// from D2 with uniform weights, so at most 10 vertices and 10 edges.
pub fn corpus_config(seed: u64) -> GenConfig {
    GenConfig::new(seed, (seed % 9) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmap::parse;

    #[test]
    fn subdividing_a_dipole_gives_a_triangle() {
        let g = apply_mutation(&fixtures::d2(), Mutation::Subdivide { edge: 0 }).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges(), g.n_faces()), (3, 3, 2));
        assert!(g.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn parallel_edge_on_triangle() {
        let c3 = fixtures::c3();
        let face = c3.face_of(0);
        let g = apply_mutation(&c3, Mutation::AddParallel { edge: 0, face }).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges(), g.n_faces()), (3, 4, 3));
        let mut lens: Vec<usize> = g.faces().iter().map(|f| f.len()).collect();
        lens.sort();
        assert_eq!(lens, vec![2, 3, 3]);
    }

    #[test]
    fn chord_splits_square_into_triangles() {
        let c4 = fixtures::c4();
        let g = apply_mutation(&c4, Mutation::AddChord { face: 0, u: 0, v: 2 }).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges(), g.n_faces()), (4, 5, 3));
        let mut lens: Vec<usize> = g.faces().iter().map(|f| f.len()).collect();
        lens.sort();
        assert_eq!(lens, vec![3, 3, 4]);
    }

    #[test]
    fn malformed_mutations() {
        let c4 = fixtures::c4();
        assert_eq!(apply_mutation(&c4, Mutation::Subdivide { edge: 4 }), Err(MutationError::NoSuchEdge(4)));
        assert_eq!(
            apply_mutation(&c4, Mutation::AddChord { face: 0, u: 1, v: 1 }),
            Err(MutationError::DegenerateChord)
        );
        assert_eq!(
            apply_mutation(&c4, Mutation::AddChord { face: 7, u: 0, v: 1 }),
            Err(MutationError::NoSuchFace(7))
        );
        let k4 = fixtures::k4();
        let f = &k4.faces()[0];
        let off = (0..4).find(|v| !f.vertices.contains(v)).unwrap();
        assert_eq!(
            apply_mutation(&k4, Mutation::AddChord { face: 0, u: f.vertices[0], v: off }),
            Err(MutationError::VertexNotOnFace { vertex: off, face: 0 })
        );
        let far_edge = (0..6).find(|&e| !f.edges().any(|x| x == e)).unwrap();
        assert_eq!(
            apply_mutation(&k4, Mutation::AddParallel { edge: far_edge, face: 0 }),
            Err(MutationError::EdgeNotOnFace { edge: far_edge, face: 0 })
        );
    }

    #[test]
    fn every_candidate_keeps_counts() {
        for (_, g) in fixtures::all() {
            for kind in 0..3 {
                for m in candidates(&g, kind) {
                    let h = apply_mutation(&g, m).unwrap();
                    let dv = h.n_vertices() - g.n_vertices();
                    let df = h.n_faces() as i64 - g.n_faces() as i64;
                    assert_eq!(h.n_edges(), g.n_edges() + 1);
                    match m {
                        Mutation::Subdivide { .. } => assert_eq!((dv, df), (1, 0)),
                        _ => assert_eq!((dv, df), (0, 1)),
                    }
                }
            }
        }
    }

    #[test]
    fn zero_steps_is_the_start_graph() {
        let g = generate(&GenConfig::new(1, 0)).unwrap();
        assert_eq!(serialize(&g), serialize(&fixtures::d2()));
        let cfg = GenConfig { start: StartGraph::C3, ..GenConfig::new(1, 0) };
        assert_eq!(serialize(&generate(&cfg).unwrap()), serialize(&fixtures::c3()));
    }

    #[test]
    fn generation_is_reproducible() {
        let cfg = GenConfig::new(7, 20);
        let a = generate_document(&cfg).unwrap();
        assert_eq!(a, generate_document(&cfg).unwrap());
        assert!(a.starts_with("pmap 1\n# generated: seed=7 steps=20"));
        let g = validate(parse(&a).unwrap()).unwrap();
        assert_eq!(g.n_edges(), 22);
    }

    #[test]
    fn config_errors() {
        let cfg = GenConfig { weights: [0.0; 3], ..GenConfig::new(1, 3) };
        assert_eq!(generate(&cfg).unwrap_err(), GenConfigError::AllZero);
        let cfg = GenConfig { weights: [0.0; 3], ..GenConfig::new(1, 0) };
        assert!(generate(&cfg).is_ok());
        let cfg = GenConfig { weights: [1.0, -1.0, 0.0], ..GenConfig::new(1, 3) };
        assert_eq!(generate(&cfg).unwrap_err(), GenConfigError::BadWeight);
    }

    #[test]
    fn single_kind_weights() {
        let only_subdivide = GenConfig { weights: [0.0, 0.0, 1.0], ..GenConfig::new(3, 5) };
        let g = generate(&only_subdivide).unwrap();
        assert_eq!((g.n_vertices(), g.n_faces()), (7, 2));
        let no_subdivide = GenConfig { weights: [1.0, 1.0, 0.0], ..GenConfig::new(3, 5) };
        assert_eq!(generate(&no_subdivide).unwrap().n_vertices(), 2);
    }
}
