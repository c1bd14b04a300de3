//! Combinatorial maps: rotation systems over darts, and their certification as
//! loopless 2-connected plane multigraphs.
//!
//! Edge `i` owns darts `2i` and `2i + 1`; the edge involution is `d ^ 1`. The
//! rotation `sigma` sends a dart to the next dart counterclockwise around its
//! vertex, and faces are the orbits of `phi = sigma . alpha`, i.e.
//! `phi(d) = sigma(d ^ 1)`. Every module uses this one convention, which is
//! what makes the dual of the dual reproduce the original rotation exactly.

use std::ops::Deref;

use serde::Serialize;
use thiserror::Error;

use crate::edge_set::EdgeSet;

pub type Dart = usize;

/// The other dart of the same edge.
#[inline]
pub fn mate(d: Dart) -> Dart {
    d ^ 1
}

#[inline]
pub fn edge_of(d: Dart) -> usize {
    d >> 1
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RotationError {
    #[error("a map needs at least one edge")]
    NoEdges,
    #[error("dart {0} is out of range")]
    DartOutOfRange(Dart),
    #[error("dart {0} is listed more than once")]
    DartRepeated(Dart),
    #[error("dart {0} is not listed at any vertex")]
    DartMissing(Dart),
    #[error("vertex {0} has an empty rotation")]
    EmptyVertex(usize),
}

/// Darts plus a counterclockwise cyclic order at every vertex.
///
/// Built through [`RotationSystem::from_cycles`] the invariants hold; values
/// assembled with [`RotationSystem::from_parts`] are unchecked until passed
/// through [`validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    n_vertices: usize,
    sigma: Vec<Dart>,
    vertex_of: Vec<usize>,
}

impl RotationSystem {
    /// Builds a map from one cyclic dart list per vertex (vertex `v` is
    /// `cycles[v]`).
    pub fn from_cycles(n_edges: usize, cycles: &[Vec<Dart>]) -> Result<Self, RotationError> {
        if n_edges == 0 {
            return Err(RotationError::NoEdges);
        }
        let n_darts = 2 * n_edges;
        let mut sigma = vec![usize::MAX; n_darts];
        let mut vertex_of = vec![usize::MAX; n_darts];
        for (v, cycle) in cycles.iter().enumerate() {
            if cycle.is_empty() {
                return Err(RotationError::EmptyVertex(v));
            }
            for (i, &d) in cycle.iter().enumerate() {
                if d >= n_darts {
                    return Err(RotationError::DartOutOfRange(d));
                }
                if vertex_of[d] != usize::MAX {
                    return Err(RotationError::DartRepeated(d));
                }
                vertex_of[d] = v;
                sigma[d] = cycle[(i + 1) % cycle.len()];
            }
        }
        if let Some(d) = vertex_of.iter().position(|&v| v == usize::MAX) {
            return Err(RotationError::DartMissing(d));
        }
        Ok(RotationSystem { n_vertices: cycles.len(), sigma, vertex_of })
    }

    /// Assembles a map without checking anything.
    pub fn from_parts(n_vertices: usize, sigma: Vec<Dart>, vertex_of: Vec<usize>) -> Self {
        RotationSystem { n_vertices, sigma, vertex_of }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn n_darts(&self) -> usize {
        self.sigma.len()
    }

    #[inline]
    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    #[inline]
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma[mate(d)]
    }

    #[inline]
    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }

    /// Endpoints of edge `e` as (vertex of dart `2e`, vertex of dart `2e+1`).
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.vertex_of[2 * e], self.vertex_of[2 * e + 1])
    }

    /// The cyclic rotation at every vertex, each starting at its smallest dart.
    pub fn rotations(&self) -> Vec<Vec<Dart>> {
        let mut first = vec![usize::MAX; self.n_vertices];
        for d in (0..self.n_darts()).rev() {
            first[self.vertex_of[d]] = d;
        }
        first
            .into_iter()
            .map(|start| {
                let mut cycle = vec![start];
                let mut d = self.sigma[start];
                while d != start {
                    cycle.push(d);
                    d = self.sigma[d];
                }
                cycle
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vertex_of.iter().filter(|&&w| w == v).count()
    }

    /// `adj[v]` lists `(neighbor, edge)` in rotation order.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        self.rotations()
            .into_iter()
            .map(|cycle| {
                cycle.into_iter().map(|d| (self.vertex_of[mate(d)], edge_of(d))).collect()
            })
            .collect()
    }

    /// Orbits of `phi`, ordered by smallest dart, each starting at its
    /// smallest dart.
    pub fn phi_orbits(&self) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.n_darts()];
        let mut orbits = Vec::new();
        for start in 0..self.n_darts() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                orbit.push(d);
                d = self.phi(d);
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// Relabels vertices so that ids ascend with each vertex's smallest dart.
    /// The darts and the rotation are untouched.
    pub fn canonical(&self) -> Self {
        let mut relabel = vec![usize::MAX; self.n_vertices];
        let mut next = 0;
        for d in 0..self.n_darts() {
            let v = self.vertex_of[d];
            if relabel[v] == usize::MAX {
                relabel[v] = next;
                next += 1;
            }
        }
        RotationSystem {
            n_vertices: self.n_vertices,
            sigma: self.sigma.clone(),
            vertex_of: self.vertex_of.iter().map(|&v| relabel[v]).collect(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    fn check_permutation(&self) -> Result<(), ValidationFailure> {
        let n_darts = self.sigma.len();
        let bad = |dart| Err(ValidationFailure::MalformedPermutation { dart });
        if n_darts == 0 || n_darts % 2 == 1 || self.vertex_of.len() != n_darts {
            return bad(n_darts);
        }
        let mut hit = vec![false; n_darts];
        for d in 0..n_darts {
            let s = self.sigma[d];
            if s >= n_darts || hit[s] {
                return bad(d);
            }
            hit[s] = true;
            if self.vertex_of[d] >= self.n_vertices || self.vertex_of[s] != self.vertex_of[d] {
                return bad(d);
            }
        }
        // every vertex id must own exactly one sigma orbit
        let mut orbit_seen = vec![false; n_darts];
        let mut owner = vec![false; self.n_vertices];
        for start in 0..n_darts {
            if orbit_seen[start] {
                continue;
            }
            let v = self.vertex_of[start];
            if owner[v] {
                return bad(start);
            }
            owner[v] = true;
            let mut d = start;
            while !orbit_seen[d] {
                orbit_seen[d] = true;
                d = self.sigma[d];
            }
        }
        if owner.iter().any(|&o| !o) {
            return bad(n_darts);
        }
        Ok(())
    }
}

/// Why a rotation system is not a loopless 2-connected plane multigraph.
///
/// Checks run in declaration order and the first failure wins.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "verdict", content = "witness")]
pub enum ValidationFailure {
    #[error("sigma is not a valid rotation (offending dart {dart})")]
    MalformedPermutation { dart: Dart },
    #[error("edge {edge} is a loop")]
    LoopFound { edge: usize },
    #[error("vertex {vertex} is unreachable from vertex 0")]
    Disconnected { vertex: usize },
    #[error("vertex {vertex} is a cut vertex")]
    CutVertex { vertex: usize },
    #[error("edge {edge} is a bridge")]
    Bridge { edge: usize },
    #[error("V - E + F = {euler_characteristic}, not 2")]
    GenusNonZero { euler_characteristic: i64 },
}

/// A face boundary: one `phi` orbit, starting at its smallest dart.
///
/// Dart `darts[i]` runs from `vertices[i]` to `vertices[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacialCycle {
    pub id: usize,
    pub darts: Vec<Dart>,
    pub vertices: Vec<usize>,
}

impl FacialCycle {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|&d| edge_of(d))
    }
}

/// A rotation system certified to be loopless, 2-connected and of genus zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneMultigraph {
    map: RotationSystem,
    faces: Vec<FacialCycle>,
    face_of: Vec<usize>,
}

impl Deref for PlaneMultigraph {
    type Target = RotationSystem;

    fn deref(&self) -> &RotationSystem {
        &self.map
    }
}

impl PlaneMultigraph {
    pub fn map(&self) -> &RotationSystem {
        &self.map
    }

    pub fn into_map(self) -> RotationSystem {
        self.map
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[FacialCycle] {
        &self.faces
    }

    #[inline]
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    /// The two faces on either side of edge `e`, as (face of `2e`, face of `2e+1`).
    pub fn faces_of_edge(&self, e: usize) -> (usize, usize) {
        (self.face_of[2 * e], self.face_of[2 * e + 1])
    }
}

/// Certifies `map` as a member of the family, or reports the first failed check.
pub fn validate(map: RotationSystem) -> Result<PlaneMultigraph, ValidationFailure> {
    map.check_permutation()?;

    if let Some(edge) = (0..map.n_edges()).find(|&e| {
        let (u, v) = map.endpoints(e);
        u == v
    }) {
        return Err(ValidationFailure::LoopFound { edge });
    }

    let labels = component_labels(&map, |_| false);
    if let Some(vertex) = labels.iter().position(|&c| c != 0) {
        return Err(ValidationFailure::Disconnected { vertex });
    }

    let (cut_vertices, bridges) = articulation(&map);
    if let Some(vertex) = cut_vertices.iter().position(|&c| c) {
        return Err(ValidationFailure::CutVertex { vertex });
    }
    if let Some(edge) = bridges.iter().position(|&b| b) {
        return Err(ValidationFailure::Bridge { edge });
    }

    let orbits = map.phi_orbits();
    let chi = map.n_vertices() as i64 - map.n_edges() as i64 + orbits.len() as i64;
    if chi != 2 {
        return Err(ValidationFailure::GenusNonZero { euler_characteristic: chi });
    }

    let mut face_of = vec![0; map.n_darts()];
    let faces = orbits
        .into_iter()
        .enumerate()
        .map(|(id, darts)| {
            let vertices: Vec<usize> = darts.iter().map(|&d| map.vertex_of(d)).collect();
            let mut seen = vec![false; map.n_vertices()];
            for &v in &vertices {
                assert!(!seen[v], "facial walk {id} repeats vertex {v}");
                seen[v] = true;
            }
            for &d in &darts {
                face_of[d] = id;
            }
            FacialCycle { id, darts, vertices }
        })
        .collect();

    Ok(PlaneMultigraph { map, faces, face_of })
}

/// Connected components after deleting `removed` (all vertices are kept).
/// Components are listed by smallest vertex, members ascending.
pub fn components(map: &RotationSystem, removed: &EdgeSet) -> Vec<Vec<usize>> {
    let labels = component_labels(map, |e| removed.contains(e));
    let count = labels.iter().max().map_or(0, |&m| m + 1);
    let mut out = vec![Vec::new(); count];
    for (v, &c) in labels.iter().enumerate() {
        out[c].push(v);
    }
    out
}

/// Component label per vertex, with labels numbered in order of smallest
/// vertex.
pub(crate) fn component_labels(map: &RotationSystem, skip: impl Fn(usize) -> bool) -> Vec<usize> {
    let n = map.n_vertices();
    let mut adj = vec![Vec::new(); n];
    for e in 0..map.n_edges() {
        if !skip(e) {
            let (u, v) = map.endpoints(e);
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut stack = Vec::new();
    for root in 0..n {
        if label[root] != usize::MAX {
            continue;
        }
        label[root] = next;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if label[u] == usize::MAX {
                    label[u] = next;
                    stack.push(u);
                }
            }
        }
        next += 1;
    }
    label
}

/// Cut vertices and bridges of a connected multigraph by lowpoints.
/// Parallel edges are told apart by edge id, so a doubled edge is never a
/// bridge.
fn articulation(map: &RotationSystem) -> (Vec<bool>, Vec<bool>) {
    let n = map.n_vertices();
    let adj = map.adjacency();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut cut = vec![false; n];
    let mut bridge = vec![false; map.n_edges()];
    let mut root_children = 0;
    let mut clock = 0;

    disc[0] = 0;
    low[0] = 0;
    clock += 1;
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    while let Some(top) = stack.last_mut() {
        let v = top.0;
        if top.1 < adj[v].len() {
            let (u, e) = adj[v][top.1];
            top.1 += 1;
            if e == parent_edge[v] {
                continue;
            }
            if disc[u] == usize::MAX {
                parent_edge[u] = e;
                disc[u] = clock;
                low[u] = clock;
                clock += 1;
                stack.push((u, 0));
            } else {
                low[v] = low[v].min(disc[u]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if low[v] > disc[p] {
                    bridge[parent_edge[v]] = true;
                }
                if p == 0 {
                    root_children += 1;
                } else if low[v] >= disc[p] {
                    cut[p] = true;
                }
            }
        }
    }
    cut[0] = root_children >= 2;
    (cut, bridge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn rs(n_edges: usize, cycles: &[&[Dart]]) -> RotationSystem {
        let owned: Vec<Vec<Dart>> = cycles.iter().map(|c| c.to_vec()).collect();
        RotationSystem::from_cycles(n_edges, &owned).unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = validate(fixtures::c3().into_map()).unwrap();
        assert_eq!(g.n_faces(), 2);
        assert!(g.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn dipole_faces_are_two_gons() {
        let g = fixtures::d3();
        assert_eq!(g.n_faces(), 3);
        assert!(g.faces().iter().all(|f| f.len() == 2));
    }

    #[test]
    fn k4_has_four_triangles() {
        let g = fixtures::k4();
        assert_eq!(g.n_faces(), 4);
        assert!(g.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn loop_is_reported() {
        // edge 0 has both darts at vertex 0
        let m = rs(2, &[&[0, 1, 2], &[3]]);
        assert_eq!(validate(m), Err(ValidationFailure::LoopFound { edge: 0 }));
    }

    #[test]
    fn bowtie_has_cut_vertex() {
        let m = fixtures::parse_fixture("bowtie");
        assert_eq!(validate(m), Err(ValidationFailure::CutVertex { vertex: 0 }));
    }

    #[test]
    fn single_edge_is_bridge() {
        let m = rs(1, &[&[0], &[1]]);
        assert_eq!(validate(m), Err(ValidationFailure::Bridge { edge: 0 }));
    }

    #[test]
    fn disconnected_witness_is_first_unreachable_vertex() {
        // two separate dipoles
        let m = rs(4, &[&[0, 2], &[1, 3], &[4, 6], &[5, 7]]);
        assert_eq!(validate(m), Err(ValidationFailure::Disconnected { vertex: 2 }));
    }

    #[test]
    fn torus_k4_has_nonzero_genus() {
        let m = fixtures::parse_fixture("k4-torus");
        assert_eq!(m.phi_orbits().len(), 2);
        assert_eq!(
            validate(m),
            Err(ValidationFailure::GenusNonZero { euler_characteristic: 0 })
        );
    }

    #[test]
    fn malformed_sigma_comes_first() {
        // sigma maps two darts onto dart 1, and edge 0 is also a loop
        let m = RotationSystem::from_parts(1, vec![1, 1], vec![0, 0]);
        assert!(matches!(validate(m), Err(ValidationFailure::MalformedPermutation { .. })));
        // vertex 1 owns no dart
        let m = RotationSystem::from_parts(2, vec![1, 0], vec![0, 0]);
        assert!(matches!(validate(m), Err(ValidationFailure::MalformedPermutation { .. })));
    }

    #[test]
    fn from_cycles_errors() {
        assert_eq!(
            RotationSystem::from_cycles(2, &[vec![0, 2], vec![1, 2]]),
            Err(RotationError::DartRepeated(2))
        );
        assert_eq!(
            RotationSystem::from_cycles(2, &[vec![0, 2], vec![1]]),
            Err(RotationError::DartMissing(3))
        );
        assert_eq!(RotationSystem::from_cycles(0, &[]), Err(RotationError::NoEdges));
    }

    #[test]
    fn components_of_c4() {
        let g = fixtures::c4();
        // C4 edges: 0 = v0v1, 1 = v1v2, 2 = v2v3, 3 = v3v0
        let opposite = EdgeSet::new(4, [0, 2]).unwrap();
        assert_eq!(components(&g, &opposite), vec![vec![0, 3], vec![1, 2]]);
        let one = EdgeSet::new(4, [1]).unwrap();
        assert_eq!(components(&g, &one).len(), 1);
        let all = EdgeSet::new(4, 0..4).unwrap();
        assert_eq!(components(&g, &all), vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn faces_partition_darts() {
        for (_, g) in fixtures::all() {
            let mut count = vec![0; g.n_darts()];
            for f in g.faces() {
                for &d in &f.darts {
                    count[d] += 1;
                    assert_eq!(g.face_of(d), f.id);
                }
            }
            assert!(count.iter().all(|&c| c == 1));
            let v = g.n_vertices() as i64;
            let e = g.n_edges() as i64;
            assert_eq!(v - e + g.n_faces() as i64, 2);
        }
    }

    #[test]
    fn canonical_relabel_orders_by_smallest_dart() {
        let m = rs(2, &[&[1, 3], &[0, 2]]);
        assert!(!m.is_canonical());
        let c = m.canonical();
        assert_eq!(c.vertex_of(0), 0);
        assert_eq!(c.rotations(), vec![vec![0, 2], vec![1, 3]]);
    }
}
