//! Vertex bipartitions `{S, T}` and the four equivalent conditions relating
//! them to Hamilton cycles of the dual:
//!
//! 1. `S` and `T` are acyclic and `S` meets every facial cycle in a path or a
//!    single vertex;
//! 2. the dual image of the cut `E[S, T]` is a Hamilton cycle of the dual;
//! 3. `S` and `T` are trees;
//! 4. `S` is a tree and meets every facial cycle in a path or a single vertex.
//!
//! Condition 4 only looks at `S`; that asymmetry is kept as stated.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::duality::{dual_graph, is_cycle_edge_set};
use crate::dsu::RollbackDsu;
use crate::edge_set::EdgeSet;
use crate::map::{component_labels, FacialCycle, PlaneMultigraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    S,
    T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SubgraphKind {
    Tree,
    /// Acyclic but disconnected.
    Forest,
    Cyclic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IntersectionKind {
    Empty,
    Vertex,
    Path,
    WholeCycle,
    Scattered,
}

impl IntersectionKind {
    /// The shape conditions 1 and 4 ask for.
    pub fn is_path_or_vertex(self) -> bool {
        matches!(self, IntersectionKind::Path | IntersectionKind::Vertex)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    One,
    Two,
    Three,
    Four,
}

impl Condition {
    pub const ALL: [Condition; 4] = [Condition::One, Condition::Two, Condition::Three, Condition::Four];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_number(n: u8) -> Option<Self> {
        Condition::ALL.get(usize::from(n).checked_sub(1)?).copied()
    }
}

/// The clause of condition 1 a bipartition fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "clause")]
pub enum Clause {
    CyclicSide { side: Side },
    Facial { face: usize, kind: IntersectionKind },
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::CyclicSide { side } => write!(f, "side {side:?} induces a cycle"),
            Clause::Facial { face, kind } => {
                write!(f, "S meets face {face} as {kind:?}, not a path or a vertex")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("both sides of a bipartition must be nonempty")]
    EmptySide,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("bipartition covers {got} vertices but the graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("condition 1 fails: {0}")]
    ConditionViolated(Clause),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}

/// An unordered pair `{S, T}` of nonempty vertex sets covering every vertex.
///
/// `S` is remembered because condition 4 is stated for `S`, but equality,
/// hashing and ordering ignore which side is called `S`.
#[derive(Debug, Clone)]
pub struct Bipartition {
    in_s: Vec<bool>,
}

impl Bipartition {
    pub fn new<I>(n: usize, s: I) -> Result<Self, PartitionError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut in_s = vec![false; n];
        for v in s {
            if v >= n {
                return Err(PartitionError::VertexOutOfRange { vertex: v, n });
            }
            in_s[v] = true;
        }
        Self::from_mask(in_s)
    }

    pub fn from_mask(in_s: Vec<bool>) -> Result<Self, PartitionError> {
        if in_s.iter().all(|&b| b) || in_s.iter().all(|&b| !b) {
            return Err(PartitionError::EmptySide);
        }
        Ok(Bipartition { in_s })
    }

    /// `S` = vertices whose bit is set in `bits`.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self, PartitionError> {
        Self::from_mask((0..n).map(|v| bits >> v & 1 == 1).collect())
    }

    pub fn n_vertices(&self) -> usize {
        self.in_s.len()
    }

    pub fn in_s(&self, v: usize) -> bool {
        self.in_s[v]
    }

    pub fn side(&self, v: usize) -> Side {
        if self.in_s[v] {
            Side::S
        } else {
            Side::T
        }
    }

    pub fn s_mask(&self) -> &[bool] {
        &self.in_s
    }

    pub fn vertices(&self, side: Side) -> Vec<usize> {
        (0..self.in_s.len()).filter(|&v| self.side(v) == side).collect()
    }

    pub fn swapped(&self) -> Self {
        Bipartition { in_s: self.in_s.iter().map(|&b| !b).collect() }
    }

    /// The same bipartition with vertex 0 on side `S`.
    pub fn normalized(&self) -> Self {
        if self.in_s[0] {
            self.clone()
        } else {
            self.swapped()
        }
    }

    fn key(&self) -> impl Iterator<Item = bool> + '_ {
        let flip = !self.in_s[0];
        self.in_s.iter().map(move |&b| b ^ flip)
    }

    fn mask_for(&self, side: Side) -> Vec<bool> {
        self.in_s.iter().map(|&b| b == (side == Side::S)).collect()
    }

    fn check_host(&self, g: &PlaneMultigraph) -> Result<(), PartitionError> {
        if self.in_s.len() != g.n_vertices() {
            return Err(PartitionError::SizeMismatch { expected: g.n_vertices(), got: self.in_s.len() });
        }
        Ok(())
    }
}

impl PartialEq for Bipartition {
    fn eq(&self, other: &Self) -> bool {
        self.in_s.len() == other.in_s.len() && self.key().eq(other.key())
    }
}

impl Eq for Bipartition {}

impl Hash for Bipartition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.in_s.len().hash(state);
        for b in self.key() {
            b.hash(state);
        }
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders normalized bipartitions by their `S` membership vectors, with
/// membership sorting before non-membership (so `{0,1}` precedes `{0,2}`).
impl Ord for Bipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.in_s
            .len()
            .cmp(&other.in_s.len())
            .then_with(|| self.key().map(|b| !b).cmp(other.key().map(|b| !b)))
    }
}

impl Serialize for Bipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Bipartition", 2)?;
        st.serialize_field("S", &self.vertices(Side::S))?;
        st.serialize_field("T", &self.vertices(Side::T))?;
        st.end()
    }
}

fn kind_of_mask(g: &PlaneMultigraph, members: &[bool]) -> SubgraphKind {
    let mut dsu = RollbackDsu::new(g.n_vertices());
    let mut count = members.iter().filter(|&&b| b).count();
    for e in 0..g.n_edges() {
        let (u, v) = g.endpoints(e);
        if members[u] && members[v] {
            if !dsu.union(u, v) {
                return SubgraphKind::Cyclic;
            }
            count -= 1;
        }
    }
    if count == 1 {
        SubgraphKind::Tree
    } else {
        SubgraphKind::Forest
    }
}

/// Classifies the induced subgraph `G[X]`, parallel edges included.
pub fn induced_kind(g: &PlaneMultigraph, vertices: &[usize]) -> Result<SubgraphKind, PartitionError> {
    if vertices.is_empty() {
        return Err(PartitionError::EmptyVertexSet);
    }
    let mut members = vec![false; g.n_vertices()];
    for &v in vertices {
        if v >= g.n_vertices() {
            return Err(PartitionError::VertexOutOfRange { vertex: v, n: g.n_vertices() });
        }
        members[v] = true;
    }
    Ok(kind_of_mask(g, &members))
}

/// Kind of the subgraph induced by one side of `p`.
pub fn side_kind(g: &PlaneMultigraph, p: &Bipartition, side: Side) -> SubgraphKind {
    kind_of_mask(g, &p.mask_for(side))
}

/// The edge cut `E[S, T]`.
pub fn cross_edges(g: &PlaneMultigraph, p: &Bipartition) -> EdgeSet {
    EdgeSet::from_predicate(g.n_edges(), |e| {
        let (u, v) = g.endpoints(e);
        p.in_s(u) != p.in_s(v)
    })
}

/// Shape of `S ∩ C` on the cyclic vertex sequence of `c`.
pub fn facial_intersection(c: &FacialCycle, in_s: &[bool]) -> IntersectionKind {
    let marks: Vec<bool> = c.vertices.iter().map(|&v| in_s[v]).collect();
    let hits = marks.iter().filter(|&&b| b).count();
    if hits == 0 {
        return IntersectionKind::Empty;
    }
    if hits == marks.len() {
        return IntersectionKind::WholeCycle;
    }
    if hits == 1 {
        return IntersectionKind::Vertex;
    }
    let arcs = (0..marks.len()).filter(|&i| marks[i] && !marks[(i + marks.len() - 1) % marks.len()]).count();
    if arcs == 1 {
        IntersectionKind::Path
    } else {
        IntersectionKind::Scattered
    }
}

/// The first clause of condition 1 that fails, if any.
pub fn condition_one_violation(g: &PlaneMultigraph, p: &Bipartition) -> Option<Clause> {
    for side in [Side::S, Side::T] {
        if side_kind(g, p, side) == SubgraphKind::Cyclic {
            return Some(Clause::CyclicSide { side });
        }
    }
    g.faces().iter().find_map(|f| {
        let kind = facial_intersection(f, p.s_mask());
        (!kind.is_path_or_vertex()).then_some(Clause::Facial { face: f.id, kind })
    })
}

fn facial_ok(g: &PlaneMultigraph, p: &Bipartition) -> bool {
    g.faces().iter().all(|f| facial_intersection(f, p.s_mask()).is_path_or_vertex())
}

/// Evaluates the four conditions for bipartitions of one graph.
///
/// The dual used for condition 2 is always built here from the graph itself.
#[derive(Debug, Clone)]
pub struct ConditionChecker<'g> {
    graph: &'g PlaneMultigraph,
    dual: PlaneMultigraph,
}

impl<'g> ConditionChecker<'g> {
    pub fn new(graph: &'g PlaneMultigraph) -> Self {
        ConditionChecker { graph, dual: dual_graph(graph) }
    }

    pub fn dual(&self) -> &PlaneMultigraph {
        &self.dual
    }

    pub fn check(&self, p: &Bipartition, which: Condition) -> Result<bool, PartitionError> {
        p.check_host(self.graph)?;
        let g = self.graph;
        Ok(match which {
            Condition::One => {
                side_kind(g, p, Side::S) != SubgraphKind::Cyclic
                    && side_kind(g, p, Side::T) != SubgraphKind::Cyclic
                    && facial_ok(g, p)
            }
            Condition::Two => {
                let cut = cross_edges(g, p);
                cut.len() == self.dual.n_vertices() && is_cycle_edge_set(&self.dual, &cut)
            }
            Condition::Three => {
                side_kind(g, p, Side::S) == SubgraphKind::Tree
                    && side_kind(g, p, Side::T) == SubgraphKind::Tree
            }
            Condition::Four => side_kind(g, p, Side::S) == SubgraphKind::Tree && facial_ok(g, p),
        })
    }

    pub fn check_all(&self, p: &Bipartition) -> Result<[bool; 4], PartitionError> {
        Ok([
            self.check(p, Condition::One)?,
            self.check(p, Condition::Two)?,
            self.check(p, Condition::Three)?,
            self.check(p, Condition::Four)?,
        ])
    }
}

pub fn check_condition(g: &PlaneMultigraph, p: &Bipartition, which: Condition) -> Result<bool, PartitionError> {
    ConditionChecker::new(g).check(p, which)
}

/// One step of a dual Hamilton cycle: leave dual vertex `face` along `edge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleStep {
    pub face: usize,
    pub edge: usize,
}

/// A Hamilton cycle of the dual as a cyclic list of steps, where `steps[i].edge`
/// joins `steps[i].face` to `steps[i + 1].face`.
///
/// Always normalized: it starts at the smallest face and heads toward the
/// smaller `(face, edge)` of the two ways out, so equal cycles compare equal
/// and print identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct HamiltonCycleCertificate {
    steps: Vec<CycleStep>,
}

impl HamiltonCycleCertificate {
    /// Normalizes a cyclic step list. Faces must be distinct and there must be
    /// at least two steps; adjacency is only checked against a graph by
    /// [`dual_cycle_to_partition`].
    pub fn new(steps: Vec<CycleStep>) -> Result<Self, PartitionError> {
        if steps.len() < 2 {
            return Err(PartitionError::InvalidCertificate("fewer than two faces".into()));
        }
        let mut faces: Vec<usize> = steps.iter().map(|s| s.face).collect();
        faces.sort_unstable();
        if faces.windows(2).any(|w| w[0] == w[1]) {
            return Err(PartitionError::InvalidCertificate("a face is visited twice".into()));
        }
        let len = steps.len();
        let start = (0..len).min_by_key(|&i| steps[i].face).expect("nonempty");
        let mut rotated: Vec<CycleStep> = (0..len).map(|i| steps[(start + i) % len]).collect();
        let forward = (rotated[1].face, rotated[0].edge);
        let backward = (rotated[len - 1].face, rotated[len - 1].edge);
        if backward < forward {
            let mut reversed = Vec::with_capacity(len);
            reversed.push(CycleStep { face: rotated[0].face, edge: rotated[len - 1].edge });
            for i in (1..len).rev() {
                reversed.push(CycleStep { face: rotated[i].face, edge: rotated[i - 1].edge });
            }
            rotated = reversed;
        }
        Ok(HamiltonCycleCertificate { steps: rotated })
    }

    pub fn steps(&self) -> &[CycleStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The primal edge ids used, i.e. the preimage of the cycle's edge set.
    pub fn edge_set(&self, universe: usize) -> Result<EdgeSet, PartitionError> {
        EdgeSet::new(universe, self.steps.iter().map(|s| s.edge))
            .map_err(|e| PartitionError::InvalidCertificate(e.to_string()))
    }
}

impl fmt::Display for HamiltonCycleCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", s.face, s.edge)?;
        }
        Ok(())
    }
}

/// Parses `face:edge,face:edge,...`.
impl FromStr for HamiltonCycleCertificate {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |t: &str| PartitionError::InvalidCertificate(format!("malformed step `{t}`"));
        let steps = s
            .split(',')
            .map(|t| {
                let (face, edge) = t.split_once(':').ok_or_else(|| bad(t))?;
                Ok(CycleStep {
                    face: face.trim().parse().map_err(|_| bad(t))?,
                    edge: edge.trim().parse().map_err(|_| bad(t))?,
                })
            })
            .collect::<Result<Vec<_>, PartitionError>>()?;
        HamiltonCycleCertificate::new(steps)
    }
}

/// Builds the dual Hamilton cycle through the cut `E[S, T]` of a bipartition
/// satisfying condition 1.
pub fn partition_to_dual_cycle(
    g: &PlaneMultigraph,
    p: &Bipartition,
) -> Result<HamiltonCycleCertificate, PartitionError> {
    p.check_host(g)?;
    if let Some(clause) = condition_one_violation(g, p) {
        return Err(PartitionError::ConditionViolated(clause));
    }
    let cut = cross_edges(g, p);
    // each face meets S and T in complementary arcs, so exactly two cut edges
    let exits: Vec<Vec<usize>> =
        g.faces().iter().map(|f| f.edges().filter(|&e| cut.contains(e)).collect()).collect();
    for (face, ex) in exits.iter().enumerate() {
        assert_eq!(ex.len(), 2, "face {face} has {} cut edges", ex.len());
    }

    let n_faces = g.n_faces();
    let mut steps = Vec::with_capacity(n_faces);
    let mut face = 0;
    let mut edge = exits[0][0];
    loop {
        steps.push(CycleStep { face, edge });
        let (a, b) = g.faces_of_edge(edge);
        let next = if a == face { b } else { a };
        if next == 0 {
            break;
        }
        assert!(steps.len() < n_faces, "cut edges do not form a single cycle");
        edge = if exits[next][0] == edge { exits[next][1] } else { exits[next][0] };
        face = next;
    }
    assert_eq!(steps.len(), n_faces, "cut edges do not reach every face");
    HamiltonCycleCertificate::new(steps)
}

/// Recovers `{S, T}` from a dual Hamilton cycle: deleting its edges from the
/// primal leaves exactly two trees. `S` is the one containing vertex 0.
pub fn dual_cycle_to_partition(
    g: &PlaneMultigraph,
    cert: &HamiltonCycleCertificate,
) -> Result<Bipartition, PartitionError> {
    let invalid = |msg: String| Err(PartitionError::InvalidCertificate(msg));
    if cert.len() != g.n_faces() {
        return invalid(format!("visits {} of {} faces", cert.len(), g.n_faces()));
    }
    let steps = cert.steps();
    let mut used = vec![false; g.n_edges()];
    for (i, step) in steps.iter().enumerate() {
        let next = steps[(i + 1) % steps.len()].face;
        if step.face >= g.n_faces() {
            return invalid(format!("face {} does not exist", step.face));
        }
        if step.edge >= g.n_edges() {
            return invalid(format!("edge {} does not exist", step.edge));
        }
        if std::mem::replace(&mut used[step.edge], true) {
            return invalid(format!("edge {} is used twice", step.edge));
        }
        let (a, b) = g.faces_of_edge(step.edge);
        if !((a, b) == (step.face, next) || (b, a) == (step.face, next)) {
            return invalid(format!("edge {} does not join faces {} and {next}", step.edge, step.face));
        }
    }

    let labels = component_labels(g, |e| used[e]);
    assert!(
        labels.iter().all(|&c| c <= 1) && labels.contains(&1),
        "a dual Hamilton cycle must cut the primal into two parts"
    );
    let p = Bipartition::from_mask(labels.iter().map(|&c| c == 0).collect())?;
    debug_assert_eq!(side_kind(g, &p, Side::S), SubgraphKind::Tree);
    debug_assert_eq!(side_kind(g, &p, Side::T), SubgraphKind::Tree);
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn bp(g: &PlaneMultigraph, s: &[usize]) -> Bipartition {
        Bipartition::new(g.n_vertices(), s.iter().copied()).unwrap()
    }

    fn edge_between(g: &PlaneMultigraph, a: usize, b: usize) -> usize {
        (0..g.n_edges())
            .find(|&e| {
                let (u, v) = g.endpoints(e);
                (u, v) == (a, b) || (u, v) == (b, a)
            })
            .unwrap()
    }

    #[test]
    fn bipartition_is_unordered() {
        let a = Bipartition::new(4, [0, 1]).unwrap();
        let b = Bipartition::new(4, [2, 3]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.cmp(&b), Ordering::Equal);
        assert_ne!(a, Bipartition::new(4, [0, 2]).unwrap());
        assert!(a < Bipartition::new(4, [0, 2]).unwrap());
        assert_eq!(Bipartition::new(3, [0, 1, 2]).unwrap_err(), PartitionError::EmptySide);
        assert_eq!(Bipartition::new(3, []).unwrap_err(), PartitionError::EmptySide);
        assert!(matches!(Bipartition::new(3, [3]), Err(PartitionError::VertexOutOfRange { .. })));
    }

    #[test]
    fn induced_kinds() {
        let k4 = fixtures::k4();
        assert_eq!(induced_kind(&k4, &[0, 1]), Ok(SubgraphKind::Tree));
        assert_eq!(induced_kind(&k4, &[1, 2, 3]), Ok(SubgraphKind::Cyclic));
        let c4 = fixtures::c4();
        assert_eq!(induced_kind(&c4, &[0, 2]), Ok(SubgraphKind::Forest));
        let dt = fixtures::doubled_triangle();
        for pair in [[0, 1], [1, 2], [0, 2]] {
            assert_eq!(induced_kind(&dt, &pair), Ok(SubgraphKind::Cyclic));
        }
        assert_eq!(induced_kind(&dt, &[]), Err(PartitionError::EmptyVertexSet));
    }

    #[test]
    fn cross_edges_examples() {
        let c4 = fixtures::c4();
        let cut = cross_edges(&c4, &bp(&c4, &[0, 1]));
        assert_eq!(cut.to_vec(), vec![edge_between(&c4, 1, 2), edge_between(&c4, 3, 0)]);
        let k4 = fixtures::k4();
        assert_eq!(cross_edges(&k4, &bp(&k4, &[0, 1])).len(), 4);
        let d2 = fixtures::d2();
        assert_eq!(cross_edges(&d2, &bp(&d2, &[0])).to_vec(), vec![0, 1]);
    }

    #[test]
    fn cut_and_sides_partition_edges() {
        let k4 = fixtures::k4();
        let p = bp(&k4, &[0, 2]);
        let cut = cross_edges(&k4, &p);
        let inside = (0..6).filter(|&e| {
            let (u, v) = k4.endpoints(e);
            p.in_s(u) == p.in_s(v)
        });
        assert_eq!(cut.len() + inside.count(), 6);
    }

    #[test]
    fn facial_intersection_on_a_square() {
        let c = FacialCycle { id: 0, darts: vec![0, 2, 4, 6], vertices: vec![0, 1, 2, 3] };
        let mask = |s: &[usize]| (0..4).map(|v| s.contains(&v)).collect::<Vec<_>>();
        assert_eq!(facial_intersection(&c, &mask(&[0, 1])), IntersectionKind::Path);
        assert_eq!(facial_intersection(&c, &mask(&[3, 0])), IntersectionKind::Path);
        assert_eq!(facial_intersection(&c, &mask(&[0, 2])), IntersectionKind::Scattered);
        assert_eq!(facial_intersection(&c, &mask(&[0, 1, 2, 3])), IntersectionKind::WholeCycle);
        assert_eq!(facial_intersection(&c, &mask(&[2])), IntersectionKind::Vertex);
        assert_eq!(facial_intersection(&c, &mask(&[])), IntersectionKind::Empty);
    }

    #[test]
    fn conditions_on_small_cases() {
        let k4 = fixtures::k4();
        let ck = ConditionChecker::new(&k4);
        assert_eq!(ck.check_all(&bp(&k4, &[0, 1])), Ok([true; 4]));
        assert_eq!(ck.check(&bp(&k4, &[0]), Condition::Three), Ok(false));
        let c4 = fixtures::c4();
        assert_eq!(ConditionChecker::new(&c4).check_all(&bp(&c4, &[0, 1])), Ok([true; 4]));
        assert!(matches!(
            ck.check(&Bipartition::new(3, [0]).unwrap(), Condition::One),
            Err(PartitionError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn condition_numbers() {
        assert_eq!(Condition::from_number(3), Some(Condition::Three));
        assert_eq!(Condition::from_number(0), None);
        assert_eq!(Condition::from_number(5), None);
        assert_eq!(Condition::Four.number(), 4);
    }

    #[test]
    fn certificate_normalization() {
        let step = |face, edge| CycleStep { face, edge };
        let a = HamiltonCycleCertificate::new(vec![step(2, 5), step(0, 1), step(3, 7), step(1, 4)]).unwrap();
        // 0 -> 3 via 1, 3 -> 1 via 7, 1 -> 2 via 4, 2 -> 0 via 5; reversed start heads to 2
        assert_eq!(a.to_string(), "0:5,2:4,1:7,3:1");
        let b: HamiltonCycleCertificate = "3:7,1:4,2:5,0:1".parse().unwrap();
        assert_eq!(a, b);
        // a 2-gon is oriented by the smaller edge
        let c: HamiltonCycleCertificate = "0:3,1:0".parse().unwrap();
        assert_eq!(c.to_string(), "0:0,1:3");
        assert!("0:1".parse::<HamiltonCycleCertificate>().is_err());
        assert!("0:1,0:2".parse::<HamiltonCycleCertificate>().is_err());
        assert!("0-1,2:3".parse::<HamiltonCycleCertificate>().is_err());
    }

    #[test]
    fn c4_single_vertex_gives_two_gon() {
        let c4 = fixtures::c4();
        let p = bp(&c4, &[0]);
        let cert = partition_to_dual_cycle(&c4, &p).unwrap();
        let at_v0 = [edge_between(&c4, 0, 1), edge_between(&c4, 3, 0)];
        assert_eq!(cert.len(), 2);
        let mut used: Vec<usize> = cert.steps().iter().map(|s| s.edge).collect();
        used.sort();
        assert_eq!(used, at_v0);
        let back = dual_cycle_to_partition(&c4, &cert).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.vertices(Side::S), vec![0]);
        assert_eq!(back.vertices(Side::T), vec![1, 2, 3]);
    }

    #[test]
    fn k4_matching_partition_round_trips() {
        let k4 = fixtures::k4();
        let p = bp(&k4, &[0, 1]);
        let cert = partition_to_dual_cycle(&k4, &p).unwrap();
        assert_eq!(cert.len(), 4);
        assert_eq!(cert.edge_set(6).unwrap(), cross_edges(&k4, &p));
        assert_eq!(dual_cycle_to_partition(&k4, &cert).unwrap(), p);
    }

    #[test]
    fn doubled_triangle_violates_condition_one() {
        let dt = fixtures::doubled_triangle();
        assert_eq!(
            partition_to_dual_cycle(&dt, &bp(&dt, &[0])),
            Err(PartitionError::ConditionViolated(Clause::CyclicSide { side: Side::T }))
        );
    }

    #[test]
    fn facial_clause_is_reported() {
        let c4 = fixtures::c4();
        // S = {0, 2}: both sides are forests, each face meets S in two
        // separated vertices
        assert_eq!(
            partition_to_dual_cycle(&c4, &bp(&c4, &[0, 2])),
            Err(PartitionError::ConditionViolated(Clause::Facial {
                face: 0,
                kind: IntersectionKind::Scattered
            }))
        );
    }

    #[test]
    fn partial_certificate_is_rejected() {
        let k4 = fixtures::k4();
        let cert = partition_to_dual_cycle(&k4, &bp(&k4, &[0, 1])).unwrap();
        let partial = HamiltonCycleCertificate::new(cert.steps()[..3].to_vec()).unwrap();
        assert!(matches!(
            dual_cycle_to_partition(&k4, &partial),
            Err(PartitionError::InvalidCertificate(_))
        ));
        // right length but a step along an edge that misses its faces
        let mut steps = cert.steps().to_vec();
        steps.swap(0, 1);
        let bogus = HamiltonCycleCertificate::new(steps).unwrap();
        assert!(dual_cycle_to_partition(&k4, &bogus).is_err());
    }
}
