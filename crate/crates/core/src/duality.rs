//! Plane duals with identity edge correspondence, plus the bond and cycle
//! predicates that duality exchanges.

use crate::edge_set::EdgeSet;
use crate::map::{component_labels, validate, PlaneMultigraph, RotationSystem};

/// A plane multigraph together with its dual.
///
/// Both share one dart set, so edge `i` of the primal is edge `i` of the dual.
/// Dual vertex `f` is primal face `f`.
#[derive(Debug, Clone)]
pub struct DualPair {
    pub primal: PlaneMultigraph,
    pub dual: PlaneMultigraph,
}

impl DualPair {
    /// `(primal edge, dual edge)` for every edge; always the identity.
    pub fn correspondence(&self) -> impl Iterator<Item = (usize, usize)> {
        (0..self.primal.n_edges()).map(|e| (e, e))
    }
}

/// The dual map: rotation `phi` over the same darts, vertices labelled by face id.
pub fn dual_graph(g: &PlaneMultigraph) -> PlaneMultigraph {
    let sigma = (0..g.n_darts()).map(|d| g.phi(d)).collect();
    let vertex_of = (0..g.n_darts()).map(|d| g.face_of(d)).collect();
    let map = RotationSystem::from_parts(g.n_faces(), sigma, vertex_of);
    validate(map).unwrap_or_else(|e| panic!("dual left the family: {e}"))
}

pub fn dual(g: &PlaneMultigraph) -> DualPair {
    DualPair { primal: g.clone(), dual: dual_graph(g) }
}

/// Minimal nonempty edge cut test: deleting `cut` leaves exactly two
/// components and every edge of `cut` runs between them.
pub fn is_bond(g: &RotationSystem, cut: &EdgeSet) -> bool {
    if cut.is_empty() {
        return false;
    }
    let labels = component_labels(g, |e| cut.contains(e));
    if labels.iter().any(|&c| c > 1) || !labels.contains(&1) {
        return false;
    }
    cut.iter().all(|e| {
        let (u, v) = g.endpoints(e);
        labels[u] != labels[v]
    })
}

/// True iff `edges` is the edge set of one cycle (a pair of parallel edges
/// counts as a 2-cycle).
pub fn is_cycle_edge_set(g: &RotationSystem, edges: &EdgeSet) -> bool {
    if edges.is_empty() {
        return false;
    }
    let mut degree = vec![0usize; g.n_vertices()];
    for e in edges.iter() {
        let (u, v) = g.endpoints(e);
        degree[u] += 1;
        degree[v] += 1;
    }
    if degree.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    // the kept edges form disjoint cycles; connected iff the touched vertices
    // share one label
    let labels = component_labels(g, |e| !edges.contains(e));
    let mut touched = degree.iter().enumerate().filter(|(_, &d)| d == 2).map(|(v, _)| labels[v]);
    let first = touched.next();
    touched.all(|l| Some(l) == first)
}

/// Edges incident to vertex `v`.
pub fn star(g: &RotationSystem, v: usize) -> EdgeSet {
    EdgeSet::from_predicate(g.n_edges(), |e| {
        let (a, b) = g.endpoints(e);
        a == v || b == v
    })
}
