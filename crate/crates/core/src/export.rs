//! DOT and GraphML renderings of the underlying multigraph.

use std::fmt::Write as _;

use crate::map::RotationSystem;

/// Undirected DOT; every edge carries its id as `label`.
pub fn to_dot(map: &RotationSystem) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..map.n_vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for e in 0..map.n_edges() {
        let (u, v) = map.endpoints(e);
        let _ = writeln!(out, "  {u} -- {v} [label={e}];");
    }
    out.push_str("}\n");
    out
}

/// GraphML with nodes `n<v>` and edges `e<id>`; the edge id is also stored
/// as the `eid` data key.
pub fn to_graphml(map: &RotationSystem) -> String {
    let mut out = String::from(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n  \
         <key id=\"eid\" for=\"edge\" attr.name=\"edge_id\" attr.type=\"int\"/>\n  \
         <graph id=\"G\" edgedefault=\"undirected\">\n",
    );
    for v in 0..map.n_vertices() {
        let _ = writeln!(out, "    <node id=\"n{v}\"/>");
    }
    for e in 0..map.n_edges() {
        let (u, v) = map.endpoints(e);
        let _ = writeln!(
            out,
            "    <edge id=\"e{e}\" source=\"n{u}\" target=\"n{v}\"><data key=\"eid\">{e}</data></edge>"
        );
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dipole_dot() {
        assert_eq!(
            to_dot(&fixtures::d2()),
            "graph G {\n  0;\n  1;\n  0 -- 1 [label=0];\n  0 -- 1 [label=1];\n}\n"
        );
    }

    #[test]
    fn graphml_lists_parallel_edges() {
        let text = to_graphml(&fixtures::d3());
        assert_eq!(text.matches("<edge ").count(), 3);
        assert_eq!(text.matches("<node ").count(), 2);
    }
}
