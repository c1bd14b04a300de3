// Build duals, check that the dual of the dual is the original map, and
// watch cycles turn into bonds.

use dualham::duality::{dual, dual_graph, is_bond, is_cycle_edge_set};
use dualham::pmap::serialize;
use dualham::{fixtures, EdgeSet};

fn main() {
    let c3 = fixtures::c3();
    let pair = dual(&c3);
    println!("dual of C3:\n{}", serialize(&pair.dual));

    let cube = fixtures::cube();
    let octahedron = dual_graph(&cube);
    println!(
        "cube V={} F={}  ->  dual V={} F={}",
        cube.n_vertices(),
        cube.n_faces(),
        octahedron.n_vertices(),
        octahedron.n_faces()
    );
    assert_eq!(serialize(&dual_graph(&octahedron)), serialize(&cube));
    println!("dual(dual(cube)) == cube");

    let k4 = fixtures::k4();
    let d = dual_graph(&k4);
    let (mut cycles, mut bonds) = (0, 0);
    for bits in 1..(1u64 << k4.n_edges()) {
        let x = EdgeSet::from_bits(k4.n_edges(), bits);
        if is_cycle_edge_set(&k4, &x) {
            assert!(is_bond(&d, &x));
            cycles += 1;
        }
        if is_bond(&k4, &x) {
            assert!(is_cycle_edge_set(&d, &x));
            bonds += 1;
        }
    }
    println!("K4: {cycles} cycles map to dual bonds, {bonds} bonds map to dual cycles");
}
