// Turn a tree-tree bipartition into a Hamilton cycle of the dual and back.

use dualham::fixtures;
use dualham::partition::{dual_cycle_to_partition, partition_to_dual_cycle, Bipartition, Side};
use dualham::solver::enumerate_tree_partitions;

fn main() {
    let g = fixtures::cube();
    let p = enumerate_tree_partitions(&g, None).unwrap().remove(0);
    println!("S={:?}", p.vertices(Side::S));
    let cert = partition_to_dual_cycle(&g, &p).expect("both sides are paths");
    println!("certificate (face:edge): {cert}");
    let back = dual_cycle_to_partition(&g, &cert).unwrap();
    assert_eq!(back, p);
    println!("recovered {}", serde_json::to_string(&back).unwrap());

    let bad = Bipartition::new(g.n_vertices(), [0, 1, 2, 3]).unwrap();
    println!("S=a whole face: {}", partition_to_dual_cycle(&g, &bad).unwrap_err());

    let cycle: dualham::HamiltonCycleCertificate = "0:1,1:2".parse().unwrap();
    println!("{cycle}: {}", dual_cycle_to_partition(&g, &cycle).unwrap_err());
}
