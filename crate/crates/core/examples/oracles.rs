// Count tree-tree bipartitions and dual Hamilton cycles independently.

use dualham::fixtures;
use dualham::solver::{enumerate_dual_hamilton_cycles, enumerate_tree_partitions};

fn main() {
    for n in 3..=9 {
        let count = enumerate_tree_partitions(&fixtures::cycle(n), None).unwrap().len();
        println!("C_{n}: {count} (n(n-1)/2 = {})", n * (n - 1) / 2);
    }
    for (name, g) in fixtures::all() {
        let parts = enumerate_tree_partitions(&g, None).unwrap().len();
        let cycles = enumerate_dual_hamilton_cycles(&g);
        println!("{name:>16}: {parts} partitions, {} dual Hamilton cycles", cycles.len());
        if let Some(c) = cycles.first() {
            println!("{:>16}  e.g. {c}", "");
        }
    }
}
