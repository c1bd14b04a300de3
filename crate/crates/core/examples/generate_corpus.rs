// Generate a seeded corpus and summarise it.
//
//     cargo run --example generate_corpus [count] [steps]

use dualham::generator::{generate_document, GenConfig};
use dualham::pmap::parse;
use dualham::solver::enumerate_tree_partitions;
use dualham::validate;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer"));
    let count = args.next().unwrap_or(20);
    let steps = args.next().unwrap_or(8) as usize;
    let mut non_hamiltonian = 0;
    for seed in 1..=count {
        let doc = generate_document(&GenConfig::new(seed, steps)).unwrap();
        let g = validate(parse(&doc).unwrap()).unwrap();
        let parts = enumerate_tree_partitions(&g, None).map(|p| p.len()).unwrap_or(0);
        non_hamiltonian += usize::from(parts == 0);
        println!("seed {seed:>3}: V={:>2} E={:>2} F={:>2} tree-tree partitions={parts}", g.n_vertices(), g.n_edges(), g.n_faces());
    }
    println!("{non_hamiltonian} of {count} have a non-Hamiltonian dual");
    println!("\n{}", generate_document(&GenConfig::new(1, steps)).unwrap());
}
