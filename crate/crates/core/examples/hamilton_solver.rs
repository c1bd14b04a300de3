// Find Hamilton cycles by searching for tree-tree bipartitions of the dual,
// and compare pruning modes.
//
//     cargo run --release --example hamilton_solver [seed] [steps]

use dualham::duality::dual_graph;
use dualham::generator::{generate, GenConfig};
use dualham::solver::{find_tree_partition, hamilton_via_duality, Pruning, SearchConfig};
use dualham::fixtures;

fn main() {
    for (name, h) in [("octahedron", fixtures::octahedron()), ("cube", fixtures::cube())] {
        match hamilton_via_duality(&h) {
            Some(cycle) => println!("{name}: Hamilton cycle on edges {:?}", cycle.to_vec()),
            None => println!("{name}: not Hamiltonian"),
        }
    }
    let k23 = dual_graph(&fixtures::doubled_triangle());
    println!("K2,3: {:?}", hamilton_via_duality(&k23));

    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer"));
    let seed = args.next().unwrap_or(11);
    let steps = args.next().unwrap_or(40) as usize;
    let g = generate(&GenConfig::new(seed, steps)).unwrap();
    println!("generated seed={seed} steps={steps}: V={} E={} F={}", g.n_vertices(), g.n_edges(), g.n_faces());
    for pruning in [Pruning::Full, Pruning::CyclesOnly, Pruning::Off] {
        let cfg = SearchConfig { pruning, budget: Some(5_000_000), ..Default::default() };
        let out = find_tree_partition(&g, &cfg);
        let verdict = match &out.result {
            dualham::solver::SearchResult::Found(_) => "found",
            dualham::solver::SearchResult::Exhausted => "none",
            dualham::solver::SearchResult::BudgetExceeded => "budget exceeded",
        };
        println!("  {pruning:?}: {verdict}, {:?}", out.stats);
    }
}
