// Evaluate the four equivalent conditions on every bipartition of a graph.
//
//     cargo run --example conditions [fixture-name]

use dualham::fixtures;
use dualham::partition::{condition_one_violation, Bipartition, ConditionChecker, Side};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "k4".into());
    let g = fixtures::load(&name);
    let checker = ConditionChecker::new(&g);
    let n = g.n_vertices();
    println!("{name}: {} unordered bipartitions", (1u64 << (n - 1)) - 1);
    for rest in 0..(1u64 << (n - 1)) - 1 {
        let p = Bipartition::from_bits(n, rest << 1 | 1).unwrap();
        let verdicts = checker.check_all(&p).unwrap();
        let why = condition_one_violation(&g, &p).map(|c| c.to_string()).unwrap_or_default();
        println!("S={:?} T={:?} {:?} {why}", p.vertices(Side::S), p.vertices(Side::T), verdicts);
        assert!(verdicts.iter().all(|&v| v == verdicts[0]));
    }
}
