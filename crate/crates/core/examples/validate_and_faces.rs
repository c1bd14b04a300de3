// Parse a pmap document, certify it, and walk its faces.
//
//     cargo run --example validate_and_faces [path.pmap]

use dualham::fixtures;
use dualham::pmap::parse;
use dualham::validate;

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).expect("readable pmap file"),
        None => fixtures::document("k4").unwrap().to_string(),
    };
    let map = parse(&text).expect("well-formed pmap");
    let g = validate(map).expect("a loopless 2-connected plane multigraph");
    println!("V={} E={} F={}", g.n_vertices(), g.n_edges(), g.n_faces());
    for f in g.faces() {
        println!("face {}: darts {:?} vertices {:?}", f.id, f.darts, f.vertices);
    }

    // every rejection kind, in check order
    for name in ["loop", "bowtie", "bridge", "k4-torus"] {
        let err = validate(fixtures::parse_fixture(name)).unwrap_err();
        println!("{name:>9}: {err}");
    }
}
