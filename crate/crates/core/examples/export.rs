// Render a fixture as DOT and GraphML.

use dualham::export::{to_dot, to_graphml};
use dualham::fixtures;

fn main() {
    let g = fixtures::doubled_triangle();
    print!("{}", to_dot(&g));
    print!("{}", to_graphml(&g));
}
