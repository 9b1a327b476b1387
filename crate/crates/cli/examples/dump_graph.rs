//! Prints a built-in digraph in the edge-list format.
fn main() {
    let name = std::env::args().nth(1).expect("usage: dump_graph NAME");
    let d = uptail::families::builtin(&name).expect("unknown built-in");
    print!("{d}");
}
