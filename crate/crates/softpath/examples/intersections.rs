//! Find where two paths cross and cut them at every crossing.

use softpath::parse_path;

fn main() {
    // Two strands weaving past each other four times.
    let a = parse_path(
        "M 0 0 C 1 0 1 1 2 1 C 3 1 3 0 4 0 C 5 0 5 1 6 1 C 7 1 7 0 8 0",
    )
    .unwrap();
    let b = parse_path(
        "M 0 1 C 1 1 1 0 2 0 C 3 0 3 1 4 1 C 5 1 5 0 6 0 C 7 0 7 1 8 1",
    )
    .unwrap();

    for hit in a.intersections_with(&b) {
        println!("crossing at ({:.4}, {:.4})", hit.point.x, hit.point.y);
    }

    let (a_cut, b_cut) = a.split_both(&b);
    println!(
        "split at every crossing: {} and {} components",
        a_cut.components.len(),
        b_cut.components.len()
    );

    // A path can also cross itself; splitting turns the loop into arcs.
    let eight = parse_path("M 0 0 L 2 2 L 0 2 L 2 0").unwrap();
    let arcs = eight.split_self();
    println!("figure eight: {} components after splitting", arcs.components.len());
}
