//! Fuse touching components, append paths end to end, and swap a path's
//! middle for other material.

use softpath::{parse_path, AppendOptions, SoftPath};

fn main() {
    // spot_weld fuses components whose endpoints coincide (within 0.01).
    let p = parse_path("M 0 0 L 4 0 M 4 0 L 4 3 M 9 9 L 10 10").unwrap();
    let welded = p.spot_weld();
    println!("welded: {} components (was 3)", welded.components.len());

    // append glues another path on, optionally moving it to the end first.
    let tail = parse_path("M 0 0 C 1 1 2 1 3 0").unwrap();
    let opts = AppendOptions { move_to_end: true, weld: true, ..Default::default() };
    let grown = welded.append(&tail, &opts);
    assert!(grown.warnings.is_empty());
    println!("appended: {} components", grown.value.components.len());

    // splice spans the middle path from initial's end to final's start
    // (scaled and rotated to fit) and welds the seams.
    let initial = parse_path("M 0 0 L 10 0").unwrap();
    let middle = parse_path("M 0 0 L 1 0 M 2 0 L 3 0 M 4 0 L 5 0").unwrap();
    let final_part = parse_path("M 20 0 L 30 0").unwrap();
    let joined = SoftPath::splice(&initial, &middle, &final_part).unwrap();
    assert!(joined.warnings.is_empty());
    print!("spliced:\n{}", joined.value.serialize());
}
