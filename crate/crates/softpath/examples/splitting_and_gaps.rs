//! Cut paths at parameters, keep pieces, trim ends and open gaps.

use softpath::{parse_path, KeepMode, PathEnd};

fn main() {
    let p = parse_path("M 0 0 L 4 0 L 4 3 L 8 3").unwrap();

    // split_at inserts a component break; split_into hands back both halves.
    let cut = p.split_at(0.5).unwrap();
    println!("split at t = 0.5: {} components", cut.components.len());
    let (head, tail) = p.split_into(0.5).unwrap();
    println!("head ends at {:?}, tail starts at {:?}", head.end_point().unwrap(), tail.start_point().unwrap());

    // keep drops everything outside the requested stretch.
    let middle = p.keep(KeepMode::Middle(0.25, 0.75)).unwrap();
    print!("middle half:\n{}", middle.serialize());

    // shorten trims a drawn length off an end (estimated on curves).
    let trimmed = p.shorten(PathEnd::Both, 1.0);
    assert!(trimmed.warnings.is_empty());
    print!("\ntrimmed by 1 at both ends:\n{}", trimmed.value.serialize());

    // Gaps around junctions split a stroke into separate components.
    let gapped = p.split_at(0.5).unwrap().insert_gaps_components(0.5, &[]);
    println!(
        "\nafter a 0.5 gap at the junction: {} components",
        gapped.value.components.len()
    );
    print!("{}", gapped.value.serialize());
}
