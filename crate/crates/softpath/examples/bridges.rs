//! Carry one wire across another: cut, gap, then bridge with an arc.

use softpath::parse_path;

fn main() {
    let over = parse_path("M -1 0 L 13 0").unwrap();
    let wave = parse_path(
        "M 0 3 C 1 3 2 -3 3 -3 C 4 -3 5 3 6 3 \
         C 7 3 8 -3 9 -3 C 10 -3 11 3 12 3",
    )
    .unwrap();
    // Half circle used as the bridge shape; it gets scaled to each gap.
    let arc = parse_path("M 0 0 C 0 0.55 0.45 1 1 1 C 1.55 1 2 0.55 2 0").unwrap();

    let (over, wave) = over.split_both(&wave);
    println!(
        "after splitting: over {} components, wave {}",
        over.components.len(),
        wave.components.len()
    );

    let over = over.insert_gaps_components(1.2, &[]).value;
    let bridged = over.join_with(&arc, &[], true).unwrap();
    assert!(bridged.warnings.is_empty());
    let bridged = bridged.value;
    println!("after bridging: over {} component(s)", bridged.components.len());

    // With upright, every bump faces the same side regardless of travel
    // direction.  Segments run line, arc-pair, line, ...; each arc pair's
    // shared node is a bridge apex.
    let n = bridged.segment_count() as f64;
    for g in [2.0, 5.0, 8.0, 11.0] {
        let apex = bridged.locate(g / n).unwrap();
        println!("bridge apex at ({:.3}, {:.3})", apex.point.x, apex.point.y);
    }
}
