//! Render a closed curve as a knot diagram: gaps mark the under-strand at
//! each chosen crossing, and welding fuses the rest back together.

use std::f64::consts::TAU;

use softpath::svg::{to_svg, SvgStyle};
use softpath::{Component, Point, Segment, SoftPath, Vec2};

/// Closed trefoil built from twelve direction-matched cubics.
fn trefoil() -> SoftPath {
    let n = 12;
    let at = |i: usize| {
        let th = TAU * (i % n) as f64 / n as f64;
        let p = Point::new(
            15.0 * (th.sin() + 2.0 * (2.0 * th).sin()),
            15.0 * (th.cos() - 2.0 * (2.0 * th).cos()),
        );
        let d = Vec2::new(
            15.0 * (th.cos() + 4.0 * (2.0 * th).cos()),
            15.0 * (-th.sin() + 4.0 * (2.0 * th).sin()),
        );
        (p, d)
    };
    let h = TAU / n as f64;
    let mut segments = Vec::new();
    for i in 0..n {
        let (p0, d0) = at(i);
        let (p1, d1) = at(i + 1);
        segments.push(Segment::Cubic {
            c1: p0 + d0 * (h / 3.0),
            c2: p1 - d1 * (h / 3.0),
            to: p1,
        });
    }
    let mut comp = Component::from_segments(at(0).0, segments);
    comp.closed = true;
    SoftPath::from_components(vec![comp])
}

fn main() {
    let curve = trefoil();
    println!("self-crossings: {}", curve.self_intersections().len());

    // Alternate which strand dives under: gaps at crossings 1, 3 and 5.
    let strands = curve.knot(8.0, &[1, 3, 5], false);
    assert!(strands.warnings.is_empty());
    println!("strands in the diagram: {}", strands.value.len());

    // Draft mode skips the weld so every arc stays separate.
    let draft = curve.knot(8.0, &[1, 3, 5], true).value;
    println!("draft arcs: {}", draft.len());

    let style = SvgStyle::new().with_attr("stroke-width", "2");
    let entries: Vec<(String, SoftPath)> = strands
        .value
        .into_iter()
        .enumerate()
        .map(|(i, s)| (format!("strand{}", i + 1), s))
        .collect();
    let borrowed: Vec<(&str, &SoftPath, &SvgStyle)> =
        entries.iter().map(|(n, s)| (n.as_str(), s, &style)).collect();
    let svg = to_svg(&borrowed);

    let out = std::env::temp_dir().join("softpath-knot.svg");
    std::fs::write(&out, svg).unwrap();
    println!("wrote {}", out.display());
}
