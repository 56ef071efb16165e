//! Build single cubics that leave and arrive along prescribed directions.

use softpath::hobby::hobby_segment;
use softpath::{parse_path, CloseMode, Point, Segment, Vec2};

fn main() {
    // A quarter circle: leave (1, 0) heading up, arrive at (0, 1) heading
    // left.  One cubic matches both directions.
    let seg = hobby_segment(
        Point::new(1.0, 0.0),
        Vec2::new(0.0, 1.0),
        Point::new(0.0, 1.0),
        Vec2::new(-1.0, 0.0),
    )
    .unwrap();
    assert!(seg.warnings.is_empty());
    if let Segment::Cubic { c1, c2, to } = seg.value {
        println!("quarter turn: c1 ({:.4}, {:.4}), c2 ({:.4}, {:.4}), to ({}, {})", c1.x, c1.y, c2.x, c2.y, to.x, to.y);
    }

    // The same construction closes a gap between two components...
    let c = parse_path("M 0 0 L 4 0 M 6 2 L 10 2").unwrap();
    let joined = c.join_with_curve(&[]);
    assert!(joined.warnings.is_empty());
    print!("\njoined across the gap:\n{}", joined.value.serialize());

    // ...or bridges a component's end back to its start before closing.
    let hook = parse_path("M 0 0 L 6 0 L 6 4").unwrap();
    let closed = hook.close(CloseMode::WithCurve).unwrap();
    assert!(closed.warnings.is_empty());
    print!("\nclosed with a curve:\n{}", closed.value.serialize());
}
