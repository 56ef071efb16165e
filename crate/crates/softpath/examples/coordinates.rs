//! Read points, tangents and local frames off a path by parameter.
//!
//! The parameter `t` runs 0..1 over the whole path, one equal share per
//! countable segment, so t = 0.5 on a two-segment path is the joint.

use softpath::parse_path;

fn main() {
    let p = parse_path("M 0 0 C 1 2 3 2 4 0 L 8 0").unwrap();

    for t in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let loc = p.locate(t).unwrap();
        println!(
            "t = {t:.2}: segment {} at {:.2}, point ({:.3}, {:.3}), tangent ({:.3}, {:.3})",
            loc.segment_index, loc.local_t, loc.point.x, loc.point.y, loc.tangent.dx, loc.tangent.dy
        );
    }

    // A frame carries the position plus the tangent direction as an angle;
    // upright frames keep text readable by flipping upside-down tangents.
    let frame = p.frame_at(0.1, false).unwrap();
    println!(
        "\nframe at t = 0.1: origin ({:.3}, {:.3}), angle {:.1} deg",
        frame.origin.x,
        frame.origin.y,
        frame.angle_rad.to_degrees()
    );
    let back = p.reverse().frame_at(0.9, false).unwrap();
    let up = p.reverse().frame_at(0.9, true).unwrap();
    println!(
        "same spot on the reversed path: {:.1} deg, upright {:.1} deg",
        back.angle_rad.to_degrees(),
        up.angle_rad.to_degrees()
    );
}
