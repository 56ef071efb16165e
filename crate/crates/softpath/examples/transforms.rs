//! Shift, rotate and scale paths, composing transforms before applying.

use std::f64::consts::FRAC_PI_2;

use softpath::{parse_path, parse_transform, Transform2D, Vec2};

fn main() {
    let p = parse_path("M 0 0 L 4 0 C 5 0 6 1 6 2").unwrap();

    println!("shifted by (10, -2):");
    print!("{}", p.translate(Vec2::new(10.0, -2.0)).serialize());

    // Rotate a quarter turn about the origin, then move right.
    let m = Transform2D::rotation(FRAC_PI_2).then(&Transform2D::translation(8.0, 0.0));
    println!("\nrotated then shifted:");
    print!("{}", p.transform(&m).serialize());

    // The same pipeline written as text; leftmost item applies first.
    let text = parse_transform("rotate(90) shift(8,0)").unwrap();
    let a = p.transform(&m);
    let b = p.transform(&text);
    let close = a
        .components
        .iter()
        .zip(&b.components)
        .all(|(ca, cb)| ca.start.distance(cb.start) < 1e-12);
    println!("\ntext form matches the composed form: {close}");

    println!("\nreversed:");
    print!("{}", p.reverse().serialize());
}
