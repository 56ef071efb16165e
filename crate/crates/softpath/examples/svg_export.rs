//! Render named paths into a styled SVG document.

use softpath::svg::{to_svg, SvgStyle};
use softpath::parse_path;

fn main() {
    let grid = parse_path("M 0 0 L 8 0 M 0 2 L 8 2 M 0 4 L 8 4").unwrap();
    let wave = parse_path("M 0 0 C 2 6 6 -2 8 4").unwrap();

    let thin = SvgStyle::new().with_attr("stroke", "gray").with_attr("stroke-width", "0.05");
    let bold = SvgStyle::new()
        .with_attr("stroke", "crimson")
        .with_attr("stroke-width", "0.2")
        .with_class("feature");

    let svg = to_svg(&[("grid", &grid, &thin), ("wave", &wave, &bold)]);

    // Component i of path NAME carries the classes every-spath-component,
    // spath-component-i, every-NAME-component and NAME-component-i, so a
    // stylesheet can address any single stroke.
    assert!(svg.contains("grid-component-2"));
    assert!(svg.contains("every-wave-component"));
    print!("{svg}");
}
