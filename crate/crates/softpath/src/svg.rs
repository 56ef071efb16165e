//! SVG document emission with per-component class hooks.
//!
//! Every component becomes its own `<path>` element so stylesheets can
//! address strands individually — essential for knot diagrams where each
//! strand wants its own look.  The model's y axis grows upward while SVG's
//! grows downward, so the whole document is wrapped in a flipping group.

use std::collections::BTreeMap;

use crate::path::{fmt_num, Component, SoftPath};

/// Presentation hooks for one named path: extra class names for its
/// components plus inline attributes for its group element.
#[derive(Debug, Clone, Default)]
pub struct SvgStyle {
    /// Appended to each component's class list (sanitised to NCNames).
    pub class_names: Vec<String>,
    /// Inline attributes on the path's `<g>` (`stroke`, `stroke-width`, …).
    pub attrs: BTreeMap<String, String>,
}

impl SvgStyle {
    pub fn new() -> SvgStyle {
        SvgStyle::default()
    }

    pub fn with_attr(mut self, key: &str, value: &str) -> SvgStyle {
        self.attrs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_class(mut self, name: &str) -> SvgStyle {
        self.class_names.push(name.to_string());
        self
    }
}

/// Forces a string into XML NCName shape: offending characters become `-`
/// and a leading non-letter gains a `_` prefix.
fn ncname(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len());
    for ch in raw.chars() {
        if ch.is_alphanumeric() || ch == '_' || ch == '-' || ch == '.' {
            out.push(ch);
        } else {
            out.push('-');
        }
    }
    if out.is_empty() {
        return "_".to_string();
    }
    let first = out.chars().next().unwrap();
    if !(first.is_alphabetic() || first == '_') {
        out.insert(0, '_');
    }
    out
}

fn escape(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len());
    for ch in raw.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(ch),
        }
    }
    out
}

/// One component's d attribute: the dump format with commands joined by
/// spaces (`M x y`, `L x y`, `C x1 y1 x2 y2 x y`, trailing `Z` if closed).
fn component_d(comp: &Component) -> String {
    let mut parts = vec![format!("M {} {}", fmt_num(comp.start.x), fmt_num(comp.start.y))];
    for placed in comp.placed() {
        let seg = placed.segment;
        match seg {
            crate::path::Segment::Line { to } => {
                parts.push(format!("L {} {}", fmt_num(to.x), fmt_num(to.y)));
            }
            crate::path::Segment::Cubic { c1, c2, to } => {
                parts.push(format!(
                    "C {} {} {} {} {} {}",
                    fmt_num(c1.x),
                    fmt_num(c1.y),
                    fmt_num(c2.x),
                    fmt_num(c2.y),
                    fmt_num(to.x),
                    fmt_num(to.y)
                ));
            }
        }
    }
    if comp.closed {
        parts.push("Z".to_string());
    }
    parts.join(" ")
}

/// Bounding box of all control points in page (y-flipped) coordinates,
/// padded by 5% of the larger dimension.  Conservative: control polygons
/// always contain their curves.
fn view_box(entries: &[(&str, &SoftPath, &SvgStyle)]) -> String {
    let mut min_x = f64::INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    let mut seen = false;
    let mut take = |x: f64, y: f64| {
        // Page coordinates: the flip group negates y.
        let y = -y;
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
        seen = true;
    };
    for (_, path, _) in entries {
        for comp in &path.components {
            take(comp.start.x, comp.start.y);
            for placed in comp.placed() {
                match placed.segment {
                    crate::path::Segment::Line { to } => take(to.x, to.y),
                    crate::path::Segment::Cubic { c1, c2, to } => {
                        take(c1.x, c1.y);
                        take(c2.x, c2.y);
                        take(to.x, to.y);
                    }
                }
            }
        }
    }
    if !seen {
        return "0 0 1 1".to_string();
    }
    let w = max_x - min_x;
    let h = max_y - min_y;
    let mut pad = 0.05 * w.max(h);
    if pad <= 0.0 {
        pad = 0.5;
    }
    format!(
        "{} {} {} {}",
        fmt_num(min_x - pad),
        fmt_num(min_y - pad),
        fmt_num(w + 2.0 * pad),
        fmt_num(h + 2.0 * pad)
    )
}

/// Renders the named paths as a complete SVG document.  Component `i` of
/// path `name` carries the classes `every-spath-component`,
/// `spath-component-i`, `every-name-component` and `name-component-i`, in
/// that cascade order, plus any extra classes from the style.
pub fn to_svg(entries: &[(&str, &SoftPath, &SvgStyle)]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{}\">\n",
        view_box(entries)
    ));
    out.push_str("  <g transform=\"scale(1 -1)\" fill=\"none\" stroke=\"black\">\n");
    for (name, path, style) in entries {
        let safe = ncname(name);
        let mut open = format!("    <g id=\"{}\"", escape(&safe));
        for (key, value) in &style.attrs {
            open.push_str(&format!(" {}=\"{}\"", escape(key), escape(value)));
        }
        open.push_str(">\n");
        out.push_str(&open);
        for (i, comp) in path.components.iter().enumerate() {
            let n = i + 1;
            let mut classes = format!(
                "every-spath-component spath-component-{n} every-{safe}-component {safe}-component-{n}"
            );
            for extra in &style.class_names {
                classes.push(' ');
                classes.push_str(&ncname(extra));
            }
            out.push_str(&format!(
                "      <path class=\"{}\" d=\"{}\"/>\n",
                escape(&classes),
                escape(&component_d(comp))
            ));
        }
        out.push_str("    </g>\n");
    }
    out.push_str("  </g>\n");
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_path;

    fn d_attributes(svg: &str) -> Vec<String> {
        let mut out = Vec::new();
        for chunk in svg.split(" d=\"").skip(1) {
            out.push(chunk[..chunk.find('"').unwrap()].to_string());
        }
        out
    }

    #[test]
    fn components_get_the_cascade_classes() {
        let p = parse_path("M 0 0 L 1 0 M 2 0 L 3 0").unwrap();
        let style = SvgStyle::new();
        let svg = to_svg(&[("wires", &p, &style)]);
        assert!(svg.contains("id=\"wires\""));
        assert!(svg.contains(
            "every-spath-component spath-component-1 every-wires-component wires-component-1"
        ));
        assert!(svg.contains(
            "every-spath-component spath-component-2 every-wires-component wires-component-2"
        ));
        assert_eq!(svg.matches("<path ").count(), 2);
    }

    #[test]
    fn page_group_flips_the_y_axis() {
        let p = parse_path("M 0 0 L 1 1").unwrap();
        let svg = to_svg(&[("a", &p, &SvgStyle::new())]);
        assert!(svg.contains("transform=\"scale(1 -1)\""));
    }

    #[test]
    fn view_box_pads_the_control_bounds() {
        let p = parse_path("M 0 0 L 10 0 L 10 10 L 0 10 Z").unwrap();
        let svg = to_svg(&[("sq", &p, &SvgStyle::new())]);
        assert!(svg.contains("viewBox=\"-0.5 -10.5 11 11\""));

        let empty = to_svg(&[]);
        assert!(empty.contains("viewBox=\"0 0 1 1\""));

        // A single point cannot produce a zero-size view box.
        let dot = parse_path("M 3 4").unwrap();
        let svg = to_svg(&[("dot", &dot, &SvgStyle::new())]);
        assert!(svg.contains("viewBox=\"2.5 -4.5 1 1\""));
    }

    #[test]
    fn d_attributes_reparse_to_the_same_paths() {
        let p = parse_path("M 0 0 C 1 2 3 2 4 0 L 6 1 M 7 0 L 8 1 L 7 2 Z").unwrap();
        let svg = to_svg(&[("p", &p, &SvgStyle::new())]);
        let ds = d_attributes(&svg);
        assert_eq!(ds.len(), p.components.len());
        for (d, comp) in ds.iter().zip(&p.components) {
            let again = parse_path(d).unwrap();
            assert_eq!(again.components.len(), 1);
            assert_eq!(&again.components[0], comp);
        }
    }

    #[test]
    fn style_attributes_and_classes_are_emitted() {
        let p = parse_path("M 0 0 L 1 0").unwrap();
        let style = SvgStyle::new()
            .with_attr("stroke", "red")
            .with_attr("stroke-width", "0.4")
            .with_class("thick line");
        let svg = to_svg(&[("a", &p, &style)]);
        assert!(svg.contains(" stroke=\"red\""));
        assert!(svg.contains(" stroke-width=\"0.4\""));
        assert!(svg.contains("a-component-1 thick-line\""));
    }

    #[test]
    fn names_are_forced_into_ncname_shape() {
        let p = parse_path("M 0 0 L 1 0").unwrap();
        let svg = to_svg(&[("2 bad name!", &p, &SvgStyle::new())]);
        assert!(svg.contains("id=\"_2-bad-name-\""));
        assert!(svg.contains("every-_2-bad-name--component"));
    }

    #[test]
    fn attribute_values_are_escaped() {
        let p = parse_path("M 0 0 L 1 0").unwrap();
        let style = SvgStyle::new().with_attr("data-note", "a<b & \"c\">");
        let svg = to_svg(&[("a", &p, &style)]);
        assert!(svg.contains("data-note=\"a&lt;b &amp; &quot;c&quot;&gt;\""));
    }
}
