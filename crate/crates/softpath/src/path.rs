//! The soft-path model: components, segments and the name registry.

use crate::geom::{Point, Vec2};
use crate::{Error, Result};
use std::collections::HashMap;

/// One drawn element of a component.  The segment's start point is implicit:
/// it is the end of the preceding segment, or the component start.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Segment {
    Line { to: Point },
    Cubic { c1: Point, c2: Point, to: Point },
}

impl Segment {
    pub fn to(&self) -> Point {
        match *self {
            Segment::Line { to } | Segment::Cubic { to, .. } => to,
        }
    }

    /// Applies `f` to every stored point.
    pub fn map_points(&self, f: &mut impl FnMut(Point) -> Point) -> Segment {
        match *self {
            Segment::Line { to } => Segment::Line { to: f(to) },
            Segment::Cubic { c1, c2, to } => {
                Segment::Cubic { c1: f(c1), c2: f(c2), to: f(to) }
            }
        }
    }
}

/// A [`Segment`] paired with its start point, so it can be evaluated on its
/// own.  The curve parameter `t` runs over `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlacedSegment {
    pub start: Point,
    pub segment: Segment,
}

impl PlacedSegment {
    pub fn new(start: Point, segment: Segment) -> Self {
        PlacedSegment { start, segment }
    }

    pub fn line(from: Point, to: Point) -> Self {
        PlacedSegment { start: from, segment: Segment::Line { to } }
    }

    pub fn end(&self) -> Point {
        self.segment.to()
    }

    pub fn eval(&self, t: f64) -> Point {
        match self.segment {
            Segment::Line { to } => self.start.lerp(to, t),
            Segment::Cubic { c1, c2, to } => {
                // de Casteljau; the same pyramid that split() walks.
                let p01 = self.start.lerp(c1, t);
                let p12 = c1.lerp(c2, t);
                let p23 = c2.lerp(to, t);
                p01.lerp(p12, t).lerp(p12.lerp(p23, t), t)
            }
        }
    }

    /// Derivative with respect to the local parameter.  For a line this is
    /// the chord; for a cubic, the usual degree-2 Bézier derivative.
    pub fn deriv(&self, t: f64) -> Vec2 {
        match self.segment {
            Segment::Line { to } => to - self.start,
            Segment::Cubic { c1, c2, to } => {
                let u = 1.0 - t;
                ((c1 - self.start) * (u * u) + (c2 - c1) * (2.0 * u * t) + (to - c2) * (t * t))
                    * 3.0
            }
        }
    }

    /// Splits at local `t`, returning the two halves.  Both halves trace the
    /// same points as the original (up to floating-point noise).
    pub fn split(&self, t: f64) -> (PlacedSegment, PlacedSegment) {
        match self.segment {
            Segment::Line { to } => {
                let mid = self.start.lerp(to, t);
                (PlacedSegment::line(self.start, mid), PlacedSegment::line(mid, to))
            }
            Segment::Cubic { c1, c2, to } => {
                let p01 = self.start.lerp(c1, t);
                let p12 = c1.lerp(c2, t);
                let p23 = c2.lerp(to, t);
                let p012 = p01.lerp(p12, t);
                let p123 = p12.lerp(p23, t);
                let mid = p012.lerp(p123, t);
                (
                    PlacedSegment::new(
                        self.start,
                        Segment::Cubic { c1: p01, c2: p012, to: mid },
                    ),
                    PlacedSegment::new(mid, Segment::Cubic { c1: p123, c2: p23, to }),
                )
            }
        }
    }

    pub fn reversed(&self) -> PlacedSegment {
        match self.segment {
            Segment::Line { to } => PlacedSegment::line(to, self.start),
            Segment::Cubic { c1, c2, to } => PlacedSegment::new(
                to,
                Segment::Cubic { c1: c2, c2: c1, to: self.start },
            ),
        }
    }

    /// Axis-aligned bounding box of the control points (which contains the
    /// curve itself).
    pub fn control_bbox(&self) -> (Point, Point) {
        let mut lo = self.start;
        let mut hi = self.start;
        let mut take = |p: Point| {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        };
        match self.segment {
            Segment::Line { to } => take(to),
            Segment::Cubic { c1, c2, to } => {
                take(c1);
                take(c2);
                take(to);
            }
        }
        (lo, hi)
    }

    /// True when every control point coincides, so the segment draws nothing.
    pub fn is_point(&self) -> bool {
        let (lo, hi) = self.control_bbox();
        (hi - lo).norm() <= 1e-12
    }

    /// Direction of travel at the start, falling back through lower-order
    /// differences when the derivative degenerates; `None` for a pure point.
    pub fn start_direction(&self) -> Option<Vec2> {
        let candidates = match self.segment {
            Segment::Line { to } => [to - self.start, Vec2::default(), Vec2::default()],
            Segment::Cubic { c1, c2, to } => {
                [(c1 - self.start) * 3.0, (c2 - self.start) * 1.5, to - self.start]
            }
        };
        candidates.into_iter().find(|v| v.norm() > 1e-12)
    }

    /// Direction of travel at the end, mirroring [`Self::start_direction`].
    pub fn end_direction(&self) -> Option<Vec2> {
        let candidates = match self.segment {
            Segment::Line { to } => [to - self.start, Vec2::default(), Vec2::default()],
            Segment::Cubic { c1, c2, to } => {
                [(to - c2) * 3.0, (to - c1) * 1.5, to - self.start]
            }
        };
        candidates.into_iter().find(|v| v.norm() > 1e-12)
    }
}

/// One pen stroke: a start point, the segments drawn from it, and whether
/// the stroke closes back to its start.
///
/// A closed component does *not* store its closing edge; the straight line
/// from the last segment's end back to `start` is implied, exactly as a
/// `closepath` leaves it.  A component with no segments is a bare move — it
/// marks a point.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub start: Point,
    pub segments: Vec<Segment>,
    pub closed: bool,
}

impl Component {
    pub fn new(start: Point) -> Self {
        Component { start, segments: Vec::new(), closed: false }
    }

    pub fn from_segments(start: Point, segments: Vec<Segment>) -> Self {
        Component { start, segments, closed: false }
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// End of the stored segment list (ignoring any implied closing edge).
    pub fn stored_end(&self) -> Point {
        self.segments.last().map_or(self.start, Segment::to)
    }

    /// Where the pen rests after drawing this component: the last segment's
    /// end, or the start again if the component is closed.
    pub fn end_point(&self) -> Point {
        if self.closed {
            self.start
        } else {
            self.stored_end()
        }
    }

    /// The stored segments with their start points filled in.
    pub fn placed(&self) -> impl Iterator<Item = PlacedSegment> + '_ {
        let mut cursor = self.start;
        self.segments.iter().map(move |seg| {
            let placed = PlacedSegment::new(cursor, *seg);
            cursor = seg.to();
            placed
        })
    }

    /// Every segment that contributes to the trace and the parametrisation:
    /// the stored ones plus, for a closed component, the implied closing
    /// line back to the start.
    pub fn countable_segments(&self) -> Vec<PlacedSegment> {
        let mut out: Vec<_> = self.placed().collect();
        if self.closed {
            out.push(PlacedSegment::line(self.stored_end(), self.start));
        }
        out
    }

    /// Number of countable segments (see [`Self::countable_segments`]).
    pub fn segment_count(&self) -> usize {
        self.segments.len() + usize::from(self.closed)
    }

    pub fn map_points(&self, f: &mut impl FnMut(Point) -> Point) -> Component {
        Component {
            start: f(self.start),
            segments: self.segments.iter().map(|s| s.map_points(f)).collect(),
            closed: self.closed,
        }
    }
}

/// An ordered list of [`Component`]s.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SoftPath {
    pub components: Vec<Component>,
}

impl SoftPath {
    pub fn new() -> Self {
        SoftPath::default()
    }

    pub fn from_components(components: Vec<Component>) -> Self {
        SoftPath { components }
    }

    /// True when the path has no components at all.  (A path holding an
    /// empty component is not empty: it marks a point.)
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn start_point(&self) -> Option<Point> {
        self.components.first().map(|c| c.start)
    }

    /// The pen position after the final component.
    pub fn end_point(&self) -> Option<Point> {
        self.components.last().map(Component::end_point)
    }

    /// Total countable segments across all components.
    pub fn segment_count(&self) -> usize {
        self.components.iter().map(Component::segment_count).sum()
    }

    /// Each component as a standalone single-component path, in order.
    /// Concatenating the results reproduces the original path.
    pub fn get_components(&self) -> Vec<SoftPath> {
        self.components
            .iter()
            .map(|c| SoftPath::from_components(vec![c.clone()]))
            .collect()
    }

    /// Drops components that consist of a bare move.
    pub fn remove_empty(&self) -> SoftPath {
        SoftPath::from_components(
            self.components.iter().filter(|c| !c.is_empty()).cloned().collect(),
        )
    }

    /// Renders the path in the plain-text dump format: one element per line,
    /// `M x y` / `L x y` / `C x1 y1 x2 y2 x y` / `Z`, numbers printed with
    /// at most six decimals.  The empty path serializes to the empty string.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for comp in &self.components {
            out.push_str(&format!("M {} {}\n", fmt_num(comp.start.x), fmt_num(comp.start.y)));
            for seg in &comp.segments {
                match *seg {
                    Segment::Line { to } => {
                        out.push_str(&format!("L {} {}\n", fmt_num(to.x), fmt_num(to.y)));
                    }
                    Segment::Cubic { c1, c2, to } => {
                        out.push_str(&format!(
                            "C {} {} {} {} {} {}\n",
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
                out.push_str("Z\n");
            }
        }
        out
    }

    /// Countable segments across the path with their component index and
    /// 1-based global segment index, in order.
    pub(crate) fn indexed_segments(&self) -> Vec<IndexedSegment> {
        let mut out = Vec::new();
        let mut global = 0;
        for (comp_index, comp) in self.components.iter().enumerate() {
            for (seg_index, placed) in comp.countable_segments().into_iter().enumerate() {
                global += 1;
                out.push(IndexedSegment {
                    global,
                    comp: comp_index,
                    seg_in_comp: seg_index,
                    placed,
                });
            }
        }
        out
    }
}

/// A countable segment located within a path.
#[derive(Debug, Clone, Copy)]
pub(crate) struct IndexedSegment {
    /// 1-based index over the whole path, counting implied closing edges.
    pub global: usize,
    /// 0-based component index.
    pub comp: usize,
    /// 0-based position among the component's countable segments.
    pub seg_in_comp: usize,
    pub placed: PlacedSegment,
}

/// A named collection of paths.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    entries: HashMap<String, SoftPath>,
}

impl Registry {
    pub fn new() -> Self {
        Registry::default()
    }

    /// Stores `path` under `name`, replacing any previous entry.
    pub fn store(&mut self, name: impl Into<String>, path: SoftPath) {
        self.entries.insert(name.into(), path);
    }

    pub fn lookup(&self, name: &str) -> Result<&SoftPath> {
        self.entries.get(name).ok_or_else(|| Error::UnknownPath(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.contains_key(name)
    }

    /// Copies the path under `source` to `target`.  The copy is
    /// independent: later edits to either do not affect the other.
    pub fn clone_entry(&mut self, target: impl Into<String>, source: &str) -> Result<()> {
        let path = self.lookup(source)?.clone();
        self.store(target, path);
        Ok(())
    }

    pub fn remove(&mut self, name: &str) -> Option<SoftPath> {
        self.entries.remove(name)
    }

    /// Entry names in lexicographic order.
    pub fn names(&self) -> Vec<&str> {
        let mut names: Vec<_> = self.entries.keys().map(String::as_str).collect();
        names.sort_unstable();
        names
    }
}

/// Formats a coordinate with at most six decimals, trailing zeros trimmed
/// and negative zero normalised.
pub(crate) fn fmt_num(x: f64) -> String {
    let mut s = format!("{x:.6}");
    s.truncate(s.trim_end_matches('0').trim_end_matches('.').len());
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn number_formatting_is_compact() {
        assert_eq!(fmt_num(1.0), "1");
        assert_eq!(fmt_num(2.5), "2.5");
        assert_eq!(fmt_num(0.552284749), "0.552285");
        assert_eq!(fmt_num(-0.0000001), "0");
        assert_eq!(fmt_num(-0.0), "0");
        assert_eq!(fmt_num(-3.25), "-3.25");
        assert_eq!(fmt_num(120000.0), "120000");
    }

    #[test]
    fn serialize_one_element_per_line() {
        let path = SoftPath::from_components(vec![Component {
            start: pt(0.0, 0.0),
            segments: vec![Segment::Line { to: pt(1.0, 0.0) }],
            closed: false,
        }]);
        assert_eq!(path.serialize(), "M 0 0\nL 1 0\n");

        let closed = SoftPath::from_components(vec![Component {
            start: pt(0.0, 0.0),
            segments: vec![
                Segment::Line { to: pt(1.0, 0.0) },
                Segment::Cubic { c1: pt(1.5, 0.5), c2: pt(1.5, 1.5), to: pt(1.0, 2.0) },
            ],
            closed: true,
        }]);
        assert_eq!(closed.serialize(), "M 0 0\nL 1 0\nC 1.5 0.5 1.5 1.5 1 2\nZ\n");

        assert_eq!(SoftPath::new().serialize(), "");
    }

    #[test]
    fn closed_components_count_their_closing_edge() {
        let mut comp = Component::from_segments(
            pt(0.0, 0.0),
            vec![Segment::Line { to: pt(1.0, 0.0) }, Segment::Line { to: pt(1.0, 1.0) }],
        );
        assert_eq!(comp.segment_count(), 2);
        assert_eq!(comp.end_point(), pt(1.0, 1.0));

        comp.closed = true;
        assert_eq!(comp.segment_count(), 3);
        assert_eq!(comp.end_point(), pt(0.0, 0.0), "a closed stroke parks the pen at its start");
        let closing = comp.countable_segments()[2];
        assert_eq!(closing, PlacedSegment::line(pt(1.0, 1.0), pt(0.0, 0.0)));
    }

    #[test]
    fn split_halves_meet_at_the_split_point() {
        let seg = PlacedSegment::new(
            pt(0.0, 0.0),
            Segment::Cubic { c1: pt(1.0, 2.0), c2: pt(3.0, -1.0), to: pt(4.0, 1.0) },
        );
        let (a, b) = seg.split(0.3);
        assert_eq!(a.end(), b.start);
        assert!(a.end().distance(seg.eval(0.3)) < 1e-12);
        assert!(a.eval(1.0).distance(seg.eval(0.3)) < 1e-12);
        // The halves re-trace the original curve.
        for i in 0..=20 {
            let t = i as f64 / 20.0;
            assert!(a.eval(t).distance(seg.eval(0.3 * t)) < 1e-12);
            assert!(b.eval(t).distance(seg.eval(0.3 + 0.7 * t)) < 1e-12);
        }
    }

    #[test]
    fn direction_fallbacks_survive_degenerate_controls() {
        let cusp = PlacedSegment::new(
            pt(0.0, 0.0),
            Segment::Cubic { c1: pt(0.0, 0.0), c2: pt(1.0, 1.0), to: pt(2.0, 0.0) },
        );
        let d = cusp.start_direction().unwrap();
        assert!(d.dx > 0.0 && d.dy > 0.0, "falls back to the second control");

        let point = PlacedSegment::new(
            pt(1.0, 1.0),
            Segment::Cubic { c1: pt(1.0, 1.0), c2: pt(1.0, 1.0), to: pt(1.0, 1.0) },
        );
        assert!(point.start_direction().is_none());
        assert!(point.is_point());
    }

    #[test]
    fn components_split_out_and_concatenate_back() {
        let path = SoftPath::from_components(vec![
            Component::new(pt(5.0, 5.0)),
            Component::from_segments(pt(0.0, 0.0), vec![Segment::Line { to: pt(1.0, 1.0) }]),
        ]);
        let parts = path.get_components();
        assert_eq!(parts.len(), 2);
        let glued = SoftPath::from_components(
            parts.iter().flat_map(|p| p.components.clone()).collect(),
        );
        assert_eq!(glued, path);

        assert_eq!(path.remove_empty().components.len(), 1);
    }

    #[test]
    fn registry_round_trips_and_isolates_clones() {
        let mut reg = Registry::new();
        let path = SoftPath::from_components(vec![Component::from_segments(
            pt(0.0, 0.0),
            vec![Segment::Line { to: pt(2.0, 0.0) }],
        )]);
        reg.store("a", path.clone());
        assert_eq!(reg.lookup("a").unwrap(), &path);
        assert!(matches!(reg.lookup("missing"), Err(Error::UnknownPath(_))));

        reg.clone_entry("b", "a").unwrap();
        reg.store("a", SoftPath::new());
        assert_eq!(reg.lookup("b").unwrap(), &path, "clone is unaffected by overwriting");
        assert_eq!(reg.names(), vec!["a", "b"]);
    }
}
