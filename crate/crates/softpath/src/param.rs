//! One parameter for a whole path: locating points, cutting, trimming.
//!
//! A path with `n` countable segments (closed components contribute their
//! implied closing edge) is parametrised by `t ∈ [0, 1]`, the k-th segment
//! owning the interval `[(k-1)/n, k/n]`.  A boundary value `t = k/n`
//! belongs to the earlier segment, with local parameter 1.

use crate::geom::{Point, Vec2};
use crate::path::{Component, PlacedSegment, SoftPath};
use crate::{Error, Result, Warned};
use std::collections::BTreeMap;

/// Cut positions this close to a node snap onto it, so splits at segment
/// boundaries break cleanly instead of leaving slivers.
const NODE_SNAP: f64 = 1e-9;

/// Where `t` lands on a path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathLocation {
    /// 1-based index of the containing component.
    pub component_index: usize,
    /// 1-based countable segment index over the whole path.
    pub segment_index: usize,
    /// Parameter within that segment, in `[0, 1]`.
    pub local_t: f64,
    pub point: Point,
    /// Unnormalised derivative at the location (with degenerate-derivative
    /// fallbacks; zero only on a pure point segment).
    pub tangent: Vec2,
}

/// A local coordinate frame on a path: an origin and a rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub origin: Point,
    pub angle_rad: f64,
}

/// Which part of the path [`SoftPath::keep`] retains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KeepMode {
    /// Everything up to `t`.
    Start(f64),
    /// Everything from `t` on.
    End(f64),
    /// The stretch between the two parameters.
    Middle(f64, f64),
}

/// Which end of the path an operation works on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathEnd {
    Start,
    End,
    Both,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct RawLocation {
    /// 0-based component index.
    pub comp: usize,
    /// 0-based countable segment index within the component.
    pub seg_in_comp: usize,
    pub local: f64,
    /// 1-based countable segment index over the path.
    pub global_seg: usize,
    pub placed: PlacedSegment,
}

impl RawLocation {
    /// Continuous position within the component: segment index plus local
    /// parameter.
    pub fn comp_position(&self) -> f64 {
        self.seg_in_comp as f64 + self.local
    }
}

impl SoftPath {
    pub(crate) fn locate_raw(&self, t: f64) -> Result<RawLocation> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::ParameterOutOfRange(t));
        }
        let segs = self.indexed_segments();
        let n = segs.len();
        if n == 0 {
            return Err(Error::EmptyPath);
        }
        let s = t * n as f64;
        let k = (s.ceil() as usize).clamp(1, n);
        let local = (s - (k - 1) as f64).clamp(0.0, 1.0);
        let seg = segs[k - 1];
        Ok(RawLocation {
            comp: seg.comp,
            seg_in_comp: seg.seg_in_comp,
            local,
            global_seg: k,
            placed: seg.placed,
        })
    }

    /// Resolves `t` to a point, its tangent and the indices around it.
    pub fn locate(&self, t: f64) -> Result<PathLocation> {
        let raw = self.locate_raw(t)?;
        Ok(PathLocation {
            component_index: raw.comp + 1,
            segment_index: raw.global_seg,
            local_t: raw.local,
            point: raw.placed.eval(raw.local),
            tangent: tangent_at(&raw.placed, raw.local),
        })
    }

    /// The frame whose origin sits at `t` and whose x-axis follows the
    /// tangent.  With `upright`, the frame is spun by π when that leaves its
    /// y-axis pointing down the page (strictly negative page-up component;
    /// a vertical tangent is left alone).
    pub fn frame_at(&self, t: f64, upright: bool) -> Result<Frame> {
        let loc = self.locate(t)?;
        let mut angle = loc.tangent.angle();
        // The frame's y-axis is (-sin θ, cos θ): page-up component cos θ,
        // which has the sign of the tangent's x-component.
        if upright && loc.tangent.dx < 0.0 {
            angle += std::f64::consts::PI;
            if angle > std::f64::consts::PI {
                angle -= std::f64::consts::TAU;
            }
        }
        Ok(Frame { origin: loc.point, angle_rad: angle })
    }

    /// Subdivides the path at `t`, inserting a component break there.  Open
    /// components split in two; a closed component is opened: its closing
    /// edge becomes an explicit line and the component is rotated so the
    /// break is its start (and end).
    pub fn split_at(&self, t: f64) -> Result<SoftPath> {
        let groups = self.carve_at_params(&[t])?;
        Ok(SoftPath::from_components(groups.into_iter().flatten().collect()))
    }

    /// As [`Self::split_at`], but returns the two sides as separate paths.
    /// When the break falls in a closed component, the opened loop (which
    /// starts at the break) goes to the second path.
    pub fn split_into(&self, t: f64) -> Result<(SoftPath, SoftPath)> {
        let mut groups = self.carve_at_params(&[t])?.into_iter();
        let head = SoftPath::from_components(groups.next().unwrap_or_default());
        let tail = SoftPath::from_components(groups.flatten().collect());
        Ok((head, tail))
    }

    /// Keeps only the selected stretch of the path.
    pub fn keep(&self, mode: KeepMode) -> Result<SoftPath> {
        let groups = match mode {
            KeepMode::Start(t) => self.carve_at_params(&[t])?,
            KeepMode::End(t) => {
                let mut g = self.carve_at_params(&[t])?;
                g.remove(0);
                g
            }
            KeepMode::Middle(t1, t2) => {
                if t1 > t2 {
                    return Err(Error::InvalidRange(t1, t2));
                }
                let mut g = self.carve_at_params(&[t1, t2])?;
                g.remove(0);
                g
            }
        };
        Ok(SoftPath::from_components(groups.into_iter().next().unwrap_or_default()))
    }

    /// Trims the given length from an end of the path (first/last component
    /// only).  The cut parameter comes from the endpoint derivative, so it
    /// is exact on lines and first-order on cubics; trimming beyond a whole
    /// segment carries the remainder inward.  Over-shortening past the
    /// component leaves its start point and warns.
    pub fn shorten(&self, end: PathEnd, length: f64) -> Warned<SoftPath> {
        let mut out = Warned::clean(self.clone());
        if length < 0.0 {
            out.push(format!("cannot shorten by a negative length ({length})"));
            return out;
        }
        if length == 0.0 {
            return out;
        }
        if self.is_empty() {
            out.push("cannot shorten an empty path");
            return out;
        }
        if matches!(end, PathEnd::Start | PathEnd::Both) {
            let comp = &out.value.components[0];
            let trimmed = out.absorb(shorten_component(comp, true, length));
            out.value.components[0] = trimmed;
        }
        if matches!(end, PathEnd::End | PathEnd::Both) {
            let last = out.value.components.len() - 1;
            let comp = &out.value.components[last];
            let trimmed = out.absorb(shorten_component(comp, false, length));
            out.value.components[last] = trimmed;
        }
        out
    }

    /// Splits at every parameter in `ts` at once and returns the groups of
    /// components between consecutive cuts (`ts.len() + 1` groups).
    fn carve_at_params(&self, ts: &[f64]) -> Result<Vec<Vec<Component>>> {
        let mut cuts: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
        let mut sorted = ts.to_vec();
        sorted.sort_by(f64::total_cmp);
        for &t in &sorted {
            let raw = self.locate_raw(t)?;
            cuts.entry(raw.comp).or_default().push(raw.comp_position());
        }
        Ok(carve_groups(self, &cuts))
    }
}

/// Derivative at `t`, falling back to the segment's degenerate-end
/// directions (and finally zero, for a pure point).
fn tangent_at(seg: &PlacedSegment, t: f64) -> Vec2 {
    let d = seg.deriv(t);
    if d.norm() > 1e-12 {
        return d;
    }
    let dir = if t < 0.5 { seg.start_direction() } else { seg.end_direction() };
    dir.unwrap_or_default()
}

/// Splits the components of `path` at the given cut positions and groups
/// the results: a new group starts at every cut.  Cut positions are
/// per-component, in countable-segment coordinates (`segment index + local
/// parameter`), sorted ascending; duplicates yield empty point components.
pub(crate) fn carve_groups(
    path: &SoftPath,
    cuts: &BTreeMap<usize, Vec<f64>>,
) -> Vec<Vec<Component>> {
    let mut groups: Vec<Vec<Component>> = vec![Vec::new()];
    for (ci, comp) in path.components.iter().enumerate() {
        let gs = match cuts.get(&ci) {
            Some(gs) if !gs.is_empty() => gs,
            _ => {
                groups.last_mut().unwrap().push(comp.clone());
                continue;
            }
        };
        let pieces = if comp.closed { cut_closed(comp, gs) } else { cut_open(comp, gs) };
        let mut pieces = pieces.into_iter();
        if !comp.closed {
            // The stretch before the first cut stays in the current group.
            groups.last_mut().unwrap().push(pieces.next().unwrap());
        }
        for piece in pieces {
            groups.push(vec![piece]);
        }
    }
    groups
}

/// Concatenation of [`carve_groups`]: the same path with breaks inserted.
pub(crate) fn carve_concat(path: &SoftPath, cuts: &BTreeMap<usize, Vec<f64>>) -> SoftPath {
    SoftPath::from_components(carve_groups(path, cuts).into_iter().flatten().collect())
}

fn snap(g: f64, limit: f64) -> f64 {
    let rounded = g.round();
    if (g - rounded).abs() <= NODE_SNAP {
        rounded.clamp(0.0, limit)
    } else {
        g.clamp(0.0, limit)
    }
}

fn cut_open(comp: &Component, gs: &[f64]) -> Vec<Component> {
    let segs: Vec<PlacedSegment> = comp.placed().collect();
    let limit = segs.len() as f64;
    let gs: Vec<f64> = gs.iter().map(|&g| snap(g, limit)).collect();
    cut_stream(comp.start, &segs, &gs)
}

fn cut_closed(comp: &Component, gs: &[f64]) -> Vec<Component> {
    let segs = comp.countable_segments();
    let total = segs.len();
    let limit = total as f64;
    // On a loop, the end is the start: wrap cuts that snapped to the limit.
    let mut gs: Vec<f64> = gs
        .iter()
        .map(|&g| {
            let g = snap(g, limit);
            if g >= limit {
                0.0
            } else {
                g
            }
        })
        .collect();
    gs.sort_by(f64::total_cmp);

    // Rotate the loop so the first cut becomes the start.
    let g1 = gs[0];
    let j = (g1.floor() as usize).min(total - 1);
    let t1 = g1 - j as f64;

    // The rotated stream, each element tagged with the stored segment range
    // it came from so the remaining cuts can be re-expressed.
    let mut stream: Vec<(PlacedSegment, usize, f64, f64)> = Vec::new();
    if t1 > 0.0 {
        let (head, tail) = segs[j].split(t1);
        stream.push((tail, j, t1, 1.0));
        for i in 1..total {
            let idx = (j + i) % total;
            stream.push((segs[idx], idx, 0.0, 1.0));
        }
        stream.push((head, j, 0.0, t1));
    } else {
        for i in 0..total {
            let idx = (j + i) % total;
            stream.push((segs[idx], idx, 0.0, 1.0));
        }
    }

    let mut mapped: Vec<f64> = Vec::new();
    for &g in &gs[1..] {
        let gj = (g.floor() as usize).min(total - 1);
        let gt = g - gj as f64;
        let pos = stream
            .iter()
            .enumerate()
            .find_map(|(si, &(_, oi, lo, hi))| {
                (oi == gj && hi > lo && gt >= lo - 1e-12 && gt <= hi + 1e-12)
                    .then(|| si as f64 + ((gt - lo) / (hi - lo)).clamp(0.0, 1.0))
            })
            .expect("cut lies on the component");
        mapped.push(pos);
    }
    mapped.sort_by(f64::total_cmp);

    let placed: Vec<PlacedSegment> = stream.iter().map(|&(p, ..)| p).collect();
    cut_stream(placed[0].start, &placed, &mapped)
}

/// Cuts a run of segments at sorted positions (`segment index + local t`),
/// returning one piece per stretch — `positions.len() + 1` pieces, empty
/// point components where positions coincide or sit at the very ends.
fn cut_stream(start: Point, segs: &[PlacedSegment], positions: &[f64]) -> Vec<Component> {
    let mut pieces: Vec<Component> = Vec::new();
    let mut cur = Component::new(start);
    let mut gi = 0;

    while gi < positions.len() && positions[gi] <= 0.0 {
        pieces.push(std::mem::replace(&mut cur, Component::new(start)));
        gi += 1;
    }

    for (i, seg) in segs.iter().enumerate() {
        let lo = i as f64;
        let mut rem = *seg;
        let mut done = 0.0;
        while gi < positions.len() && positions[gi] < lo + 1.0 {
            let t_orig = positions[gi] - lo;
            let t_rem = (t_orig - done) / (1.0 - done);
            if t_rem <= 0.0 {
                pieces.push(std::mem::replace(&mut cur, Component::new(rem.start)));
            } else {
                let (head, tail) = rem.split(t_rem);
                cur.segments.push(head.segment);
                pieces.push(std::mem::replace(&mut cur, Component::new(tail.start)));
                rem = tail;
                done = t_orig;
            }
            gi += 1;
        }
        cur.segments.push(rem.segment);
        let end = rem.end();
        while gi < positions.len() && positions[gi] <= lo + 1.0 {
            pieces.push(std::mem::replace(&mut cur, Component::new(end)));
            gi += 1;
        }
    }
    pieces.push(cur);
    pieces
}

/// Trims `length` from one side of a single component, walking inward
/// across segments when the trim swallows one whole.
pub(crate) fn shorten_component(
    comp: &Component,
    from_start: bool,
    length: f64,
) -> Warned<Component> {
    if comp.closed {
        let mut out = Warned::clean(comp.clone());
        out.push("cannot shorten a closed component");
        return out;
    }
    if comp.is_empty() {
        let mut out = Warned::clean(comp.clone());
        out.push("component is a single point; nothing to shorten");
        return out;
    }

    let mut segs: Vec<PlacedSegment> = comp.placed().collect();
    if from_start {
        segs.reverse();
    }
    let mut remaining = length;
    while remaining > 0.0 {
        let Some(seg) = segs.last().copied() else {
            let mut out = Warned::clean(Component::new(comp.start));
            out.push(format!(
                "shortening by {length} consumed the whole component; its start point remains"
            ));
            return out;
        };
        if seg.is_point() {
            segs.pop();
            continue;
        }
        let direction =
            if from_start { seg.start_direction() } else { seg.end_direction() };
        let speed = direction.expect("non-point segment has a direction").norm();
        let dt = remaining / speed;
        if dt < 1.0 {
            let keep = if from_start {
                // segs was reversed wholesale, not per segment: this entry
                // still runs in its original direction.
                seg.split(dt).1
            } else {
                seg.split(1.0 - dt).0
            };
            *segs.last_mut().unwrap() = keep;
            break;
        }
        segs.pop();
        remaining -= speed;
    }

    if from_start {
        segs.reverse();
    }
    match segs.first() {
        None => {
            let mut out = Warned::clean(Component::new(comp.start));
            out.push(format!(
                "shortening by {length} consumed the whole component; its start point remains"
            ));
            out
        }
        Some(first) => Warned::clean(Component::from_segments(
            first.start,
            segs.iter().map(|s| s.segment).collect(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::Segment;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn two_lines() -> SoftPath {
        // (0,0) → (1,0) → (1,1)
        SoftPath::from_components(vec![Component::from_segments(
            pt(0.0, 0.0),
            vec![Segment::Line { to: pt(1.0, 0.0) }, Segment::Line { to: pt(1.0, 1.0) }],
        )])
    }

    fn closed_square() -> SoftPath {
        SoftPath::from_components(vec![Component {
            start: pt(0.0, 0.0),
            segments: vec![
                Segment::Line { to: pt(1.0, 0.0) },
                Segment::Line { to: pt(1.0, 1.0) },
                Segment::Line { to: pt(0.0, 1.0) },
            ],
            closed: true,
        }])
    }

    #[test]
    fn locate_reports_point_and_tangent() {
        let loc = two_lines().locate(0.75).unwrap();
        assert_eq!(loc.segment_index, 2);
        assert!((loc.local_t - 0.5).abs() < 1e-12);
        assert!(loc.point.distance(pt(1.0, 0.5)) < 1e-12);
        assert!((loc.tangent.angle() - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn boundary_parameters_belong_to_the_earlier_segment() {
        let loc = two_lines().locate(0.5).unwrap();
        assert_eq!(loc.segment_index, 1);
        assert_eq!(loc.local_t, 1.0);
        assert!(loc.point.distance(pt(1.0, 0.0)) < 1e-12);

        let start = two_lines().locate(0.0).unwrap();
        assert_eq!((start.segment_index, start.local_t), (1, 0.0));
        let end = two_lines().locate(1.0).unwrap();
        assert_eq!((end.segment_index, end.local_t), (2, 1.0));
    }

    #[test]
    fn locate_counts_the_closing_edge() {
        let path = closed_square();
        assert_eq!(path.segment_count(), 4);
        // Last quarter of the parameter runs along the closing edge.
        let loc = path.locate(0.875).unwrap();
        assert_eq!(loc.segment_index, 4);
        assert!(loc.point.distance(pt(0.0, 0.5)) < 1e-12);

        assert!(matches!(SoftPath::new().locate(0.5), Err(Error::EmptyPath)));
        assert!(matches!(path.locate(1.5), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn frames_flip_only_against_the_page() {
        let rightward = two_lines().frame_at(0.25, true).unwrap();
        assert_eq!(rightward.angle_rad, 0.0);

        // Right-to-left line: plain frame points π, upright flips to 0.
        let back = SoftPath::from_components(vec![Component::from_segments(
            pt(1.0, 0.0),
            vec![Segment::Line { to: pt(0.0, 0.0) }],
        )]);
        assert!((back.frame_at(0.5, false).unwrap().angle_rad - PI).abs() < 1e-12);
        assert_eq!(back.frame_at(0.5, true).unwrap().angle_rad, 0.0);

        // Vertical tangent sits on the boundary and stays unflipped.
        let up = two_lines().frame_at(0.75, true).unwrap();
        assert!((up.angle_rad - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn upright_y_axis_never_points_down() {
        let path = SoftPath::from_components(vec![Component::from_segments(
            pt(1.0, 0.0),
            vec![Segment::Cubic {
                c1: pt(1.0, 2.2),
                c2: pt(-1.0, 2.2),
                to: pt(-1.0, 0.0),
            }],
        )]);
        for i in 0..=100 {
            let f = path.frame_at(i as f64 / 100.0, true).unwrap();
            assert!(f.angle_rad.cos() >= -1e-12, "y-axis dips at angle {}", f.angle_rad);
        }
    }

    #[test]
    fn split_at_a_node_does_not_subdivide() {
        let split = two_lines().split_at(0.5).unwrap();
        assert_eq!(split.components.len(), 2);
        assert_eq!(split.components[0].segments.len(), 1);
        assert_eq!(split.components[1].segments.len(), 1);
        assert_eq!(split.components[1].start, pt(1.0, 0.0));
    }

    #[test]
    fn split_at_interior_subdivides_and_preserves_the_trace() {
        let path = two_lines();
        let split = path.split_at(0.25).unwrap();
        assert_eq!(split.components.len(), 2);
        assert_eq!(split.components[0].stored_end(), pt(0.5, 0.0));
        for i in 0..=40 {
            let t = i as f64 / 40.0;
            let p = path.locate(t).unwrap().point;
            // Trace comparison via nearest sampled point on the split path.
            let mut best = f64::INFINITY;
            for comp in &split.components {
                for seg in comp.countable_segments() {
                    for j in 0..=50 {
                        best = best.min(seg.eval(j as f64 / 50.0).distance(p));
                    }
                }
            }
            assert!(best < 0.02, "trace wandered: {best}");
        }
    }

    #[test]
    fn split_at_the_ends_adds_point_components() {
        let at_start = two_lines().split_at(0.0).unwrap();
        assert_eq!(at_start.components.len(), 2);
        assert!(at_start.components[0].is_empty());

        let (head, tail) = two_lines().split_into(1.0).unwrap();
        assert_eq!(head, two_lines());
        assert_eq!(tail.components.len(), 1);
        assert!(tail.components[0].is_empty());
        assert_eq!(tail.components[0].start, pt(1.0, 1.0));
    }

    #[test]
    fn splitting_a_closed_component_opens_and_rotates_it() {
        let split = closed_square().split_at(0.5).unwrap();
        assert_eq!(split.components.len(), 1, "one break keeps one (now open) component");
        let comp = &split.components[0];
        assert!(!comp.closed);
        assert_eq!(comp.start, pt(1.0, 1.0));
        assert_eq!(comp.stored_end(), pt(1.0, 1.0));
        assert_eq!(comp.segments.len(), 4, "closing edge became a stored line");

        // An interior break rotates mid-segment.
        let split = closed_square().split_at(0.125).unwrap();
        let comp = &split.components[0];
        assert_eq!(comp.start, pt(0.5, 0.0));
        assert_eq!(comp.segments.len(), 5);
    }

    #[test]
    fn keep_selects_the_requested_stretch() {
        let path = two_lines();
        let start = path.keep(KeepMode::Start(0.25)).unwrap();
        assert_eq!(start.serialize(), "M 0 0\nL 0.5 0\n");

        let end = path.keep(KeepMode::End(0.75)).unwrap();
        assert_eq!(end.serialize(), "M 1 0.5\nL 1 1\n");

        // The kept stretch crosses the interior node without breaking there.
        let middle = path.keep(KeepMode::Middle(0.25, 0.75)).unwrap();
        assert_eq!(middle.serialize(), "M 0.5 0\nL 1 0\nL 1 0.5\n");

        let dot = path.keep(KeepMode::Middle(0.25, 0.25)).unwrap();
        assert_eq!(dot.serialize(), "M 0.5 0\n");

        assert!(matches!(path.keep(KeepMode::Middle(0.9, 0.1)), Err(Error::InvalidRange(..))));
    }

    #[test]
    fn shorten_is_exact_on_lines() {
        let line = SoftPath::from_components(vec![Component::from_segments(
            pt(0.0, 0.0),
            vec![Segment::Line { to: pt(10.0, 0.0) }],
        )]);
        let (short, warnings) = line.shorten(PathEnd::End, 3.0).into_parts();
        assert!(warnings.is_empty());
        assert_eq!(short.serialize(), "M 0 0\nL 7 0\n");

        let (short, _) = line.shorten(PathEnd::Start, 2.0).into_parts();
        assert_eq!(short.serialize(), "M 2 0\nL 10 0\n");

        let (short, _) = line.shorten(PathEnd::Both, 1.0).into_parts();
        assert_eq!(short.serialize(), "M 1 0\nL 9 0\n");

        let same = line.shorten(PathEnd::Both, 0.0);
        assert_eq!(same.value, line);
        assert!(same.warnings.is_empty());
    }

    #[test]
    fn shorten_carries_the_remainder_across_segments() {
        let (short, warnings) = two_lines().shorten(PathEnd::End, 1.5).into_parts();
        assert!(warnings.is_empty());
        assert_eq!(short.serialize(), "M 0 0\nL 0.5 0\n");

        let (short, warnings) = two_lines().shorten(PathEnd::End, 5.0).into_parts();
        assert_eq!(warnings.len(), 1, "over-shortening warns");
        assert_eq!(short.serialize(), "M 0 0\n");
    }

    #[test]
    fn shorten_trims_cubics_to_first_order() {
        // A gentle cubic: derivative close to constant, so the trimmed
        // length should track the request well inside the 10% contract.
        let cubic = SoftPath::from_components(vec![Component::from_segments(
            pt(0.0, 0.0),
            vec![Segment::Cubic {
                c1: pt(3.2, 0.4),
                c2: pt(6.4, -0.4),
                to: pt(10.0, 0.0),
            }],
        )]);
        let arclen = |p: &SoftPath| -> f64 {
            let mut sum = 0.0;
            for comp in &p.components {
                for seg in comp.countable_segments() {
                    let mut prev = seg.eval(0.0);
                    for i in 1..=2000 {
                        let q = seg.eval(i as f64 / 2000.0);
                        sum += prev.distance(q);
                        prev = q;
                    }
                }
            }
            sum
        };
        let full = arclen(&cubic);
        let request = full * 0.15;
        let (short, warnings) = cubic.shorten(PathEnd::End, request).into_parts();
        assert!(warnings.is_empty());
        let trimmed = full - arclen(&short);
        assert!(
            (trimmed - request).abs() <= 0.1 * request,
            "trimmed {trimmed}, requested {request}"
        );
    }
}
