//! Structural edits: reversing, welding, gaps, joins, splices and closing.
//!
//! Everything here is non-destructive on failure: operations that can skip
//! individual junctions or components return [`Warned`] values describing
//! what was skipped, while operations whose preconditions fail outright
//! return errors and leave nothing half-done.

use crate::geom::{similarity_from_endpoints, Point, Transform2D, Vec2, SPAN_EPSILON};
use crate::hobby::hobby_segment;
use crate::param::shorten_component;
use crate::path::{Component, SoftPath};
use crate::path::Segment;
use crate::{Error, Result, Warned};

/// How [`SoftPath::append`] treats the appended path before concatenation.
/// The steps apply in order: reverse, transform, move, weld.
#[derive(Debug, Clone, Default)]
pub struct AppendOptions {
    /// Reverse the appended path first.
    pub reverse: bool,
    /// Translate the appended path so it starts where this path ends.
    pub move_to_end: bool,
    /// Fuse the appended path's first component onto this path's last.
    pub weld: bool,
    /// Applied to the appended path (after any reversal).
    pub transform: Option<Transform2D>,
}

/// How [`SoftPath::close`] bridges the final component's end back to its
/// start.
#[derive(Debug, Clone)]
pub enum CloseMode {
    /// Mark the component closed; the closing edge stays an implied line.
    Plain,
    /// Shift the final segment's endpoint (and trailing handle) onto the
    /// component start, then close.
    Adjust,
    /// Span the given path across the end→start gap, weld it on and close.
    With(SoftPath),
    /// Bridge the gap with a single direction-matched cubic and close.
    WithCurve,
}

/// Direction of travel arriving at the component's drawn end, skipping
/// degenerate trailing segments.
fn comp_end_direction(comp: &Component) -> Option<Vec2> {
    comp.countable_segments().iter().rev().find_map(|s| s.end_direction())
}

/// Direction of travel leaving the component's start.
fn comp_start_direction(comp: &Component) -> Option<Vec2> {
    comp.countable_segments().iter().find_map(|s| s.start_direction())
}

fn reverse_component(comp: &Component) -> Component {
    let placed: Vec<_> = comp.placed().collect();
    Component {
        start: comp.stored_end(),
        segments: placed.iter().rev().map(|s| s.reversed().segment).collect(),
        closed: comp.closed,
    }
}

/// Reflection across the line through `origin` along `dir`.
fn reflection_across(origin: Point, dir: Vec2) -> Transform2D {
    let theta = dir.angle();
    Transform2D::translation(-origin.x, -origin.y)
        .then(&Transform2D::rotation(-theta))
        .then(&Transform2D::scale(1.0, -1.0))
        .then(&Transform2D::rotation(theta))
        .then(&Transform2D::translation(origin.x, origin.y))
}

/// Fuses `left ++ spanned ++ right` into one run of components: the spanned
/// path's first component extends `left`, its last flows into `right`, and
/// any middle components stay separate.
fn fuse(mut left: Component, spanned: SoftPath, right: Component) -> Vec<Component> {
    let mut sp = spanned.components;
    let first = sp.remove(0);
    left.segments.extend(first.segments);
    if sp.is_empty() {
        left.segments.extend(right.segments);
        return vec![left];
    }
    let mut last = sp.pop().unwrap();
    last.segments.extend(right.segments);
    let mut run = vec![left];
    run.extend(sp);
    run.push(last);
    run
}

impl SoftPath {
    /// The same trace walked backwards: components in reverse order, each
    /// segment reversed.  An exact involution.
    pub fn reverse(&self) -> SoftPath {
        SoftPath::from_components(
            self.components.iter().rev().map(reverse_component).collect(),
        )
    }

    pub fn translate(&self, v: Vec2) -> SoftPath {
        self.transform(&Transform2D::translation(v.dx, v.dy))
    }

    pub fn transform(&self, m: &Transform2D) -> SoftPath {
        SoftPath::from_components(
            self.components.iter().map(|c| c.map_points(&mut |p| m.apply(p))).collect(),
        )
    }

    /// Rigidly rescales and rotates the whole path so that it runs from
    /// `from` to `to` (a similarity on its current endpoints — no
    /// reflection, so the path's handedness is preserved).
    pub fn span(&self, from: Point, to: Point) -> Result<SoftPath> {
        let p0 = self.start_point().ok_or(Error::EmptyPath)?;
        let p1 = self.end_point().ok_or(Error::EmptyPath)?;
        let m = similarity_from_endpoints(p0, p1, from, to)?;
        Ok(self.transform(&m))
    }

    /// Fuses consecutive components whose facing endpoints (end of one,
    /// start of the next) sit within the welding tolerance, then checks the
    /// last-to-first pair the same way.  The earlier component's endpoint
    /// wins at each junction; stored geometry never moves.  Closed
    /// components are left alone.  Idempotent.
    pub fn spot_weld(&self) -> SoftPath {
        let mut comps = self.components.clone();
        let mut i = 0;
        while i + 1 < comps.len() {
            let ok = !comps[i].closed
                && !comps[i + 1].closed
                && comps[i].stored_end().distance(comps[i + 1].start) <= SPAN_EPSILON;
            if ok {
                let next = comps.remove(i + 1);
                comps[i].segments.extend(next.segments);
            } else {
                i += 1;
            }
        }
        if comps.len() >= 2 {
            let last = comps.len() - 1;
            let ok = !comps[last].closed
                && !comps[0].closed
                && comps[last].stored_end().distance(comps[0].start) <= SPAN_EPSILON;
            if ok {
                let first = comps.remove(0);
                let mut merged = comps.pop().unwrap();
                merged.segments.extend(first.segments);
                comps.insert(0, merged);
            }
        }
        SoftPath::from_components(comps)
    }

    /// Opens a gap of `amount` at each listed junction by trimming half
    /// from each side.  Junction `k` sits between components `k` and `k+1`
    /// (1-based); `k` equal to the component count wraps to the
    /// last-to-first junction.  An empty list means every internal junction
    /// (no wrap).  Junctions touching closed components are skipped.
    pub fn insert_gaps_components(&self, amount: f64, indices: &[usize]) -> Warned<SoftPath> {
        let mut out = Warned::clean(self.clone());
        if amount < 0.0 {
            out.push(format!("gap amount {amount} is negative; nothing done"));
            return out;
        }
        let len = self.components.len();
        if len < 2 {
            out.push("path needs at least two components to gap between");
            return out;
        }
        let ks: Vec<usize> =
            if indices.is_empty() { (1..len).collect() } else { indices.to_vec() };
        let half = amount / 2.0;
        for &k in &ks {
            if k == 0 || k > len {
                out.push(format!("no junction {k}; the path has {len} components"));
                continue;
            }
            let a = k - 1;
            let b = k % len;
            if out.value.components[a].closed || out.value.components[b].closed {
                out.push(format!("junction {k} touches a closed component; skipped"));
                continue;
            }
            let trimmed = shorten_component(&out.value.components[a], false, half);
            out.value.components[a] = out.absorb(trimmed);
            let trimmed = shorten_component(&out.value.components[b], true, half);
            out.value.components[b] = out.absorb(trimmed);
        }
        out
    }

    /// Opens a gap of `amount` at the node after each listed countable
    /// segment (1-based, over the whole path).  Interior nodes split their
    /// component first; a component's final segment gaps the junction to
    /// the following component.  An empty list gaps every node of every
    /// open component except the very end of the path.
    pub fn insert_gaps_segments(&self, amount: f64, indices: &[usize]) -> Warned<SoftPath> {
        let mut out = Warned::clean(self.clone());
        if amount < 0.0 {
            out.push(format!("gap amount {amount} is negative; nothing done"));
            return out;
        }
        let segs = self.indexed_segments();
        let n = segs.len();
        if n == 0 {
            out.push("path has no segments");
            return out;
        }
        let mut jobs: Vec<(usize, usize)> = Vec::new();
        if indices.is_empty() {
            for s in &segs {
                if self.components[s.comp].closed {
                    continue;
                }
                let last_of_comp = s.seg_in_comp + 1 == self.components[s.comp].segment_count();
                let last_comp = s.comp + 1 == self.components.len();
                if last_of_comp && last_comp {
                    continue;
                }
                jobs.push((s.comp, s.seg_in_comp));
            }
        } else {
            for &idx in indices {
                let Some(s) = segs.iter().find(|s| s.global == idx) else {
                    out.push(format!("no segment {idx}; the path has {n} segments"));
                    continue;
                };
                if self.components[s.comp].closed {
                    out.push(format!("segment {idx} lies on a closed component; skipped"));
                    continue;
                }
                jobs.push((s.comp, s.seg_in_comp));
            }
        }
        jobs.sort_unstable();
        jobs.dedup();

        let half = amount / 2.0;
        for &(ci, after) in jobs.iter().rev() {
            let comp = &out.value.components[ci];
            if after + 1 < comp.segments.len() {
                // Interior node: break the component there, then trim both
                // new ends.
                let stored = comp.segments.clone();
                let head = Component::from_segments(comp.start, stored[..=after].to_vec());
                let tail = Component::from_segments(head.stored_end(), stored[after + 1..].to_vec());
                let trimmed_head = out.absorb(shorten_component(&head, false, half));
                let trimmed_tail = out.absorb(shorten_component(&tail, true, half));
                out.value.components[ci] = trimmed_head;
                out.value.components.insert(ci + 1, trimmed_tail);
            } else {
                // Final segment: the node is the junction to the next
                // component.
                if ci + 1 >= out.value.components.len() {
                    out.push("nothing follows the path's final segment; skipped");
                    continue;
                }
                if out.value.components[ci + 1].closed {
                    out.push("junction leads into a closed component; skipped");
                    continue;
                }
                let trimmed = shorten_component(&out.value.components[ci], false, half);
                out.value.components[ci] = out.absorb(trimmed);
                let trimmed = shorten_component(&out.value.components[ci + 1], true, half);
                out.value.components[ci + 1] = out.absorb(trimmed);
            }
        }
        out
    }

    /// Joins each listed component (1-based) onto its predecessor by
    /// concatenating segment lists; the joined component's start point is
    /// dropped and nothing moves.  Index 1 re-draws the first component
    /// after the last.  An empty list joins everything into one component.
    pub fn join_components(&self, indices: &[usize]) -> Warned<SoftPath> {
        let mut out = Warned::clean(self.clone());
        let len = self.components.len();
        if len < 2 {
            out.push("path needs at least two components to join");
            return out;
        }
        let mut ks: Vec<usize> =
            if indices.is_empty() { (2..=len).collect() } else { indices.to_vec() };
        ks.sort_unstable();
        ks.dedup();
        for &k in ks.iter().rev() {
            let comps = &mut out.value.components;
            let cur = comps.len();
            if k == 0 || k > cur {
                out.push(format!("no component {k}; the path has {cur} components"));
                continue;
            }
            if cur < 2 {
                out.push(format!("component {k}: nothing left to join with"));
                continue;
            }
            if k == 1 {
                if comps[0].closed || comps[cur - 1].closed {
                    out.push("component 1 or the final component is closed; skipped");
                    continue;
                }
                let first = comps.remove(0);
                let last = comps.last_mut().unwrap();
                last.segments.extend(first.segments);
            } else {
                let (a, b) = (k - 2, k - 1);
                if comps[a].closed || comps[b].closed {
                    out.push(format!("component {k} or its predecessor is closed; skipped"));
                    continue;
                }
                let moved = comps.remove(b);
                comps[a].segments.extend(moved.segments);
            }
        }
        out
    }

    /// Deletes the listed components (1-based).
    pub fn remove_components(&self, indices: &[usize]) -> Warned<SoftPath> {
        let mut out = Warned::clean(self.clone());
        if indices.is_empty() {
            out.push("no component indices given; nothing removed");
            return out;
        }
        let mut ks = indices.to_vec();
        ks.sort_unstable();
        ks.dedup();
        for &k in ks.iter().rev() {
            let cur = out.value.components.len();
            if k == 0 || k > cur {
                out.push(format!("no component {k}; the path has {cur} components"));
                continue;
            }
            out.value.components.remove(k - 1);
        }
        out
    }

    /// Concatenates `other` onto this path, optionally reversing,
    /// transforming, moving or welding it first (see [`AppendOptions`]).
    pub fn append(&self, other: &SoftPath, opts: &AppendOptions) -> Warned<SoftPath> {
        let mut out = Warned::clean(SoftPath::new());
        let mut inserted = other.clone();
        if opts.reverse {
            inserted = inserted.reverse();
        }
        if let Some(m) = &opts.transform {
            inserted = inserted.transform(m);
        }
        if opts.move_to_end {
            match (self.end_point(), inserted.start_point()) {
                (Some(e), Some(s)) => inserted = inserted.translate(e - s),
                _ => out.push("cannot move an empty path into place; left as-is"),
            }
        }
        if inserted.is_empty() {
            out.push("appended path is empty");
            out.value = self.clone();
            return out;
        }
        let mut comps = self.components.clone();
        if opts.weld {
            match comps.last() {
                None => {
                    out.push("nothing to weld onto; appended plainly");
                    comps.extend(inserted.components);
                }
                Some(last) if last.closed => {
                    out.push("cannot weld onto a closed component; appended plainly");
                    comps.extend(inserted.components);
                }
                Some(_) => {
                    let mut rest = inserted.components.into_iter();
                    let first = rest.next().unwrap();
                    let target = comps.last_mut().unwrap();
                    target.segments.extend(first.segments);
                    target.closed = first.closed;
                    comps.extend(rest);
                }
            }
        } else {
            comps.extend(inserted.components);
        }
        out.value = SoftPath::from_components(comps);
        out
    }

    /// Converts every closed component to an open one, materialising the
    /// implied closing edge as a stored line when the endpoints actually
    /// stand apart.
    pub fn open_components(&self) -> SoftPath {
        SoftPath::from_components(
            self.components
                .iter()
                .map(|c| {
                    if !c.closed {
                        return c.clone();
                    }
                    let mut segments = c.segments.clone();
                    if c.stored_end().distance(c.start) > SPAN_EPSILON {
                        segments.push(Segment::Line { to: c.start });
                    }
                    Component { start: c.start, segments, closed: false }
                })
                .collect(),
        )
    }

    /// Closes the final component (see [`CloseMode`]).  Fails on an empty
    /// path or a bare-move final component; warns and does nothing if the
    /// component is already closed.
    pub fn close(&self, mode: CloseMode) -> Result<Warned<SoftPath>> {
        let mut out = Warned::clean(self.clone());
        let last = self.components.len().checked_sub(1).ok_or(Error::EmptyPath)?;
        if self.components[last].closed {
            out.push("final component is already closed");
            return Ok(out);
        }
        if self.components[last].is_empty() {
            return Err(Error::EmptyPath);
        }
        match mode {
            CloseMode::Plain => {
                out.value.components[last].closed = true;
            }
            CloseMode::Adjust => {
                let comp = &mut out.value.components[last];
                let shift = comp.start - comp.stored_end();
                match comp.segments.last_mut().unwrap() {
                    Segment::Line { to } => *to = *to + shift,
                    Segment::Cubic { c2, to, .. } => {
                        // Moving the trailing handle with the endpoint keeps
                        // the arrival direction.
                        *c2 = *c2 + shift;
                        *to = *to + shift;
                    }
                }
                comp.closed = true;
            }
            CloseMode::With(splice) => {
                let q0 = self.components[last].stored_end();
                let q1 = self.components[last].start;
                let gap = q0.distance(q1);
                if gap <= SPAN_EPSILON {
                    return Err(Error::DegenerateSpan(gap));
                }
                let spanned = splice.span(q0, q1)?;
                let mut rest = spanned.components.into_iter();
                let first = rest.next().unwrap();
                out.value.components[last].segments.extend(first.segments);
                out.value.components.extend(rest);
                let end = out.value.components.len() - 1;
                out.value.components[end].closed = true;
            }
            CloseMode::WithCurve => {
                let comp = &self.components[last];
                let q0 = comp.stored_end();
                let q1 = comp.start;
                let d0 = comp_end_direction(comp).ok_or(Error::ZeroTangent)?;
                let d1 = comp_start_direction(comp).ok_or(Error::ZeroTangent)?;
                let seg = out.absorb(hobby_segment(q0, d0, q1, d1)?);
                let comp = &mut out.value.components[last];
                comp.segments.push(seg);
                comp.closed = true;
            }
        }
        Ok(out)
    }

    /// Bridges junctions with copies of `splice`, spanned across each gap
    /// and welded in at both ends, so component `k`, the bridge and
    /// component `k+1` fuse into one stroke.  Junction indexing follows
    /// [`Self::insert_gaps_components`], except that an empty list first
    /// spot-welds and then bridges every remaining internal junction.  With
    /// `upright`, bridges over right-to-left gaps use the splice reflected
    /// across its own chord, so the bridge's bump keeps facing the same
    /// side of the page.
    pub fn join_with(
        &self,
        splice: &SoftPath,
        indices: &[usize],
        upright: bool,
    ) -> Result<Warned<SoftPath>> {
        let s0 = splice.start_point().ok_or(Error::EmptyPath)?;
        let s1 = splice.end_point().ok_or(Error::EmptyPath)?;
        let span_len = s0.distance(s1);
        if span_len <= SPAN_EPSILON {
            return Err(Error::DegenerateSpan(span_len));
        }

        let mut out = Warned::clean(self.clone());
        if splice.components.first().map_or(true, |c| c.closed)
            || splice.components.last().map_or(true, |c| c.closed)
        {
            out.push("splice must start and end with open components; nothing joined");
            return Ok(out);
        }
        let explicit = !indices.is_empty();
        if !explicit {
            out.value = out.value.spot_weld();
        }
        let len = out.value.components.len();
        if len < 2 {
            out.push("path needs at least two components to join");
            return Ok(out);
        }
        let mut ks: Vec<usize> =
            if explicit { indices.to_vec() } else { (1..len).collect() };
        ks.sort_unstable();
        ks.dedup();
        for &k in ks.iter().rev() {
            let cur = out.value.components.len();
            if k == 0 || k > cur {
                out.push(format!("no junction {k}; the path has {cur} components"));
                continue;
            }
            if cur < 2 {
                out.push(format!("junction {k}: nothing left to join"));
                continue;
            }
            let wrap = k == cur;
            let a = k - 1;
            let b = if wrap { 0 } else { k };
            if out.value.components[a].closed || out.value.components[b].closed {
                out.push(format!("junction {k} touches a closed component; skipped"));
                continue;
            }
            let q0 = out.value.components[a].stored_end();
            let q1 = out.value.components[b].start;
            if q0.distance(q1) <= SPAN_EPSILON {
                out.push(format!("junction {k} endpoints coincide; nothing to bridge"));
                continue;
            }
            let mut piece = splice.clone();
            if upright && q1.x < q0.x {
                piece = piece.transform(&reflection_across(s0, s1 - s0));
            }
            let spanned = piece.span(q0, q1).expect("splice span is pre-checked");
            if wrap {
                let left = out.value.components.pop().unwrap();
                let right = out.value.components.remove(0);
                let run = fuse(left, spanned, right);
                out.value.components.extend(run);
            } else {
                let right = out.value.components.remove(b);
                let left = out.value.components.remove(a);
                let run = fuse(left, spanned, right);
                out.value.components.splice(a..a, run);
            }
        }
        Ok(out)
    }

    /// Bridges junctions with single direction-matched cubics (the curve
    /// construction of [`hobby_segment`]) and fuses across them.  Indexing
    /// and defaults follow [`Self::join_with`]; junctions whose endpoints
    /// already coincide are skipped with a warning.
    pub fn join_with_curve(&self, indices: &[usize]) -> Warned<SoftPath> {
        let mut out = Warned::clean(self.clone());
        let explicit = !indices.is_empty();
        if !explicit {
            out.value = out.value.spot_weld();
        }
        let len = out.value.components.len();
        if len < 2 {
            out.push("path needs at least two components to join");
            return out;
        }
        let mut ks: Vec<usize> =
            if explicit { indices.to_vec() } else { (1..len).collect() };
        ks.sort_unstable();
        ks.dedup();
        for &k in ks.iter().rev() {
            let cur = out.value.components.len();
            if k == 0 || k > cur {
                out.push(format!("no junction {k}; the path has {cur} components"));
                continue;
            }
            if cur < 2 {
                out.push(format!("junction {k}: nothing left to join"));
                continue;
            }
            let wrap = k == cur;
            let a = k - 1;
            let b = if wrap { 0 } else { k };
            if out.value.components[a].closed || out.value.components[b].closed {
                out.push(format!("junction {k} touches a closed component; skipped"));
                continue;
            }
            let q0 = out.value.components[a].stored_end();
            let q1 = out.value.components[b].start;
            let (Some(d0), Some(d1)) = (
                comp_end_direction(&out.value.components[a]),
                comp_start_direction(&out.value.components[b]),
            ) else {
                out.push(format!("junction {k} borders a bare point; skipped"));
                continue;
            };
            let seg = match hobby_segment(q0, d0, q1, d1) {
                Ok(w) => out.absorb(w),
                Err(Error::DegenerateSpan(_)) => {
                    out.push(format!("junction {k} endpoints coincide; skipped"));
                    continue;
                }
                Err(e) => {
                    out.push(format!("junction {k}: {e}; skipped"));
                    continue;
                }
            };
            if wrap {
                let mut left = out.value.components.pop().unwrap();
                let right = out.value.components.remove(0);
                left.segments.push(seg);
                left.segments.extend(right.segments);
                out.value.components.push(left);
            } else {
                let right = out.value.components.remove(b);
                let left = &mut out.value.components[a];
                left.segments.push(seg);
                left.segments.extend(right.segments);
            }
        }
        out
    }

    /// Spans `middle` from the end of `initial` to the start of `final_part`
    /// and welds the three into one path.  With open boundary components the
    /// result has `ci + cm + cf - 2` components.
    pub fn splice(
        initial: &SoftPath,
        middle: &SoftPath,
        final_part: &SoftPath,
    ) -> Result<Warned<SoftPath>> {
        if initial.is_empty() || final_part.is_empty() {
            return Err(Error::EmptyPath);
        }
        let q0 = initial.end_point().unwrap();
        let q1 = final_part.start_point().unwrap();
        let spanned = middle.span(q0, q1)?;

        let mut out = Warned::clean(SoftPath::new());
        let mut comps = initial.components.clone();
        let left_open = !comps.last().unwrap().closed;
        let right_open = !final_part.components.first().unwrap().closed;
        if left_open && right_open {
            let left = comps.pop().unwrap();
            let mut rest = final_part.components.clone();
            let right = rest.remove(0);
            comps.extend(fuse(left, spanned, right));
            comps.extend(rest);
        } else {
            out.push("splice endpoints touch closed components; pieces left unwelded");
            comps.extend(spanned.components);
            comps.extend(final_part.components.clone());
        }
        out.value = SoftPath::from_components(comps);
        Ok(out)
    }

    /// The whole knot pipeline: break the path at its self-intersections,
    /// open gaps at the listed junctions (making under-crossings readable),
    /// then — unless `draft` — spot-weld the untouched junctions back
    /// together.  Returns the finished strands as separate paths.
    pub fn knot(&self, gap: f64, indices: &[usize], draft: bool) -> Warned<Vec<SoftPath>> {
        let mut out = Warned::clean(Vec::new());
        let split = self.split_self();
        let gapped = out.absorb(split.insert_gaps_components(gap, indices));
        let finished = if draft { gapped } else { gapped.spot_weld() };
        out.value = finished.get_components();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_path;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn path(d: &str) -> SoftPath {
        parse_path(d).unwrap()
    }

    #[test]
    fn reverse_is_an_exact_involution() {
        let p = path("M 0 0 C 1 2 3 2 4 0 L 6 1 M 7 0 L 8 1 Z");
        let r = p.reverse();
        assert_eq!(r.reverse(), p);
        assert_eq!(r.start_point().unwrap(), pt(8.0, 1.0));
        // The trace is walked backwards.
        let fwd = p.locate(0.25).unwrap().point;
        let back = r.locate(0.75).unwrap().point;
        assert!(fwd.distance(back) < 1e-12);
    }

    #[test]
    fn span_maps_the_endpoints() {
        let p = path("M 0 0 C 1 1 3 1 4 0");
        let s = p.span(pt(1.0, 1.0), pt(3.0, 5.0)).unwrap();
        assert!(s.start_point().unwrap().distance(pt(1.0, 1.0)) < 1e-9);
        assert!(s.end_point().unwrap().distance(pt(3.0, 5.0)) < 1e-9);
        assert!(SoftPath::new().span(pt(0.0, 0.0), pt(1.0, 0.0)).is_err());
    }

    #[test]
    fn spot_weld_merges_within_tolerance_only() {
        // Junction at the origin so the gap is the exact f64 0.01.
        let touching = path("M -1 0 L 0 0 M 0.01 0 L 1 0");
        assert_eq!(touching.spot_weld().components.len(), 1);

        let apart = path("M -1 0 L 0 0 M 0.02 0 L 1 0");
        assert_eq!(apart.spot_weld().components.len(), 2);

        // Chains collapse in one pass, and welding is idempotent.
        let chain = path("M 0 0 L 1 0 M 1 0 L 2 0 M 2 0 L 3 0");
        let welded = chain.spot_weld();
        assert_eq!(welded.components.len(), 1);
        assert_eq!(welded.spot_weld(), welded);
    }

    #[test]
    fn spot_weld_joins_last_to_first() {
        // Four strokes around a square, listed so the wrap pair touches.
        let ring = path("M 0 0 L 1 0 M 1 0 L 1 1 M 1 1 L 0 1 M 0 1 L 0 0");
        let welded = ring.spot_weld();
        assert_eq!(welded.components.len(), 1);
        assert_eq!(welded.components[0].segments.len(), 4);

        // Closed components never weld.
        let with_loop = path("M 0 0 L 1 0 Z M 1 0 L 2 0");
        assert_eq!(with_loop.spot_weld().components.len(), 2);
    }

    #[test]
    fn gaps_trim_half_from_each_side() {
        let p = path("M 0 0 L 10 0 M 10 0 L 20 0");
        let (gapped, warnings) = p.insert_gaps_components(4.0, &[1]).into_parts();
        assert!(warnings.is_empty());
        assert_eq!(gapped.serialize(), "M 0 0\nL 8 0\nM 12 0\nL 20 0\n");

        // Out-of-range junctions warn and change nothing.
        let (same, warnings) = p.insert_gaps_components(4.0, &[7]).into_parts();
        assert_eq!(warnings.len(), 1);
        assert_eq!(same, p);
    }

    #[test]
    fn default_gaps_exclude_the_wrap_junction() {
        let tri = path("M 0 0 L 10 0 M 10 0 L 10 10 M 10 10 L 0 0");
        let gapped = tri.insert_gaps_components(2.0, &[]).value;
        // Ends of the ring stay put: only junctions 1 and 2 were trimmed.
        assert_eq!(gapped.components[0].start, pt(0.0, 0.0));
        assert_eq!(gapped.components[2].stored_end(), pt(0.0, 0.0));
        assert_ne!(gapped.components[0].stored_end(), pt(10.0, 0.0));

        // Explicit wrap junction trims around the seam.
        let wrapped = tri.insert_gaps_components(2.0, &[3]).value;
        assert_ne!(wrapped.components[2].stored_end(), pt(0.0, 0.0));
        assert_ne!(wrapped.components[0].start, pt(0.0, 0.0));
    }

    #[test]
    fn segment_gaps_split_interior_nodes() {
        let p = path("M 0 0 L 10 0 L 10 10");
        let (gapped, warnings) = p.insert_gaps_segments(2.0, &[1]).into_parts();
        assert!(warnings.is_empty());
        assert_eq!(gapped.serialize(), "M 0 0\nL 9 0\nM 10 1\nL 10 10\n");

        // The final segment's node is the junction to the next component.
        let two = path("M 0 0 L 10 0 M 10 0 L 20 0");
        let (gapped, _) = two.insert_gaps_segments(2.0, &[1]).into_parts();
        assert_eq!(gapped.serialize(), "M 0 0\nL 9 0\nM 11 0\nL 20 0\n");

        // Nothing follows the very last segment.
        let (same, warnings) = two.insert_gaps_segments(2.0, &[2]).into_parts();
        assert_eq!(warnings.len(), 1);
        assert_eq!(same, two);

        // Default: every node except the path end.
        let (gapped, _) = p.insert_gaps_segments(2.0, &[]).into_parts();
        assert_eq!(gapped.components.len(), 2);
    }

    #[test]
    fn join_components_restores_welded_structure() {
        let p = path("M 0 0 L 1 0 M 1 0 L 2 0 M 2 0 L 3 0");
        let (joined, warnings) = p.join_components(&[2, 3]).into_parts();
        assert!(warnings.is_empty());
        assert_eq!(joined.components.len(), 1);
        assert_eq!(joined.serialize(), "M 0 0\nL 1 0\nL 2 0\nL 3 0\n");

        // All junctions by default.
        assert_eq!(p.join_components(&[]).value, joined);

        // Index 1 re-draws the first component after the last.
        let two = path("M 5 5 L 6 6 M 0 0 L 1 1");
        let wrapped = two.join_components(&[1]).value;
        assert_eq!(wrapped.components.len(), 1);
        assert_eq!(wrapped.components[0].start, pt(0.0, 0.0));
        assert_eq!(wrapped.serialize(), "M 0 0\nL 1 1\nL 6 6\n");
    }

    #[test]
    fn gaps_and_joins_give_the_expected_counts() {
        let five = path("M 0 0 L 1 0 M 1 0 L 2 0 M 2 0 L 3 0 M 3 0 L 4 0 M 4 0 L 5 0");
        let gapped = five.insert_gaps_components(0.2, &[1, 3]).value;
        assert_eq!(gapped.components.len(), 5, "gaps do not change the count");
        let joined = gapped.join_components(&[3, 5]).value;
        assert_eq!(joined.components.len(), 3);
    }

    #[test]
    fn remove_components_drops_by_index() {
        let p = path("M 0 0 L 1 0 M 2 0 L 3 0 M 4 0 L 5 0");
        let (kept, warnings) = p.remove_components(&[2]).into_parts();
        assert!(warnings.is_empty());
        assert_eq!(kept.components.len(), 2);
        assert_eq!(kept.components[1].start, pt(4.0, 0.0));

        let (_, warnings) = p.remove_components(&[9]).into_parts();
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn append_applies_its_options_in_order() {
        let base = path("M 0 0 L 1 0");
        let tail = path("M 5 5 L 5 6");

        let plain = base.append(&tail, &AppendOptions::default()).value;
        assert_eq!(plain.components.len(), 2);
        assert_eq!(plain.components[1].start, pt(5.0, 5.0));

        let moved = base
            .append(&tail, &AppendOptions { move_to_end: true, ..Default::default() })
            .value;
        assert_eq!(moved.components[1].start, pt(1.0, 0.0));
        assert_eq!(moved.components[1].stored_end(), pt(1.0, 1.0));

        let welded = base
            .append(
                &tail,
                &AppendOptions { move_to_end: true, weld: true, ..Default::default() },
            )
            .value;
        assert_eq!(welded.components.len(), 1);
        assert_eq!(welded.serialize(), "M 0 0\nL 1 0\nL 1 1\n");

        let reversed = base
            .append(
                &tail,
                &AppendOptions {
                    reverse: true,
                    move_to_end: true,
                    weld: true,
                    ..Default::default()
                },
            )
            .value;
        assert_eq!(reversed.serialize(), "M 0 0\nL 1 0\nL 1 -1\n");

        let spun = base
            .append(
                &tail,
                &AppendOptions {
                    transform: Some(Transform2D::rotation(std::f64::consts::PI)),
                    move_to_end: true,
                    weld: true,
                    ..Default::default()
                },
            )
            .value;
        assert_eq!(spun.serialize(), "M 0 0\nL 1 0\nL 1 -1\n");
    }

    #[test]
    fn append_weld_warnings() {
        let closed = path("M 0 0 L 1 0 L 1 1 Z");
        let tail = path("M 9 9 L 9 10");
        let (joined, warnings) =
            closed.append(&tail, &AppendOptions { weld: true, ..Default::default() }).into_parts();
        assert_eq!(warnings.len(), 1, "welding onto a closed component warns");
        assert_eq!(joined.components.len(), 2);

        let (kept, warnings) =
            tail.append(&SoftPath::new(), &AppendOptions::default()).into_parts();
        assert_eq!(warnings.len(), 1);
        assert_eq!(kept, tail);
    }

    #[test]
    fn open_materialises_real_gaps_only() {
        let square = path("M 0 0 L 1 0 L 1 1 L 0 1 Z");
        let opened = square.open_components();
        assert!(!opened.components[0].closed);
        assert_eq!(opened.components[0].segments.len(), 4);
        assert_eq!(opened.components[0].stored_end(), pt(0.0, 0.0));

        // Already-back-at-start loops gain no extra edge.
        let snug = path("M 0 0 L 1 0 L 0 0 Z");
        assert_eq!(snug.open_components().components[0].segments.len(), 2);
    }

    #[test]
    fn close_modes_share_preconditions() {
        let p = path("M 0 0 L 1 0 L 1 1");
        let closed = p.close(CloseMode::Plain).unwrap().value;
        assert!(closed.components[0].closed);
        assert_eq!(closed.segment_count(), 3);

        let (again, warnings) = closed.close(CloseMode::Plain).unwrap().into_parts();
        assert_eq!(warnings.len(), 1);
        assert_eq!(again, closed);

        assert!(SoftPath::new().close(CloseMode::Plain).is_err());
        assert!(path("M 3 4").close(CloseMode::Plain).is_err());
    }

    #[test]
    fn close_adjust_moves_the_last_endpoint_home() {
        let p = path("M 0 0 L 10 0 C 10 5 5 6 0.5 0.25");
        let closed = p.close(CloseMode::Adjust).unwrap().value;
        let comp = &closed.components[0];
        assert!(comp.closed);
        assert_eq!(comp.stored_end(), pt(0.0, 0.0));
        // The trailing handle moved by the same shift, keeping direction.
        let Segment::Cubic { c2, .. } = comp.segments[1] else { panic!() };
        assert_eq!(c2, pt(4.5, 5.75));
    }

    #[test]
    fn close_with_curve_matches_directions() {
        let p = path("M 1 0 C 1 0.5522847498 0.5522847498 1 0 1");
        let closed = p.close(CloseMode::WithCurve).unwrap().value;
        let comp = &closed.components[0];
        assert!(comp.closed);
        assert_eq!(comp.segments.len(), 2);
        // The bridge leaves the arc's end the way the arc arrived and lands
        // at the start heading the way the arc departs — sweeping the long
        // way round to close the circle smoothly.
        let bridge = comp.countable_segments()[1];
        assert!(bridge.start_direction().unwrap().angle_to(Vec2 { dx: -1.0, dy: 0.0 }).abs() < 1e-9);
        assert!(bridge.end_direction().unwrap().angle_to(Vec2 { dx: 0.0, dy: 1.0 }).abs() < 1e-9);
    }

    #[test]
    fn close_with_spans_the_splice_across_the_gap() {
        let p = path("M 0 0 L 10 0 L 10 10 L 0 10");
        let bump = path("M 0 0 C 1 1 2 1 3 0");
        let closed = p.close(CloseMode::With(bump)).unwrap().value;
        let comp = &closed.components[0];
        assert!(comp.closed);
        assert_eq!(comp.segments.len(), 4);
        assert!(comp.stored_end().distance(pt(0.0, 0.0)) < 1e-9);

        // A degenerate gap cannot host a spanned splice.
        let snug = path("M 0 0 L 1 0 L 0 0");
        assert!(matches!(
            snug.close(CloseMode::With(path("M 0 0 L 1 0"))),
            Err(Error::DegenerateSpan(_))
        ));
    }

    #[test]
    fn join_with_bridges_and_fuses() {
        let p = path("M 0 0 L 4 0 M 6 0 L 10 0");
        let bump = path("M 0 0 C 1 1 2 1 3 0");
        let (joined, warnings) = p.join_with(&bump, &[1], false).unwrap().into_parts();
        assert!(warnings.is_empty());
        assert_eq!(joined.components.len(), 1);
        let comp = &joined.components[0];
        assert_eq!(comp.segments.len(), 3);
        // The bridge spans the gap exactly.
        assert!(comp.placed().nth(1).unwrap().start.distance(pt(4.0, 0.0)) < 1e-9);
        assert!(comp.segments[1].to().distance(pt(6.0, 0.0)) < 1e-9);

        // A degenerate splice is useless for bridging.
        assert!(matches!(
            p.join_with(&path("M 0 0 L 0.005 0"), &[1], false),
            Err(Error::DegenerateSpan(_))
        ));
    }

    #[test]
    fn join_with_default_welds_then_bridges_everything() {
        let p = path("M 0 0 L 2 0 M 2 0 L 4 0 M 6 0 L 10 0");
        let bump = path("M 0 0 C 1 1 2 1 3 0");
        let (joined, _) = p.join_with(&bump, &[], false).unwrap().into_parts();
        assert_eq!(joined.components.len(), 1);
        assert_eq!(joined.components[0].segments.len(), 4, "two welds, one bridge");
    }

    #[test]
    fn upright_bridges_flip_on_right_to_left_gaps() {
        let bump = path("M 0 0 C 1 1 2 1 3 0");
        // Left-to-right gap: bump arches up either way.
        let ltr = path("M 0 0 L 4 0 M 6 0 L 10 0");
        let up = ltr.join_with(&bump, &[1], true).unwrap().value;
        let mid_up = up.components[0].placed().nth(1).unwrap().eval(0.5);
        assert!(mid_up.y > 0.1);

        // Right-to-left gap: plain spanning turns the bump over; upright
        // reflects it back above the page.
        let rtl = path("M 10 0 L 6 0 M 4 0 L 0 0");
        let plain = rtl.join_with(&bump, &[1], false).unwrap().value;
        let mid_plain = plain.components[0].placed().nth(1).unwrap().eval(0.5);
        assert!(mid_plain.y < -0.1);

        let flipped = rtl.join_with(&bump, &[1], true).unwrap().value;
        let mid_flip = flipped.components[0].placed().nth(1).unwrap().eval(0.5);
        assert!(mid_flip.y > 0.1);
    }

    #[test]
    fn join_with_curve_respects_directions() {
        let p = path("M 0 0 L 4 0 M 6 2 L 10 2");
        let (joined, warnings) = p.join_with_curve(&[1]).into_parts();
        assert!(warnings.is_empty());
        assert_eq!(joined.components.len(), 1);
        let bridge = joined.components[0].placed().nth(1).unwrap();
        assert!(bridge.start_direction().unwrap().angle_to(Vec2 { dx: 1.0, dy: 0.0 }).abs() < 1e-9);
        assert!(bridge.end_direction().unwrap().angle_to(Vec2 { dx: 1.0, dy: 0.0 }).abs() < 1e-9);

        // Coincident junction endpoints cannot take a curve.
        let snug = path("M 0 0 L 4 0 M 4 0 L 8 0");
        let (same, warnings) = snug.join_with_curve(&[1]).into_parts();
        assert_eq!(warnings.len(), 1);
        assert_eq!(same, snug);
    }

    #[test]
    fn splice_counts_and_continuity() {
        let initial = path("M 0 0 L 5 0 M 5 0 L 10 0");
        let middle = path("M 0 0 C 1 2 2 2 3 0 M 3 0 L 4 0");
        let final_part = path("M 20 0 L 25 0 M 25 0 L 30 0");
        let (out, warnings) = SoftPath::splice(&initial, &middle, &final_part)
            .unwrap()
            .into_parts();
        assert!(warnings.is_empty());
        assert_eq!(out.components.len(), 2 + 2 + 2 - 2);
        // Junctions are seamless: the middle's own break survives spanning,
        // and the spanned middle ends exactly where the final part starts.
        assert_eq!(out.components[1].start, pt(5.0, 0.0));
        assert!(out.components[1].stored_end().distance(out.components[2].start) < 1e-9);
        assert!(out.components[2].segments[0].to().distance(pt(20.0, 0.0)) < 1e-9);

        assert!(SoftPath::splice(&SoftPath::new(), &middle, &final_part).is_err());
        let dot = path("M 1 1 L 1.001 1");
        assert!(matches!(
            SoftPath::splice(&initial, &dot, &final_part),
            Err(Error::DegenerateSpan(_))
        ));
    }

    #[test]
    fn knot_pipeline_counts() {
        // A flat figure-eight stroke: one crossing, so the split gives
        // three pieces; gapping junction 1 and welding junction 2 leaves 2.
        let p = path("M 0 0 L 2 2 L 0 2 L 2 0");
        let (pieces, warnings) = p.knot(0.2, &[1], false).into_parts();
        assert!(warnings.is_empty());
        assert_eq!(pieces.len(), 2);

        let (draft, _) = p.knot(0.2, &[1], true).into_parts();
        assert_eq!(draft.len(), 3, "draft skips the re-weld");
    }
}
