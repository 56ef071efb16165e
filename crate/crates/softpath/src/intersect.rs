//! Finding where paths cross — themselves or each other — and cutting there.
//!
//! Line pairs are solved analytically; any pair involving a cubic goes
//! through bounding-box subdivision seeded into a Newton polish.  Hits are
//! only accepted when the two curve points actually coincide within a small
//! residual, and passes through a shared node are collapsed to one hit.

use crate::geom::Point;
use crate::param::carve_concat;
use crate::path::{IndexedSegment, PlacedSegment, Segment, SoftPath};
use std::collections::BTreeMap;

/// Subdivision stops once both candidate boxes are smaller than this.
const BOX_TOL: f64 = 1e-4;
/// Parameter-space radius for merging duplicate hits.
const DEDUP_PARAM: f64 = 1e-3;
/// Parameter slack when discarding the shared node of consecutive segments.
const ADJ_PARAM: f64 = 1e-3;
/// Geometric residual above which a polished candidate is rejected.
const HIT_RESIDUAL: f64 = 1e-3;
const MAX_CANDIDATES: usize = 4096;

/// One crossing between two paths (or one path and itself).
///
/// Segment indices are 1-based over the countable segments of each path,
/// closing edges included; `point` is the midpoint of the two curve points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntersectionHit {
    pub seg_a: usize,
    pub t_a: f64,
    pub seg_b: usize,
    pub t_b: f64,
    pub point: Point,
}

#[derive(Debug, Clone, Copy)]
struct Hit2 {
    t: f64,
    u: f64,
    point: Point,
    res: f64,
}

fn mk_hit(a: &PlacedSegment, b: &PlacedSegment, t: f64, u: f64) -> Hit2 {
    let pa = a.eval(t);
    let pb = b.eval(u);
    Hit2 { t, u, point: pa.lerp(pb, 0.5), res: pa.distance(pb) }
}

/// Intersection parameters `(t, u)` of two standalone segments, sorted and
/// deduplicated.  Collinear line overlap reports its two extreme points;
/// identical (or mutually reversed) cubics report their endpoint pairs.
pub fn segment_intersections(a: &PlacedSegment, b: &PlacedSegment) -> Vec<(f64, f64)> {
    seg_hits(a, b).into_iter().map(|h| (h.t, h.u)).collect()
}

fn seg_hits(a: &PlacedSegment, b: &PlacedSegment) -> Vec<Hit2> {
    if a.is_point() || b.is_point() {
        return Vec::new();
    }
    let mut hits = if let (Segment::Line { .. }, Segment::Line { .. }) = (a.segment, b.segment)
    {
        line_line(a, b)
    } else {
        curve_curve(a, b)
    };
    dedup_pairs(&mut hits);
    hits
}

fn line_line(a: &PlacedSegment, b: &PlacedSegment) -> Vec<Hit2> {
    let (a0, a1) = (a.start, a.end());
    let (b0, b1) = (b.start, b.end());
    let d1 = a1 - a0;
    let d2 = b1 - b0;
    let denom = d1.cross(d2);
    if denom.abs() <= 1e-12 * (d1.norm() * d2.norm()).max(1e-30) {
        // Parallel.  Offsets perpendicular to the shared direction decide
        // whether the carriers coincide at all.
        let dist = (b0 - a0).cross(d1).abs() / d1.norm();
        if dist > 1e-9 * d1.norm().max(1.0) {
            return Vec::new();
        }
        let la = d1.norm_squared();
        let tb0 = (b0 - a0).dot(d1) / la;
        let tb1 = (b1 - a0).dot(d1) / la;
        let lo = tb0.min(tb1).max(0.0);
        let hi = tb0.max(tb1).min(1.0);
        if lo > hi + 1e-12 {
            return Vec::new();
        }
        let to_u = |t: f64| {
            let p = a0 + d1 * t;
            ((p - b0).dot(d2) / d2.norm_squared()).clamp(0.0, 1.0)
        };
        let mut hits = vec![mk_hit(a, b, lo, to_u(lo))];
        if hi - lo > 1e-12 {
            hits.push(mk_hit(a, b, hi, to_u(hi)));
        }
        return hits;
    }
    let off = b0 - a0;
    let t = off.cross(d2) / denom;
    let u = off.cross(d1) / denom;
    let in01 = |x: f64| (-1e-9..=1.0 + 1e-9).contains(&x);
    if in01(t) && in01(u) {
        vec![mk_hit(a, b, t.clamp(0.0, 1.0), u.clamp(0.0, 1.0))]
    } else {
        Vec::new()
    }
}

fn curve_curve(a: &PlacedSegment, b: &PlacedSegment) -> Vec<Hit2> {
    // A curve laid exactly on itself has no isolated crossings; report the
    // endpoint correspondence instead of subdividing forever.
    if a == b {
        return vec![mk_hit(a, b, 0.0, 0.0), mk_hit(a, b, 1.0, 1.0)];
    }
    if *a == b.reversed() {
        return vec![mk_hit(a, b, 0.0, 1.0), mk_hit(a, b, 1.0, 0.0)];
    }

    let mut seeds: Vec<(f64, f64)> = Vec::new();
    let mut stack = vec![(*a, 0.0_f64, 1.0_f64, *b, 0.0_f64, 1.0_f64)];
    while let Some((sa, a0, a1, sb, b0, b1)) = stack.pop() {
        let (alo, ahi) = sa.control_bbox();
        let (blo, bhi) = sb.control_bbox();
        if alo.x > bhi.x + 1e-12
            || blo.x > ahi.x + 1e-12
            || alo.y > bhi.y + 1e-12
            || blo.y > ahi.y + 1e-12
        {
            continue;
        }
        let asz = (ahi - alo).norm();
        let bsz = (bhi - blo).norm();
        if (asz <= BOX_TOL && bsz <= BOX_TOL) || (a1 - a0 <= 1e-7 && b1 - b0 <= 1e-7) {
            seeds.push((0.5 * (a0 + a1), 0.5 * (b0 + b1)));
            if seeds.len() >= MAX_CANDIDATES {
                break;
            }
            continue;
        }
        if asz >= bsz {
            let mid = 0.5 * (a0 + a1);
            let (l, r) = sa.split(0.5);
            stack.push((l, a0, mid, sb, b0, b1));
            stack.push((r, mid, a1, sb, b0, b1));
        } else {
            let mid = 0.5 * (b0 + b1);
            let (l, r) = sb.split(0.5);
            stack.push((sa, a0, a1, l, b0, mid));
            stack.push((sa, a0, a1, r, mid, b1));
        }
    }

    let mut hits = Vec::new();
    for (t0, u0) in seeds {
        let (t, u) = newton_polish(a, b, t0, u0);
        let h = mk_hit(a, b, t, u);
        if h.res < HIT_RESIDUAL {
            hits.push(h);
        }
    }
    hits
}

fn newton_polish(a: &PlacedSegment, b: &PlacedSegment, mut t: f64, mut u: f64) -> (f64, f64) {
    for _ in 0..8 {
        let f = a.eval(t) - b.eval(u);
        let ja = a.deriv(t);
        let jb = b.deriv(u);
        let det = jb.dx * ja.dy - ja.dx * jb.dy;
        if det.abs() < 1e-14 {
            break;
        }
        let dt = (f.dx * jb.dy - jb.dx * f.dy) / det;
        let du = (f.dx * ja.dy - ja.dx * f.dy) / det;
        t = (t + dt).clamp(0.0, 1.0);
        u = (u + du).clamp(0.0, 1.0);
        if dt.abs() < 1e-15 && du.abs() < 1e-15 {
            break;
        }
    }
    (t, u)
}

fn dedup_pairs(hits: &mut Vec<Hit2>) {
    hits.sort_by(|x, y| x.t.total_cmp(&y.t).then(x.u.total_cmp(&y.u)));
    let mut out: Vec<Hit2> = Vec::new();
    for h in hits.drain(..) {
        match out
            .iter_mut()
            .find(|r| (r.t - h.t).abs() <= DEDUP_PARAM && (r.u - h.u).abs() <= DEDUP_PARAM)
        {
            Some(r) => {
                if h.res < r.res {
                    *r = h;
                }
            }
            None => out.push(h),
        }
    }
    out.sort_by(|x, y| x.t.total_cmp(&y.t).then(x.u.total_cmp(&y.u)));
    *hits = out;
}

/// True when the cubic could cross itself.  If every control-polygon edge
/// has a positive component along their sum, the curve is monotone in that
/// direction and therefore injective.
fn maybe_loops(seg: &PlacedSegment) -> bool {
    let Segment::Cubic { c1, c2, to } = seg.segment else { return false };
    let edges = [c1 - seg.start, c2 - c1, to - c2];
    let sum = edges[0] + edges[1] + edges[2];
    if sum.norm() <= 1e-12 {
        return true;
    }
    edges.iter().any(|v| v.norm() > 1e-12 && v.dot(sum) <= 0.0)
}

/// Self-crossing parameter pairs `(t1, t2)` of one segment, `t1 < t2`.
fn segment_self_pairs(seg: &PlacedSegment) -> Vec<(f64, f64)> {
    fn rec(seg: &PlacedSegment, lo: f64, hi: f64, depth: u32, out: &mut Vec<Hit2>) {
        if depth >= 10 || !maybe_loops(seg) {
            return;
        }
        let (blo, bhi) = seg.control_bbox();
        if (bhi - blo).norm() <= BOX_TOL {
            return;
        }
        let mid = 0.5 * (lo + hi);
        let (h1, h2) = seg.split(0.5);
        for h in seg_hits(&h1, &h2) {
            let g1 = lo + (mid - lo) * h.t;
            let g2 = mid + (hi - mid) * h.u;
            // Parameter-close pairs are the shared node or a cusp, not a loop.
            if (g2 - g1).abs() > DEDUP_PARAM {
                out.push(Hit2 { t: g1.min(g2), u: g1.max(g2), point: h.point, res: h.res });
            }
        }
        rec(&h1, lo, mid, depth + 1, out);
        rec(&h2, mid, hi, depth + 1, out);
    }

    if matches!(seg.segment, Segment::Line { .. }) {
        return Vec::new();
    }
    let mut hits = Vec::new();
    rec(seg, 0.0, 1.0, 0, &mut hits);
    dedup_pairs(&mut hits);
    hits.into_iter().map(|h| (h.t, h.u)).collect()
}

struct HitEx {
    comp_a: usize,
    ga: f64,
    comp_b: usize,
    gb: f64,
    hit: IntersectionHit,
}

fn make_ex(ia: &IndexedSegment, ib: &IndexedSegment, h: &Hit2) -> HitEx {
    HitEx {
        comp_a: ia.comp,
        ga: ia.seg_in_comp as f64 + h.t,
        comp_b: ib.comp,
        gb: ib.seg_in_comp as f64 + h.u,
        hit: IntersectionHit {
            seg_a: ia.global,
            t_a: h.t,
            seg_b: ib.global,
            t_b: h.u,
            point: h.point,
        },
    }
}

/// Parameter ruler for one component: countable positions mapped onto an
/// "effective" axis where zero-length (point) segments have zero width, so
/// distances measure drawn geometry.  A closed component whose last stored
/// segment already returns to the start keeps its seam at distance zero
/// this way, even though the implied closing line occupies an index.
struct CompMeasure {
    widths: Vec<f64>,
    /// `prefix[i]` is the effective start of countable segment `i`; the
    /// final entry is the component's effective total.
    prefix: Vec<f64>,
    closed: bool,
}

impl CompMeasure {
    fn eff(&self, g: f64) -> f64 {
        if self.widths.is_empty() {
            return 0.0;
        }
        let i = (g.floor() as usize).min(self.widths.len() - 1);
        self.prefix[i] + (g - i as f64).clamp(0.0, 1.0) * self.widths[i]
    }

    fn total(&self) -> f64 {
        *self.prefix.last().unwrap()
    }
}

fn comp_measures(p: &SoftPath) -> Vec<CompMeasure> {
    p.components
        .iter()
        .map(|c| {
            let widths: Vec<f64> = c
                .countable_segments()
                .iter()
                .map(|s| if s.is_point() { 0.0 } else { 1.0 })
                .collect();
            let mut prefix = vec![0.0];
            for w in &widths {
                prefix.push(prefix.last().unwrap() + w);
            }
            CompMeasure { widths, prefix, closed: c.closed }
        })
        .collect()
}

fn same_position(c1: usize, g1: f64, c2: usize, g2: f64, info: &[CompMeasure]) -> bool {
    if c1 != c2 {
        return false;
    }
    let m = &info[c1];
    let d = (m.eff(g1) - m.eff(g2)).abs();
    d <= DEDUP_PARAM || (m.closed && m.total() - d <= DEDUP_PARAM)
}

fn dedup_path_hits(hits: &mut Vec<HitEx>, info_a: &[CompMeasure], info_b: &[CompMeasure]) {
    hits.sort_by(|x, y| {
        (x.hit.seg_a, x.hit.seg_b)
            .cmp(&(y.hit.seg_a, y.hit.seg_b))
            .then(x.hit.t_a.total_cmp(&y.hit.t_a))
            .then(x.hit.t_b.total_cmp(&y.hit.t_b))
    });
    let mut out: Vec<HitEx> = Vec::new();
    for h in hits.drain(..) {
        let dup = out.iter().any(|r| {
            same_position(r.comp_a, r.ga, h.comp_a, h.ga, info_a)
                && same_position(r.comp_b, r.gb, h.comp_b, h.gb, info_b)
        });
        if !dup {
            out.push(h);
        }
    }
    out.sort_by(|x, y| {
        x.hit
            .seg_a
            .cmp(&y.hit.seg_a)
            .then(x.hit.t_a.total_cmp(&y.hit.t_a))
            .then(x.hit.seg_b.cmp(&y.hit.seg_b))
            .then(x.hit.t_b.total_cmp(&y.hit.t_b))
    });
    *hits = out;
}

fn cross_hits(a: &SoftPath, b: &SoftPath) -> Vec<HitEx> {
    let sa = a.indexed_segments();
    let sb = b.indexed_segments();
    let mut hits = Vec::new();
    for ia in &sa {
        if ia.placed.is_point() {
            continue;
        }
        for ib in &sb {
            if ib.placed.is_point() {
                continue;
            }
            for h in seg_hits(&ia.placed, &ib.placed) {
                hits.push(make_ex(ia, ib, &h));
            }
        }
    }
    dedup_path_hits(&mut hits, &comp_measures(a), &comp_measures(b));
    hits
}

fn self_hits(p: &SoftPath) -> Vec<HitEx> {
    let segs: Vec<IndexedSegment> =
        p.indexed_segments().into_iter().filter(|s| !s.placed.is_point()).collect();
    // Position of each kept segment among its component's kept segments,
    // plus that component's kept-segment count, for adjacency checks.
    let mut ord = vec![0usize; segs.len()];
    let mut per_comp: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, s) in segs.iter().enumerate() {
        let n = per_comp.entry(s.comp).or_insert(0);
        ord[i] = *n;
        *n += 1;
    }

    let info = comp_measures(p);
    let mut hits = Vec::new();
    for x in 0..segs.len() {
        for (t, u) in segment_self_pairs(&segs[x].placed) {
            let h = mk_hit(&segs[x].placed, &segs[x].placed, t, u);
            hits.push(make_ex(&segs[x], &segs[x], &h));
        }
        for y in x + 1..segs.len() {
            let (i, j) = (&segs[x], &segs[y]);
            let consecutive = i.comp == j.comp && ord[y] == ord[x] + 1;
            for h in seg_hits(&i.placed, &j.placed) {
                if consecutive && h.t >= 1.0 - ADJ_PARAM && h.u <= ADJ_PARAM {
                    continue;
                }
                hits.push(make_ex(i, j, &h));
            }
        }
    }

    // On a closed component the start and the end are the same node, so a
    // hit joining them is ordinary passage, not a crossing.
    hits.retain(|h| {
        if h.comp_a != h.comp_b {
            return true;
        }
        let m = &info[h.comp_a];
        let (lo, hi) = (m.eff(h.ga.min(h.gb)), m.eff(h.ga.max(h.gb)));
        !(m.closed && lo <= ADJ_PARAM && hi >= m.total() - ADJ_PARAM)
    });

    dedup_path_hits(&mut hits, &info, &info);
    hits
}

/// Builds per-component cut lists from one side of a hit list, merging
/// cuts that land within the dedup radius of each other.
fn cuts_from(hits: &[HitEx], take_a: bool, info: &[CompMeasure]) -> BTreeMap<usize, Vec<f64>> {
    let mut map: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for h in hits {
        let (c, g) = if take_a { (h.comp_a, h.ga) } else { (h.comp_b, h.gb) };
        map.entry(c).or_default().push(g);
    }
    for (&c, gs) in map.iter_mut() {
        let m = &info[c];
        gs.sort_by(f64::total_cmp);
        gs.dedup_by(|next, kept| (m.eff(*next) - m.eff(*kept)).abs() <= DEDUP_PARAM);
        if m.closed && gs.len() >= 2 && m.eff(gs[0]) + m.total() - m.eff(gs[gs.len() - 1]) <= DEDUP_PARAM
        {
            gs.pop();
        }
    }
    map
}

impl SoftPath {
    /// All crossings between this path and `other`, sorted along this path.
    pub fn intersections_with(&self, other: &SoftPath) -> Vec<IntersectionHit> {
        cross_hits(self, other).into_iter().map(|h| h.hit).collect()
    }

    /// All places where this path crosses itself.  The shared endpoints of
    /// consecutive segments (and of a closed component's seam) do not count;
    /// a single cubic crossing itself does.
    pub fn self_intersections(&self) -> Vec<IntersectionHit> {
        self_hits(self).into_iter().map(|h| h.hit).collect()
    }

    /// Breaks the path at every self-intersection (both passages).
    pub fn split_self(&self) -> SoftPath {
        let hits = self_hits(self);
        let info = comp_measures(self);
        let mut map: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
        for h in &hits {
            map.entry(h.comp_a).or_default().push(h.ga);
            map.entry(h.comp_b).or_default().push(h.gb);
        }
        for (&c, gs) in map.iter_mut() {
            let m = &info[c];
            gs.sort_by(f64::total_cmp);
            gs.dedup_by(|next, kept| (m.eff(*next) - m.eff(*kept)).abs() <= DEDUP_PARAM);
            if m.closed
                && gs.len() >= 2
                && m.eff(gs[0]) + m.total() - m.eff(gs[gs.len() - 1]) <= DEDUP_PARAM
            {
                gs.pop();
            }
        }
        carve_concat(self, &map)
    }

    /// Breaks this path wherever `other` crosses it; `other` is untouched.
    pub fn split_with(&self, other: &SoftPath) -> SoftPath {
        let hits = cross_hits(self, other);
        carve_concat(self, &cuts_from(&hits, true, &comp_measures(self)))
    }

    /// Breaks both paths at their shared crossings, computed once so the
    /// two sides break at matching points.
    pub fn split_both(&self, other: &SoftPath) -> (SoftPath, SoftPath) {
        let hits = cross_hits(self, other);
        let a = carve_concat(self, &cuts_from(&hits, true, &comp_measures(self)));
        let b = carve_concat(other, &cuts_from(&hits, false, &comp_measures(other)));
        (a, b)
    }

    /// Rewrites every stored line as the equivalent cubic (handles at the
    /// third points), so later deformations can bend it.  Implied closing
    /// edges stay implied.
    pub fn replace_lines(&self) -> SoftPath {
        SoftPath::from_components(
            self.components
                .iter()
                .map(|comp| {
                    let mut segments = Vec::with_capacity(comp.segments.len());
                    for p in comp.placed() {
                        segments.push(match p.segment {
                            Segment::Line { to } => {
                                let d = to - p.start;
                                Segment::Cubic {
                                    c1: p.start + d * (1.0 / 3.0),
                                    c2: p.start + d * (2.0 / 3.0),
                                    to,
                                }
                            }
                            s => s,
                        });
                    }
                    crate::path::Component {
                        start: comp.start,
                        segments,
                        closed: comp.closed,
                    }
                })
                .collect(),
        )
    }
}
