//! Points, vectors and plane affine transforms.

use crate::{Error, Result};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

/// Two endpoints closer than this cannot anchor a similarity transform.
pub const SPAN_EPSILON: f64 = 0.01;

/// A location in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// A displacement between two [`Point`]s.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub dx: f64,
    pub dy: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite(), "non-finite coordinate");
        Point { x, y }
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        Point::new(self.x + (other.x - self.x) * t, self.y + (other.y - self.y) * t)
    }

    pub fn distance(self, other: Point) -> f64 {
        (other - self).norm()
    }
}

impl Vec2 {
    pub fn new(dx: f64, dy: f64) -> Self {
        Vec2 { dx, dy }
    }

    pub fn norm(self) -> f64 {
        self.dx.hypot(self.dy)
    }

    pub fn norm_squared(self) -> f64 {
        self.dx * self.dx + self.dy * self.dy
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.dx * other.dx + self.dy * other.dy
    }

    /// The z-component of the cross product; positive when `other` lies
    /// counterclockwise of `self`.
    pub fn cross(self, other: Vec2) -> f64 {
        self.dx * other.dy - self.dy * other.dx
    }

    /// Direction angle in radians, in `(-π, π]`.
    pub fn angle(self) -> f64 {
        self.dy.atan2(self.dx)
    }

    /// Counterclockwise-positive angle from `self` to `other`.
    pub fn angle_to(self, other: Vec2) -> f64 {
        self.cross(other).atan2(self.dot(other))
    }

    pub fn unit(self) -> Option<Vec2> {
        let n = self.norm();
        if n == 0.0 {
            None
        } else {
            Some(Vec2::new(self.dx / n, self.dy / n))
        }
    }
}

impl Sub for Point {
    type Output = Vec2;
    fn sub(self, other: Point) -> Vec2 {
        Vec2::new(self.x - other.x, self.y - other.y)
    }
}

impl Add<Vec2> for Point {
    type Output = Point;
    fn add(self, v: Vec2) -> Point {
        Point::new(self.x + v.dx, self.y + v.dy)
    }
}

impl Sub<Vec2> for Point {
    type Output = Point;
    fn sub(self, v: Vec2) -> Point {
        Point::new(self.x - v.dx, self.y - v.dy)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, other: Vec2) -> Vec2 {
        Vec2::new(self.dx + other.dx, self.dy + other.dy)
    }
}

impl AddAssign for Vec2 {
    fn add_assign(&mut self, other: Vec2) {
        *self = *self + other;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, other: Vec2) -> Vec2 {
        Vec2::new(self.dx - other.dx, self.dy - other.dy)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.dx * s, self.dy * s)
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    fn div(self, s: f64) -> Vec2 {
        Vec2::new(self.dx / s, self.dy / s)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.dx, -self.dy)
    }
}

/// An affine map of the plane, stored as the six coefficients of
///
/// ```text
/// (x, y) ↦ (a·x + c·y + e,  b·x + d·y + f)
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transform2D {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

impl Default for Transform2D {
    fn default() -> Self {
        Transform2D::identity()
    }
}

impl Transform2D {
    pub fn identity() -> Self {
        Transform2D { a: 1.0, b: 0.0, c: 0.0, d: 1.0, e: 0.0, f: 0.0 }
    }

    pub fn translation(dx: f64, dy: f64) -> Self {
        Transform2D { a: 1.0, b: 0.0, c: 0.0, d: 1.0, e: dx, f: dy }
    }

    /// Counterclockwise rotation about the origin, in radians.
    pub fn rotation(radians: f64) -> Self {
        let (s, c) = radians.sin_cos();
        Transform2D { a: c, b: s, c: -s, d: c, e: 0.0, f: 0.0 }
    }

    pub fn scale(sx: f64, sy: f64) -> Self {
        Transform2D { a: sx, b: 0.0, c: 0.0, d: sy, e: 0.0, f: 0.0 }
    }

    pub fn apply(&self, p: Point) -> Point {
        Point::new(self.a * p.x + self.c * p.y + self.e, self.b * p.x + self.d * p.y + self.f)
    }

    /// The map that applies `self` first and `next` after it.
    pub fn then(&self, next: &Transform2D) -> Transform2D {
        Transform2D {
            a: next.a * self.a + next.c * self.b,
            b: next.b * self.a + next.d * self.b,
            c: next.a * self.c + next.c * self.d,
            d: next.b * self.c + next.d * self.d,
            e: next.a * self.e + next.c * self.f + next.e,
            f: next.b * self.e + next.d * self.f + next.f,
        }
    }

    pub fn determinant(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }
}

/// The direct similarity (rotation + uniform scale + translation, never a
/// reflection) that carries `p0` to `q0` and `p1` to `q1`.
///
/// Treating the plane as complex numbers, the map is
/// `z ↦ w·(z − p0) + q0` with `w = (q1 − q0)/(p1 − p0)`, so it errors when
/// `p0` and `p1` are within [`SPAN_EPSILON`] of each other.
pub fn similarity_from_endpoints(p0: Point, p1: Point, q0: Point, q1: Point) -> Result<Transform2D> {
    let d = p1 - p0;
    if d.norm() <= SPAN_EPSILON {
        return Err(Error::DegenerateSpan(SPAN_EPSILON));
    }
    let e = q1 - q0;
    let den = d.norm_squared();
    let wr = (e.dx * d.dx + e.dy * d.dy) / den;
    let wi = (e.dy * d.dx - e.dx * d.dy) / den;
    let (a, b, c, dd) = (wr, wi, -wi, wr);
    Ok(Transform2D {
        a,
        b,
        c,
        d: dd,
        e: q0.x - (a * p0.x + c * p0.y),
        f: q0.y - (b * p0.x + dd * p0.y),
    })
}

/// Approximates an axis-aligned elliptical arc by cubic Bézier segments.
///
/// The arc runs on the ellipse `center + (rx·cos θ, ry·sin θ)` from
/// `start_deg` to `end_deg` (negative sweeps allowed, at most a full turn).
/// It is cut into pieces of at most 90° and each piece becomes one cubic
/// with the classic tangent factor `k = (4/3)·tan(Δ/4)`, keeping the radial
/// error below `3e-4 · max(rx, ry)`.
///
/// Returns `(c1, c2, to)` control triples; the start point,
/// `center + (rx·cos start, ry·sin start)`, is implicit.
pub fn arc_to_cubics(
    center: Point,
    rx: f64,
    ry: f64,
    start_deg: f64,
    end_deg: f64,
) -> Result<Vec<(Point, Point, Point)>> {
    if !(rx > 0.0 && ry > 0.0) {
        return Err(Error::InvalidArc(format!("radii must be positive, got {rx} x {ry}")));
    }
    let sweep = end_deg - start_deg;
    if sweep.abs() > 360.0 + 1e-9 {
        return Err(Error::InvalidArc(format!("sweep {sweep}° exceeds a full turn")));
    }
    if sweep == 0.0 {
        return Ok(Vec::new());
    }

    let pieces = (sweep.abs() / 90.0).ceil().max(1.0);
    let step = (sweep / pieces).to_radians();
    let k = 4.0 / 3.0 * (step / 4.0).tan();
    let start = start_deg.to_radians();

    let eval = |theta: f64| Point::new(center.x + rx * theta.cos(), center.y + ry * theta.sin());
    let deriv = |theta: f64| Vec2::new(-rx * theta.sin(), ry * theta.cos());

    let mut out = Vec::with_capacity(pieces as usize);
    for i in 0..pieces as usize {
        let t0 = start + step * i as f64;
        let t1 = t0 + step;
        out.push((eval(t0) + deriv(t0) * k, eval(t1) - deriv(t1) * k, eval(t1)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn assert_close(p: Point, q: Point, tol: f64) {
        assert!(p.distance(q) <= tol, "{p:?} vs {q:?}");
    }

    #[test]
    fn apply_matches_coefficients() {
        let t = Transform2D { a: 2.0, b: 0.5, c: -1.0, d: 3.0, e: 10.0, f: -2.0 };
        let p = t.apply(Point::new(2.0, 4.0));
        assert_eq!(p, Point::new(2.0 * 2.0 - 1.0 * 4.0 + 10.0, 0.5 * 2.0 + 3.0 * 4.0 - 2.0));
    }

    #[test]
    fn composition_applies_left_map_first() {
        let rot = Transform2D::rotation(45f64.to_radians());
        let sx = Transform2D::scale(2.0, 1.0);
        let sy = Transform2D::scale(1.0, 3.0);
        let combined = rot.then(&sx).then(&sy);

        let corner = Point::new(1.0, 1.0);
        let by_stages = sy.apply(sx.apply(rot.apply(corner)));
        assert_close(combined.apply(corner), by_stages, 1e-12);
        // rotate(45°) sends (1,1) to (0, √2); the scales then stretch y.
        assert_close(by_stages, Point::new(0.0, 3.0 * 2f64.sqrt()), 1e-12);
    }

    #[test]
    fn composition_is_associative() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let mut random = || Transform2D {
                a: rng.gen_range(-2.0..2.0),
                b: rng.gen_range(-2.0..2.0),
                c: rng.gen_range(-2.0..2.0),
                d: rng.gen_range(-2.0..2.0),
                e: rng.gen_range(-5.0..5.0),
                f: rng.gen_range(-5.0..5.0),
            };
            let (t1, t2, t3) = (random(), random(), random());
            let p = Point::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let left = t1.then(&t2).then(&t3);
            let right = t1.then(&t2.then(&t3));
            assert_close(left.apply(p), right.apply(p), 1e-9);
        }
    }

    #[test]
    fn similarity_carries_endpoints_exactly() {
        let t = similarity_from_endpoints(
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(4.0, 5.0),
            Point::new(7.0, 1.0),
        )
        .unwrap();
        assert_close(t.apply(Point::new(0.0, 0.0)), Point::new(4.0, 5.0), 1e-9);
        assert_close(t.apply(Point::new(1.0, 0.0)), Point::new(7.0, 1.0), 1e-9);
        // |(7,1)-(4,5)| = 5, so the scale factor is 5 and the midpoint maps
        // to the midpoint.
        assert_close(t.apply(Point::new(0.5, 0.0)), Point::new(5.5, 3.0), 1e-9);
        assert!((t.determinant() - 25.0).abs() < 1e-9);
        assert_eq!(t.a, t.d);
        assert_eq!(t.b, -t.c);
    }

    #[test]
    fn similarity_random_pairs_never_reflect() {
        let mut rng = StdRng::seed_from_u64(90210);
        for _ in 0..1000 {
            let mut pt =
                |lo: f64, hi: f64| Point::new(rng.gen_range(lo..hi), rng.gen_range(lo..hi));
            let p0 = pt(-50.0, 50.0);
            let mut p1 = pt(-50.0, 50.0);
            if (p1 - p0).norm() <= SPAN_EPSILON {
                p1 = p0 + Vec2::new(1.0, 0.0);
            }
            let q0 = pt(-50.0, 50.0);
            let q1 = pt(-50.0, 50.0);
            let t = similarity_from_endpoints(p0, p1, q0, q1).unwrap();
            assert_close(t.apply(p0), q0, 1e-9);
            assert_close(t.apply(p1), q1, 1e-9);
            if q0.distance(q1) > 1e-6 {
                assert!(t.determinant() > 0.0, "similarity must preserve orientation");
            }
        }
    }

    #[test]
    fn similarity_rejects_coincident_sources() {
        let err = similarity_from_endpoints(
            Point::new(1.0, 1.0),
            Point::new(1.0, 1.005),
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
        )
        .unwrap_err();
        assert!(matches!(err, Error::DegenerateSpan(_)));
    }

    // Independent Bernstein-basis evaluation, for checking emitted controls.
    fn bernstein(p0: Point, c1: Point, c2: Point, p3: Point, t: f64) -> Point {
        let u = 1.0 - t;
        let (b0, b1, b2, b3) = (u * u * u, 3.0 * u * u * t, 3.0 * u * t * t, t * t * t);
        Point::new(
            b0 * p0.x + b1 * c1.x + b2 * c2.x + b3 * p3.x,
            b0 * p0.y + b1 * c1.y + b2 * c2.y + b3 * p3.y,
        )
    }

    #[test]
    fn quarter_circle_uses_the_classic_tangent_factor() {
        let cubics = arc_to_cubics(Point::new(0.0, 0.0), 1.0, 1.0, 0.0, 90.0).unwrap();
        assert_eq!(cubics.len(), 1);
        let (c1, c2, to) = cubics[0];
        let k = 4.0 / 3.0 * (90f64.to_radians() / 4.0).tan();
        assert!((k - 0.5522847498).abs() < 1e-9);
        assert_close(c1, Point::new(1.0, k), 1e-12);
        assert_close(c2, Point::new(k, 1.0), 1e-12);
        assert_close(to, Point::new(0.0, 1.0), 1e-12);
    }

    #[test]
    fn arcs_split_into_at_most_quarter_turns() {
        let half = arc_to_cubics(Point::new(0.0, 0.0), 1.0, 1.0, 0.0, 180.0).unwrap();
        assert_eq!(half.len(), 2);
        assert_close(half[0].2, Point::new(0.0, 1.0), 1e-12);
        assert_close(half[1].2, Point::new(-1.0, 0.0), 1e-12);

        let full = arc_to_cubics(Point::new(0.0, 0.0), 2.0, 1.0, -30.0, 330.0).unwrap();
        assert_eq!(full.len(), 4);

        let tiny = arc_to_cubics(Point::new(0.0, 0.0), 1.0, 1.0, 10.0, 11.0).unwrap();
        assert_eq!(tiny.len(), 1);
    }

    #[test]
    fn arc_radial_error_stays_small() {
        for &(rx, ry, a0, a1) in &[
            (1.0, 1.0, 0.0, 90.0),
            (1.0, 1.0, 0.0, -90.0),
            (3.0, 3.0, 17.0, 352.0),
            (2.0, 2.0, 180.0, -180.0),
        ] {
            let center = Point::new(0.5, -0.25);
            let cubics = arc_to_cubics(center, rx, ry, a0, a1).unwrap();
            let mut p0 = Point::new(
                center.x + rx * a0.to_radians().cos(),
                center.y + ry * a0.to_radians().sin(),
            );
            let bound = 3e-4 * rx.max(ry);
            for &(c1, c2, to) in &cubics {
                for i in 0..=1000 {
                    let q = bernstein(p0, c1, c2, to, i as f64 / 1000.0);
                    let r = (q - center).norm();
                    assert!((r - rx).abs() < bound, "radial error {} at {q:?}", (r - rx).abs());
                }
                p0 = to;
            }
        }
    }

    #[test]
    fn arc_rejects_bad_inputs() {
        assert!(matches!(
            arc_to_cubics(Point::new(0.0, 0.0), 0.0, 1.0, 0.0, 90.0),
            Err(Error::InvalidArc(_))
        ));
        assert!(matches!(
            arc_to_cubics(Point::new(0.0, 0.0), 1.0, 1.0, 0.0, 400.0),
            Err(Error::InvalidArc(_))
        ));
        assert_eq!(arc_to_cubics(Point::new(0.0, 0.0), 1.0, 1.0, 45.0, 45.0).unwrap(), Vec::new());
    }
}
