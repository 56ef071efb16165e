//! A single cubic from endpoint directions, in the style of METAFONT's
//! most-pleasing-curve machinery.
//!
//! Given where a curve must start and end and the direction of travel at
//! each end, [`hobby_segment`] picks control-handle lengths with the classic
//! velocity function, which makes collinear data come out as a straight
//! (well, uniform) cubic and reproduces circular arcs to visual accuracy.

use crate::geom::{Point, Vec2, SPAN_EPSILON};
use crate::path::Segment;
use crate::{Error, Result, Warned};
use std::f64::consts::PI;

/// Lower/upper bounds on the control-handle length as a fraction of the
/// chord.  The velocity function blows up as both turning angles approach a
/// half-turn; capping keeps the cubic usable (and matches the traditional
/// velocity ceiling of 4).
const MIN_FRACTION: f64 = 0.01;
const MAX_FRACTION: f64 = 4.0;

/// Builds the cubic from `p0` to `p1` leaving along `dir0` and arriving
/// along `dir1`.  Directions need not be normalised.
///
/// Fails with [`Error::DegenerateSpan`] when the endpoints (nearly)
/// coincide and [`Error::ZeroTangent`] when a direction is zero.  Warns
/// when the turn is so close to a reversal that the handle lengths had to
/// be capped.
pub fn hobby_segment(p0: Point, dir0: Vec2, p1: Point, dir1: Vec2) -> Result<Warned<Segment>> {
    let chord = p1 - p0;
    let len = chord.norm();
    if len <= SPAN_EPSILON {
        return Err(Error::DegenerateSpan(len));
    }
    let u0 = dir0.unit().ok_or(Error::ZeroTangent)?;
    let u1 = dir1.unit().ok_or(Error::ZeroTangent)?;

    // Turning angles: leaving the chord at θ, meeting it again at φ.
    let theta = chord.angle_to(dir0);
    let phi = dir1.angle_to(chord);

    let mut out = Warned::clean(());
    if theta.abs().max(phi.abs()) > PI - 0.1 {
        out.push("join nearly reverses direction; control handles are capped");
    }

    let f0 = (velocity(theta, phi) / 3.0).clamp(MIN_FRACTION, MAX_FRACTION);
    let f1 = (velocity(phi, theta) / 3.0).clamp(MIN_FRACTION, MAX_FRACTION);
    let c1 = p0 + u0 * (f0 * len);
    let c2 = p1 - u1 * (f1 * len);
    Ok(out.map(|()| Segment::Cubic { c1, c2, to: p1 }))
}

/// The velocity function: relative speed to leave the first endpoint with,
/// given the two turning angles.  Symmetric data gives 1 (handles at one
/// third of the chord); the denominator vanishes only as both angles reach
/// a half-turn, which the caller clamps away.
fn velocity(theta: f64, phi: f64) -> f64 {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    let sqrt5 = 5.0_f64.sqrt();
    let numer = 2.0 + 2.0_f64.sqrt() * (st - sp / 16.0) * (sp - st / 16.0) * (ct - cp);
    let denom = 1.0 + 0.5 * (sqrt5 - 1.0) * ct + 0.5 * (3.0 - sqrt5) * cp;
    numer / denom
}
