//! Parsing of SVG-style path data and of transform strings.

use crate::geom::{arc_to_cubics, Point, Transform2D, Vec2};
use crate::path::{Component, Segment, SoftPath};

/// A syntax error, with the byte offset at which it was detected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into() }
    }
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer { bytes: input.as_bytes(), pos: 0 }
    }

    fn skip_separators(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_whitespace() || b == b',' {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_separators();
        self.pos >= self.bytes.len()
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_separators();
        self.bytes.get(self.pos).copied()
    }

    /// Consumes and returns a command letter, if one is next.
    fn command(&mut self) -> Option<u8> {
        match self.peek() {
            Some(b) if b.is_ascii_alphabetic() => {
                self.pos += 1;
                Some(b)
            }
            _ => None,
        }
    }

    fn number(&mut self) -> Result<f64, ParseError> {
        self.skip_separators();
        let start = self.pos;
        if matches!(self.bytes.get(self.pos), Some(b'+') | Some(b'-')) {
            self.pos += 1;
        }
        let int_digits = self.digits();
        let mut frac_digits = 0;
        if self.bytes.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            frac_digits = self.digits();
        }
        if int_digits + frac_digits == 0 {
            return Err(ParseError::new(start, "expected a number"));
        }
        if matches!(self.bytes.get(self.pos), Some(b'e') | Some(b'E')) {
            self.pos += 1;
            if matches!(self.bytes.get(self.pos), Some(b'+') | Some(b'-')) {
                self.pos += 1;
            }
            if self.digits() == 0 {
                return Err(ParseError::new(self.pos, "expected exponent digits"));
            }
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let value: f64 = text
            .parse()
            .map_err(|_| ParseError::new(start, format!("bad number {text:?}")))?;
        if !value.is_finite() {
            return Err(ParseError::new(start, format!("number {text:?} out of range")));
        }
        Ok(value)
    }

    fn digits(&mut self) -> usize {
        let start = self.pos;
        while matches!(self.bytes.get(self.pos), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        self.pos - start
    }

    fn flag(&mut self) -> Result<bool, ParseError> {
        let at = self.pos;
        match self.number()? {
            x if x == 0.0 => Ok(false),
            x if x == 1.0 => Ok(true),
            x => Err(ParseError::new(at, format!("flag must be 0 or 1, got {x}"))),
        }
    }

    /// Expects a literal byte, skipping only whitespace first (`peek` would
    /// eat commas, which this must be able to match).
    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        while matches!(self.bytes.get(self.pos), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
        if self.bytes.get(self.pos) == Some(&byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(self.pos, format!("expected {:?}", byte as char)))
        }
    }

    fn ident(&mut self) -> Result<&'a str, ParseError> {
        self.skip_separators();
        let start = self.pos;
        while matches!(self.bytes.get(self.pos), Some(b) if b.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::new(start, "expected a name"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }
}

struct Builder {
    done: Vec<Component>,
    current: Option<Component>,
    cursor: Point,
    subpath_start: Point,
    started: bool,
}

impl Builder {
    fn new() -> Self {
        Builder {
            done: Vec::new(),
            current: None,
            cursor: Point::default(),
            subpath_start: Point::default(),
            started: false,
        }
    }

    fn flush(&mut self) {
        if let Some(comp) = self.current.take() {
            self.done.push(comp);
        }
    }

    fn move_to(&mut self, p: Point) {
        self.flush();
        self.current = Some(Component::new(p));
        self.cursor = p;
        self.subpath_start = p;
        self.started = true;
    }

    /// The component under construction, opening a fresh one at the cursor
    /// after a closepath.
    fn current(&mut self, at: usize) -> Result<&mut Component, ParseError> {
        if !self.started {
            return Err(ParseError::new(at, "path must begin with a moveto"));
        }
        if self.current.is_none() {
            self.current = Some(Component::new(self.cursor));
        }
        Ok(self.current.as_mut().unwrap())
    }

    fn push(&mut self, at: usize, segment: Segment) -> Result<(), ParseError> {
        // Fetch the component before moving the cursor: after a closepath,
        // `current` reopens at the old cursor (the subpath start).
        let to = segment.to();
        self.current(at)?.segments.push(segment);
        self.cursor = to;
        Ok(())
    }

    fn close(&mut self, at: usize) -> Result<(), ParseError> {
        if !self.started {
            return Err(ParseError::new(at, "path must begin with a moveto"));
        }
        if let Some(mut comp) = self.current.take() {
            comp.closed = true;
            self.done.push(comp);
        }
        self.cursor = self.subpath_start;
        Ok(())
    }

    fn finish(mut self) -> SoftPath {
        self.flush();
        SoftPath::from_components(self.done)
    }
}

/// Parses SVG 1.1 path data (the `M L C Q A H V Z` subset, upper- and
/// lowercase) into a [`SoftPath`].
///
/// Quadratics are degree-elevated to cubics and arcs are converted through
/// [`arc_to_cubics`], so the result contains only lines and cubics.  Each
/// `Z` marks its component closed; a drawing command after `Z` starts a new
/// component at the closed subpath's start, as in SVG.
pub fn parse_path(input: &str) -> Result<SoftPath, ParseError> {
    let mut lx = Lexer::new(input);
    let mut b = Builder::new();
    let mut last_command: Option<u8> = None;

    while !lx.at_end() {
        let at = lx.pos;
        let command = match lx.command() {
            Some(c) => c,
            // No letter: repeat the previous command (an M/m repeat draws
            // lines, per SVG).
            None => match last_command {
                Some(b'M') => b'L',
                Some(b'm') => b'l',
                Some(c) => c,
                None => return Err(ParseError::new(at, "expected a command letter")),
            },
        };
        last_command = Some(command);

        let relative = command.is_ascii_lowercase();
        let base = |b: &Builder| if relative { b.cursor } else { Point::default() };

        match command.to_ascii_uppercase() {
            b'M' => {
                let origin = if b.started { base(&b) } else { Point::default() };
                let x = lx.number()?;
                let y = lx.number()?;
                b.move_to(Point::new(origin.x + x, origin.y + y));
            }
            b'L' => {
                let o = base(&b);
                let x = lx.number()?;
                let y = lx.number()?;
                b.push(at, Segment::Line { to: Point::new(o.x + x, o.y + y) })?;
            }
            b'H' => {
                let x = lx.number()?;
                let to = Point::new(if relative { b.cursor.x + x } else { x }, b.cursor.y);
                b.push(at, Segment::Line { to })?;
            }
            b'V' => {
                let y = lx.number()?;
                let to = Point::new(b.cursor.x, if relative { b.cursor.y + y } else { y });
                b.push(at, Segment::Line { to })?;
            }
            b'C' => {
                let o = base(&b);
                let nums: Vec<f64> = (0..6)
                    .map(|_| lx.number())
                    .collect::<Result<_, _>>()?;
                b.push(
                    at,
                    Segment::Cubic {
                        c1: Point::new(o.x + nums[0], o.y + nums[1]),
                        c2: Point::new(o.x + nums[2], o.y + nums[3]),
                        to: Point::new(o.x + nums[4], o.y + nums[5]),
                    },
                )?;
            }
            b'Q' => {
                let o = base(&b);
                let qx = lx.number()?;
                let qy = lx.number()?;
                let x = lx.number()?;
                let y = lx.number()?;
                let q = Point::new(o.x + qx, o.y + qy);
                let to = Point::new(o.x + x, o.y + y);
                let from = b.cursor;
                // Degree elevation: the cubic with these controls traces the
                // quadratic exactly.
                b.push(
                    at,
                    Segment::Cubic {
                        c1: from + (q - from) * (2.0 / 3.0),
                        c2: to + (q - to) * (2.0 / 3.0),
                        to,
                    },
                )?;
            }
            b'A' => {
                let rx = lx.number()?;
                let ry = lx.number()?;
                let xrot = lx.number()?;
                let large_arc = lx.flag()?;
                let sweep = lx.flag()?;
                let o = base(&b);
                let x = lx.number()?;
                let y = lx.number()?;
                let to = Point::new(o.x + x, o.y + y);
                let from = b.cursor;
                if from == to {
                    continue;
                }
                if rx == 0.0 || ry == 0.0 {
                    b.push(at, Segment::Line { to })?;
                    continue;
                }
                for seg in endpoint_arc(from, to, rx.abs(), ry.abs(), xrot, large_arc, sweep)
                    .map_err(|m| ParseError::new(at, m))?
                {
                    b.push(at, seg)?;
                }
            }
            b'Z' => {
                b.close(at)?;
            }
            other => {
                return Err(ParseError::new(
                    at,
                    format!("unsupported command {:?}", other as char),
                ));
            }
        }
    }
    Ok(b.finish())
}

/// Converts an SVG endpoint-parametrised arc to cubic segments, using the
/// usual endpoint-to-center mapping (out-of-range radii are scaled up just
/// enough to reach).
fn endpoint_arc(
    from: Point,
    to: Point,
    mut rx: f64,
    mut ry: f64,
    xrot_deg: f64,
    large_arc: bool,
    sweep: bool,
) -> Result<Vec<Segment>, String> {
    let phi = xrot_deg.to_radians();
    let (sin_phi, cos_phi) = phi.sin_cos();

    // Midpoint frame: rotate the chord by -phi.
    let hx = (from.x - to.x) / 2.0;
    let hy = (from.y - to.y) / 2.0;
    let x1p = cos_phi * hx + sin_phi * hy;
    let y1p = -sin_phi * hx + cos_phi * hy;

    let lambda = x1p * x1p / (rx * rx) + y1p * y1p / (ry * ry);
    if lambda > 1.0 {
        let s = lambda.sqrt();
        rx *= s;
        ry *= s;
    }

    let num = rx * rx * ry * ry - rx * rx * y1p * y1p - ry * ry * x1p * x1p;
    let den = rx * rx * y1p * y1p + ry * ry * x1p * x1p;
    if den == 0.0 {
        return Err("arc endpoints coincide".to_string());
    }
    let mut coef = (num.max(0.0) / den).sqrt();
    if large_arc == sweep {
        coef = -coef;
    }
    let cxp = coef * rx * y1p / ry;
    let cyp = -coef * ry * x1p / rx;

    let center = Point::new(
        cos_phi * cxp - sin_phi * cyp + (from.x + to.x) / 2.0,
        sin_phi * cxp + cos_phi * cyp + (from.y + to.y) / 2.0,
    );

    let angle_of = |x: f64, y: f64| Vec2::new(1.0, 0.0).angle_to(Vec2::new(x, y));
    let theta1 = angle_of((x1p - cxp) / rx, (y1p - cyp) / ry);
    let theta2 = angle_of((-x1p - cxp) / rx, (-y1p - cyp) / ry);
    let mut delta = theta2 - theta1;
    if sweep && delta < 0.0 {
        delta += std::f64::consts::TAU;
    } else if !sweep && delta > 0.0 {
        delta -= std::f64::consts::TAU;
    }

    // Build the arc about the origin in the unrotated frame, then carry it
    // onto the page.
    let place = Transform2D::rotation(phi).then(&Transform2D::translation(center.x, center.y));
    let cubics = arc_to_cubics(
        Point::default(),
        rx,
        ry,
        theta1.to_degrees(),
        (theta1 + delta).to_degrees(),
    )
    .map_err(|e| e.to_string())?;

    let mut out = Vec::with_capacity(cubics.len());
    for (i, &(c1, c2, end)) in cubics.iter().enumerate() {
        let last = i + 1 == cubics.len();
        out.push(Segment::Cubic {
            c1: place.apply(c1),
            c2: place.apply(c2),
            // Land exactly on the requested endpoint.
            to: if last { to } else { place.apply(end) },
        });
    }
    Ok(out)
}

/// Parses a transform string: a sequence of
/// `shift(dx,dy)`, `rotate(deg)`, `scale(s)`, `xscale(sx)`, `yscale(sy)`
/// items separated by spaces or commas.  The leftmost item is applied to
/// the path first.  The empty string yields the identity.
pub fn parse_transform(input: &str) -> Result<Transform2D, ParseError> {
    let mut lx = Lexer::new(input);
    let mut acc = Transform2D::identity();
    while !lx.at_end() {
        let at = lx.pos;
        let name = lx.ident()?;
        lx.expect(b'(')?;
        let first = lx.number()?;
        let item = match name {
            "shift" => {
                lx.expect(b',')?;
                let second = lx.number()?;
                Transform2D::translation(first, second)
            }
            "rotate" => Transform2D::rotation(first.to_radians()),
            "scale" => Transform2D::scale(first, first),
            "xscale" => Transform2D::scale(first, 1.0),
            "yscale" => Transform2D::scale(1.0, first),
            other => {
                return Err(ParseError::new(at, format!("unknown transform {other:?}")));
            }
        };
        lx.expect(b')')?;
        acc = acc.then(&item);
    }
    Ok(acc)
}
