//! A toolkit for manipulating *soft paths*: 2D paths that have already been
//! resolved into move / line / cubic-Bézier / close elements, the form in
//! which most vector back ends consume them.
//!
//! A [`SoftPath`] is an ordered list of [`Component`]s (pen strokes); each
//! component records its starting point, the segments drawn from it, and
//! whether it is closed.  On top of that model the crate provides:
//!
//! * an SVG-style path-data parser and a plain-text dump format
//!   ([`parse`], [`SoftPath::serialize`]),
//! * affine transforms, including the similarity that carries a path onto a
//!   pair of target endpoints ([`geom`]),
//! * a common parametrisation of a whole path by `t ∈ [0, 1]`, with
//!   splitting, trimming and frame extraction ([`param`]),
//! * intersection finding between and within paths, and splitting at the
//!   hits ([`intersect`]),
//! * component surgery: welding, gap insertion, joining with splices or
//!   single Hobby curves, closing, appending ([`edit`], [`hobby`]),
//! * SVG export with per-component styling hooks ([`svg`]),
//! * a small scripting interface driving all of the above ([`script`]),
//!   exposed by the `softpath` binary.
//!
//! The `examples/` directory walks through each capability with runnable
//! programs; start with `save_and_use`.

pub mod edit;
pub mod geom;
pub mod hobby;
pub mod intersect;
pub mod param;
pub mod parse;
pub mod path;
pub mod script;
pub mod svg;

pub use edit::{AppendOptions, CloseMode};
pub use geom::{Point, Transform2D, Vec2};
pub use intersect::IntersectionHit;
pub use param::{Frame, KeepMode, PathEnd, PathLocation};
pub use parse::{parse_path, parse_transform, ParseError};
pub use path::{Component, PlacedSegment, Registry, Segment, SoftPath};
pub use svg::SvgStyle;

use std::fmt;

/// Everything that can go irrecoverably wrong in a path operation.
///
/// Conditions that an operation can reasonably shrug off (an index out of
/// range, a junction too degenerate to bridge) are reported as [`Warning`]s
/// on a [`Warned`] result instead, so that batch processing keeps going.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("no path named {0:?}")]
    UnknownPath(String),
    #[error("path is empty")]
    EmptyPath,
    #[error("span endpoints are too close together (|p1 - p0| <= {0})")]
    DegenerateSpan(f64),
    #[error("direction vector has zero length")]
    ZeroTangent,
    #[error("invalid arc: {0}")]
    InvalidArc(String),
    #[error("parameter {0} outside [0, 1]")]
    ParameterOutOfRange(f64),
    #[error("invalid parameter range: {0} > {1}")]
    InvalidRange(f64, f64),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A non-fatal condition raised while an operation still produced a result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Warning(String);

impl Warning {
    pub fn new(message: impl Into<String>) -> Self {
        Warning(message.into())
    }

    pub fn message(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A value together with the warnings accumulated while computing it.
#[derive(Debug, Clone, PartialEq)]
pub struct Warned<T> {
    pub value: T,
    pub warnings: Vec<Warning>,
}

impl<T> Warned<T> {
    /// Wraps a value that produced no warnings.
    pub fn clean(value: T) -> Self {
        Warned { value, warnings: Vec::new() }
    }

    pub fn new(value: T, warnings: Vec<Warning>) -> Self {
        Warned { value, warnings }
    }

    pub fn push(&mut self, message: impl Into<String>) {
        self.warnings.push(Warning::new(message));
    }

    /// Moves another result's warnings onto this one and returns its value.
    pub fn absorb<U>(&mut self, other: Warned<U>) -> U {
        self.warnings.extend(other.warnings);
        other.value
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Warned<U> {
        Warned { value: f(self.value), warnings: self.warnings }
    }

    pub fn into_parts(self) -> (T, Vec<Warning>) {
        (self.value, self.warnings)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
