//! Line-oriented script interpreter over a named-path registry.
//!
//! One command per line, `#` starts a comment, double quotes group a token.
//! Errors the script text itself pins down — unknown verbs, wrong arity,
//! malformed numbers, index lists or path data — abort with the offending
//! line number.  Conditions that depend on interpreter state (a missing
//! path, an empty path, a degenerate span) only warn, and the script keeps
//! running; a whole script of such commands still exits cleanly.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use crate::edit::{AppendOptions, CloseMode};
use crate::param::{KeepMode, PathEnd};
use crate::parse::{parse_path, parse_transform};
use crate::path::{fmt_num, Registry, SoftPath};
use crate::svg::{to_svg, SvgStyle};
use crate::{Vec2, Warned};

/// A script-text problem: reported with its 1-based line and fatal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ScriptError {}

/// The interpreter: a registry of named paths plus buffered output and
/// warning lines (the binary prints them to stdout/stderr respectively).
pub struct Interp {
    pub registry: Registry,
    out_dir: PathBuf,
    pub outputs: Vec<String>,
    pub warnings: Vec<String>,
}

fn tokenize(line: &str) -> Result<Vec<String>, String> {
    let mut toks = Vec::new();
    let mut cur = String::new();
    let mut started = false;
    let mut in_quotes = false;
    for ch in line.chars() {
        if in_quotes {
            if ch == '"' {
                in_quotes = false;
            } else {
                cur.push(ch);
            }
            continue;
        }
        match ch {
            '"' => {
                in_quotes = true;
                started = true;
            }
            '#' => break,
            c if c.is_whitespace() => {
                if started {
                    toks.push(std::mem::take(&mut cur));
                    started = false;
                }
            }
            c => {
                cur.push(c);
                started = true;
            }
        }
    }
    if in_quotes {
        return Err("unterminated quote".to_string());
    }
    if started {
        toks.push(cur);
    }
    Ok(toks)
}

/// Numbers are unitless points; an optional `pt` suffix is stripped.
fn parse_num(tok: &str) -> Result<f64, String> {
    let body = tok.strip_suffix("pt").unwrap_or(tok);
    body.trim().parse::<f64>().map_err(|_| format!("'{tok}' is not a number"))
}

/// Index lists: comma-separated 1-based indices, with the arithmetic
/// progression form `a,b,...,c` expanded (step `b - a`, end inclusive).
fn parse_indices(tok: &str) -> Result<Vec<usize>, String> {
    let bad = || format!("'{tok}' is not an index list");
    let parts: Vec<&str> = tok.split(',').collect();
    let mut nums: Vec<i64> = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let part = parts[i].trim();
        if part == "..." {
            if nums.is_empty() || i + 2 != parts.len() {
                return Err(bad());
            }
            let end: i64 = parts[i + 1].trim().parse().map_err(|_| bad())?;
            let last = *nums.last().unwrap();
            let step = if nums.len() >= 2 {
                last - nums[nums.len() - 2]
            } else if end >= last {
                1
            } else {
                -1
            };
            if step == 0 {
                return Err(bad());
            }
            let mut v = last + step;
            while (step > 0 && v <= end) || (step < 0 && v >= end) {
                nums.push(v);
                v += step;
            }
            i += 2;
        } else {
            nums.push(part.parse().map_err(|_| bad())?);
            i += 1;
        }
    }
    nums.into_iter()
        .map(|n| usize::try_from(n).map_err(|_| bad()))
        .collect()
}

/// Parsed command line: flags pulled out, positionals kept in order.
struct Args {
    pos: Vec<String>,
    flags: BTreeSet<String>,
    transform: Option<String>,
}

fn split_args(toks: Vec<String>) -> Result<Args, String> {
    let mut args = Args { pos: Vec::new(), flags: BTreeSet::new(), transform: None };
    let mut it = toks.into_iter();
    while let Some(t) = it.next() {
        if t == "--transform" {
            args.transform =
                Some(it.next().ok_or_else(|| "--transform needs a value".to_string())?);
        } else if let Some(f) = t.strip_prefix("--") {
            args.flags.insert(f.to_string());
        } else {
            args.pos.push(t);
        }
    }
    Ok(args)
}

/// Looks up a path, warning and bailing out of the current line on a miss.
macro_rules! get_path {
    ($self:ident, $line:ident, $name:expr) => {
        match $self.registry.lookup($name) {
            Ok(p) => p.clone(),
            Err(e) => {
                $self.warn($line, e.to_string());
                return Ok(());
            }
        }
    };
}

/// Unwraps a library result, demoting errors to warnings.
macro_rules! try_op {
    ($self:ident, $line:ident, $expr:expr) => {
        match $expr {
            Ok(v) => v,
            Err(e) => {
                $self.warn($line, e.to_string());
                return Ok(());
            }
        }
    };
}

impl Interp {
    pub fn new(out_dir: impl Into<PathBuf>) -> Interp {
        Interp {
            registry: Registry::new(),
            out_dir: out_dir.into(),
            outputs: Vec::new(),
            warnings: Vec::new(),
        }
    }

    /// Runs a whole script, stopping at the first static error.
    pub fn run_script(&mut self, text: &str) -> Result<(), ScriptError> {
        for (i, line) in text.lines().enumerate() {
            self.run_line(line, i + 1)?;
        }
        Ok(())
    }

    fn warn(&mut self, line: usize, message: impl fmt::Display) {
        self.warnings.push(format!("line {line}: {message}"));
    }

    fn emit(&mut self, text: impl Into<String>) {
        let mut text = text.into();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        self.outputs.push(text);
    }

    fn take<T>(&mut self, line: usize, warned: Warned<T>) -> T {
        let (value, warnings) = warned.into_parts();
        for w in warnings {
            self.warn(line, w.message());
        }
        value
    }

    /// Executes one command line (1-based `line` number for diagnostics).
    pub fn run_line(&mut self, raw: &str, line: usize) -> Result<(), ScriptError> {
        let fail = |message: String| ScriptError { line, message };
        let mut toks = tokenize(raw).map_err(fail)?;
        if toks.is_empty() {
            return Ok(());
        }
        let verb = toks.remove(0);
        let args = split_args(toks).map_err(fail)?;

        let allowed_flags: &[&str] = match verb.as_str() {
            "joinwith" | "frame" => &["upright"],
            "append" => &["reverse", "move", "weld"],
            "knot" => &["draft"],
            _ => &[],
        };
        for flag in &args.flags {
            if !allowed_flags.contains(&flag.as_str()) {
                return Err(fail(format!("unknown flag --{flag} for '{verb}'")));
            }
        }
        if args.transform.is_some() && verb != "append" {
            return Err(fail(format!("'{verb}' takes no --transform")));
        }

        // Positional arity per verb: (min, max, usage).
        let (min, max, usage): (usize, usize, &str) = match verb.as_str() {
            "load" => (2, 2, "load name \"<path data>\""),
            "loadfile" => (2, 2, "loadfile name file"),
            "clone" => (2, 2, "clone target source"),
            "show" | "reverse" | "splitself" | "replacelines" | "components" | "spotweld"
            | "removeempty" | "open" | "close" | "adjustclose" | "closewithcurve" => {
                (1, 1, "verb name")
            }
            "translate" => (3, 3, "translate name dx dy"),
            "transform" => (2, 2, "transform name \"<transform>\""),
            "span" => (5, 5, "span name x0 y0 x1 y1"),
            "splitwith" | "splitboth" | "closewith" => (2, 2, "verb name other"),
            "gaps" | "gapsseg" => (2, 3, "verb name amount [indices]"),
            "join" | "joinwithcurve" => (1, 2, "verb name [indices]"),
            "joinwith" => (2, 3, "joinwith name splice [indices] [--upright]"),
            "remove" => (2, 2, "remove name indices"),
            "splice" => (3, 3, "splice initial middle final"),
            "shortenstart" | "shortenend" | "shortenboth" => (2, 2, "verb name length"),
            "splitat" | "keepstart" | "keepend" | "point" => (2, 2, "verb name t"),
            "frame" => (2, 2, "frame name t [--upright]"),
            "keepmiddle" => (3, 3, "keepmiddle name t1 t2"),
            "splitinto" => (4, 4, "splitinto start end source t"),
            "append" => (2, 2, "append target source [--reverse --move --weld --transform \"…\"]"),
            "knot" => (2, 3, "knot name gap [indices] [--draft]"),
            "svg" => (2, usize::MAX, "svg name... file"),
            other => return Err(fail(format!("unknown command '{other}'"))),
        };
        if args.pos.len() < min || args.pos.len() > max {
            return Err(fail(format!("usage: {usage}")));
        }
        let pos = &args.pos;

        match verb.as_str() {
            "load" => {
                let path = parse_path(&pos[1]).map_err(|e| fail(e.to_string()))?;
                self.registry.store(&pos[0], path);
            }
            "loadfile" => {
                let text = fs::read_to_string(&pos[1])
                    .map_err(|e| fail(format!("cannot read {}: {e}", pos[1])))?;
                let path = parse_path(&text).map_err(|e| fail(e.to_string()))?;
                self.registry.store(&pos[0], path);
            }
            "clone" => {
                let cloned = self.registry.clone_entry(&pos[0], &pos[1]);
                try_op!(self, line, cloned);
            }
            "show" => {
                let p = get_path!(self, line, &pos[0]);
                self.emit(p.serialize());
            }
            "reverse" => {
                let p = get_path!(self, line, &pos[0]);
                self.registry.store(&pos[0], p.reverse());
            }
            "translate" => {
                let dx = parse_num(&pos[1]).map_err(fail)?;
                let dy = parse_num(&pos[2]).map_err(fail)?;
                let p = get_path!(self, line, &pos[0]);
                self.registry.store(&pos[0], p.translate(Vec2::new(dx, dy)));
            }
            "transform" => {
                let m = parse_transform(&pos[1]).map_err(|e| fail(e.to_string()))?;
                let p = get_path!(self, line, &pos[0]);
                self.registry.store(&pos[0], p.transform(&m));
            }
            "span" => {
                let nums: Vec<f64> = pos[1..]
                    .iter()
                    .map(|t| parse_num(t))
                    .collect::<Result<_, _>>()
                    .map_err(fail)?;
                let p = get_path!(self, line, &pos[0]);
                let spanned = try_op!(
                    self,
                    line,
                    p.span(
                        crate::Point::new(nums[0], nums[1]),
                        crate::Point::new(nums[2], nums[3]),
                    )
                );
                self.registry.store(&pos[0], spanned);
            }
            "splitself" => {
                let p = get_path!(self, line, &pos[0]);
                self.registry.store(&pos[0], p.split_self());
            }
            "splitwith" => {
                let p = get_path!(self, line, &pos[0]);
                let other = get_path!(self, line, &pos[1]);
                self.registry.store(&pos[0], p.split_with(&other));
            }
            "splitboth" => {
                let a = get_path!(self, line, &pos[0]);
                let b = get_path!(self, line, &pos[1]);
                let (a2, b2) = a.split_both(&b);
                self.registry.store(&pos[0], a2);
                self.registry.store(&pos[1], b2);
            }
            "replacelines" => {
                let p = get_path!(self, line, &pos[0]);
                self.registry.store(&pos[0], p.replace_lines());
            }
            "components" => {
                let p = get_path!(self, line, &pos[0]);
                let stale: Vec<String> = self
                    .registry
                    .names()
                    .into_iter()
                    .filter(|n| n.starts_with("anonymous_"))
                    .map(str::to_string)
                    .collect();
                for name in stale {
                    self.registry.remove(&name);
                }
                let parts = p.get_components();
                let count = parts.len();
                for (i, part) in parts.into_iter().enumerate() {
                    self.registry.store(format!("anonymous_{}", i + 1), part);
                }
                self.emit(count.to_string());
            }
            "gaps" | "gapsseg" => {
                let amount = parse_num(&pos[1]).map_err(fail)?;
                let indices = match pos.get(2) {
                    Some(t) => parse_indices(t).map_err(fail)?,
                    None => Vec::new(),
                };
                let p = get_path!(self, line, &pos[0]);
                let gapped = if verb == "gaps" {
                    p.insert_gaps_components(amount, &indices)
                } else {
                    p.insert_gaps_segments(amount, &indices)
                };
                let gapped = self.take(line, gapped);
                self.registry.store(&pos[0], gapped);
            }
            "join" => {
                let indices = match pos.get(1) {
                    Some(t) => parse_indices(t).map_err(fail)?,
                    None => Vec::new(),
                };
                let p = get_path!(self, line, &pos[0]);
                let joined = self.take(line, p.join_components(&indices));
                self.registry.store(&pos[0], joined);
            }
            "joinwith" => {
                let indices = match pos.get(2) {
                    Some(t) => parse_indices(t).map_err(fail)?,
                    None => Vec::new(),
                };
                let upright = args.flags.contains("upright");
                let p = get_path!(self, line, &pos[0]);
                let splice = get_path!(self, line, &pos[1]);
                let joined = try_op!(self, line, p.join_with(&splice, &indices, upright));
                let joined = self.take(line, joined);
                self.registry.store(&pos[0], joined);
            }
            "joinwithcurve" => {
                let indices = match pos.get(1) {
                    Some(t) => parse_indices(t).map_err(fail)?,
                    None => Vec::new(),
                };
                let p = get_path!(self, line, &pos[0]);
                let joined = self.take(line, p.join_with_curve(&indices));
                self.registry.store(&pos[0], joined);
            }
            "spotweld" => {
                let p = get_path!(self, line, &pos[0]);
                self.registry.store(&pos[0], p.spot_weld());
            }
            "removeempty" => {
                let p = get_path!(self, line, &pos[0]);
                self.registry.store(&pos[0], p.remove_empty());
            }
            "remove" => {
                let indices = parse_indices(&pos[1]).map_err(fail)?;
                let p = get_path!(self, line, &pos[0]);
                let kept = self.take(line, p.remove_components(&indices));
                self.registry.store(&pos[0], kept);
            }
            "open" => {
                let p = get_path!(self, line, &pos[0]);
                self.registry.store(&pos[0], p.open_components());
            }
            "close" | "adjustclose" | "closewith" | "closewithcurve" => {
                let mode = match verb.as_str() {
                    "close" => CloseMode::Plain,
                    "adjustclose" => CloseMode::Adjust,
                    "closewith" => CloseMode::With(get_path!(self, line, &pos[1])),
                    _ => CloseMode::WithCurve,
                };
                let p = get_path!(self, line, &pos[0]);
                let closed = try_op!(self, line, p.close(mode));
                let closed = self.take(line, closed);
                self.registry.store(&pos[0], closed);
            }
            "splice" => {
                let initial = get_path!(self, line, &pos[0]);
                let middle = get_path!(self, line, &pos[1]);
                let final_part = get_path!(self, line, &pos[2]);
                let spliced =
                    try_op!(self, line, SoftPath::splice(&initial, &middle, &final_part));
                let spliced = self.take(line, spliced);
                self.registry.store(&pos[0], spliced);
            }
            "shortenstart" | "shortenend" | "shortenboth" => {
                let len = parse_num(&pos[1]).map_err(fail)?;
                let end = match verb.as_str() {
                    "shortenstart" => PathEnd::Start,
                    "shortenend" => PathEnd::End,
                    _ => PathEnd::Both,
                };
                let p = get_path!(self, line, &pos[0]);
                let shortened = self.take(line, p.shorten(end, len));
                self.registry.store(&pos[0], shortened);
            }
            "splitat" => {
                let t = parse_num(&pos[1]).map_err(fail)?;
                let p = get_path!(self, line, &pos[0]);
                let split = try_op!(self, line, p.split_at(t));
                self.registry.store(&pos[0], split);
            }
            "splitinto" => {
                let t = parse_num(&pos[3]).map_err(fail)?;
                let p = get_path!(self, line, &pos[2]);
                let (head, tail) = try_op!(self, line, p.split_into(t));
                self.registry.store(&pos[0], head);
                self.registry.store(&pos[1], tail);
            }
            "keepstart" | "keepend" => {
                let t = parse_num(&pos[1]).map_err(fail)?;
                let mode =
                    if verb == "keepstart" { KeepMode::Start(t) } else { KeepMode::End(t) };
                let p = get_path!(self, line, &pos[0]);
                let kept = try_op!(self, line, p.keep(mode));
                self.registry.store(&pos[0], kept);
            }
            "keepmiddle" => {
                let t1 = parse_num(&pos[1]).map_err(fail)?;
                let t2 = parse_num(&pos[2]).map_err(fail)?;
                let p = get_path!(self, line, &pos[0]);
                let kept = try_op!(self, line, p.keep(KeepMode::Middle(t1, t2)));
                self.registry.store(&pos[0], kept);
            }
            "append" => {
                let transform = match &args.transform {
                    Some(t) => Some(parse_transform(t).map_err(|e| fail(e.to_string()))?),
                    None => None,
                };
                let opts = AppendOptions {
                    reverse: args.flags.contains("reverse"),
                    move_to_end: args.flags.contains("move"),
                    weld: args.flags.contains("weld"),
                    transform,
                };
                let base = get_path!(self, line, &pos[0]);
                let other = get_path!(self, line, &pos[1]);
                let appended = self.take(line, base.append(&other, &opts));
                self.registry.store(&pos[0], appended);
            }
            "point" => {
                let t = parse_num(&pos[1]).map_err(fail)?;
                let p = get_path!(self, line, &pos[0]);
                let loc = try_op!(self, line, p.locate(t));
                self.emit(format!("{} {}", fmt_num(loc.point.x), fmt_num(loc.point.y)));
            }
            "frame" => {
                let t = parse_num(&pos[1]).map_err(fail)?;
                let upright = args.flags.contains("upright");
                let p = get_path!(self, line, &pos[0]);
                let frame = try_op!(self, line, p.frame_at(t, upright));
                self.emit(format!(
                    "{} {} {}",
                    fmt_num(frame.origin.x),
                    fmt_num(frame.origin.y),
                    fmt_num(frame.angle_rad.to_degrees())
                ));
            }
            "knot" => {
                let gap = parse_num(&pos[1]).map_err(fail)?;
                let indices = match pos.get(2) {
                    Some(t) => parse_indices(t).map_err(fail)?,
                    None => Vec::new(),
                };
                let draft = args.flags.contains("draft");
                let p = get_path!(self, line, &pos[0]);
                let strands = self.take(line, p.knot(gap, &indices, draft));
                let combined = SoftPath::from_components(
                    strands.iter().flat_map(|s| s.components.clone()).collect(),
                );
                self.emit(strands.len().to_string());
                self.registry.store(&pos[0], combined);
            }
            "svg" => {
                let file = pos.last().unwrap();
                let style = SvgStyle::new();
                let mut resolved: Vec<(String, SoftPath)> = Vec::new();
                for name in &pos[..pos.len() - 1] {
                    match self.registry.lookup(name) {
                        Ok(p) => resolved.push((name.clone(), p.clone())),
                        Err(e) => self.warn(line, e.to_string()),
                    }
                }
                let entries: Vec<(&str, &SoftPath, &SvgStyle)> =
                    resolved.iter().map(|(n, p)| (n.as_str(), p, &style)).collect();
                let doc = to_svg(&entries);
                let target = self.resolve_out(file);
                if let Some(parent) = target.parent() {
                    if !parent.as_os_str().is_empty() {
                        fs::create_dir_all(parent)
                            .map_err(|e| fail(format!("cannot create {parent:?}: {e}")))?;
                    }
                }
                fs::write(&target, doc)
                    .map_err(|e| fail(format!("cannot write {target:?}: {e}")))?;
            }
            _ => unreachable!("arity table covers every verb"),
        }
        Ok(())
    }

    fn resolve_out(&self, file: &str) -> PathBuf {
        let p = Path::new(file);
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            self.out_dir.join(p)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(script: &str) -> Interp {
        let mut interp = Interp::new(".");
        interp.run_script(script).unwrap();
        interp
    }

    #[test]
    fn load_reverse_show_round_trip() {
        let interp = run("load a \"M 0 0 L 2 0\"\nreverse a\nshow a\n");
        assert_eq!(interp.outputs, vec!["M 2 0\nL 0 0\n"]);
        assert!(interp.warnings.is_empty());
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let interp = run("# a comment\n\nload a \"M 0 0 L 1 0\" # trailing\nshow a");
        assert_eq!(interp.outputs, vec!["M 0 0\nL 1 0\n"]);
    }

    #[test]
    fn index_lists_expand_arithmetic_progressions() {
        assert_eq!(parse_indices("1,3,...,7").unwrap(), vec![1, 3, 5, 7]);
        assert_eq!(parse_indices("2,4,...,16").unwrap(), vec![2, 4, 6, 8, 10, 12, 14, 16]);
        assert_eq!(parse_indices("5").unwrap(), vec![5]);
        assert_eq!(parse_indices("1,...,4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_indices("3,...,1").unwrap(), vec![3, 2, 1]);
        assert!(parse_indices("1,...").is_err());
        assert!(parse_indices("...,4").is_err());
        assert!(parse_indices("1,x,3").is_err());
    }

    #[test]
    fn pt_suffix_is_stripped() {
        let interp = run("load a \"M 0 0 L 10 0\"\nshortenend a 3pt\nshow a");
        assert_eq!(interp.outputs, vec!["M 0 0\nL 7 0\n"]);
    }

    #[test]
    fn missing_paths_warn_but_never_abort() {
        let script =
            "show ghost\nreverse ghost\npoint ghost 0.5\ngaps ghost 1 1,2\nspotweld ghost";
        let mut interp = Interp::new(".");
        interp.run_script(script).unwrap();
        assert!(interp.outputs.is_empty());
        assert_eq!(interp.warnings.len(), 5);
        assert!(interp.warnings[0].starts_with("line 1:"));
        assert!(interp.warnings[4].starts_with("line 5:"));
    }

    #[test]
    fn static_errors_abort_with_line_numbers() {
        let mut interp = Interp::new(".");
        let err = interp.run_script("load a \"M 0 0 L 1 0\"\nfrobnicate a").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("frobnicate"));

        let mut interp = Interp::new(".");
        let err = interp.run_script("translate a 1").unwrap_err();
        assert!(err.message.starts_with("usage:"));

        let mut interp = Interp::new(".");
        let err = interp.run_script("load a \"M 0 0 L\"").unwrap_err();
        assert_eq!(err.line, 1);

        let mut interp = Interp::new(".");
        assert!(interp.run_script("load a \"M 0 0 L 1 0").is_err());

        let mut interp = Interp::new(".");
        let err = interp.run_script("load a \"M 0 0 L 1 0\"\nshow a --upright").unwrap_err();
        assert!(err.message.contains("--upright"));
    }

    #[test]
    fn point_and_frame_print_located_values() {
        let interp = run("load a \"M 0 0 L 4 0 L 4 4\"\npoint a 0.25\nframe a 0.75 --upright");
        assert_eq!(interp.outputs, vec!["2 0\n", "4 2 90\n"]);
    }

    #[test]
    fn components_binds_anonymous_names_and_prints_the_count() {
        let script = "load a \"M 0 0 L 1 0 M 2 0 L 3 0\"\ncomponents a\nshow anonymous_2";
        let interp = run(script);
        assert_eq!(interp.outputs, vec!["2\n", "M 2 0\nL 3 0\n"]);

        // Stale anonymous bindings vanish on the next call.
        let script = "load a \"M 0 0 L 1 0 M 2 0 L 3 0\"\ncomponents a\n\
                      load b \"M 0 0 L 1 0\"\ncomponents b\nshow anonymous_2";
        let interp = run(script);
        assert_eq!(interp.outputs.last().unwrap(), "1\n");
        assert_eq!(interp.warnings.len(), 1, "anonymous_2 is gone");
    }

    #[test]
    fn splitinto_binds_two_new_names() {
        let interp =
            run("load a \"M 0 0 L 1 0\"\nsplitinto s e a 0.5\nshow s\nshow e\nshow a");
        assert_eq!(
            interp.outputs,
            vec!["M 0 0\nL 0.5 0\n", "M 0.5 0\nL 1 0\n", "M 0 0\nL 1 0\n"]
        );
    }

    #[test]
    fn knot_reports_strand_count_and_stores_the_result() {
        let script = "load k \"M 0 0 L 2 2 L 0 2 L 2 0\"\nknot k 0.4 1\ncomponents k";
        let interp = run(script);
        assert_eq!(interp.outputs, vec!["2\n", "2\n"]);
    }

    #[test]
    fn append_flags_mirror_the_library_options() {
        let script = "load a \"M 0 0 L 1 0\"\nload b \"M 5 5 L 5 6\"\n\
                      append a b --move --weld\nshow a";
        let interp = run(script);
        assert_eq!(interp.outputs, vec!["M 0 0\nL 1 0\nL 1 1\n"]);

        let script = "load a \"M 0 0 L 1 0\"\nload b \"M 0 0 L 0 1\"\n\
                      append a b --transform \"rotate(-90)\" --move --weld\nshow a";
        let interp = run(script);
        assert_eq!(interp.outputs, vec!["M 0 0\nL 1 0\nL 2 0\n"]);
    }

    #[test]
    fn svg_writes_into_the_out_dir() {
        let dir = std::env::temp_dir().join("softpath-script-test");
        let _ = fs::remove_dir_all(&dir);
        let mut interp = Interp::new(&dir);
        interp
            .run_script("load a \"M 0 0 L 1 0\"\nsvg a plot/out.svg")
            .unwrap();
        let written = fs::read_to_string(dir.join("plot/out.svg")).unwrap();
        assert!(written.starts_with("<svg"));
        assert!(written.contains("a-component-1"));
        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn eval_style_single_lines_work_in_isolation() {
        let mut interp = Interp::new(".");
        interp.run_line("load z \"M 1 1 L 3 1\"", 1).unwrap();
        interp.run_line("point z 0.5", 2).unwrap();
        assert_eq!(interp.outputs, vec!["2 1\n"]);
    }
}
