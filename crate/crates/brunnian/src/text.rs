//! The `.cnct` and `.fam` text formats.
//!
//! `.cnct` describes a connectivity structure by generators:
//!
//! ```text
//! n 3
//! # generators, one per line, 1-based indices
//! 1 2
//! 2 3
//! ```
//!
//! Reading applies the generated closure; writing emits the canonical
//! member list omitting the empty set and singletons.
//!
//! `.fam` describes a random family:
//!
//! ```text
//! n 2
//! omega 2
//! p 1/2 1/2
//! x 0 1
//! x 0 1
//! ```
//!
//! `#` starts a comment anywhere; blank lines are ignored. Writers emit
//! deterministic canonical text so that write ∘ read ∘ write = write.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::family::{ProbabilitySpace, RandomFamily, RandomVariable, Rational};
use crate::structure::ConnectivityStructure;
use crate::subset::{GroundSet, Subset};

/// A parse or validation failure, pointing at the offending line.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("{origin}:{line}: {rule}")]
pub struct TextError {
    pub origin: String,
    pub line: usize,
    pub rule: String,
}

impl TextError {
    fn new(origin: &str, line: usize, rule: impl Into<String>) -> Self {
        TextError { origin: origin.to_string(), line, rule: rule.into() }
    }
}

/// Content lines with their 1-based numbers, comments and blanks stripped.
fn content_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines().enumerate().filter_map(|(i, raw)| {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn parse_ground(origin: &str, line_no: usize, line: &str) -> Result<GroundSet, TextError> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some("n") {
        return Err(TextError::new(origin, line_no, "expected `n <int>` as the first line"));
    }
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| TextError::new(origin, line_no, "expected `n <int>` as the first line"))?;
    if parts.next().is_some() {
        return Err(TextError::new(origin, line_no, "trailing tokens after `n <int>`"));
    }
    GroundSet::new(n).map_err(|e| TextError::new(origin, line_no, e.to_string()))
}

fn parse_subset(origin: &str, line_no: usize, line: &str, ground: GroundSet) -> Result<Subset, TextError> {
    let mut bits = Subset::EMPTY;
    for tok in line.split_whitespace() {
        let e: usize = tok.parse().map_err(|_| {
            TextError::new(origin, line_no, format!("expected a 1-based index, got `{tok}`"))
        })?;
        if e == 0 || e > ground.n() {
            return Err(TextError::new(
                origin,
                line_no,
                format!("index {e} is outside the ground set {{1, …, {}}}", ground.n()),
            ));
        }
        bits = bits.union(Subset::singleton(e));
    }
    Ok(bits)
}

/// Reads a `.cnct` source and returns the structure generated by the listed
/// subsets. `origin` names the source (a file path, or `-`) in diagnostics.
pub fn read_structure(src: &str, origin: &str) -> Result<ConnectivityStructure, TextError> {
    let mut lines = content_lines(src);
    let (line_no, first) = lines
        .next()
        .ok_or_else(|| TextError::new(origin, 1, "empty input: expected `n <int>`"))?;
    let ground = parse_ground(origin, line_no, first)?;
    let mut generators = Vec::new();
    for (line_no, line) in lines {
        generators.push(parse_subset(origin, line_no, line, ground)?);
    }
    ConnectivityStructure::generate(ground, &generators)
        .map_err(|e| TextError::new(origin, 1, e.to_string()))
}

/// Canonical `.cnct` text: the `n` line, then each member of cardinality
/// ≥ 2 on its own line in canonical order.
pub fn write_structure(k: &ConnectivityStructure) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", k.ground().n()).unwrap();
    for m in k.nontrivial_members() {
        let elems: Vec<String> = m.elems().map(|e| e.to_string()).collect();
        writeln!(out, "{}", elems.join(" ")).unwrap();
    }
    out
}

/// Parses `a/b` or a bare integer into an exact rational; rejects zero
/// denominators.
pub fn parse_rational(token: &str) -> Option<Rational> {
    match token.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.parse().ok()?;
            let den: BigInt = den.parse().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(Rational::new(num, den))
            }
        }
        None => {
            let num: BigInt = token.parse().ok()?;
            Some(Rational::from_integer(num))
        }
    }
}

/// `a/b`, or just `a` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Reads a `.fam` source: the `n`, `omega`, and `p` lines followed by one
/// `x` line per variable.
pub fn read_family(src: &str, origin: &str) -> Result<RandomFamily, TextError> {
    let mut lines = content_lines(src);
    let (line_no, first) = lines
        .next()
        .ok_or_else(|| TextError::new(origin, 1, "empty input: expected `n <int>`"))?;
    let ground = parse_ground(origin, line_no, first)?;

    let (omega_no, omega_line) = lines
        .next()
        .ok_or_else(|| TextError::new(origin, line_no, "expected `omega <int>` after the `n` line"))?;
    let mut toks = omega_line.split_whitespace();
    if toks.next() != Some("omega") {
        return Err(TextError::new(origin, omega_no, "expected `omega <int>`"));
    }
    let m: usize = toks
        .next()
        .and_then(|t| t.parse().ok())
        .filter(|&m| m > 0)
        .ok_or_else(|| TextError::new(origin, omega_no, "expected a positive outcome count"))?;
    if toks.next().is_some() {
        return Err(TextError::new(origin, omega_no, "trailing tokens after `omega <int>`"));
    }

    let (p_no, p_line) = lines
        .next()
        .ok_or_else(|| TextError::new(origin, omega_no, "expected `p <rationals>` after the `omega` line"))?;
    let mut toks = p_line.split_whitespace();
    if toks.next() != Some("p") {
        return Err(TextError::new(origin, p_no, "expected `p <rationals>`"));
    }
    let mut probs = Vec::with_capacity(m);
    for tok in toks {
        let r = parse_rational(tok).ok_or_else(|| {
            TextError::new(origin, p_no, format!("expected a rational `a/b` or integer, got `{tok}`"))
        })?;
        probs.push(r);
    }
    if probs.len() != m {
        return Err(TextError::new(
            origin,
            p_no,
            format!("expected {m} probabilities, got {}", probs.len()),
        ));
    }
    let space = ProbabilitySpace::new(probs).map_err(|e| TextError::new(origin, p_no, e.to_string()))?;

    let mut variables = Vec::with_capacity(ground.n());
    let mut last_no = p_no;
    for _ in 0..ground.n() {
        let (x_no, x_line) = lines.next().ok_or_else(|| {
            TextError::new(
                origin,
                last_no,
                format!("expected {} `x` lines, got {}", ground.n(), variables.len()),
            )
        })?;
        last_no = x_no;
        let mut toks = x_line.split_whitespace();
        if toks.next() != Some("x") {
            return Err(TextError::new(origin, x_no, "expected `x <value codes>`"));
        }
        let mut values = Vec::with_capacity(m);
        for tok in toks {
            let v: u64 = tok.parse().map_err(|_| {
                TextError::new(origin, x_no, format!("expected a non-negative value code, got `{tok}`"))
            })?;
            values.push(v);
        }
        if values.len() != m {
            return Err(TextError::new(
                origin,
                x_no,
                format!("expected {m} value codes, got {}", values.len()),
            ));
        }
        variables.push(RandomVariable::from_raw(values));
    }
    if let Some((extra_no, _)) = lines.next() {
        return Err(TextError::new(origin, extra_no, "unexpected content after the last `x` line"));
    }
    RandomFamily::new(ground, space, variables)
        .map_err(|e| TextError::new(origin, last_no, e.to_string()))
}

/// Canonical `.fam` text with normalized value codes.
pub fn write_family(f: &RandomFamily) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", f.ground().n()).unwrap();
    writeln!(out, "omega {}", f.universe_size()).unwrap();
    let probs: Vec<String> = f.space().probs().iter().map(format_rational).collect();
    writeln!(out, "p {}", probs.join(" ")).unwrap();
    for v in f.variables() {
        let codes: Vec<String> = v.values().iter().map(|c| c.to_string()).collect();
        writeln!(out, "x {}", codes.join(" ")).unwrap();
    }
    out
}
