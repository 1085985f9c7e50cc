//! Plain-text formats for words, complexes, points, partitions and
//! certificates.
//!
//! Every renderer's output parses back to an equal value. Point indices and
//! word positions are one-based in text.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::geometry::{Point, PointSequence, Rational};
use crate::tverberg::{Partition, TverbergWitness};
use crate::words::{ColorfulCertificate, Word};

/// Nonblank lines that are not comments, with their one-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_vertex(line: usize, token: &str) -> Result<Vertex> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected a nonnegative integer, got {token:?}")))
}

fn parse_vertices(line: usize, text: &str) -> Result<Vec<Vertex>> {
    text.split_whitespace().map(|t| parse_vertex(line, t)).collect()
}

/// A face given as space-separated vertices, with no repeats.
pub fn parse_face(text: &str) -> Result<Face> {
    Face::from_distinct(parse_vertices(1, text)?)
}

/// A word on a single line. Blank input is the empty word.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut lines = content_lines(text);
    let Some((line, first)) = lines.next() else {
        return Ok(Word::default());
    };
    if let Some((extra, _)) = lines.next() {
        return Err(Error::parse(extra, "a word occupies a single line"));
    }
    Ok(Word::new(parse_vertices(line, first)?))
}

pub fn render_word(word: &Word) -> String {
    format!("{word}\n")
}

/// One facet per line; blank lines and `#` comments are skipped.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let facets = content_lines(text)
        .map(|(line, l)| {
            Face::from_distinct(parse_vertices(line, l)?).map_err(|e| Error::parse(line, e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplicialComplex::from_facets(facets))
}

pub fn render_complex(k: &SimplicialComplex) -> String {
    k.to_string()
}

/// `num/den` or a plain integer.
pub fn parse_rational(token: &str) -> std::result::Result<Rational, String> {
    let bad = || format!("expected an integer or num/den, got {token:?}");
    let (n, d) = match token.split_once('/') {
        Some((n, d)) => (n, d),
        None => (token, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(format!("zero denominator in {token:?}"));
    }
    Ok(Rational::new(n, d))
}

fn parse_point(line: usize, text: &str, dim: usize) -> Result<Point> {
    let coords = text
        .split_whitespace()
        .map(|t| parse_rational(t).map_err(|m| Error::parse(line, m)))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != dim {
        return Err(Error::parse(
            line,
            format!("expected {dim} coordinates, got {}", coords.len()),
        ));
    }
    Ok(Point::new(coords))
}

fn parse_dim_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<usize> {
    let Some((line, header)) = lines.next() else {
        return Err(Error::parse(1, "missing \"dim d\" header"));
    };
    header
        .strip_prefix("dim")
        .and_then(|rest| rest.trim().parse().ok())
        .ok_or_else(|| Error::parse(line, format!("expected \"dim d\", got {header:?}")))
}

/// A `dim d` header followed by one point per line.
pub fn parse_points(text: &str) -> Result<PointSequence> {
    let mut lines = content_lines(text);
    let dim = parse_dim_header(&mut lines)?;
    let points = lines
        .map(|(line, l)| parse_point(line, l, dim))
        .collect::<Result<Vec<_>>>()?;
    PointSequence::new(dim, points)
}

pub fn render_points(seq: &PointSequence) -> String {
    let mut out = format!("dim {}\n", seq.dim());
    for p in seq.points() {
        writeln!(out, "{p}").unwrap();
    }
    out
}

/// A `dim d` header, then groups of points each introduced by a `part` line.
pub fn parse_parts(text: &str) -> Result<Vec<Vec<Point>>> {
    let mut lines = content_lines(text);
    let dim = parse_dim_header(&mut lines)?;
    let mut parts: Vec<Vec<Point>> = Vec::new();
    for (line, l) in lines {
        if l == "part" {
            parts.push(Vec::new());
            continue;
        }
        let Some(current) = parts.last_mut() else {
            return Err(Error::parse(line, "point before the first \"part\" line"));
        };
        current.push(parse_point(line, l, dim)?);
    }
    Ok(parts)
}

pub fn render_parts(parts: &[Vec<Point>], dim: usize) -> String {
    let mut out = format!("dim {dim}\n");
    for part in parts {
        out.push_str("part\n");
        for p in part {
            writeln!(out, "{p}").unwrap();
        }
    }
    out
}

/// Lines `label: i1 i2 …` with one-based point indices.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let mut parts = Vec::new();
    for (line, l) in content_lines(text) {
        let Some((label, rest)) = l.split_once(':') else {
            return Err(Error::parse(line, format!("expected \"label: indices\", got {l:?}")));
        };
        let label = parse_vertex(line, label.trim())?;
        let indices = rest
            .split_whitespace()
            .map(|t| match t.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(i - 1),
                _ => Err(Error::parse(line, format!("expected a positive index, got {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.iter().any(|(l, _)| *l == label) {
            return Err(Error::parse(line, format!("label {label} appears twice")));
        }
        parts.push((label, indices));
    }
    Partition::new(parts)
}

pub fn render_partition(p: &Partition) -> String {
    let mut out = String::new();
    for (label, idx) in p.parts() {
        write!(out, "{label}:").unwrap();
        for i in idx {
            write!(out, " {}", i + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

/// The partition block, then `witness: coords`.
pub fn render_witness(w: &TverbergWitness) -> String {
    format!("{}witness: {}\n", render_partition(&w.partition), w.point)
}

/// `alphabet | d | positions`, positions one-based.
pub fn parse_certificate(text: &str) -> Result<ColorfulCertificate> {
    let fields: Vec<&str> = text.trim().split('|').map(str::trim).collect();
    let [alphabet, d, positions] = fields[..] else {
        return Err(Error::parse(1, "expected \"alphabet | d | positions\""));
    };
    let alphabet = Face::from_distinct(parse_vertices(1, alphabet)?)?;
    let d = d
        .parse()
        .map_err(|_| Error::parse(1, format!("expected a dimension, got {d:?}")))?;
    let positions = parse_vertices(1, positions)?
        .into_iter()
        .map(|p| {
            (p as usize)
                .checked_sub(1)
                .ok_or_else(|| Error::parse(1, "positions are one-based"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ColorfulCertificate {
        positions,
        alphabet,
        d,
    })
}

pub fn render_certificate(c: &ColorfulCertificate) -> String {
    format!("{c}\n")
}
