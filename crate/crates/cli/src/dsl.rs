//! Text formats: the graph DSL, compact graph keys, graph vectors, rationals
//! and partitions.

use std::fmt::Write;

use rwinv_core::homology::GraphVector;
use rwinv_core::{canonicalize, OrientedGraph, Partition, Q};

use crate::error::CliError;

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_flag(s: &str) -> Option<(usize, usize)> {
    let (v, t) = s.split_once('.')?;
    Some((v.parse().ok()?, t.parse().ok()?))
}

/// A parsed graph file; `canonical` records a `canonical ` header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: OrientedGraph,
    pub canonical: bool,
}

/// Parses `trivalent <2k>` followed by `edge <v>.<s> <w>.<t>` lines.
/// Flags are paired exactly as written.
pub fn parse_graph(text: &str) -> Result<GraphFile, CliError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, strip_comment(l))).filter(|(_, l)| !l.is_empty());
    let (n, header) = lines.next().ok_or_else(|| CliError::input("empty graph file"))?;
    let (canonical, header) = match header.strip_prefix("canonical ") {
        Some(rest) => (true, rest.trim()),
        None => (false, header),
    };
    let count = header
        .strip_prefix("trivalent ")
        .and_then(|c| c.trim().parse::<usize>().ok())
        .ok_or_else(|| CliError::input(format!("line {n}: expected `trivalent <vertex count>`")))?;
    let mut pairs = Vec::new();
    for (n, line) in lines {
        let mut words = line.split_whitespace();
        let (kw, a, b) = (words.next(), words.next(), words.next());
        if kw != Some("edge") || words.next().is_some() {
            return Err(CliError::input(format!("line {n}: expected `edge <v>.<s> <w>.<t>`")));
        }
        let a = a.and_then(parse_flag).ok_or_else(|| CliError::input(format!("line {n}: bad flag")))?;
        let b = b.and_then(parse_flag).ok_or_else(|| CliError::input(format!("line {n}: bad flag")))?;
        pairs.push((a, b));
    }
    let graph = OrientedGraph::from_pairs(count, &pairs)?;
    if canonical {
        let c = canonicalize(&graph);
        if c.sign != 1 || c.key.graph() != graph {
            return Err(CliError::input("graph marked canonical is not in canonical form"));
        }
    }
    Ok(GraphFile { graph, canonical })
}

pub fn format_graph(g: &OrientedGraph, canonical: bool) -> String {
    let mut out = String::new();
    if canonical {
        out.push_str("canonical ");
    }
    let _ = writeln!(out, "trivalent {}", g.vertex_count());
    for (a, b) in g.edges() {
        let _ = writeln!(out, "edge {}.{} {}.{}", a / 3, a % 3, b / 3, b % 3);
    }
    out
}

/// Parses a compact key `n:v.s-w.t,…`; the graph need not be canonical.
pub fn parse_key(text: &str) -> Result<OrientedGraph, CliError> {
    let bad = || CliError::input(format!("bad graph key `{text}`"));
    let (n, rest) = text.trim().split_once(':').ok_or_else(bad)?;
    let n: usize = n.parse().map_err(|_| bad())?;
    let mut pairs = Vec::new();
    for item in rest.split(',').filter(|s| !s.is_empty()) {
        let (a, b) = item.split_once('-').ok_or_else(bad)?;
        pairs.push((parse_flag(a).ok_or_else(bad)?, parse_flag(b).ok_or_else(bad)?));
    }
    Ok(OrientedGraph::from_pairs(n, &pairs)?)
}

/// Parses lines `<rational> * <key>`; terms are canonicalized and summed.
pub fn parse_vector(text: &str) -> Result<GraphVector, CliError> {
    let mut out: Option<GraphVector> = None;
    for (i, line) in text.lines().enumerate() {
        let line = strip_comment(line);
        if line.is_empty() {
            continue;
        }
        let (c, key) = line
            .split_once('*')
            .ok_or_else(|| CliError::input(format!("line {}: expected `<rational> * <key>`", i + 1)))?;
        let c = parse_rational(c.trim())?;
        let g = parse_key(key)?;
        let v = out.get_or_insert_with(|| GraphVector::zero(g.degree()));
        if g.degree() != v.degree() {
            return Err(CliError::input(format!("line {}: mixed degrees {} and {}", i + 1, v.degree(), g.degree())));
        }
        v.add_graph(&g, &c);
    }
    out.ok_or_else(|| CliError::input("empty graph vector"))
}

/// Reads either a graph file or a graph vector.
pub fn parse_graph_or_vector(text: &str) -> Result<GraphVector, CliError> {
    let first = text.lines().map(strip_comment).find(|l| !l.is_empty()).unwrap_or("");
    if first.starts_with("trivalent") || first.starts_with("canonical") {
        Ok(GraphVector::from_graph(&parse_graph(text)?.graph))
    } else {
        parse_vector(text)
    }
}

pub fn format_vector(v: &GraphVector) -> String {
    let mut out = String::new();
    for (key, c) in v.iter() {
        let _ = writeln!(out, "{c} * {key}");
    }
    out
}

/// Exact rationals `p` or `p/q`; decimal and exponent notation are rejected.
pub fn parse_rational(s: &str) -> Result<Q, CliError> {
    let s = s.trim();
    if s.contains(['.', 'e', 'E']) || s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("nan") {
        return Err(CliError::usage(format!("`{s}`: floating-point values are not accepted, use p/q")));
    }
    let s = s.strip_prefix('+').unwrap_or(s);
    let q: Q = s.parse().map_err(|_| CliError::usage(format!("`{s}` is not a rational number")))?;
    Ok(q)
}

pub fn parse_rationals(s: &str) -> Result<Vec<Q>, CliError> {
    s.split(',').map(parse_rational).collect()
}

/// Comma-separated positive parts, e.g. `4,2,2`.
pub fn parse_partition(s: &str) -> Result<Partition, CliError> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().ok().filter(|&x| x > 0))
        .collect::<Option<Vec<u32>>>()
        .ok_or_else(|| CliError::usage(format!("`{s}` is not a partition")))?;
    Ok(Partition::new(parts))
}

pub fn parse_even_partition(s: &str) -> Result<Partition, CliError> {
    let p = parse_partition(s)?;
    if !p.is_even() {
        return Err(CliError::usage(format!("`{s}`: wheel lengths must be even")));
    }
    Ok(p)
}
