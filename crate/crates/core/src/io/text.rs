//! DIMACS `p edge` files (1-based) and plain edge lists (0-based).

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::Format;

fn parse_index(tok: Option<&str>, what: &str, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::malformed(format!("missing {what}")).at_line(line))?;
    tok.parse::<usize>()
        .map_err(|_| Error::malformed(format!("{what} {tok:?} is not a non-negative integer")).at_line(line))
}

fn finish(n: usize, edges: &[(usize, usize)], line_of: &[usize]) -> Result<Graph> {
    for (&(u, v), &line) in edges.iter().zip(line_of) {
        if u >= n || v >= n {
            return Err(Error::malformed(format!("endpoint out of range for n = {n}")).at_line(line));
        }
        if u == v {
            return Err(Error::malformed(format!("self-loop at vertex {u}")).at_line(line));
        }
    }
    Graph::from_edges(n, edges)
}

/// Parses a DIMACS colouring-style document: `c` comments, one
/// `p edge <n> <m>` line, then `e <u> <v>` lines with 1-based endpoints.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(Error::malformed("duplicate problem line").at_line(line));
                }
                match toks.next() {
                    Some("edge") => {}
                    other => {
                        return Err(Error::malformed(format!(
                            "expected `p edge`, found format {other:?}"
                        ))
                        .at_line(line))
                    }
                }
                n = Some(parse_index(toks.next(), "vertex count", line)?);
                parse_index(toks.next(), "edge count", line)?;
            }
            Some("e") => {
                if n.is_none() {
                    return Err(Error::malformed("edge before problem line").at_line(line));
                }
                let u = parse_index(toks.next(), "endpoint", line)?;
                let v = parse_index(toks.next(), "endpoint", line)?;
                if u == 0 || v == 0 {
                    return Err(Error::malformed("DIMACS vertices are 1-based").at_line(line));
                }
                edges.push((u - 1, v - 1));
                lines.push(line);
            }
            Some(tok) => {
                return Err(Error::malformed(format!("unknown line type {tok:?}")).at_line(line))
            }
        }
    }
    let n = n.ok_or_else(|| Error::malformed("missing `p edge` problem line"))?;
    finish(n, &edges, &lines)
}

/// Parses an edge list: the first content line holds `n`, every further line
/// `u v` with 0-based endpoints. Lines starting with `#` or `%` are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') || content.starts_with('%') {
            continue;
        }
        let mut toks = content.split_whitespace();
        match n {
            None => {
                n = Some(parse_index(toks.next(), "vertex count", line)?);
                if toks.next().is_some() {
                    return Err(Error::malformed("vertex-count line has extra fields").at_line(line));
                }
            }
            Some(_) => {
                let u = parse_index(toks.next(), "endpoint", line)?;
                let v = parse_index(toks.next(), "endpoint", line)?;
                if toks.next().is_some() {
                    return Err(Error::malformed("edge line has extra fields").at_line(line));
                }
                edges.push((u, v));
                lines.push(line);
            }
        }
    }
    let n = n.ok_or_else(|| Error::malformed("missing vertex-count line"))?;
    finish(n, &edges, &lines)
}

/// Parses a whole document in one of the text formats. For graph6 the
/// document must hold exactly one record.
pub fn parse_dimacs_or_edgelist(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Dimacs => parse_dimacs(text),
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => {
            let mut records = text.lines().map(str::trim).filter(|l| !l.is_empty());
            let first = records.next().ok_or_else(|| Error::malformed("empty document"))?;
            if records.next().is_some() {
                return Err(Error::malformed("expected a single graph6 record"));
            }
            super::parse_graph6(first)
        }
    }
}
