//! Plain-text edge list format.
//!
//! The first data line holds the vertex and edge counts `n m`; each of the
//! following `m` data lines holds one edge `u v`. Everything after `#` on a
//! line is a comment, and blank lines are skipped. Vertices are zero-based
//! unless the caller rebases them.

use crate::Error;
use p3c_core::Graph;

/// Parses an edge list. With `one_indexed`, file vertices run `1..=n`.
pub fn parse(text: &str, one_indexed: bool) -> Result<Graph, Error> {
    let mut lines = data_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing 'n m' header line".into()))?;
    let (line_no, header) = header;
    let mut counts = header.split_whitespace();
    let n: usize = parse_token(counts.next(), "vertex count", line_no)?;
    let m: usize = parse_token(counts.next(), "edge count", line_no)?;
    if let Some(extra) = counts.next() {
        return Err(Error::EdgeList(format!(
            "line {line_no}: unexpected token {extra:?} after 'n m'"
        )));
    }
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in &mut lines {
        let mut tokens = line.split_whitespace();
        let u: usize = parse_token(tokens.next(), "edge endpoint", line_no)?;
        let v: usize = parse_token(tokens.next(), "edge endpoint", line_no)?;
        if let Some(extra) = tokens.next() {
            return Err(Error::EdgeList(format!(
                "line {line_no}: unexpected token {extra:?} after edge"
            )));
        }
        edges.push((rebase(u, one_indexed, line_no)?, rebase(v, one_indexed, line_no)?));
    }
    if edges.len() != m {
        return Err(Error::EdgeList(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Ok(Graph::new(n, &edges)?)
}

fn rebase(v: usize, one_indexed: bool, line_no: usize) -> Result<usize, Error> {
    if !one_indexed {
        return Ok(v);
    }
    v.checked_sub(1).ok_or_else(|| {
        Error::EdgeList(format!(
            "line {line_no}: vertex 0 is invalid in one-indexed input"
        ))
    })
}

fn parse_token(token: Option<&str>, what: &str, line_no: usize) -> Result<usize, Error> {
    let token =
        token.ok_or_else(|| Error::EdgeList(format!("line {line_no}: missing {what}")))?;
    token
        .parse()
        .map_err(|_| Error::EdgeList(format!("line {line_no}: invalid {what} {token:?}")))
}

/// Yields `(line_number, content)` for non-empty lines, comments stripped.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}
