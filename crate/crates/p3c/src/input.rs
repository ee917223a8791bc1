//! Graph sources for the command line: files, inline strings, and built-in
//! families, plus the vertex set and multiset argument syntax.

use std::io::Read;
use std::path::Path;

use p3c_core::radon::VertexMultiset;
use p3c_core::{families, Graph, VertexSet};

use crate::{edgelist, graph6, Error};

/// A built-in graph family selectable with `--family`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// The seven-vertex counterexample graph.
    G1,
    /// The sharpness tree with the given number of blocks.
    Sharpness(usize),
}

impl FamilySpec {
    /// Parses `g1` or `tm:<m>`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        if s.eq_ignore_ascii_case("g1") {
            return Ok(FamilySpec::G1);
        }
        if let Some(m) = s.strip_prefix("tm:") {
            let m: usize = m.parse().map_err(|_| {
                Error::Usage(format!("invalid block count in family {s:?}"))
            })?;
            return Ok(FamilySpec::Sharpness(m));
        }
        Err(Error::Usage(format!(
            "unknown family {s:?}; expected \"g1\" or \"tm:<m>\""
        )))
    }

    /// Builds the selected graph.
    pub fn build(self) -> Result<Graph, Error> {
        match self {
            FamilySpec::G1 => Ok(families::counterexample_g1()),
            FamilySpec::Sharpness(m) => Ok(families::sharpness_tree(m)?),
        }
    }

    /// The name as accepted by `--family`.
    pub fn name(self) -> String {
        match self {
            FamilySpec::G1 => "g1".into(),
            FamilySpec::Sharpness(m) => format!("tm:{m}"),
        }
    }
}

/// Reads the raw text of a graph file; `-` reads standard input.
pub fn read_graph_text(path: &Path) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

/// Reads a graph file, autodetecting the format; `-` reads standard input.
///
/// A first data byte that is a digit or `#` selects the edge-list reader;
/// anything else is treated as graph6. `one_indexed` rebases edge-list
/// vertices only; graph6 is always zero-based.
pub fn load_graph_file(path: &Path, one_indexed: bool) -> Result<Graph, Error> {
    parse_graph_text(&read_graph_text(path)?, one_indexed)
}

/// Parses graph text with the same autodetection as [`load_graph_file`].
pub fn parse_graph_text(text: &str, one_indexed: bool) -> Result<Graph, Error> {
    match text.trim_start().bytes().next() {
        None => Err(Error::Usage("empty graph input".into())),
        Some(b) if b.is_ascii_digit() || b == b'#' => edgelist::parse(text, one_indexed),
        _ => graph6::decode(text),
    }
}

/// Parses `--set` syntax: comma-separated vertices, e.g. `2,4,6`.
pub fn parse_set(s: &str, n: usize, one_indexed: bool) -> Result<VertexSet, Error> {
    let mut set = VertexSet::empty(n);
    for item in s.split(',') {
        set.insert(parse_vertex(item, n, one_indexed)?);
    }
    Ok(set)
}

/// Parses `--multiset` syntax: comma-separated items, each a vertex `v` or a
/// pair `v:m` giving its multiplicity.
pub fn parse_multiset(s: &str, n: usize, one_indexed: bool) -> Result<VertexMultiset, Error> {
    let mut ms = VertexMultiset::empty(n);
    for item in s.split(',') {
        let (v, mult) = match item.split_once(':') {
            None => (item, 1),
            Some((v, m)) => (
                v,
                m.parse::<u32>().ok().filter(|&m| m > 0).ok_or_else(|| {
                    Error::Usage(format!("invalid multiplicity in {item:?}"))
                })?,
            ),
        };
        ms.add(parse_vertex(v, n, one_indexed)?, mult);
    }
    Ok(ms)
}

/// Parses a single vertex argument under the active indexing convention.
pub fn parse_vertex(s: &str, n: usize, one_indexed: bool) -> Result<usize, Error> {
    let s = s.trim();
    let raw: usize = s
        .parse()
        .map_err(|_| Error::Usage(format!("invalid vertex {s:?}")))?;
    let v = if one_indexed {
        raw.checked_sub(1)
            .ok_or_else(|| Error::Usage("vertex 0 is invalid in one-indexed mode".into()))?
    } else {
        raw
    };
    if v >= n {
        return Err(Error::Usage(format!(
            "vertex {s} is out of range for a graph on {n} vertices"
        )));
    }
    Ok(v)
}
