use core::fmt;

/// Errors reported by graph construction and the exact solvers.
///
/// Brute-force engines fail loudly when an input exceeds the sizes they are
/// designed for instead of silently degrading to heuristics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex index was `>= n`.
    VertexOutOfRange { v: usize, n: usize },
    /// An edge joined a vertex to itself.
    SelfLoop { v: usize },
    /// The same edge was listed twice.
    DuplicateEdge { u: usize, v: usize },
    /// The operation requires a tree and the graph is not one.
    NotATree,
    /// The operation requires at least `min` vertices.
    TooFewVertices { n: usize, min: usize },
    /// The graph order exceeds the limit of a brute-force engine.
    OrderTooLarge { n: usize, max: usize },
    /// A multiset is too large for exhaustive Radon-partition checking.
    MultisetTooLarge { size: usize, max: usize },
    /// The number of parts is outside the supported range `2..=5`.
    UnsupportedK { k: usize },
    /// A family parameter was outside its domain.
    BadFamilyParameter { name: &'static str, value: usize },
    /// A level sequence does not describe a rooted tree.
    InvalidLevelSequence,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for graph on {n} vertices")
            }
            Error::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u}, {v}}}"),
            Error::NotATree => write!(f, "graph is not a tree"),
            Error::TooFewVertices { n, min } => {
                write!(f, "graph has {n} vertices, operation needs at least {min}")
            }
            Error::OrderTooLarge { n, max } => {
                write!(f, "graph order {n} exceeds brute-force limit {max}")
            }
            Error::MultisetTooLarge { size, max } => {
                write!(f, "multiset size {size} exceeds exhaustive-check limit {max}")
            }
            Error::UnsupportedK { k } => {
                write!(f, "number of parts k = {k} outside supported range 2..=5")
            }
            Error::BadFamilyParameter { name, value } => {
                write!(f, "family parameter {name} = {value} outside its domain")
            }
            Error::InvalidLevelSequence => write!(f, "invalid rooted-tree level sequence"),
        }
    }
}

impl core::error::Error for Error {}
