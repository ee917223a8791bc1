//! Command-line front end and file formats for the exact convexity library.
//!
//! This crate adds everything that needs the standard library on top of
//! [`p3c_core`]: graph file formats ([`graph6`], [`edgelist`]), the
//! verification sweeps over enumerated trees ([`verify`]), machine-readable
//! reports ([`report`]), and the `p3c` binary ([`cli`]).

pub mod cli;
pub mod edgelist;
pub mod graph6;
pub mod input;
pub mod report;
pub mod verify;

/// Errors from file formats, argument handling, and sweeps.
///
/// Core guard violations pass through as [`Error::Core`]; everything here
/// maps to process exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] p3c_core::Error),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("{0}")]
    Usage(String),
    #[error("thread pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
