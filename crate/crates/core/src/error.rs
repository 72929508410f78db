//! Error type shared by every module in the crate.

use thiserror::Error;

/// Errors surfaced by graph construction, parsing, generation, and metrics.
#[derive(Debug, Error)]
pub enum Error {
    /// Lookup of a node label that is not a member of the graph.
    #[error("node {0} not found in graph")]
    NodeNotFound(u32),

    /// Operation requires at least one node.
    #[error("graph has no nodes")]
    EmptyGraph,

    /// A ranked prefix smaller than the operation can work with.
    #[error("ranked prefix of {got} node(s) is too small, need at least {needed}")]
    InsufficientNodes { needed: usize, got: usize },

    /// Parameter combination rejected up front.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Malformed edge-list input.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Degree sequence too degenerate for a power-law tail fit.
    #[error("power-law fit not applicable: {0}")]
    FitNotApplicable(String),

    /// Missing-link classification asked of an empty missing set.
    #[error("no missing links to classify")]
    NoMissingLinks,

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
