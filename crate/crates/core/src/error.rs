//! Error and hypothesis-violation types shared across the crate.

use std::fmt;

use thiserror::Error;

/// Witness explaining why the flag complex of a graph is not simply connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlagObstruction {
    /// The graph itself is disconnected; components listed by vertex name.
    Disconnected { components: Vec<Vec<String>> },
    /// An induced (chordless) cycle of length >= 4, listed by vertex name.
    InducedCycle { cycle: Vec<String> },
}

impl fmt::Display for FlagObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlagObstruction::Disconnected { components } => {
                let parts: Vec<String> = components.iter().map(|c| c.join(" ")).collect();
                write!(
                    f,
                    "graph is disconnected: components [{}]",
                    parts.join(" | ")
                )
            }
            FlagObstruction::InducedCycle { cycle } => {
                write!(
                    f,
                    "induced cycle of length {}: {}",
                    cycle.len(),
                    cycle.join(" ")
                )
            }
        }
    }
}

/// A hypothesis of the splitting characterization that the input graph fails to satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypothesisViolation {
    NotConnected,
    FlagNotSimplyConnected(FlagObstruction),
    HasCutVertex(String),
    Complete(usize),
}

impl fmt::Display for HypothesisViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisViolation::NotConnected => write!(f, "graph is not connected"),
            HypothesisViolation::FlagNotSimplyConnected(w) => {
                write!(f, "flag complex is not simply connected ({w})")
            }
            HypothesisViolation::HasCutVertex(v) => write!(f, "graph has a cut vertex: {v}"),
            HypothesisViolation::Complete(n) => write!(f, "graph is complete on {n} vertices"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("not a simplicial graph: {0}")]
    Simpliciality(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown edge {{{0}, {1}}}")]
    UnknownEdge(String, String),

    #[error("operation requires a connected graph")]
    DisconnectedInput,

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("hypothesis violation: {0}")]
    Hypothesis(HypothesisViolation),

    #[error("clique {{{}}} does not separate the graph", .0.join(", "))]
    NotSeparating(Vec<String>),

    #[error("clique has {got} vertices, need at least {min}")]
    TooSmall { min: usize, got: usize },

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
