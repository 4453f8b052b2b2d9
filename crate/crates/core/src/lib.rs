//! Abelian splittings and JSJ decompositions of right-angled Artin groups
//! and their Bestvina-Brady kernel groups, computed from the defining
//! graph.
//!
//! Given a finite simplicial graph the crate decides connectivity,
//! chordality, and simple connectivity of the flag complex; emits the
//! directed-edge presentation of the kernel group and its spanning-tree
//! reduction; decides abelian splittability for both groups with explicit
//! witnesses; and constructs the vertex-elliptic (ambient) and
//! edge-elliptic (kernel) abelian JSJ decompositions as labeled
//! graph-of-groups trees. An oracle module provides independent brute-force
//! references and an exhaustive small-graph sweep.
//!
//! Everything is deterministic: vertices are ordered by name, all derived
//! enumerations follow that order, and equal inputs give byte-identical
//! outputs.

pub mod chordal;
pub mod error;
pub mod flag;
pub mod graph;
pub mod jsj;
pub mod oracle;
pub mod presentation;
pub mod snf;
pub mod splitting;

pub use chordal::{chordality, is_chordal, ChordalityCertificate};
pub use error::{Error, FlagObstruction, HypothesisViolation, Result};
pub use flag::{flag_complex, h1_summary, is_flag_simply_connected, FlagComplex, HomologySummary};
pub use graph::{Clique, DirectedEdge, SimplicialGraph, VertexId};
pub use jsj::{
    export_dot, export_json, jsj_decomposition, jsj_report, verify_decomposition, GraphOfGroups,
    JsjReport, ReportCase,
};
pub use presentation::{
    dicks_leary_presentation, recognize_special, reduced_presentation, Flavor, GroupDescriptor,
    GroupPresentation, Word,
};
pub use splitting::{
    bbg_splitting_verdict, minimal_separating_cliques, raag_splitting_verdict, separating_cliques,
    splitting_ranks, star_clique_check, SplitCase, SplittingVerdict,
};

/// Version tag for the JSON output schemas (decompositions, reports,
/// presentations, sweep reports).
pub const FORMAT_SCHEMA_VERSION: &str = "1";
