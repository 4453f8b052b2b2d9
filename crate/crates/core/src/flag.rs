//! The flag (clique) complex of a graph, its integral H1, and the
//! simple-connectivity decision.
//!
//! The decision procedure relies on a standard fact beyond the statement
//! that simple connectivity forbids induced cycles of length >= 4: the
//! clique complex of a connected chordal graph is contractible (cone off a
//! simplicial vertex and induct). That makes the hypothesis decidable via
//! chordality, and every accepted input is cross-checked by H1 = 0.

use num_bigint::BigInt;

use crate::chordal::{chordality, ChordalityCertificate};
use crate::error::{Error, FlagObstruction, HypothesisViolation, Result};
use crate::graph::{SimplicialGraph, VertexId};
use crate::snf::{smith_invariants, IntMatrix};

/// Simplices of the flag complex, grouped by dimension; dimension d holds
/// the (d+1)-element cliques in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagComplex {
    pub simplices_by_dim: Vec<Vec<Vec<VertexId>>>,
}

/// Builds the flag complex: every clique of `g` is a simplex.
pub fn flag_complex(g: &SimplicialGraph) -> Result<FlagComplex> {
    let cliques = g.cliques()?;
    let max_size = cliques.last().map_or(0, |c| c.size());
    let mut simplices_by_dim: Vec<Vec<Vec<VertexId>>> = vec![Vec::new(); max_size];
    for c in cliques {
        simplices_by_dim[c.size() - 1].push(c.members().to_vec());
    }
    Ok(FlagComplex { simplices_by_dim })
}

impl FlagComplex {
    pub fn dimension(&self) -> Option<usize> {
        self.simplices_by_dim.len().checked_sub(1)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices_by_dim.iter().map(|s| s.len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &count)| {
                if d % 2 == 0 {
                    count as i64
                } else {
                    -(count as i64)
                }
            })
            .sum()
    }

    fn simplices(&self, dim: usize) -> &[Vec<VertexId>] {
        self.simplices_by_dim.get(dim).map_or(&[], |v| v.as_slice())
    }

    /// Boundary matrix from d-simplices (columns) to (d-1)-simplices (rows),
    /// with the usual alternating signs on vertex-sorted simplices.
    pub fn boundary_matrix(&self, d: usize) -> Vec<Vec<i64>> {
        assert!(d >= 1, "boundary is defined for dimension >= 1");
        let rows_simplices = self.simplices(d - 1);
        let cols_simplices = self.simplices(d);
        let mut matrix = vec![vec![0i64; cols_simplices.len()]; rows_simplices.len()];
        for (j, simplex) in cols_simplices.iter().enumerate() {
            for (omit, _) in simplex.iter().enumerate() {
                let mut face: Vec<VertexId> = simplex.clone();
                face.remove(omit);
                let i = rows_simplices
                    .binary_search(&face)
                    .expect("face of a simplex is a simplex");
                matrix[i][j] = if omit % 2 == 0 { 1 } else { -1 };
            }
        }
        matrix
    }
}

/// Rank and invariant factors of H1, plus the Euler characteristic of the
/// whole complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologySummary {
    pub h1_rank: usize,
    pub h1_torsion: Vec<BigInt>,
    pub euler_characteristic: i64,
}

/// H1 with integer coefficients from the Smith normal forms of the first
/// and second boundary matrices.
pub fn h1_summary(x: &FlagComplex) -> HomologySummary {
    let num_edges = x.simplices(1).len();
    let rank_d1 = if num_edges == 0 {
        0
    } else {
        smith_invariants(IntMatrix::from_rows(&x.boundary_matrix(1))).len()
    };
    let d2_invariants = if x.simplices(2).is_empty() || num_edges == 0 {
        Vec::new()
    } else {
        smith_invariants(IntMatrix::from_rows(&x.boundary_matrix(2)))
    };
    let rank_d2 = d2_invariants.len();
    let one = BigInt::from(1);
    HomologySummary {
        h1_rank: num_edges - rank_d1 - rank_d2,
        h1_torsion: d2_invariants.into_iter().filter(|d| d > &one).collect(),
        euler_characteristic: x.euler_characteristic(),
    }
}

/// Obstruction to simple connectivity of the flag complex, in vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    Disconnected { components: Vec<Vec<VertexId>> },
    InducedCycle { cycle: Vec<VertexId> },
}

impl Obstruction {
    pub fn to_named(&self, g: &SimplicialGraph) -> FlagObstruction {
        match self {
            Obstruction::Disconnected { components } => FlagObstruction::Disconnected {
                components: components.iter().map(|c| g.names_of(c)).collect(),
            },
            Obstruction::InducedCycle { cycle } => FlagObstruction::InducedCycle {
                cycle: g.names_of(cycle),
            },
        }
    }
}

/// Verdict of the simple-connectivity decision, carrying the chordality
/// certificate as evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimpleConnectivity {
    Yes { peo: Vec<VertexId> },
    No(Obstruction),
}

impl SimpleConnectivity {
    pub fn is_simply_connected(&self) -> bool {
        matches!(self, SimpleConnectivity::Yes { .. })
    }
}

/// Decides whether the flag complex on `g` is simply connected: true iff
/// `g` is connected and chordal.
pub fn is_flag_simply_connected(g: &SimplicialGraph) -> SimpleConnectivity {
    let components = g.connected_components();
    if components.len() > 1 {
        return SimpleConnectivity::No(Obstruction::Disconnected { components });
    }
    match chordality(g) {
        ChordalityCertificate::Peo(peo) => SimpleConnectivity::Yes { peo },
        ChordalityCertificate::WitnessCycle(cycle) => {
            SimpleConnectivity::No(Obstruction::InducedCycle { cycle })
        }
    }
}

/// Errors with the matching `HypothesisViolation` unless `g` is connected
/// with simply connected flag complex.
pub fn require_flag_hypotheses(g: &SimplicialGraph) -> Result<Vec<VertexId>> {
    if !g.is_connected() {
        return Err(Error::Hypothesis(HypothesisViolation::NotConnected));
    }
    match is_flag_simply_connected(g) {
        SimpleConnectivity::Yes { peo } => Ok(peo),
        SimpleConnectivity::No(obs) => Err(Error::Hypothesis(
            HypothesisViolation::FlagNotSimplyConnected(obs.to_named(g)),
        )),
    }
}
