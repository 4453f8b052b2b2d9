//! Group presentations on directed edges.
//!
//! The finitely presented regime only: generators are directed edges (one
//! canonical orientation per edge, low id -> high id), every directed
//! triangle (u<v<w) contributes the two relators e_uv e_vw e_uw^-1 and
//! e_vw e_uv e_uw^-1, and a directed edge from u to v embeds in the ambient
//! right-angled Artin group as u v^-1. Eliminating non-tree generators with
//! the triangle relations reduces the generating set to a spanning tree and
//! turns every surviving relator into a commutator.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::flag::require_flag_hypotheses;
use crate::graph::{DirectedEdge, SimplicialGraph, VertexId};
use crate::snf::abelian_invariants;

/// A freely reduced word over presentation generators; letters are
/// (generator index, exponent) with exponent +1 or -1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<(usize, i8)>,
}

impl Word {
    pub fn new(letters: Vec<(usize, i8)>) -> Self {
        let mut w = Word { letters };
        w.reduce_free();
        w
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn reduce_free(&mut self) {
        let mut out: Vec<(usize, i8)> = Vec::with_capacity(self.letters.len());
        for &(g, e) in &self.letters {
            debug_assert!(e == 1 || e == -1);
            if let Some(&(lg, le)) = out.last() {
                if lg == g && le == -e {
                    out.pop();
                    continue;
                }
            }
            out.push((g, e));
        }
        self.letters = out;
    }

    /// Strips matching conjugating letters from both ends.
    pub fn reduce_cyclic(&mut self) {
        self.reduce_free();
        while self.letters.len() >= 2 {
            let (fg, fe) = self.letters[0];
            let &(lg, le) = self.letters.last().unwrap();
            if fg == lg && fe == -le {
                self.letters.remove(0);
                self.letters.pop();
            } else {
                break;
            }
        }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// Replaces every letter whose generator has an expansion, leaving other
    /// letters in place; the result is freely reduced.
    pub fn substitute(&self, expansion: &BTreeMap<usize, Word>) -> Word {
        let mut letters = Vec::new();
        for &(g, e) in &self.letters {
            match expansion.get(&g) {
                None => letters.push((g, e)),
                Some(w) => {
                    if e == 1 {
                        letters.extend_from_slice(&w.letters);
                    } else {
                        letters.extend(w.letters.iter().rev().map(|&(h, f)| (h, -f)));
                    }
                }
            }
        }
        Word::new(letters)
    }

    pub fn exponent_sums(&self, gens: usize) -> Vec<i64> {
        let mut sums = vec![0i64; gens];
        for &(g, e) in &self.letters {
            sums[g] += i64::from(e);
        }
        sums
    }

    /// True iff this word equals a commutator in the free group. A
    /// cyclically reduced word is a commutator exactly when some rotation
    /// has the form a b c a^-1 b^-1 c^-1 with possibly empty pieces (Wicks
    /// form); free reduction can hide the plain w1 w2 w1^-1 w2^-1 shape, so
    /// the three-piece form is the right thing to test.
    pub fn is_commutator(&self) -> bool {
        let mut w = self.clone();
        w.reduce_cyclic();
        let n = w.letters.len();
        if n == 0 {
            return true;
        }
        if !n.is_multiple_of(2) {
            return false;
        }
        let half = n / 2;
        let at = |rot: usize, i: usize| w.letters[(rot + i) % n];
        for rot in 0..n {
            for a in 0..=half {
                for b in 0..=(half - a) {
                    // pieces: [0,a), [a,a+b), [a+b,half)
                    let segments = [(0, a), (a, b), (a + b, half - a - b)];
                    let mut ok = true;
                    'outer: for (idx, &(start, len)) in segments.iter().enumerate() {
                        let inv_start = match idx {
                            0 => half,
                            1 => half + a,
                            _ => half + a + b,
                        };
                        for i in 0..len {
                            let (g, e) = at(rot, start + i);
                            let (ig, ie) = at(rot, inv_start + (len - 1 - i));
                            if g != ig || e != -ie {
                                ok = false;
                                break 'outer;
                            }
                        }
                    }
                    if ok {
                        return true;
                    }
                }
            }
        }
        false
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    format!("g{g}")
                } else {
                    format!("g{g}^-1")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Generators plus relators; relators are freely and cyclically reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<DirectedEdge>,
    pub relators: Vec<Word>,
}

impl GroupPresentation {
    /// Rank and torsion of the abelianization, via the Smith normal form of
    /// the relator exponent-sum matrix.
    pub fn abelianization(&self) -> (usize, Vec<BigInt>) {
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| r.exponent_sums(self.generators.len()))
            .collect();
        abelian_invariants(self.generators.len(), &rows)
    }
}

/// Printable generator names: `e_uv` when every vertex name is one
/// character (the documented compact form), `e_{u,v}` otherwise.
pub fn generator_names(g: &SimplicialGraph, generators: &[DirectedEdge]) -> Vec<String> {
    let compact = g.names().iter().all(|n| n.len() == 1);
    generators
        .iter()
        .map(|e| {
            if compact {
                format!("e_{}{}", g.name(e.tail), g.name(e.head))
            } else {
                format!("e_{{{},{}}}", g.name(e.tail), g.name(e.head))
            }
        })
        .collect()
}

fn triangle_relators(
    triangles: &[[VertexId; 3]],
    gen_index: &BTreeMap<DirectedEdge, usize>,
) -> Vec<(Word, Word)> {
    triangles
        .iter()
        .map(|&[u, v, w]| {
            let e1 = gen_index[&DirectedEdge { tail: u, head: v }];
            let e2 = gen_index[&DirectedEdge { tail: v, head: w }];
            let e3 = gen_index[&DirectedEdge { tail: u, head: w }];
            (
                Word::new(vec![(e1, 1), (e2, 1), (e3, -1)]),
                Word::new(vec![(e2, 1), (e1, 1), (e3, -1)]),
            )
        })
        .collect()
}

/// The presentation of the kernel group on all directed edges, with two
/// triangle relators per triangle. Requires a connected graph whose flag
/// complex is simply connected (otherwise the presentation would need the
/// infinite directed-cycle relator family, which is out of scope here).
pub fn dicks_leary_presentation(g: &SimplicialGraph) -> Result<GroupPresentation> {
    require_flag_hypotheses(g)?;
    let generators = g.edges();
    let gen_index: BTreeMap<DirectedEdge, usize> = generators
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let relators = triangle_relators(&g.triangles(), &gen_index)
        .into_iter()
        .flat_map(|(r1, r2)| [r1, r2])
        .collect();
    Ok(GroupPresentation {
        generators,
        relators,
    })
}

/// Reduces the generating set to the directed edges of the canonical
/// spanning tree by Tietze-eliminating every non-tree generator with a
/// triangle relation; all surviving relators are commutators.
pub fn reduced_presentation(g: &SimplicialGraph) -> Result<GroupPresentation> {
    require_flag_hypotheses(g)?;
    let all_edges = g.edges();
    let gen_index: BTreeMap<DirectedEdge, usize> =
        all_edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let tree_edges = g.spanning_tree()?;
    let is_tree_gen: Vec<bool> = {
        let tree_set: BTreeMap<DirectedEdge, ()> = tree_edges.iter().map(|&e| (e, ())).collect();
        all_edges.iter().map(|e| tree_set.contains_key(e)).collect()
    };
    let non_tree_count = all_edges.len() - tree_edges.len();

    let triangles = g.triangles();
    let triangle_gens: Vec<[usize; 3]> = triangles
        .iter()
        .map(|&[u, v, w]| {
            [
                gen_index[&DirectedEdge { tail: u, head: v }],
                gen_index[&DirectedEdge { tail: v, head: w }],
                gen_index[&DirectedEdge { tail: u, head: w }],
            ]
        })
        .collect();

    // Pass-structured elimination: a triangle fires once its other two
    // edges are tree generators or already eliminated, solving for its last
    // non-tree generator. In a chordal graph every non-tree edge lies in a
    // triangle whose other edges have strictly shorter tree paths, so each
    // pass makes progress; this is checked, not assumed.
    let mut expansion: BTreeMap<usize, Word> = BTreeMap::new();
    let mut consumed: Vec<bool> = vec![false; triangles.len()];
    let mut passes = 0usize;
    while expansion.len() < non_tree_count {
        passes += 1;
        if passes > all_edges.len() {
            return Err(Error::Internal(format!(
                "triangle elimination did not terminate within {} passes",
                all_edges.len()
            )));
        }
        let before = expansion.len();
        for (t, gens) in triangle_gens.iter().enumerate() {
            if consumed[t] {
                continue;
            }
            let unexpressed: Vec<usize> = gens
                .iter()
                .copied()
                .filter(|&x| !is_tree_gen[x] && !expansion.contains_key(&x))
                .collect();
            let Some(&x) = unexpressed.iter().max() else {
                continue;
            };
            if unexpressed.len() > 1 {
                continue;
            }
            let [e1, e2, e3] = *gens;
            // r1: e1 e2 e3^-1 = 1
            let solved = if x == e3 {
                Word::new(vec![(e1, 1), (e2, 1)])
            } else if x == e1 {
                Word::new(vec![(e3, 1), (e2, -1)])
            } else {
                Word::new(vec![(e1, -1), (e3, 1)])
            };
            let solved = solved.substitute(&expansion);
            debug_assert!(solved.letters().iter().all(|&(h, _)| is_tree_gen[h]));
            expansion.insert(x, solved);
            consumed[t] = true;
        }
        if expansion.len() == before {
            return Err(Error::Internal(
                "triangle elimination stalled with non-tree generators remaining".into(),
            ));
        }
    }

    // Survivors: per triangle the commutator [e2, e1] (the pair {r1, r2} is
    // equivalent to {r1, [e2, e1]}, and r1 is the relator consumed by the
    // elimination), plus any unconsumed r1 that does not reduce to nothing.
    let mut relators: Vec<Word> = Vec::new();
    let mut push = |w: Word| {
        let mut w = w;
        w.reduce_cyclic();
        if !w.is_empty() && !relators.contains(&w) {
            relators.push(w);
        }
    };
    for (t, gens) in triangle_gens.iter().enumerate() {
        let [e1, e2, e3] = *gens;
        let commutator = Word::new(vec![(e2, 1), (e1, 1), (e2, -1), (e1, -1)]);
        push(commutator.substitute(&expansion));
        if !consumed[t] {
            let product = Word::new(vec![(e1, 1), (e2, 1), (e3, -1)]);
            push(product.substitute(&expansion));
        }
    }

    // Reindex onto the tree generators.
    let mut new_index = BTreeMap::new();
    for (old, edge) in all_edges.iter().enumerate() {
        if is_tree_gen[old] {
            new_index.insert(old, tree_edges.binary_search(edge).expect("tree edge"));
        }
    }
    let relators = relators
        .into_iter()
        .map(|w| {
            Word::new(
                w.letters()
                    .iter()
                    .map(|&(h, e)| {
                        (
                            *new_index
                                .get(&h)
                                .expect("relator letter is a tree generator"),
                            e,
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    Ok(GroupPresentation {
        generators: tree_edges,
        relators,
    })
}

/// Symbolic identification of a vertex or edge group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDescriptor {
    FreeAbelian { rank: usize },
    Free { rank: usize },
    BbgOn { graph: SimplicialGraph },
    RaagOn { graph: SimplicialGraph },
}

impl GroupDescriptor {
    pub fn rank(&self) -> Option<usize> {
        match self {
            GroupDescriptor::FreeAbelian { rank } | GroupDescriptor::Free { rank } => Some(*rank),
            _ => None,
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::FreeAbelian { rank: 0 } | GroupDescriptor::Free { rank: 0 } => {
                write!(f, "1")
            }
            GroupDescriptor::FreeAbelian { rank: 1 } | GroupDescriptor::Free { rank: 1 } => {
                write!(f, "Z")
            }
            GroupDescriptor::FreeAbelian { rank } => write!(f, "Z^{rank}"),
            GroupDescriptor::Free { rank } => write!(f, "F_{rank}"),
            GroupDescriptor::BbgOn { graph } => write!(f, "H({})", graph.names().join(",")),
            GroupDescriptor::RaagOn { graph } => write!(f, "A({})", graph.names().join(",")),
        }
    }
}

/// Which group flavor a descriptor or decomposition refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Raag,
    Bbg,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Raag => "raag",
            Flavor::Bbg => "bbg",
        }
    }

    /// Edge-group rank over a separating clique of the given size.
    pub fn clique_rank(self, clique_size: usize) -> usize {
        match self {
            Flavor::Raag => clique_size,
            Flavor::Bbg => clique_size.saturating_sub(1),
        }
    }
}

/// Identifies the kernel group of `g`: free of rank n-1 when `g` is a tree,
/// free abelian of rank n-1 exactly when `g` is complete, and otherwise
/// just "the kernel group on g". Completeness is tested first so that the
/// free-abelian answer is equivalent to completeness.
pub fn recognize_special(g: &SimplicialGraph) -> Result<GroupDescriptor> {
    require_flag_hypotheses(g)?;
    Ok(bbg_descriptor(g))
}

pub(crate) fn bbg_descriptor(g: &SimplicialGraph) -> GroupDescriptor {
    let n = g.vertex_count();
    if g.is_complete() {
        GroupDescriptor::FreeAbelian {
            rank: n.saturating_sub(1),
        }
    } else if g.is_tree() {
        GroupDescriptor::Free { rank: n - 1 }
    } else {
        GroupDescriptor::BbgOn { graph: g.clone() }
    }
}

pub(crate) fn raag_descriptor(g: &SimplicialGraph) -> GroupDescriptor {
    if g.is_complete() {
        GroupDescriptor::FreeAbelian {
            rank: g.vertex_count(),
        }
    } else {
        GroupDescriptor::RaagOn { graph: g.clone() }
    }
}

/// Vertex-group label for a piece, per flavor.
pub(crate) fn piece_descriptor(piece: &SimplicialGraph, flavor: Flavor) -> GroupDescriptor {
    match flavor {
        Flavor::Raag => raag_descriptor(piece),
        Flavor::Bbg => bbg_descriptor(piece),
    }
}
