//! Independent brute-force reference implementations and the small-graph
//! sweep harness.
//!
//! The oracles deliberately share no code with the optimized paths: subset
//! enumeration over adjacency bitmasks, exhaustive induced-cycle search,
//! and a second integer elimination routine. The sweep enumerates all
//! connected graphs up to 7 vertices exhaustively (seeded uniform sampling
//! at 8) and evaluates registered cross-checks, reporting counterexamples.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::chordal::{chordality, validate_peo, validate_witness_cycle};
use crate::error::{Error, Result};
use crate::flag::{flag_complex, h1_summary, is_flag_simply_connected};
use crate::graph::{Clique, SimplicialGraph, VertexId};
use crate::jsj::{jsj_decomposition, jsj_report, verify_decomposition, GraphOfGroups};
use crate::presentation::{
    dicks_leary_presentation, recognize_special, reduced_presentation, Flavor, GroupDescriptor,
    GroupPresentation,
};
use crate::splitting::{bbg_splitting_verdict, raag_splitting_verdict, separating_cliques};

/// All separating cliques by exhaustive subset enumeration over adjacency
/// bitmasks; limited to 16 vertices.
pub fn brute_separating_cliques(g: &SimplicialGraph) -> Result<Vec<Clique>> {
    let n = g.vertex_count();
    if n > 16 {
        return Err(Error::SizeLimit(format!(
            "{n} vertices exceeds the oracle limit of 16"
        )));
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    let adj = adjacency_masks(g);
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut out = Vec::new();
    for mask in 1..full {
        if !mask_is_clique(&adj, mask) {
            continue;
        }
        let complement = full & !mask;
        if complement != 0 && !mask_connected_within(&adj, complement) {
            out.push(Clique::new(bits(mask)));
        }
    }
    out.sort_by(|a, b| (a.size(), a.members()).cmp(&(b.size(), b.members())));
    Ok(out)
}

fn adjacency_masks(g: &SimplicialGraph) -> Vec<u32> {
    let mut adj = vec![0u32; g.vertex_count()];
    for e in g.edges() {
        adj[e.tail] |= 1 << e.head;
        adj[e.head] |= 1 << e.tail;
    }
    adj
}

fn bits(mask: u32) -> Vec<VertexId> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

fn mask_is_clique(adj: &[u32], mask: u32) -> bool {
    bits(mask).iter().all(|&v| mask & !(1 << v) & !adj[v] == 0)
}

fn mask_connected_within(adj: &[u32], mask: u32) -> bool {
    if mask == 0 {
        return true;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    loop {
        let mut next = seen;
        for v in bits(seen) {
            next |= adj[v] & mask;
        }
        if next == seen {
            break;
        }
        seen = next;
    }
    seen == mask
}

/// Exhaustive search for a chordless cycle of length >= 4; returns the
/// first in canonical order (shortest, then lexicographically smallest
/// normalized vertex sequence) or nothing. Limited to 12 vertices.
pub fn brute_induced_long_cycle(g: &SimplicialGraph) -> Result<Option<Vec<VertexId>>> {
    let n = g.vertex_count();
    if n > 12 {
        return Err(Error::SizeLimit(format!(
            "{n} vertices exceeds the oracle limit of 12"
        )));
    }
    for target in 4..=n {
        for v0 in 0..n {
            let mut path = vec![v0];
            if let Some(cycle) = extend_induced_cycle(g, &mut path, target) {
                return Ok(Some(cycle));
            }
        }
    }
    Ok(None)
}

fn extend_induced_cycle(
    g: &SimplicialGraph,
    path: &mut Vec<VertexId>,
    target: usize,
) -> Option<Vec<VertexId>> {
    let v0 = path[0];
    let last = *path.last().unwrap();
    if path.len() == target {
        if g.has_edge(last, v0) && path[1] < path[target - 1] {
            return Some(path.clone());
        }
        return None;
    }
    let closing = path.len() == target - 1;
    for &u in g.neighbors(last) {
        if u <= v0 || path.contains(&u) {
            continue;
        }
        // interior vertices may touch only their predecessor; the closing
        // vertex must additionally touch v0 and nothing else
        let mut ok = true;
        for (i, &p) in path.iter().enumerate() {
            if i + 1 == path.len() {
                continue;
            }
            let allowed = i == 0 && closing;
            if g.has_edge(u, p) != allowed {
                ok = false;
                break;
            }
        }
        if closing && !g.has_edge(u, v0) {
            ok = false;
        }
        if !ok {
            continue;
        }
        path.push(u);
        if let Some(found) = extend_induced_cycle(g, path, target) {
            return Some(found);
        }
        path.pop();
    }
    None
}

/// Abelian invariants by an independent integer elimination: first-nonzero
/// pivoting (no smallest-entry strategy), then a pairwise gcd/lcm pass to
/// recover the divisibility chain. Limited to 64x64 exponent matrices.
#[allow(clippy::needless_range_loop)]
pub fn brute_abelianization(p: &GroupPresentation) -> Result<(usize, Vec<BigInt>)> {
    let gens = p.generators.len();
    let rels = p.relators.len();
    if gens > 64 || rels > 64 {
        return Err(Error::SizeLimit(format!(
            "{rels}x{gens} exponent matrix exceeds the oracle limit of 64"
        )));
    }
    if rels == 0 {
        return Ok((gens, Vec::new()));
    }
    let mut m: Vec<Vec<BigInt>> = p
        .relators
        .iter()
        .map(|r| {
            r.exponent_sums(gens)
                .into_iter()
                .map(BigInt::from)
                .collect()
        })
        .collect();
    let (rows, cols) = (rels, gens);
    let mut k = 0usize;
    while k < rows && k < cols {
        // first nonzero in row-major order
        let mut pivot = None;
        'scan: for i in k..rows {
            for j in k..cols {
                if !m[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'scan;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            let mut dirty = false;
            for i in k + 1..rows {
                if m[i][k].is_zero() {
                    continue;
                }
                let q = &m[i][k] / &m[k][k];
                for j in 0..cols {
                    let d = &q * &m[k][j];
                    m[i][j] -= d;
                }
                if !m[i][k].is_zero() {
                    m.swap(k, i);
                    dirty = true;
                }
            }
            for j in k + 1..cols {
                if m[k][j].is_zero() {
                    continue;
                }
                let q = &m[k][j] / &m[k][k];
                for row in m.iter_mut() {
                    let d = &q * &row[k];
                    row[j] -= d;
                }
                if !m[k][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(k, j);
                    }
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        k += 1;
    }
    let mut diag: Vec<BigInt> = (0..k.min(rows).min(cols))
        .map(|i| m[i][i].abs())
        .filter(|d| !d.is_zero())
        .collect();
    // pairwise gcd/lcm until the divisibility chain holds
    loop {
        let mut changed = false;
        for i in 0..diag.len() {
            for j in i + 1..diag.len() {
                if (&diag[j] % &diag[i]).is_zero() {
                    continue;
                }
                let g = diag[i].gcd(&diag[j]);
                let l = &diag[i] * &diag[j] / &g;
                diag[i] = g;
                diag[j] = l;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    diag.sort();
    let rank = gens - diag.len();
    let one = BigInt::from(1);
    Ok((rank, diag.into_iter().filter(|d| d > &one).collect()))
}

/// Deterministic seeded generator for sampling and permutation checks.
#[derive(Debug, Clone)]
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = (self.next_u64() % (i as u64 + 1)) as usize;
            items.swap(i, j);
        }
    }
}

/// Cross-checks the sweep can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SweepCheck {
    /// separating_cliques equals the subset-enumeration oracle.
    SeparatingCliques,
    /// chordality decision equals the induced-cycle oracle; certificates
    /// validate.
    Chordality,
    /// the ambient group splits iff the kernel group splits (flag inputs).
    SplitEquivalence,
    /// connected chordal graphs have trivial H1 and Euler characteristic 1.
    ChordalHomology,
    /// presentation sizes, commutator relators, abelianizations, and the
    /// tree/complete recognizers.
    Presentations,
    /// decompositions self-verify, are trees, have clique-free pieces, and
    /// the two flavors agree with rank offset 1.
    Jsj,
    /// relabeling vertices yields the relabeled decomposition.
    JsjPermutation,
}

impl SweepCheck {
    pub fn all() -> Vec<SweepCheck> {
        vec![
            SweepCheck::SeparatingCliques,
            SweepCheck::Chordality,
            SweepCheck::SplitEquivalence,
            SweepCheck::ChordalHomology,
            SweepCheck::Presentations,
            SweepCheck::Jsj,
            SweepCheck::JsjPermutation,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            SweepCheck::SeparatingCliques => "separating-cliques",
            SweepCheck::Chordality => "chordality",
            SweepCheck::SplitEquivalence => "split-equivalence",
            SweepCheck::ChordalHomology => "chordal-homology",
            SweepCheck::Presentations => "presentations",
            SweepCheck::Jsj => "jsj",
            SweepCheck::JsjPermutation => "jsj-permutation",
        }
    }

    pub fn from_name(name: &str) -> Option<SweepCheck> {
        SweepCheck::all().into_iter().find(|c| c.name() == name)
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Smallest graph size to visit; 1 for a full sweep.
    pub min_n: usize,
    pub max_n: usize,
    pub seed: u64,
    pub checks: Vec<SweepCheck>,
    /// Number of seeded samples per size above the exhaustive range.
    pub samples: usize,
    pub threads: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            min_n: 1,
            max_n: 6,
            seed: 1,
            checks: SweepCheck::all(),
            samples: 50_000,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CheckOutcome {
    pub evaluated: u64,
    pub failures: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub max_n: usize,
    pub graphs_scanned: u64,
    pub connected_graphs: u64,
    /// Sizes handled by seeded sampling rather than exhaustively.
    pub sampled_sizes: Vec<usize>,
    pub outcomes: BTreeMap<String, CheckOutcome>,
    /// First few failures, canonical order.
    pub counterexamples: Vec<String>,
}

impl SweepReport {
    pub fn total_failures(&self) -> u64 {
        self.outcomes.values().map(|o| o.failures).sum()
    }
}

/// Largest size the sweep enumerates exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 7;
const COUNTEREXAMPLE_CAP: usize = 100;
const VERTEX_POOL: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> SimplicialGraph {
    let vertices: Vec<String> = VERTEX_POOL[..n].iter().map(|s| s.to_string()).collect();
    let edges: Vec<(String, String)> = pairs
        .iter()
        .enumerate()
        .filter(|(b, _)| mask >> b & 1 == 1)
        .map(|(_, &(i, j))| (VERTEX_POOL[i].to_string(), VERTEX_POOL[j].to_string()))
        .collect();
    SimplicialGraph::from_named_edges(vertices, edges).expect("mask graph is simplicial")
}

fn mask_graph_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = vec![0u16; n];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        if mask >> b & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let mut seen: u16 = 1;
    loop {
        let mut next = seen;
        for (v, &a) in adj.iter().enumerate() {
            if seen >> v & 1 == 1 {
                next |= a;
            }
        }
        if next == seen {
            break;
        }
        seen = next;
    }
    seen == (1u16 << n) - 1
}

struct ChunkResult {
    scanned: u64,
    connected: u64,
    outcomes: BTreeMap<&'static str, CheckOutcome>,
    counterexamples: Vec<String>,
}

/// Runs the registered cross-checks over all (or sampled) connected graphs
/// with up to `max_n` vertices. Deterministic: parallel chunks merge in
/// canonical order and sampling is seeded.
pub fn sweep_small_graphs(cfg: &SweepConfig) -> Result<SweepReport> {
    if cfg.max_n > 8 {
        return Err(Error::SizeLimit(format!(
            "sweep limit is 8 vertices, got {}",
            cfg.max_n
        )));
    }
    let threads = cfg.threads.max(1);
    let mut report = SweepReport {
        seed: cfg.seed,
        max_n: cfg.max_n,
        graphs_scanned: 0,
        connected_graphs: 0,
        sampled_sizes: (EXHAUSTIVE_LIMIT + 1..=cfg.max_n).collect(),
        outcomes: cfg
            .checks
            .iter()
            .map(|c| (c.name().to_string(), CheckOutcome::default()))
            .collect(),
        counterexamples: Vec::new(),
    };

    for n in cfg.min_n.max(1)..=cfg.max_n {
        let pairs = pair_list(n);
        let masks: Vec<u64> = if n <= EXHAUSTIVE_LIMIT {
            (0..(1u64 << pairs.len())).collect()
        } else {
            let mut rng = SplitMix64(cfg.seed ^ (n as u64) << 56);
            let all = 1u64 << pairs.len();
            (0..cfg.samples as u64)
                .map(|_| rng.next_u64() % all)
                .collect()
        };
        let chunk_size = masks.len().div_ceil(threads);
        let chunks: Vec<&[u64]> = masks.chunks(chunk_size.max(1)).collect();
        let results: Vec<ChunkResult> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| {
                    let pairs = &pairs;
                    let checks = &cfg.checks;
                    let seed = cfg.seed;
                    scope.spawn(move || run_chunk(n, pairs, chunk, checks, seed))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep worker"))
                .collect()
        });
        for r in results {
            report.graphs_scanned += r.scanned;
            report.connected_graphs += r.connected;
            for (name, outcome) in r.outcomes {
                let entry = report.outcomes.entry(name.to_string()).or_default();
                entry.evaluated += outcome.evaluated;
                entry.failures += outcome.failures;
            }
            for ce in r.counterexamples {
                if report.counterexamples.len() < COUNTEREXAMPLE_CAP {
                    report.counterexamples.push(ce);
                }
            }
        }
    }
    Ok(report)
}

fn run_chunk(
    n: usize,
    pairs: &[(usize, usize)],
    masks: &[u64],
    checks: &[SweepCheck],
    seed: u64,
) -> ChunkResult {
    let mut result = ChunkResult {
        scanned: 0,
        connected: 0,
        outcomes: checks
            .iter()
            .map(|c| (c.name(), CheckOutcome::default()))
            .collect(),
        counterexamples: Vec::new(),
    };
    for &mask in masks {
        result.scanned += 1;
        if !mask_graph_connected(n, pairs, mask) {
            continue;
        }
        result.connected += 1;
        let g = graph_from_mask(n, pairs, mask);
        let chordal = chordality(&g).is_chordal();
        for &check in checks {
            let failure = run_check(check, &g, chordal, seed, n, mask);
            match failure {
                CheckStatus::Skipped => {}
                CheckStatus::Passed => {
                    result.outcomes.get_mut(check.name()).unwrap().evaluated += 1;
                }
                CheckStatus::Failed(detail) => {
                    let o = result.outcomes.get_mut(check.name()).unwrap();
                    o.evaluated += 1;
                    o.failures += 1;
                    if result.counterexamples.len() < COUNTEREXAMPLE_CAP {
                        result.counterexamples.push(format!(
                            "{} n={} mask={:#x}: {}",
                            check.name(),
                            n,
                            mask,
                            detail
                        ));
                    }
                }
            }
        }
    }
    result
}

enum CheckStatus {
    Skipped,
    Passed,
    Failed(String),
}

fn fail(detail: impl Into<String>) -> CheckStatus {
    CheckStatus::Failed(detail.into())
}

fn run_check(
    check: SweepCheck,
    g: &SimplicialGraph,
    chordal: bool,
    seed: u64,
    n: usize,
    mask: u64,
) -> CheckStatus {
    match check {
        SweepCheck::SeparatingCliques => {
            let fast = separating_cliques(g).expect("connected");
            let brute = brute_separating_cliques(g).expect("within oracle limits");
            if fast == brute {
                CheckStatus::Passed
            } else {
                fail(format!(
                    "fast {} vs brute {} cliques",
                    fast.len(),
                    brute.len()
                ))
            }
        }
        SweepCheck::Chordality => {
            let cert = chordality(g);
            let brute = brute_induced_long_cycle(g).expect("within oracle limits");
            match (&cert, &brute) {
                (crate::chordal::ChordalityCertificate::Peo(peo), None) => {
                    if validate_peo(g, peo) {
                        CheckStatus::Passed
                    } else {
                        fail("claimed elimination ordering is not perfect")
                    }
                }
                (crate::chordal::ChordalityCertificate::WitnessCycle(c), Some(_)) => {
                    if validate_witness_cycle(g, c) {
                        CheckStatus::Passed
                    } else {
                        fail("witness cycle is not induced")
                    }
                }
                (crate::chordal::ChordalityCertificate::Peo(_), Some(c)) => {
                    fail(format!("claimed chordal but oracle found cycle {c:?}"))
                }
                (crate::chordal::ChordalityCertificate::WitnessCycle(c), None) => {
                    fail(format!("claimed witness {c:?} but oracle found none"))
                }
            }
        }
        SweepCheck::SplitEquivalence => {
            if !is_flag_simply_connected(g).is_simply_connected() {
                return CheckStatus::Skipped;
            }
            let bbg = bbg_splitting_verdict(g).expect("hypotheses hold");
            let raag = raag_splitting_verdict(g);
            if bbg.splits == raag.splits {
                CheckStatus::Passed
            } else {
                fail(format!(
                    "kernel splits={} ambient splits={}",
                    bbg.splits, raag.splits
                ))
            }
        }
        SweepCheck::ChordalHomology => {
            if !chordal {
                return CheckStatus::Skipped;
            }
            let complex = match flag_complex(g) {
                Ok(c) => c,
                Err(e) => return fail(format!("flag complex failed: {e}")),
            };
            let h = h1_summary(&complex);
            if h.h1_rank == 0 && h.h1_torsion.is_empty() && h.euler_characteristic == 1 {
                CheckStatus::Passed
            } else {
                fail(format!(
                    "h1 rank {}, torsion {:?}, euler {}",
                    h.h1_rank, h.h1_torsion, h.euler_characteristic
                ))
            }
        }
        SweepCheck::Presentations => {
            if !chordal {
                return CheckStatus::Skipped;
            }
            check_presentations(g)
        }
        SweepCheck::Jsj => {
            if !chordal {
                return CheckStatus::Skipped;
            }
            check_jsj(g)
        }
        SweepCheck::JsjPermutation => {
            if !chordal || g.vertex_count() > 7 {
                return CheckStatus::Skipped;
            }
            check_jsj_permutation(g, seed ^ mask.wrapping_mul(0x9e37).wrapping_add(n as u64))
        }
    }
}

fn check_presentations(g: &SimplicialGraph) -> CheckStatus {
    let n = g.vertex_count();
    let dl = match dicks_leary_presentation(g) {
        Ok(p) => p,
        Err(e) => return fail(format!("dicks-leary failed: {e}")),
    };
    if dl.generators.len() != g.edge_count() {
        return fail("generator count != edge count");
    }
    if dl.relators.len() != 2 * g.triangles().len() {
        return fail("relator count != 2 * triangle count");
    }
    let red = match reduced_presentation(g) {
        Ok(p) => p,
        Err(e) => return fail(format!("reduction failed: {e}")),
    };
    if red.generators.len() != n - 1 {
        return fail(format!(
            "reduced generators {} != {}",
            red.generators.len(),
            n - 1
        ));
    }
    for r in &red.relators {
        if !r.is_commutator() {
            return fail(format!("relator {r} is not a commutator"));
        }
    }
    let ab_red = red.abelianization();
    let ab_dl = dl.abelianization();
    if ab_red != (n - 1, vec![]) {
        return fail(format!("reduced abelianization {ab_red:?}"));
    }
    if ab_dl != ab_red {
        return fail("presentations abelianize differently");
    }
    match brute_abelianization(&red) {
        Ok(b) if b == ab_red => {}
        Ok(b) => return fail(format!("oracle abelianization {b:?} != {ab_red:?}")),
        Err(e) => return fail(format!("oracle abelianization failed: {e}")),
    }
    // recognizers: exact on trees and complete graphs, in both directions
    let descriptor = recognize_special(g).expect("hypotheses hold");
    let expect_free_abelian = g.is_complete();
    match &descriptor {
        GroupDescriptor::FreeAbelian { rank } => {
            if !expect_free_abelian || *rank != n - 1 {
                return fail(format!("bad free-abelian recognition ({descriptor})"));
            }
        }
        GroupDescriptor::Free { rank } => {
            if g.is_complete() || !g.is_tree() || *rank != n - 1 {
                return fail(format!("bad free recognition ({descriptor})"));
            }
        }
        _ => {
            if g.is_complete() || g.is_tree() {
                return fail("special graph not recognized");
            }
        }
    }
    CheckStatus::Passed
}

fn decomposition_shape(d: &GraphOfGroups) -> Vec<(Vec<String>, Option<usize>)> {
    d.vertices
        .iter()
        .map(|v| (v.piece.clone(), v.group.rank()))
        .collect()
}

fn check_jsj(g: &SimplicialGraph) -> CheckStatus {
    let raag = match jsj_report(g, Flavor::Raag) {
        Ok(r) => r,
        Err(e) => return fail(format!("ambient report failed: {e}")),
    };
    let bbg = match jsj_report(g, Flavor::Bbg) {
        Ok(r) => r,
        Err(e) => return fail(format!("kernel report failed: {e}")),
    };
    for (flavor, rep) in [("raag", &raag), ("bbg", &bbg)] {
        let d = &rep.decomposition;
        let violations = verify_decomposition(d, g);
        if !violations.is_empty() {
            return fail(format!("{flavor} verification: {}", violations[0]));
        }
        if d.edge_count() + 1 != d.vertex_count() {
            return fail(format!("{flavor} decomposition is not a tree"));
        }
    }
    // leaf property against the oracle: no piece has a separating clique
    for v in &bbg.decomposition.vertices {
        let ids: Vec<usize> = v
            .piece
            .iter()
            .map(|n| g.index_of(n).expect("piece vertex"))
            .collect();
        let piece = g.induced_subgraph(&ids).expect("piece induces");
        match brute_separating_cliques(&piece) {
            Ok(seps) if seps.is_empty() => {}
            Ok(_) => return fail(format!("piece {:?} has a separating clique", v.piece)),
            Err(e) => return fail(format!("piece oracle failed: {e}")),
        }
    }
    // identical underlying trees; clique ranks differ by exactly 1
    let (dr, db) = (&raag.decomposition, &bbg.decomposition);
    if dr.vertices.len() != db.vertices.len()
        || dr
            .vertices
            .iter()
            .zip(&db.vertices)
            .any(|(a, b)| a.piece != b.piece)
        || dr.edges.len() != db.edges.len()
        || dr
            .edges
            .iter()
            .zip(&db.edges)
            .any(|(a, b)| (a.from, a.to, &a.clique) != (b.from, b.to, &b.clique))
    {
        return fail("flavors disagree on the underlying tree");
    }
    for (a, b) in dr.vertices.iter().zip(&db.vertices) {
        if let (Some(ra), Some(rb)) = (a.group.rank(), b.group.rank()) {
            if ra != rb + 1 {
                return fail(format!("vertex rank offset {ra} vs {rb}"));
            }
        }
    }
    for (a, b) in dr.edges.iter().zip(&db.edges) {
        match (a.group.rank(), b.group.rank()) {
            (Some(ra), Some(rb)) if ra == rb + 1 => {}
            _ => return fail("edge rank offset is not 1"),
        }
    }
    // the direct construction must agree with the report when it applies
    if !g.is_complete() && g.cut_vertices().expect("connected").is_empty() {
        match jsj_decomposition(g, Flavor::Bbg) {
            Ok(direct) if &direct == db => {}
            Ok(_) => return fail("direct decomposition differs from report"),
            Err(e) => return fail(format!("direct decomposition failed: {e}")),
        }
    }
    CheckStatus::Passed
}

fn check_jsj_permutation(g: &SimplicialGraph, seed: u64) -> CheckStatus {
    let n = g.vertex_count();
    let names: Vec<String> = g.names().to_vec();
    let mut permutations: Vec<Vec<usize>> = vec![(0..n).rev().collect()];
    let mut rng = SplitMix64(seed);
    let mut random: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut random);
    permutations.push(random);
    for perm in permutations {
        let map: BTreeMap<String, String> = (0..n)
            .map(|i| (names[i].clone(), names[perm[i]].clone()))
            .collect();
        let renamed_edges: Vec<(String, String)> = g
            .edges()
            .into_iter()
            .map(|e| (map[g.name(e.tail)].clone(), map[g.name(e.head)].clone()))
            .collect();
        let renamed_vertices: Vec<String> = names.iter().map(|x| map[x].clone()).collect();
        let permuted = SimplicialGraph::from_named_edges(renamed_vertices, renamed_edges)
            .expect("bijective rename");
        for flavor in [Flavor::Raag, Flavor::Bbg] {
            let original = match jsj_report(g, flavor) {
                Ok(r) => r.decomposition,
                Err(e) => return fail(format!("report failed: {e}")),
            };
            let transported = original.relabel(&map);
            let recomputed = match jsj_report(&permuted, flavor) {
                Ok(r) => r.decomposition,
                Err(e) => return fail(format!("permuted report failed: {e}")),
            };
            if decomposition_shape(&recomputed) != decomposition_shape(&transported)
                || recomputed.edges.len() != transported.edges.len()
                || recomputed
                    .edges
                    .iter()
                    .zip(&transported.edges)
                    .any(|(a, b)| (a.from, a.to, &a.clique) != (b.from, b.to, &b.clique))
            {
                return fail(format!(
                    "permutation {perm:?} changes the decomposition shape"
                ));
            }
        }
    }
    CheckStatus::Passed
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{cycle_graph, k_n, path, sun3};

    #[test]
    fn brute_separating_cliques_matches_fast_path() {
        let f4 = sun3();
        assert_eq!(
            brute_separating_cliques(&f4).unwrap(),
            separating_cliques(&f4).unwrap()
        );
        assert!(brute_separating_cliques(&k_n(5)).unwrap().is_empty());
        let p = path(&["a", "b", "c"]);
        assert_eq!(
            brute_separating_cliques(&p).unwrap(),
            vec![Clique::new(vec![1])]
        );
    }

    #[test]
    fn brute_cycle_oracle() {
        let c4 = cycle_graph(4);
        let found = brute_induced_long_cycle(&c4).unwrap().unwrap();
        assert_eq!(found.len(), 4);
        assert!(brute_induced_long_cycle(&sun3()).unwrap().is_none());
        let c5 = cycle_graph(5);
        assert_eq!(brute_induced_long_cycle(&c5).unwrap().unwrap().len(), 5);
    }

    #[test]
    fn brute_abelianization_cases() {
        use crate::graph::DirectedEdge;
        use crate::presentation::Word;
        // free abelian Z^3: three generators, commutator relators
        let z3 = reduced_presentation(&k_n(4)).unwrap();
        assert_eq!(brute_abelianization(&z3).unwrap(), (3, vec![]));
        // Z/2
        let p = GroupPresentation {
            generators: vec![DirectedEdge { tail: 0, head: 1 }],
            relators: vec![Word::new(vec![(0, 1), (0, 1)])],
        };
        assert_eq!(
            brute_abelianization(&p).unwrap(),
            (0, vec![BigInt::from(2)])
        );
        // 3-sun reduced presentation
        let red = reduced_presentation(&sun3()).unwrap();
        assert_eq!(brute_abelianization(&red).unwrap(), (5, vec![]));
    }

    #[test]
    fn sweep_tiny_is_clean() {
        let cfg = SweepConfig {
            max_n: 5,
            ..SweepConfig::default()
        };
        let report = sweep_small_graphs(&cfg).unwrap();
        assert_eq!(report.total_failures(), 0, "{:#?}", report.counterexamples);
        assert!(report.connected_graphs > 0);
        assert!(report.sampled_sizes.is_empty());
    }

    #[test]
    fn sweep_rejects_oversize() {
        let cfg = SweepConfig {
            max_n: 9,
            ..SweepConfig::default()
        };
        assert!(matches!(sweep_small_graphs(&cfg), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn sweep_samples_size_8_with_seed() {
        let cfg = SweepConfig {
            min_n: 8,
            max_n: 8,
            seed: 42,
            checks: vec![SweepCheck::SeparatingCliques, SweepCheck::ChordalHomology],
            samples: 800,
            threads: 2,
        };
        let report = sweep_small_graphs(&cfg).unwrap();
        assert_eq!(report.sampled_sizes, vec![8]);
        assert_eq!(report.total_failures(), 0, "{:#?}", report.counterexamples);
        // reproducible under the same seed
        let again = sweep_small_graphs(&cfg).unwrap();
        assert_eq!(report.graphs_scanned, again.graphs_scanned);
        assert_eq!(report.connected_graphs, again.connected_graphs);
    }

    #[test]
    fn sweep_is_deterministic_across_thread_counts() {
        let base = SweepConfig {
            max_n: 4,
            ..SweepConfig::default()
        };
        let one = sweep_small_graphs(&base).unwrap();
        let four = sweep_small_graphs(&SweepConfig { threads: 4, ..base }).unwrap();
        assert_eq!(one.graphs_scanned, four.graphs_scanned);
        assert_eq!(one.connected_graphs, four.connected_graphs);
        assert_eq!(one.counterexamples, four.counterexamples);
        let j1 = serde_json::to_string(&one.outcomes).unwrap();
        let j4 = serde_json::to_string(&four.outcomes).unwrap();
        assert_eq!(j1, j4);
    }
}
