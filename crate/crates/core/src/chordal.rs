//! Chordality: Lex-BFS with a perfect-elimination check, and an induced
//! long-cycle witness when the check fails.

use std::collections::VecDeque;

use crate::graph::{SimplicialGraph, VertexId};

/// Outcome of the chordality decision. Exactly one witness is produced:
/// a perfect elimination ordering when the graph is chordal, otherwise an
/// induced cycle of length >= 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalityCertificate {
    /// Order in which vertices can be eliminated; each vertex is simplicial
    /// in the subgraph induced by itself and the later vertices.
    Peo(Vec<VertexId>),
    /// A chordless cycle of length >= 4, as a cyclic vertex sequence.
    WitnessCycle(Vec<VertexId>),
}

impl ChordalityCertificate {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityCertificate::Peo(_))
    }

    pub fn peo(&self) -> Option<&[VertexId]> {
        match self {
            ChordalityCertificate::Peo(p) => Some(p),
            ChordalityCertificate::WitnessCycle(_) => None,
        }
    }

    pub fn witness_cycle(&self) -> Option<&[VertexId]> {
        match self {
            ChordalityCertificate::Peo(_) => None,
            ChordalityCertificate::WitnessCycle(c) => Some(c),
        }
    }
}

/// Decides chordality. Lex-BFS gives a candidate elimination order in
/// linear-ish time; if the perfect-elimination check fails, the graph has an
/// induced cycle of length >= 4 which is located explicitly.
pub fn chordality(g: &SimplicialGraph) -> ChordalityCertificate {
    let order = lex_bfs(g);
    let elim: Vec<VertexId> = order.into_iter().rev().collect();
    if is_perfect_elimination(g, &elim) {
        ChordalityCertificate::Peo(elim)
    } else {
        let cycle = find_induced_long_cycle(g)
            .expect("graph failed the elimination check, so an induced long cycle exists");
        ChordalityCertificate::WitnessCycle(cycle)
    }
}

pub fn is_chordal(g: &SimplicialGraph) -> bool {
    chordality(g).is_chordal()
}

/// Lexicographic BFS visit order; ties broken by smallest vertex id.
fn lex_bfs(g: &SimplicialGraph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let u = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited[u] = true;
        order.push(u);
        for &w in g.neighbors(u) {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// Validates an elimination order with the parent-subset test: for each
/// vertex, its later neighbors minus the earliest of them must all be
/// adjacent to that earliest one.
fn is_perfect_elimination(g: &SimplicialGraph, elim: &[VertexId]) -> bool {
    let n = g.vertex_count();
    let mut pos = vec![0usize; n];
    for (i, &v) in elim.iter().enumerate() {
        pos[v] = i;
    }
    for &v in elim {
        let later: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        for &w in &later {
            if w != parent && !g.has_edge(parent, w) {
                return false;
            }
        }
    }
    true
}

/// Finds an induced cycle of length >= 4 if one exists: for a vertex v with
/// non-adjacent neighbors a, b, any shortest a-b path avoiding the rest of
/// N[v] closes up with v to a chordless cycle. Search order is canonical, so
/// the returned witness is deterministic.
pub(crate) fn find_induced_long_cycle(g: &SimplicialGraph) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    for v in g.vertices() {
        let nbrs: Vec<VertexId> = g.neighbors(v).iter().copied().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut allowed = vec![true; n];
                allowed[v] = false;
                for &w in &nbrs {
                    allowed[w] = false;
                }
                allowed[a] = true;
                allowed[b] = true;
                if let Some(path) = shortest_path_within(g, &allowed, a, b) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(canonical_cycle(cycle));
                }
            }
        }
    }
    None
}

fn shortest_path_within(
    g: &SimplicialGraph,
    allowed: &[bool],
    from: VertexId,
    to: VertexId,
) -> Option<Vec<VertexId>> {
    let mut prev = vec![usize::MAX; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if allowed[w] && !seen[w] {
                seen[w] = true;
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Rotates a cyclic vertex sequence so the smallest vertex comes first and
/// its smaller neighbor second.
fn canonical_cycle(cycle: Vec<VertexId>) -> Vec<VertexId> {
    let k = cycle.len();
    let start = (0..k).min_by_key(|&i| cycle[i]).expect("nonempty cycle");
    let forward: Vec<VertexId> = (0..k).map(|i| cycle[(start + i) % k]).collect();
    let backward: Vec<VertexId> = (0..k).map(|i| cycle[(start + k - i) % k]).collect();
    if forward[1] <= backward[1] {
        forward
    } else {
        backward
    }
}

/// Full quadratic perfect-elimination validation, used by tests to confirm
/// certificates independently of the parent-subset shortcut.
pub fn validate_peo(g: &SimplicialGraph, elim: &[VertexId]) -> bool {
    let n = g.vertex_count();
    if elim.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in elim {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in elim.iter().enumerate() {
        pos[v] = i;
    }
    for &v in elim {
        let later: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        if !g.is_clique(&later) {
            return false;
        }
    }
    true
}

/// True iff `cycle` is an induced cycle of length >= 4 in `g`.
pub fn validate_witness_cycle(g: &SimplicialGraph, cycle: &[VertexId]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{cycle_graph, graph, k_n, path, sun3};

    #[test]
    fn c4_yields_witness() {
        let c4 = cycle_graph(4);
        let cert = chordality(&c4);
        let w = cert.witness_cycle().expect("C_4 is not chordal");
        assert_eq!(w.len(), 4);
        assert!(validate_witness_cycle(&c4, w));
    }

    #[test]
    fn c5_yields_witness_of_length_5() {
        let c5 = cycle_graph(5);
        let w = chordality(&c5).witness_cycle().unwrap().to_vec();
        assert_eq!(w.len(), 5);
        assert!(validate_witness_cycle(&c5, &w));
    }

    #[test]
    fn sun3_is_chordal() {
        let f4 = sun3();
        let cert = chordality(&f4);
        let peo = cert.peo().expect("3-sun is chordal");
        assert!(validate_peo(&f4, peo));
        assert!(find_induced_long_cycle(&f4).is_none());
    }

    #[test]
    fn trees_are_chordal() {
        for g in [
            path(&["a", "b", "c", "d"]),
            graph(&[("a", "b"), ("a", "c"), ("a", "d"), ("c", "e")]),
        ] {
            let cert = chordality(&g);
            assert!(validate_peo(&g, cert.peo().unwrap()));
        }
    }

    #[test]
    fn complete_graphs_are_chordal() {
        for n in 1..=5 {
            let g = k_n(n);
            assert!(validate_peo(&g, chordality(&g).peo().unwrap()));
        }
    }

    #[test]
    fn witness_has_no_chords() {
        // C_6 with one long chord still contains an induced C_4 or C_5.
        let g = graph(&[
            ("a", "b"),
            ("b", "c"),
            ("c", "d"),
            ("d", "e"),
            ("e", "f"),
            ("f", "a"),
            ("a", "d"),
        ]);
        let w = chordality(&g).witness_cycle().unwrap().to_vec();
        assert!(validate_witness_cycle(&g, &w));
    }

    #[test]
    fn empty_and_single_vertex_are_chordal() {
        let empty = graph(&[]);
        assert!(chordality(&empty).is_chordal());
        let one = crate::graph::SimplicialGraph::parse_text("vertex a").unwrap();
        assert_eq!(chordality(&one).peo(), Some(&[0usize][..]));
    }
}
