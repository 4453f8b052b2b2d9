//! Finite simplicial graphs with canonical vertex order.
//!
//! Vertices are named by opaque strings matching `[A-Za-z0-9_]+` and mapped
//! to dense ids in sorted-name order. Every derived enumeration (cliques,
//! components, spanning trees, ...) follows this canonical order, so equal
//! inputs produce byte-identical outputs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense vertex id; the i-th vertex in sorted-name order.
pub type VertexId = usize;

/// Default cap on the number of cliques `cliques` will enumerate.
pub const DEFAULT_CLIQUE_CAP: usize = 1_000_000;

/// A directed edge of the defining graph; presentation generators live on
/// these. The reversal of a generator is its inverse, so one canonical
/// orientation (tail < head) is stored per undirected edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedEdge {
    pub tail: VertexId,
    pub head: VertexId,
}

impl DirectedEdge {
    /// Canonical orientation for the undirected edge {u, v}.
    pub fn canonical(u: VertexId, v: VertexId) -> Self {
        DirectedEdge {
            tail: u.min(v),
            head: u.max(v),
        }
    }
}

/// A vertex set inducing a complete subgraph, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique {
    members: Vec<VertexId>,
}

impl Clique {
    /// Builds a clique from members, sorting and deduplicating. The caller
    /// is responsible for completeness; use [`Clique::checked`] to validate.
    pub fn new(mut members: Vec<VertexId>) -> Self {
        members.sort_unstable();
        members.dedup();
        Clique { members }
    }

    /// Builds a clique and validates completeness in `g`.
    pub fn checked(g: &SimplicialGraph, members: Vec<VertexId>) -> Result<Self> {
        let c = Clique::new(members);
        for &v in &c.members {
            if v >= g.vertex_count() {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
        }
        if !g.is_clique(&c.members) {
            return Err(Error::Internal(format!(
                "vertex set {{{}}} is not a clique",
                g.names_of(&c.members).join(", ")
            )));
        }
        Ok(c)
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &[VertexId]) -> bool {
        self.members.iter().all(|v| other.binary_search(v).is_ok())
    }
}

/// Serde mirror of the JSON graph format:
/// `{"vertices":["a", ...], "edges":[["u","v"], ...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub(crate) struct GraphJson {
    #[serde(default)]
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
}

/// A finite simple graph: no loops, no multi-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialGraph {
    names: Vec<String>,
    adj: Vec<BTreeSet<VertexId>>,
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl SimplicialGraph {
    /// Builds a graph from named vertices and edges. Edge endpoints are
    /// declared implicitly; `vertices` only needs to list isolated ones.
    pub fn from_named_edges<I, J, S, T>(vertices: I, edges: J) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = (T, T)>,
        S: Into<String>,
        T: Into<String>,
    {
        let mut name_set: BTreeSet<String> = BTreeSet::new();
        let mut raw_edges: Vec<(String, String)> = Vec::new();
        for v in vertices {
            let v = v.into();
            if !valid_name(&v) {
                return Err(Error::Simpliciality(format!("invalid vertex name `{v}`")));
            }
            name_set.insert(v);
        }
        for (u, v) in edges {
            let (u, v) = (u.into(), v.into());
            for n in [&u, &v] {
                if !valid_name(n) {
                    return Err(Error::Simpliciality(format!("invalid vertex name `{n}`")));
                }
            }
            name_set.insert(u.clone());
            name_set.insert(v.clone());
            raw_edges.push((u, v));
        }
        let names: Vec<String> = name_set.into_iter().collect();
        let index: BTreeMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mut g = SimplicialGraph {
            adj: vec![BTreeSet::new(); names.len()],
            names,
        };
        for (u, v) in raw_edges {
            let (iu, iv) = (index[&u], index[&v]);
            if iu == iv {
                return Err(Error::Simpliciality(format!("self-loop at `{u}`")));
            }
            if g.adj[iu].contains(&iv) {
                return Err(Error::Simpliciality(format!("duplicate edge {{{u}, {v}}}")));
            }
            g.adj[iu].insert(iv);
            g.adj[iv].insert(iu);
        }
        Ok(g)
    }

    /// Parses the plain-text edge-list format: one item per line,
    /// `# comment`, `vertex <name>` for isolated vertices, `<u> <v>` for
    /// edges; names match `[A-Za-z0-9_]+`.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut vertices: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                ["vertex", name] => {
                    if !valid_name(name) {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("invalid vertex name `{name}`"),
                        });
                    }
                    vertices.push((*name).to_string());
                }
                [u, v] => {
                    for n in [u, v] {
                        if !valid_name(n) {
                            return Err(Error::Parse {
                                line: line_no,
                                message: format!("invalid vertex name `{n}`"),
                            });
                        }
                    }
                    edges.push(((*u).to_string(), (*v).to_string()));
                }
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!(
                            "expected `vertex <name>` or `<u> <v>`, got `{}`",
                            line.trim()
                        ),
                    })
                }
            }
        }
        Self::from_named_edges(vertices, edges)
    }

    /// Parses the JSON format `{"vertices":[...], "edges":[["u","v"],...]}`.
    pub fn parse_json(text: &str) -> Result<Self> {
        let parsed: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        Self::from_named_edges(parsed.vertices, parsed.edges)
    }

    /// Parses either format, choosing JSON when the first non-space byte is `{`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn names_of(&self, vs: &[VertexId]) -> Vec<String> {
        vs.iter().map(|&v| self.names[v].clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<VertexId> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn neighbors(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.adj.len() && self.adj[u].contains(&v)
    }

    /// All undirected edges in canonical orientation, sorted.
    pub fn edges(&self) -> Vec<DirectedEdge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for &v in self.adj[u].range(u + 1..) {
                out.push(DirectedEdge { tail: u, head: v });
            }
        }
        out
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.names.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{v}")))
        }
    }

    /// Subgraph induced on `s`; vertex names are preserved and re-indexed
    /// canonically.
    pub fn induced_subgraph(&self, s: &[VertexId]) -> Result<SimplicialGraph> {
        let mut set: Vec<VertexId> = s.to_vec();
        set.sort_unstable();
        set.dedup();
        for &v in &set {
            self.check_vertex(v)?;
        }
        let names: Vec<String> = set.iter().map(|&v| self.names[v].clone()).collect();
        let pos: BTreeMap<VertexId, usize> = set.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![BTreeSet::new(); set.len()];
        for (i, &v) in set.iter().enumerate() {
            for w in &self.adj[v] {
                if let Some(&j) = pos.get(w) {
                    adj[i].insert(j);
                }
            }
        }
        Ok(SimplicialGraph { names, adj })
    }

    /// True iff the graph has at most one connected component. The empty
    /// graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Connected components as sorted vertex lists, ordered by first vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let n = self.names.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components of the subgraph induced on `within` (which must
    /// be sorted); used for complement-connectivity tests without building
    /// intermediate graphs.
    pub(crate) fn components_within(&self, within: &[VertexId]) -> Vec<Vec<VertexId>> {
        let mut inside = vec![false; self.names.len()];
        for &v in within {
            inside[v] = true;
        }
        let mut seen = vec![false; self.names.len()];
        let mut out = Vec::new();
        for &start in within {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if inside[w] && !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Vertices whose removal disconnects the graph, sorted.
    pub fn cut_vertices(&self) -> Result<Vec<VertexId>> {
        if !self.is_connected() {
            return Err(Error::DisconnectedInput);
        }
        let n = self.names.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0usize;
        if n == 0 {
            return Ok(Vec::new());
        }
        self.dfs_articulation(0, usize::MAX, &mut timer, &mut disc, &mut low, &mut is_cut);
        Ok((0..n).filter(|&v| is_cut[v]).collect())
    }

    fn dfs_articulation(
        &self,
        u: VertexId,
        parent: VertexId,
        timer: &mut usize,
        disc: &mut [usize],
        low: &mut [usize],
        is_cut: &mut [bool],
    ) {
        disc[u] = *timer;
        low[u] = *timer;
        *timer += 1;
        let mut children = 0usize;
        for &v in &self.adj[u] {
            if disc[v] == usize::MAX {
                children += 1;
                self.dfs_articulation(v, u, timer, disc, low, is_cut);
                low[u] = low[u].min(low[v]);
                if parent != usize::MAX && low[v] >= disc[u] {
                    is_cut[u] = true;
                }
            } else if v != parent {
                low[u] = low[u].min(disc[v]);
            }
        }
        if parent == usize::MAX && children >= 2 {
            is_cut[u] = true;
        }
    }

    /// Biconnected blocks as sorted vertex lists, ordered canonically.
    /// A single-vertex graph is its own block.
    pub fn biconnected_blocks(&self) -> Result<Vec<Vec<VertexId>>> {
        if !self.is_connected() {
            return Err(Error::DisconnectedInput);
        }
        let n = self.names.len();
        if n == 0 {
            return Ok(Vec::new());
        }
        if n == 1 {
            return Ok(vec![vec![0]]);
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0usize;
        let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();
        let mut blocks: Vec<Vec<VertexId>> = Vec::new();
        self.dfs_blocks(
            0,
            usize::MAX,
            &mut timer,
            &mut disc,
            &mut low,
            &mut edge_stack,
            &mut blocks,
        );
        if !edge_stack.is_empty() {
            let mut verts = BTreeSet::new();
            for (a, b) in edge_stack.drain(..) {
                verts.insert(a);
                verts.insert(b);
            }
            blocks.push(verts.into_iter().collect());
        }
        blocks.sort();
        Ok(blocks)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs_blocks(
        &self,
        u: VertexId,
        parent: VertexId,
        timer: &mut usize,
        disc: &mut [usize],
        low: &mut [usize],
        edge_stack: &mut Vec<(VertexId, VertexId)>,
        blocks: &mut Vec<Vec<VertexId>>,
    ) {
        disc[u] = *timer;
        low[u] = *timer;
        *timer += 1;
        for &v in &self.adj[u] {
            if disc[v] == usize::MAX {
                edge_stack.push((u, v));
                self.dfs_blocks(v, u, timer, disc, low, edge_stack, blocks);
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let mut verts = BTreeSet::new();
                    while let Some(&(a, b)) = edge_stack.last() {
                        if disc[a] >= disc[v] {
                            verts.insert(a);
                            verts.insert(b);
                            edge_stack.pop();
                        } else {
                            break;
                        }
                    }
                    // the tree edge (u, v) itself
                    if let Some(&(a, b)) = edge_stack.last() {
                        if (a, b) == (u, v) {
                            edge_stack.pop();
                        }
                    }
                    verts.insert(u);
                    verts.insert(v);
                    blocks.push(verts.into_iter().collect());
                }
            } else if v != parent && disc[v] < disc[u] {
                edge_stack.push((u, v));
                low[u] = low[u].min(disc[v]);
            }
        }
    }

    /// link(v): subgraph induced on the neighbors of v.
    pub fn link_of_vertex(&self, v: VertexId) -> Result<SimplicialGraph> {
        self.check_vertex(v)?;
        let nbrs: Vec<VertexId> = self.adj[v].iter().copied().collect();
        self.induced_subgraph(&nbrs)
    }

    /// star(v): subgraph induced on link(v) together with v.
    pub fn star_of_vertex(&self, v: VertexId) -> Result<SimplicialGraph> {
        self.check_vertex(v)?;
        let mut verts: Vec<VertexId> = self.adj[v].iter().copied().collect();
        verts.push(v);
        self.induced_subgraph(&verts)
    }

    /// link(e) for the edge e = {u, v}: subgraph induced on the vertices
    /// adjacent to both u and v.
    ///
    /// Note this follows the definition literally; the set induced by
    /// link(e) together with {u, v} is the star of e, even where informal
    /// usage calls that set the link.
    pub fn link_of_edge(&self, u: VertexId, v: VertexId) -> Result<SimplicialGraph> {
        self.check_edge(u, v)?;
        let common: Vec<VertexId> = self.adj[u].intersection(&self.adj[v]).copied().collect();
        self.induced_subgraph(&common)
    }

    /// star(e): subgraph induced on link(e) together with the endpoints of e.
    pub fn star_of_edge(&self, u: VertexId, v: VertexId) -> Result<SimplicialGraph> {
        self.check_edge(u, v)?;
        let mut verts: Vec<VertexId> = self.adj[u].intersection(&self.adj[v]).copied().collect();
        verts.push(u);
        verts.push(v);
        self.induced_subgraph(&verts)
    }

    fn check_edge(&self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::UnknownEdge(
                self.names[u].clone(),
                self.names[v].clone(),
            ));
        }
        Ok(())
    }

    pub fn is_clique(&self, members: &[VertexId]) -> bool {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_complete(&self) -> bool {
        let n = self.names.len();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    pub fn is_tree(&self) -> bool {
        !self.names.is_empty() && self.is_connected() && self.edge_count() == self.names.len() - 1
    }

    /// All maximal cliques (Bron-Kerbosch with pivoting), sorted canonically.
    pub fn maximal_cliques(&self) -> Vec<Vec<VertexId>> {
        let mut out: Vec<Vec<VertexId>> = Vec::new();
        let p: BTreeSet<VertexId> = self.vertices().collect();
        let mut r = Vec::new();
        self.bron_kerbosch(&mut r, p, BTreeSet::new(), &mut out);
        out.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<VertexId>,
        p: BTreeSet<VertexId>,
        mut x: BTreeSet<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        if p.is_empty() && x.is_empty() {
            if !r.is_empty() {
                let mut clique = r.clone();
                clique.sort_unstable();
                out.push(clique);
            }
            return;
        }
        // pivot: maximize |P ∩ N(u)|, smallest id on ties
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| {
                let deg = p.intersection(&self.adj[u]).count();
                (deg, std::cmp::Reverse(u))
            })
            .expect("P ∪ X nonempty");
        let candidates: Vec<VertexId> = p
            .iter()
            .copied()
            .filter(|v| !self.adj[pivot].contains(v))
            .collect();
        let mut p = p;
        for v in candidates {
            r.push(v);
            let np: BTreeSet<VertexId> = p.intersection(&self.adj[v]).copied().collect();
            let nx: BTreeSet<VertexId> = x.intersection(&self.adj[v]).copied().collect();
            self.bron_kerbosch(r, np, nx, out);
            r.pop();
            p.remove(&v);
            x.insert(v);
        }
    }

    /// All cliques of size >= 1, sorted by (size, lexicographic members),
    /// via downward closure of the maximal cliques. Errors with
    /// `SizeLimit` when more than `cap` cliques exist.
    pub fn cliques_capped(&self, cap: usize) -> Result<Vec<Clique>> {
        let mut all: BTreeSet<Vec<VertexId>> = BTreeSet::new();
        for maximal in self.maximal_cliques() {
            let k = maximal.len();
            if k >= 64 {
                return Err(Error::SizeLimit(format!(
                    "maximal clique of size {k} exceeds the enumeration cap"
                )));
            }
            for mask in 1u64..(1u64 << k) {
                let subset: Vec<VertexId> = (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| maximal[i])
                    .collect();
                all.insert(subset);
                if all.len() > cap {
                    return Err(Error::SizeLimit(format!("more than {cap} cliques")));
                }
            }
        }
        let mut out: Vec<Clique> = all.into_iter().map(Clique::new).collect();
        out.sort_by(|a, b| (a.size(), a.members()).cmp(&(b.size(), b.members())));
        Ok(out)
    }

    /// All cliques with the default cap of 10^6.
    pub fn cliques(&self) -> Result<Vec<Clique>> {
        self.cliques_capped(DEFAULT_CLIQUE_CAP)
    }

    /// All triangles as sorted vertex triples, in canonical order.
    pub fn triangles(&self) -> Vec<[VertexId; 3]> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for &v in self.adj[u].range(u + 1..) {
                for &w in self.adj[u].range(v + 1..) {
                    if self.adj[v].contains(&w) {
                        out.push([u, v, w]);
                    }
                }
            }
        }
        out
    }

    /// Deterministic spanning tree: BFS from the smallest vertex id with
    /// neighbors visited in canonical order. Edges are returned in canonical
    /// orientation, sorted.
    pub fn spanning_tree(&self) -> Result<Vec<DirectedEdge>> {
        if !self.is_connected() {
            return Err(Error::DisconnectedInput);
        }
        let n = self.names.len();
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    edges.push(DirectedEdge::canonical(u, v));
                    queue.push_back(v);
                }
            }
        }
        edges.sort();
        Ok(edges)
    }
}

impl fmt::Display for SimplicialGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|e| format!("{}{}{}", self.names[e.tail], '-', self.names[e.head]))
            .collect();
        write!(
            f,
            "V={{{}}} E={{{}}}",
            self.names.join(","),
            edges.join(",")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{fan4, graph, k_n, path, sun3};

    #[test]
    fn parse_triangle() {
        let g = SimplicialGraph::parse_text("a b\na c\nb c").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_complete());
    }

    #[test]
    fn parse_sun3_file() {
        let g = sun3();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.names(), &["1", "2", "3", "4", "5", "6"]);
    }

    #[test]
    fn parse_rejects_self_loop() {
        match SimplicialGraph::parse_text("a a") {
            Err(Error::Simpliciality(_)) => {}
            other => panic!("expected simpliciality error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_duplicate_edge() {
        assert!(matches!(
            SimplicialGraph::parse_text("a b\nb a"),
            Err(Error::Simpliciality(_))
        ));
    }

    #[test]
    fn parse_reports_line_numbers() {
        match SimplicialGraph::parse_text("a b\na b c") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match SimplicialGraph::parse_text("# ok\n\nvertex a!") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_keeps_isolated_vertices_and_comments() {
        let g = SimplicialGraph::parse_text("# header\nvertex z\na b # inline\n").unwrap();
        assert_eq!(g.names(), &["a", "b", "z"]);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_json_roundtrip() {
        let g =
            SimplicialGraph::parse(r#"{"vertices":["z"],"edges":[["a","b"],["b","c"]]}"#).unwrap();
        assert_eq!(g.names(), &["a", "b", "c", "z"]);
        assert_eq!(g.edge_count(), 2);
        let back = serde_json::to_string(&GraphJson {
            vertices: g.names().to_vec(),
            edges: g
                .edges()
                .into_iter()
                .map(|e| (g.name(e.tail).to_string(), g.name(e.head).to_string()))
                .collect(),
        })
        .unwrap();
        let again = SimplicialGraph::parse(&back).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = k_n(4);
        let sub = g.induced_subgraph(&[0, 1, 2]).unwrap();
        assert!(sub.is_complete());
        assert_eq!(sub.vertex_count(), 3);

        let f4 = sun3();
        let ids: Vec<_> = ["2", "3", "5"]
            .iter()
            .map(|n| f4.index_of(n).unwrap())
            .collect();
        let sub = f4.induced_subgraph(&ids).unwrap();
        assert!(sub.is_complete());
        assert_eq!(sub.vertex_count(), 3);

        let empty = g.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        assert!(empty.is_connected());

        assert!(matches!(
            g.induced_subgraph(&[9]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn connectivity_cases() {
        assert!(k_n(3).is_connected());
        let two_edges = graph(&[("a", "b"), ("c", "d")]);
        assert!(!two_edges.is_connected());
        assert!(sun3().is_connected());
        assert!(SimplicialGraph::parse_text("").unwrap().is_connected());
    }

    #[test]
    fn cut_vertices_cases() {
        let p = path(&["a", "b", "c"]);
        assert_eq!(p.cut_vertices().unwrap(), vec![1]);
        assert_eq!(k_n(4).cut_vertices().unwrap(), Vec::<usize>::new());
        // brute force: remove each vertex, test connectivity
        let f4 = sun3();
        let brute: Vec<VertexId> = f4
            .vertices()
            .filter(|&v| {
                let rest: Vec<_> = f4.vertices().filter(|&u| u != v).collect();
                !f4.induced_subgraph(&rest).unwrap().is_connected()
            })
            .collect();
        assert_eq!(f4.cut_vertices().unwrap(), brute);
        assert!(brute.is_empty());
        let disconnected = graph(&[("a", "b"), ("c", "d")]);
        assert!(matches!(
            disconnected.cut_vertices(),
            Err(Error::DisconnectedInput)
        ));
    }

    #[test]
    fn blocks_of_paths_and_wedges() {
        let p = path(&["a", "b", "c"]);
        assert_eq!(
            p.biconnected_blocks().unwrap(),
            vec![vec![0, 1], vec![1, 2]]
        );
        let star = graph(&[("a", "b"), ("a", "c"), ("a", "d")]);
        assert_eq!(
            star.biconnected_blocks().unwrap(),
            vec![vec![0, 1], vec![0, 2], vec![0, 3]]
        );
        assert_eq!(k_n(4).biconnected_blocks().unwrap(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn link_and_star_of_vertex() {
        let g = k_n(4);
        assert!(g.link_of_vertex(0).unwrap().is_complete());
        assert_eq!(g.link_of_vertex(0).unwrap().vertex_count(), 3);

        let p = path(&["a", "b", "c"]);
        let link_b = p.link_of_vertex(1).unwrap();
        assert_eq!(link_b.vertex_count(), 2);
        assert_eq!(link_b.edge_count(), 0);

        // 3-sun, vertex 5: link induced on {2,3,4,6};
        // the induced edges are 23, 24, 36.
        let f4 = sun3();
        let v5 = f4.index_of("5").unwrap();
        let link = f4.link_of_vertex(v5).unwrap();
        assert_eq!(link.names(), &["2", "3", "4", "6"]);
        let edges: Vec<(String, String)> = link
            .edges()
            .into_iter()
            .map(|e| (link.name(e.tail).to_string(), link.name(e.head).to_string()))
            .collect();
        assert_eq!(
            edges,
            vec![
                ("2".into(), "3".into()),
                ("2".into(), "4".into()),
                ("3".into(), "6".into())
            ]
        );

        let star = f4.star_of_vertex(v5).unwrap();
        assert_eq!(star.names(), &["2", "3", "4", "5", "6"]);
    }

    #[test]
    fn link_and_star_of_edge() {
        let g = k_n(4);
        let link = g.link_of_edge(0, 1).unwrap();
        assert_eq!(link.vertex_count(), 2);
        assert_eq!(link.edge_count(), 1);
        assert_eq!(g.star_of_edge(0, 1).unwrap().vertex_count(), 4);

        let f2 = fan4();
        let (a, b, c, d) = (0, 1, 2, 3);
        let link_bc = f2.link_of_edge(b, c).unwrap();
        assert_eq!(link_bc.names(), &["a"]);
        let link_ac = f2.link_of_edge(a, c).unwrap();
        assert_eq!(link_ac.names(), &["b", "d"]);
        assert_eq!(link_ac.edge_count(), 0);
        let star_ac = f2.star_of_edge(a, c).unwrap();
        assert_eq!(star_ac, f2);
        let star_bc = f2.star_of_edge(b, c).unwrap();
        assert_eq!(star_bc.names(), &["a", "b", "c"]);
        assert!(star_bc.is_complete());

        assert!(matches!(
            f2.link_of_edge(b, d),
            Err(Error::UnknownEdge(_, _))
        ));
    }

    #[test]
    fn clique_enumeration_counts() {
        assert_eq!(k_n(3).cliques().unwrap().len(), 7);
        assert_eq!(sun3().cliques().unwrap().len(), 19);
        let edgeless =
            SimplicialGraph::from_named_edges(["a", "b", "c", "d"], Vec::<(String, String)>::new())
                .unwrap();
        assert_eq!(edgeless.cliques().unwrap().len(), 4);
    }

    #[test]
    fn clique_enumeration_matches_brute_force() {
        let f4 = sun3();
        let n = f4.vertex_count();
        let mut brute: Vec<Vec<VertexId>> = Vec::new();
        for mask in 1u32..(1 << n) {
            let subset: Vec<VertexId> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if f4.is_clique(&subset) {
                brute.push(subset);
            }
        }
        brute.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
        let fast: Vec<Vec<VertexId>> = f4
            .cliques()
            .unwrap()
            .into_iter()
            .map(|c| c.members().to_vec())
            .collect();
        assert_eq!(fast, brute);
    }

    #[test]
    fn clique_cap_is_enforced() {
        assert!(matches!(
            k_n(5).cliques_capped(10),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn spanning_tree_cases() {
        let tree = graph(&[("a", "b"), ("b", "c"), ("b", "d")]);
        let st = tree.spanning_tree().unwrap();
        assert_eq!(st, tree.edges());

        let k3 = k_n(3);
        assert_eq!(
            k3.spanning_tree().unwrap(),
            vec![
                DirectedEdge { tail: 0, head: 1 },
                DirectedEdge { tail: 0, head: 2 }
            ]
        );

        // BFS from "1": 1 discovers 2,3; 2 discovers 4,5; 3 discovers 6.
        let f4 = sun3();
        let st = f4.spanning_tree().unwrap();
        assert_eq!(st.len(), 5);
        let named: Vec<(String, String)> = st
            .iter()
            .map(|e| (f4.name(e.tail).to_string(), f4.name(e.head).to_string()))
            .collect();
        assert_eq!(
            named,
            vec![
                ("1".into(), "2".into()),
                ("1".into(), "3".into()),
                ("2".into(), "4".into()),
                ("2".into(), "5".into()),
                ("3".into(), "6".into())
            ]
        );

        assert!(matches!(
            graph(&[("a", "b"), ("c", "d")]).spanning_tree(),
            Err(Error::DisconnectedInput)
        ));
    }

    #[test]
    fn triangles_of_sun3() {
        let f4 = sun3();
        let tri: Vec<Vec<String>> = f4
            .triangles()
            .into_iter()
            .map(|t| t.iter().map(|&v| f4.name(v).to_string()).collect())
            .collect();
        assert_eq!(
            tri,
            vec![
                vec!["1", "2", "3"],
                vec!["2", "3", "5"],
                vec!["2", "4", "5"],
                vec!["3", "5", "6"]
            ]
        );
    }
}
