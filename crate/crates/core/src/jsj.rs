//! Graph-of-groups JSJ decompositions.
//!
//! The construction recursively splits the graph along a canonical minimal
//! separating clique, recursing on each piece (component plus clique) with
//! that piece's own minimal separating-clique size, until no piece has a
//! separating clique. The same tree serves both flavors: vertex pieces are
//! labeled with the ambient or kernel group of their induced subgraph, and
//! an edge over a clique of size n carries Z^n (ambient) or Z^{n-1}
//! (kernel).
//!
//! Tree assembly is permutation-equivariant: a split into two components
//! adds a single edge; a split into three or more components, or one that
//! would re-home an incident edge whose clique lies inside the new
//! separator, goes through an explicit hub piece equal to the separator.
//! Graphs with cut vertices are handled outside the clique recursion by
//! decomposing into biconnected blocks first (amalgam over Z per cut vertex
//! for the ambient group, free product for the kernel group); this is an
//! extension beyond the no-cut-vertex construction and is flagged in the
//! report.

use serde::Serialize;

use crate::error::{Error, HypothesisViolation, Result};
use crate::graph::{SimplicialGraph, VertexId};
use crate::presentation::{piece_descriptor, Flavor, GroupDescriptor};
use crate::splitting::{complement_components, separating_cliques};

/// Vertex of a decomposition: a piece of the defining graph plus its group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GogVertex {
    /// Sorted vertex names of the piece.
    pub piece: Vec<String>,
    pub group: GroupDescriptor,
}

/// Edge of a decomposition: a separating clique plus its free-abelian group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GogEdge {
    pub from: usize,
    pub to: usize,
    /// Sorted vertex names of the clique.
    pub clique: Vec<String>,
    pub group: GroupDescriptor,
}

/// A labeled graph-of-groups tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphOfGroups {
    pub flavor: Flavor,
    pub vertices: Vec<GogVertex>,
    pub edges: Vec<GogEdge>,
}

impl GraphOfGroups {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Renames graph vertices through a bijection of names and
    /// re-canonicalizes; used to state permutation invariance.
    pub fn relabel(&self, map: &std::collections::BTreeMap<String, String>) -> GraphOfGroups {
        let rename = |names: &[String]| -> Vec<String> {
            let mut out: Vec<String> = names
                .iter()
                .map(|n| map.get(n).cloned().unwrap_or_else(|| n.clone()))
                .collect();
            out.sort();
            out
        };
        let rename_group = |gd: &GroupDescriptor| -> GroupDescriptor {
            match gd {
                GroupDescriptor::BbgOn { graph } => GroupDescriptor::BbgOn {
                    graph: relabel_graph(graph, map),
                },
                GroupDescriptor::RaagOn { graph } => GroupDescriptor::RaagOn {
                    graph: relabel_graph(graph, map),
                },
                other => other.clone(),
            }
        };
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        let new_pieces: Vec<Vec<String>> = self.vertices.iter().map(|v| rename(&v.piece)).collect();
        order.sort_by(|&a, &b| new_pieces[a].cmp(&new_pieces[b]).then(a.cmp(&b)));
        let mut position = vec![0usize; order.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let vertices: Vec<GogVertex> = order
            .iter()
            .map(|&old| GogVertex {
                piece: new_pieces[old].clone(),
                group: rename_group(&self.vertices[old].group),
            })
            .collect();
        let mut edges: Vec<GogEdge> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (position[e.from], position[e.to]);
                GogEdge {
                    from: a.min(b),
                    to: a.max(b),
                    clique: rename(&e.clique),
                    group: rename_group(&e.group),
                }
            })
            .collect();
        edges.sort_by(|x, y| (x.from, x.to, &x.clique).cmp(&(y.from, y.to, &y.clique)));
        GraphOfGroups {
            flavor: self.flavor,
            vertices,
            edges,
        }
    }
}

fn relabel_graph(
    g: &SimplicialGraph,
    map: &std::collections::BTreeMap<String, String>,
) -> SimplicialGraph {
    let tr = |n: &str| map.get(n).cloned().unwrap_or_else(|| n.to_string());
    let vertices: Vec<String> = g.names().iter().map(|n| tr(n)).collect();
    let edges: Vec<(String, String)> = g
        .edges()
        .into_iter()
        .map(|e| (tr(g.name(e.tail)), tr(g.name(e.head))))
        .collect();
    SimplicialGraph::from_named_edges(vertices, edges).expect("bijective rename")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Region {
    Block(usize),
    CutHub,
}

#[derive(Debug)]
struct BNode {
    piece: Vec<VertexId>,
    region: Region,
}

#[derive(Debug)]
struct BEdge {
    a: usize,
    b: usize,
    clique: Vec<VertexId>,
    alive: bool,
}

/// One clique split, recorded in post-order during the recursion: the
/// separating clique plus one representative final node per component side.
/// Edges are attached only later, against the fully assembled side trees,
/// so the result cannot depend on the order in which splits were found.
#[derive(Debug)]
struct SplitEvent {
    clique: Vec<VertexId>,
    side_reps: Vec<usize>,
    region: Region,
}

struct Builder<'g> {
    g: &'g SimplicialGraph,
    nodes: Vec<BNode>,
    edges: Vec<BEdge>,
    events: Vec<SplitEvent>,
}

fn is_sorted_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

impl<'g> Builder<'g> {
    fn new(g: &'g SimplicialGraph) -> Self {
        Builder {
            g,
            nodes: Vec::new(),
            edges: Vec::new(),
            events: Vec::new(),
        }
    }

    fn add_node(&mut self, mut piece: Vec<VertexId>, region: Region) -> usize {
        piece.sort_unstable();
        piece.dedup();
        self.nodes.push(BNode { piece, region });
        self.nodes.len() - 1
    }

    fn add_edge(&mut self, a: usize, b: usize, clique: Vec<VertexId>) {
        debug_assert_ne!(a, b);
        self.edges.push(BEdge {
            a,
            b,
            clique,
            alive: true,
        });
    }

    fn to_parent_ids(&self, sub: &SimplicialGraph, ids: &[VertexId]) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = ids
            .iter()
            .map(|&i| {
                self.g
                    .index_of(sub.name(i))
                    .expect("piece vertex exists in parent")
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Recursively splits a piece along its canonical minimal separating
    /// clique, recording one post-order event per split; leaves become
    /// nodes. Returns a representative final node under the piece.
    fn decompose(&mut self, piece: Vec<VertexId>, region: Region) -> Result<usize> {
        let sub = self.g.induced_subgraph(&piece)?;
        let seps = separating_cliques(&sub)?;
        let Some(k_sub) = seps.first() else {
            return Ok(self.add_node(piece, region));
        };
        let k = self.to_parent_ids(&sub, k_sub.members());
        let mut pieces: Vec<Vec<VertexId>> = complement_components(&sub, k_sub)
            .into_iter()
            .map(|c| {
                let mut p = self.to_parent_ids(&sub, &c);
                p.extend_from_slice(&k);
                p.sort_unstable();
                p
            })
            .collect();
        pieces.sort();
        let mut side_reps = Vec::with_capacity(pieces.len());
        for p in pieces {
            side_reps.push(self.decompose(p, region)?);
        }
        let rep = side_reps[0];
        self.events.push(SplitEvent {
            clique: k,
            side_reps,
            region,
        });
        Ok(rep)
    }

    /// Final nodes currently connected to `start`, via alive edges.
    fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut out = Vec::new();
        while let Some(u) = stack.pop() {
            out.push(u);
            for e in &self.edges {
                if !e.alive {
                    continue;
                }
                let other = if e.a == u {
                    e.b
                } else if e.b == u {
                    e.a
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Attachment point for a clique inside the assembled tree containing
    /// `rep`: the center of the subtree of nodes containing the clique,
    /// subdividing the central edge with a shared hub when needed.
    fn attach(
        &mut self,
        rep: usize,
        clique: &[VertexId],
        edge_hubs: &mut std::collections::BTreeMap<usize, usize>,
    ) -> Result<usize> {
        let component = self.component_of(rep);
        let candidates: Vec<usize> = component
            .into_iter()
            .filter(|&i| is_sorted_subset(clique, &self.nodes[i].piece))
            .collect();
        match candidates.len() {
            0 => Err(Error::Internal(
                "split clique not contained in any side node".into(),
            )),
            1 => Ok(candidates[0]),
            _ => {
                let cand_edges: Vec<usize> = (0..self.edges.len())
                    .filter(|&i| {
                        let e = &self.edges[i];
                        e.alive && candidates.contains(&e.a) && candidates.contains(&e.b)
                    })
                    .collect();
                if cand_edges.len() + 1 != candidates.len() {
                    return Err(Error::Internal(
                        "nodes containing a clique do not induce a subtree".into(),
                    ));
                }
                match self.tree_center(&candidates, &cand_edges) {
                    Center::Node(n) => Ok(n),
                    Center::Edge(ei) => {
                        Ok(*edge_hubs.entry(ei).or_insert_with(|| self.subdivide(ei)))
                    }
                }
            }
        }
    }

    /// Turns the recorded split events into tree edges, children before
    /// parents, so each side is a completed tree when its event is wired.
    fn assemble(&mut self) -> Result<()> {
        let events = std::mem::take(&mut self.events);
        let mut edge_hubs = std::collections::BTreeMap::new();
        for event in events {
            let mut attach_points = Vec::with_capacity(event.side_reps.len());
            for &rep in &event.side_reps {
                attach_points.push(self.attach(rep, &event.clique, &mut edge_hubs)?);
            }
            if attach_points.len() == 2 {
                self.add_edge(attach_points[0], attach_points[1], event.clique);
            } else {
                let hub = self.add_node(event.clique.clone(), event.region);
                for &a in &attach_points {
                    self.add_edge(hub, a, event.clique.clone());
                }
            }
        }
        Ok(())
    }

    /// Attachment center for cut vertex `v` inside block `bi`, computed on
    /// the pristine block tree: the center (node or edge) of the subtree of
    /// pieces containing v. Centers for every cut vertex are computed
    /// before any subdivision happens, so the result cannot depend on the
    /// order in which cut vertices are processed.
    fn attachment_center(&self, bi: usize, v: VertexId) -> Result<Center> {
        let candidates: Vec<usize> = (0..self.nodes.len())
            .filter(|&i| {
                let n = &self.nodes[i];
                n.region == Region::Block(bi) && n.piece.binary_search(&v).is_ok()
            })
            .collect();
        match candidates.len() {
            0 => Err(Error::Internal(
                "cut vertex not covered by its block's pieces".into(),
            )),
            1 => Ok(Center::Node(candidates[0])),
            _ => {
                let cand_edges: Vec<usize> = (0..self.edges.len())
                    .filter(|&i| {
                        let e = &self.edges[i];
                        e.alive && candidates.contains(&e.a) && candidates.contains(&e.b)
                    })
                    .collect();
                if cand_edges.len() + 1 != candidates.len() {
                    return Err(Error::Internal(
                        "pieces containing a vertex do not induce a subtree".into(),
                    ));
                }
                Ok(self.tree_center(&candidates, &cand_edges))
            }
        }
    }

    /// Subdivides the edge with a hub carrying the edge's clique and
    /// returns the hub id. Distinct cut vertices whose centers land on the
    /// same edge share the hub.
    fn subdivide(&mut self, ei: usize) -> usize {
        let (a, b, clique) = (
            self.edges[ei].a,
            self.edges[ei].b,
            self.edges[ei].clique.clone(),
        );
        self.edges[ei].alive = false;
        let region = self.nodes[a].region;
        let hub = self.add_node(clique.clone(), region);
        self.add_edge(a, hub, clique.clone());
        self.add_edge(hub, b, clique);
        hub
    }

    fn tree_center(&self, nodes: &[usize], edge_ids: &[usize]) -> Center {
        let mut active: Vec<usize> = nodes.to_vec();
        let mut edges: Vec<(usize, usize, usize)> = edge_ids
            .iter()
            .map(|&i| (self.edges[i].a, self.edges[i].b, i))
            .collect();
        loop {
            if active.len() == 1 {
                return Center::Node(active[0]);
            }
            if active.len() == 2 {
                return Center::Edge(edges[0].2);
            }
            let leaves: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&n| edges.iter().filter(|&&(a, b, _)| a == n || b == n).count() <= 1)
                .collect();
            active.retain(|n| !leaves.contains(n));
            edges.retain(|&(a, b, _)| !leaves.contains(&a) && !leaves.contains(&b));
        }
    }

    fn finish(&self, flavor: Flavor) -> Result<GraphOfGroups> {
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by(|&a, &b| {
            self.nodes[a]
                .piece
                .cmp(&self.nodes[b].piece)
                .then(a.cmp(&b))
        });
        let mut position = vec![usize::MAX; self.nodes.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let mut vertices = Vec::with_capacity(order.len());
        for &old in &order {
            let piece = &self.nodes[old].piece;
            let induced = self.g.induced_subgraph(piece)?;
            vertices.push(GogVertex {
                piece: self.g.names_of(piece),
                group: piece_descriptor(&induced, flavor),
            });
        }
        let mut edges: Vec<GogEdge> = self
            .edges
            .iter()
            .filter(|e| e.alive)
            .map(|e| {
                let (a, b) = (position[e.a], position[e.b]);
                GogEdge {
                    from: a.min(b),
                    to: a.max(b),
                    clique: self.g.names_of(&e.clique),
                    group: GroupDescriptor::FreeAbelian {
                        rank: flavor.clique_rank(e.clique.len()),
                    },
                }
            })
            .collect();
        edges.sort_by(|x, y| (x.from, x.to, &x.clique).cmp(&(y.from, y.to, &y.clique)));
        Ok(GraphOfGroups {
            flavor,
            vertices,
            edges,
        })
    }
}

enum Center {
    Node(usize),
    Edge(usize),
}

/// The clique-split decomposition for a connected graph with simply
/// connected flag complex, no cut vertices, and at least one non-edge.
/// A graph with no separating clique at all yields the one-vertex
/// decomposition.
pub fn jsj_decomposition(g: &SimplicialGraph, flavor: Flavor) -> Result<GraphOfGroups> {
    crate::flag::require_flag_hypotheses(g)?;
    let cut = g.cut_vertices()?;
    if let Some(&v) = cut.first() {
        return Err(Error::Hypothesis(HypothesisViolation::HasCutVertex(
            g.name(v).to_string(),
        )));
    }
    if g.is_complete() {
        return Err(Error::Hypothesis(HypothesisViolation::Complete(
            g.vertex_count(),
        )));
    }
    let mut builder = Builder::new(g);
    builder.decompose(g.vertices().collect(), Region::Block(0))?;
    builder.assemble()?;
    builder.finish(flavor)
}

/// How a report's decomposition was assembled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportCase {
    /// The graph is complete; the decomposition is a single vertex.
    Complete { size: usize },
    /// The graph has cut vertices; the decomposition joins the biconnected
    /// blocks' decompositions at the cut vertices (free product for the
    /// kernel group, amalgam over Z for the ambient group). This goes
    /// beyond the no-cut-vertex clique construction.
    BlockTree {
        cut_vertices: Vec<String>,
        blocks: Vec<BlockSummary>,
    },
    /// The clique recursion applied directly.
    Direct,
}

/// One biconnected block and its own decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSummary {
    pub block: Vec<String>,
    pub decomposition: GraphOfGroups,
}

/// Full decomposition report: the assembled graph of groups plus how it was
/// obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsjReport {
    pub flavor: Flavor,
    pub case: ReportCase,
    pub decomposition: GraphOfGroups,
}

fn single_vertex_decomposition(g: &SimplicialGraph, flavor: Flavor) -> Result<GraphOfGroups> {
    let builder = {
        let mut b = Builder::new(g);
        b.add_node(g.vertices().collect(), Region::Block(0));
        b
    };
    builder.finish(flavor)
}

/// Front door: handles complete graphs and cut vertices, then runs the
/// clique recursion.
pub fn jsj_report(g: &SimplicialGraph, flavor: Flavor) -> Result<JsjReport> {
    crate::flag::require_flag_hypotheses(g)?;
    if g.is_complete() {
        return Ok(JsjReport {
            flavor,
            case: ReportCase::Complete {
                size: g.vertex_count(),
            },
            decomposition: single_vertex_decomposition(g, flavor)?,
        });
    }
    let cut = g.cut_vertices()?;
    if cut.is_empty() {
        return Ok(JsjReport {
            flavor,
            case: ReportCase::Direct,
            decomposition: jsj_decomposition(g, flavor)?,
        });
    }

    let blocks = g.biconnected_blocks()?;
    let mut builder = Builder::new(g);
    for (bi, block) in blocks.iter().enumerate() {
        builder.decompose(block.clone(), Region::Block(bi))?;
    }
    builder.assemble()?;
    // All attachment centers are resolved on the pristine block trees
    // first; only then are central edges subdivided (one shared hub per
    // edge). Doing it in one pass would let an earlier cut vertex's hub
    // shift a later one's subtree center.
    let mut centers: Vec<(VertexId, Vec<Center>)> = Vec::with_capacity(cut.len());
    for &v in &cut {
        let incident: Vec<usize> = (0..blocks.len())
            .filter(|&bi| blocks[bi].binary_search(&v).is_ok())
            .collect();
        let mut per_block = Vec::with_capacity(incident.len());
        for &bi in &incident {
            per_block.push(builder.attachment_center(bi, v)?);
        }
        centers.push((v, per_block));
    }
    let mut edge_hubs: std::collections::BTreeMap<usize, usize> = std::collections::BTreeMap::new();
    for (v, per_block) in centers {
        let attach: Vec<usize> = per_block
            .into_iter()
            .map(|center| match center {
                Center::Node(node) => node,
                Center::Edge(ei) => *edge_hubs.entry(ei).or_insert_with(|| builder.subdivide(ei)),
            })
            .collect();
        if attach.len() == 2 {
            builder.add_edge(attach[0], attach[1], vec![v]);
        } else {
            let hub = builder.add_node(vec![v], Region::CutHub);
            for &a in &attach {
                builder.add_edge(hub, a, vec![v]);
            }
        }
    }
    let decomposition = builder.finish(flavor)?;

    let mut block_summaries = Vec::with_capacity(blocks.len());
    for block in &blocks {
        let sub = g.induced_subgraph(block)?;
        let block_decomposition = if sub.is_complete() {
            single_vertex_decomposition(&sub, flavor)?
        } else {
            jsj_decomposition(&sub, flavor)?
        };
        block_summaries.push(BlockSummary {
            block: g.names_of(block),
            decomposition: block_decomposition,
        });
    }
    Ok(JsjReport {
        flavor,
        case: ReportCase::BlockTree {
            cut_vertices: cut.iter().map(|&v| g.name(v).to_string()).collect(),
            blocks: block_summaries,
        },
        decomposition,
    })
}

/// A violated decomposition invariant; `verify_decomposition` returns these
/// as data rather than erroring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    UnknownVertex { name: String },
    TreeViolation { detail: String },
    EdgeCliqueContainment { edge: usize },
    EdgeCliqueNotClique { edge: usize },
    SeparationViolation { edge: usize },
    EdgeGroupViolation { edge: usize },
    VertexGroupViolation { vertex: usize },
    CoverageViolation { missing: Vec<String> },
    IntersectionViolation { edge: usize },
    PieceNotConnected { vertex: usize },
    PieceHasSeparatingClique { vertex: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::UnknownVertex { name } => write!(f, "unknown vertex name `{name}`"),
            Violation::TreeViolation { detail } => {
                write!(f, "underlying graph is not a tree: {detail}")
            }
            Violation::EdgeCliqueContainment { edge } => {
                write!(
                    f,
                    "edge {edge}: clique not contained in both endpoint pieces"
                )
            }
            Violation::EdgeCliqueNotClique { edge } => {
                write!(f, "edge {edge}: label is not a clique of the graph")
            }
            Violation::SeparationViolation { edge } => {
                write!(f, "edge {edge}: clique does not separate the graph")
            }
            Violation::EdgeGroupViolation { edge } => {
                write!(
                    f,
                    "edge {edge}: group does not match the flavor's clique rank"
                )
            }
            Violation::VertexGroupViolation { vertex } => {
                write!(f, "vertex {vertex}: group label does not match the piece")
            }
            Violation::CoverageViolation { missing } => {
                write!(
                    f,
                    "pieces do not cover the graph; missing {}",
                    missing.join(", ")
                )
            }
            Violation::IntersectionViolation { edge } => {
                write!(
                    f,
                    "edge {edge}: endpoint pieces do not intersect exactly in the clique"
                )
            }
            Violation::PieceNotConnected { vertex } => {
                write!(
                    f,
                    "vertex {vertex}: piece does not induce a connected subgraph"
                )
            }
            Violation::PieceHasSeparatingClique { vertex } => {
                write!(f, "vertex {vertex}: piece still has a separating clique")
            }
        }
    }
}

/// Checks every structural invariant of a decomposition against the graph
/// it claims to decompose; an empty list is a pass.
pub fn verify_decomposition(d: &GraphOfGroups, g: &SimplicialGraph) -> Vec<Violation> {
    let mut violations = Vec::new();

    let resolve = |names: &[String], violations: &mut Vec<Violation>| -> Option<Vec<VertexId>> {
        let mut ids = Vec::with_capacity(names.len());
        for n in names {
            match g.index_of(n) {
                Some(i) => ids.push(i),
                None => {
                    violations.push(Violation::UnknownVertex { name: n.clone() });
                    return None;
                }
            }
        }
        ids.sort_unstable();
        Some(ids)
    };

    let mut piece_ids: Vec<Option<Vec<VertexId>>> = Vec::new();
    for v in &d.vertices {
        piece_ids.push(resolve(&v.piece, &mut violations));
    }

    // tree shape
    let n = d.vertices.len();
    let mut adjacency_ok = true;
    let mut seen_pairs = std::collections::BTreeSet::new();
    for e in &d.edges {
        if e.from >= n
            || e.to >= n
            || e.from == e.to
            || !seen_pairs.insert((e.from.min(e.to), e.from.max(e.to)))
        {
            adjacency_ok = false;
        }
    }
    if !adjacency_ok {
        violations.push(Violation::TreeViolation {
            detail: "self-loop, duplicate edge, or endpoint out of range".into(),
        });
    } else if n > 0 {
        let mut adj = vec![Vec::new(); n];
        for e in &d.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 0;
        while let Some(u) = stack.pop() {
            reached += 1;
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if reached != n || d.edges.len() != n - 1 {
            violations.push(Violation::TreeViolation {
                detail: format!(
                    "{} vertices, {} edges, {} reachable",
                    n,
                    d.edges.len(),
                    reached
                ),
            });
        }
    }

    // coverage
    let mut covered = vec![false; g.vertex_count()];
    for ids in piece_ids.iter().flatten() {
        for &v in ids {
            covered[v] = true;
        }
    }
    let missing: Vec<String> = g
        .vertices()
        .filter(|&v| !covered[v])
        .map(|v| g.name(v).to_string())
        .collect();
    if !missing.is_empty() {
        violations.push(Violation::CoverageViolation { missing });
    }

    // per-vertex piece checks
    for (vi, ids) in piece_ids.iter().enumerate() {
        let Some(ids) = ids else { continue };
        let Ok(induced) = g.induced_subgraph(ids) else {
            continue;
        };
        if !induced.is_connected() {
            violations.push(Violation::PieceNotConnected { vertex: vi });
            continue;
        }
        match separating_cliques(&induced) {
            Ok(seps) if seps.is_empty() => {}
            Ok(_) => violations.push(Violation::PieceHasSeparatingClique { vertex: vi }),
            Err(_) => violations.push(Violation::PieceNotConnected { vertex: vi }),
        }
        if piece_descriptor(&induced, d.flavor) != d.vertices[vi].group {
            violations.push(Violation::VertexGroupViolation { vertex: vi });
        }
    }

    // per-edge checks
    for (ei, e) in d.edges.iter().enumerate() {
        let Some(clique_ids) = resolve(&e.clique, &mut violations) else {
            continue;
        };
        if e.from < n && e.to < n {
            if let (Some(pa), Some(pb)) = (&piece_ids[e.from], &piece_ids[e.to]) {
                if !is_sorted_subset(&clique_ids, pa) || !is_sorted_subset(&clique_ids, pb) {
                    violations.push(Violation::EdgeCliqueContainment { edge: ei });
                }
                let intersection: Vec<VertexId> = pa
                    .iter()
                    .copied()
                    .filter(|v| pb.binary_search(v).is_ok())
                    .collect();
                if intersection != clique_ids {
                    violations.push(Violation::IntersectionViolation { edge: ei });
                }
            }
        }
        if !g.is_clique(&clique_ids) {
            violations.push(Violation::EdgeCliqueNotClique { edge: ei });
            continue;
        }
        let clique = crate::graph::Clique::new(clique_ids.clone());
        if complement_components(g, &clique).len() < 2 {
            violations.push(Violation::SeparationViolation { edge: ei });
        }
        let expected = GroupDescriptor::FreeAbelian {
            rank: d.flavor.clique_rank(clique_ids.len()),
        };
        if e.group != expected {
            violations.push(Violation::EdgeGroupViolation { edge: ei });
        }
    }

    violations
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum GroupJson {
    FreeAbelian {
        rank: usize,
    },
    Free {
        rank: usize,
    },
    Bbg {
        vertices: Vec<String>,
        edges: Vec<(String, String)>,
    },
    Raag {
        vertices: Vec<String>,
        edges: Vec<(String, String)>,
    },
}

fn group_json(gd: &GroupDescriptor) -> GroupJson {
    let graph_parts = |graph: &SimplicialGraph| {
        (
            graph.names().to_vec(),
            graph
                .edges()
                .into_iter()
                .map(|e| {
                    (
                        graph.name(e.tail).to_string(),
                        graph.name(e.head).to_string(),
                    )
                })
                .collect::<Vec<_>>(),
        )
    };
    match gd {
        GroupDescriptor::FreeAbelian { rank } => GroupJson::FreeAbelian { rank: *rank },
        GroupDescriptor::Free { rank } => GroupJson::Free { rank: *rank },
        GroupDescriptor::BbgOn { graph } => {
            let (vertices, edges) = graph_parts(graph);
            GroupJson::Bbg { vertices, edges }
        }
        GroupDescriptor::RaagOn { graph } => {
            let (vertices, edges) = graph_parts(graph);
            GroupJson::Raag { vertices, edges }
        }
    }
}

#[derive(Serialize)]
struct GogVertexJson {
    id: usize,
    piece: Vec<String>,
    group: GroupJson,
}

#[derive(Serialize)]
struct GogEdgeJson {
    from: usize,
    to: usize,
    clique: Vec<String>,
    group: GroupJson,
}

#[derive(Serialize)]
struct GogJson {
    flavor: &'static str,
    vertices: Vec<GogVertexJson>,
    edges: Vec<GogEdgeJson>,
}

/// Machine-readable JSON form of a decomposition. Byte-deterministic.
pub fn export_json(d: &GraphOfGroups) -> String {
    let doc = GogJson {
        flavor: d.flavor.as_str(),
        vertices: d
            .vertices
            .iter()
            .enumerate()
            .map(|(id, v)| GogVertexJson {
                id,
                piece: v.piece.clone(),
                group: group_json(&v.group),
            })
            .collect(),
        edges: d
            .edges
            .iter()
            .map(|e| GogEdgeJson {
                from: e.from,
                to: e.to,
                clique: e.clique.clone(),
                group: group_json(&e.group),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

/// DOT form: node labels carry the vertex groups, edge labels the edge
/// groups. Byte-deterministic.
pub fn export_dot(d: &GraphOfGroups) -> String {
    let mut out = String::from("graph jsj {\n");
    for (i, v) in d.vertices.iter().enumerate() {
        out.push_str(&format!("  v{} [label=\"{}\"];\n", i, v.group));
    }
    for e in &d.edges {
        out.push_str(&format!(
            "  v{} -- v{} [label=\"{}\"];\n",
            e.from, e.to, e.group
        ));
    }
    out.push_str("}\n");
    out
}
