//! Mixed multigraphs: undirected edges and directed arcs over a common vertex
//! set, parallel edges allowed, loops rejected.
//!
//! Ids are plain integers. Fresh ids are handed out in insertion order
//! (one past the largest id in use); explicit ids are accepted so that
//! subgraphs and deserialized graphs keep the ids of their source. Edges and
//! arcs draw from one id pool, so an oriented edge keeps its id as an arc.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

/// Id of an edge or an arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

pub type ArcId = EdgeId;

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

pub type VertexSet = BTreeSet<VertexId>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphDoc", into = "GraphDoc")]
pub struct MixedGraph {
    vertices: VertexSet,
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
    arcs: BTreeMap<ArcId, (VertexId, VertexId)>,
}

impl MixedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on `count` vertices with ids `0..count` and no edges.
    pub fn with_vertices(count: usize) -> Self {
        MixedGraph {
            vertices: (0..count).map(VertexId).collect(),
            ..Self::default()
        }
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let id = VertexId(self.vertices.last().map_or(0, |v| v.0 + 1));
        self.vertices.insert(id);
        id
    }

    pub fn insert_vertex(&mut self, id: VertexId) -> Result<()> {
        if !self.vertices.insert(id) {
            return Err(Error::DuplicateId(id.to_string()));
        }
        Ok(())
    }

    fn next_edge_id(&self) -> EdgeId {
        let e = self.edges.last_key_value().map_or(0, |(e, _)| e.0 + 1);
        let a = self.arcs.last_key_value().map_or(0, |(a, _)| a.0 + 1);
        EdgeId(e.max(a))
    }

    fn check_endpoints(&self, u: VertexId, v: VertexId) -> Result<()> {
        for w in [u, v] {
            if !self.vertices.contains(&w) {
                return Err(Error::UnknownVertex(w));
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        Ok(())
    }

    fn check_fresh(&self, id: EdgeId) -> Result<()> {
        if self.edges.contains_key(&id) || self.arcs.contains_key(&id) {
            return Err(Error::DuplicateId(id.to_string()));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let id = self.next_edge_id();
        self.insert_edge(id, u, v)?;
        Ok(id)
    }

    pub fn insert_edge(&mut self, id: EdgeId, u: VertexId, v: VertexId) -> Result<()> {
        self.check_endpoints(u, v)?;
        self.check_fresh(id)?;
        self.edges.insert(id, (u, v));
        Ok(())
    }

    pub fn add_arc(&mut self, tail: VertexId, head: VertexId) -> Result<ArcId> {
        let id = self.next_edge_id();
        self.insert_arc(id, tail, head)?;
        Ok(id)
    }

    pub fn insert_arc(&mut self, id: ArcId, tail: VertexId, head: VertexId) -> Result<()> {
        self.check_endpoints(tail, head)?;
        self.check_fresh(id)?;
        self.arcs.insert(id, (tail, head));
        Ok(())
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_set(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().map(|(&id, &(u, v))| (id, u, v))
    }

    pub fn arcs(&self) -> impl Iterator<Item = (ArcId, VertexId, VertexId)> + '_ {
        self.arcs.iter().map(|(&id, &(t, h))| (id, t, h))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn edge(&self, id: EdgeId) -> Option<(VertexId, VertexId)> {
        self.edges.get(&id).copied()
    }

    pub fn arc(&self, id: ArcId) -> Option<(VertexId, VertexId)> {
        self.arcs.get(&id).copied()
    }

    /// True when the graph has no arcs.
    pub fn is_undirected(&self) -> bool {
        self.arcs.is_empty()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.vertices.contains(&v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    fn check_set(&self, x: &VertexSet) -> Result<()> {
        x.iter().try_for_each(|&v| self.check_vertex(v))
    }

    /// Number of edges incident to `v`. Arcs are not counted.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.values().filter(|&&(a, b)| a == v || b == v).count())
    }

    /// Edges with exactly one endpoint in `x`.
    pub fn cut_degree(&self, x: &VertexSet) -> Result<usize> {
        self.check_set(x)?;
        Ok(self
            .edges
            .values()
            .filter(|(u, v)| x.contains(u) != x.contains(v))
            .count())
    }

    /// Edges with both endpoints in `x`.
    pub fn inner_edges(&self, x: &VertexSet) -> Result<usize> {
        self.check_set(x)?;
        Ok(self
            .edges
            .values()
            .filter(|(u, v)| x.contains(u) && x.contains(v))
            .count())
    }

    pub fn out_degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.arcs.values().filter(|&&(t, _)| t == v).count())
    }

    pub fn in_degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.arcs.values().filter(|&&(_, h)| h == v).count())
    }

    /// Arcs leaving `x`.
    pub fn cut_out_degree(&self, x: &VertexSet) -> Result<usize> {
        self.check_set(x)?;
        Ok(self
            .arcs
            .values()
            .filter(|(t, h)| x.contains(t) && !x.contains(h))
            .count())
    }

    /// Arcs entering `x`; equal to the out-degree of the complement.
    pub fn cut_in_degree(&self, x: &VertexSet) -> Result<usize> {
        self.check_set(x)?;
        Ok(self
            .arcs
            .values()
            .filter(|(t, h)| !x.contains(t) && x.contains(h))
            .count())
    }

    /// Copy with every arc in `set` reversed. Ids are kept.
    pub fn reverse_arcs(&self, set: &BTreeSet<ArcId>) -> Result<MixedGraph> {
        let mut out = self.clone();
        for id in set {
            let arc = out.arcs.get_mut(id).ok_or(Error::UnknownEdge(*id))?;
            *arc = (arc.1, arc.0);
        }
        Ok(out)
    }

    /// The mixed subgraph induced by `x`, ids preserved.
    pub fn induced(&self, x: &VertexSet) -> Result<MixedGraph> {
        self.check_set(x)?;
        let keep = |&(u, v): &(VertexId, VertexId)| x.contains(&u) && x.contains(&v);
        Ok(MixedGraph {
            vertices: x.clone(),
            edges: self
                .edges
                .iter()
                .filter(|(_, e)| keep(e))
                .map(|(&id, &e)| (id, e))
                .collect(),
            arcs: self
                .arcs
                .iter()
                .filter(|(_, a)| keep(a))
                .map(|(&id, &a)| (id, a))
                .collect(),
        })
    }

    /// Out-degree equals in-degree at every vertex. Connectivity is not
    /// required and edges are ignored.
    pub fn is_eulerian(&self) -> bool {
        self.eulerian_violation().is_none()
    }

    pub(crate) fn eulerian_violation(&self) -> Option<VertexId> {
        let mut balance: BTreeMap<VertexId, i64> = BTreeMap::new();
        for &(t, h) in self.arcs.values() {
            *balance.entry(t).or_default() += 1;
            *balance.entry(h).or_default() -= 1;
        }
        balance.into_iter().find(|&(_, b)| b != 0).map(|(v, _)| v)
    }

    /// Vertices joined to `v` by an edge, with multiplicity, in edge-id order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.edges.values().filter_map(move |&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Edges incident to `v`, ascending id.
    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges
            .iter()
            .filter(move |(_, &(a, b))| a == v || b == v)
            .map(|(&id, _)| id)
    }
}

/// JSON shape: `{"vertices":[ids],"edges":[[id,u,v]],"arcs":[[id,tail,head]]}`.
#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<VertexId>,
    #[serde(default)]
    edges: Vec<(EdgeId, VertexId, VertexId)>,
    #[serde(default)]
    arcs: Vec<(ArcId, VertexId, VertexId)>,
}

impl TryFrom<GraphDoc> for MixedGraph {
    type Error = Error;

    fn try_from(doc: GraphDoc) -> Result<Self> {
        let mut g = MixedGraph::new();
        for v in doc.vertices {
            g.insert_vertex(v)?;
        }
        for (id, u, v) in doc.edges {
            g.insert_edge(id, u, v)?;
        }
        for (id, t, h) in doc.arcs {
            g.insert_arc(id, t, h)?;
        }
        Ok(g)
    }
}

impl From<MixedGraph> for GraphDoc {
    fn from(g: MixedGraph) -> Self {
        GraphDoc {
            vertices: g.vertices.into_iter().collect(),
            edges: g.edges.into_iter().map(|(id, (u, v))| (id, u, v)).collect(),
            arcs: g.arcs.into_iter().map(|(id, (t, h))| (id, t, h)).collect(),
        }
    }
}

pub fn vset<I: IntoIterator<Item = usize>>(ids: I) -> VertexSet {
    ids.into_iter().map(VertexId).collect()
}
