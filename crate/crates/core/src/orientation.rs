//! Partial and total orientations of an undirected multigraph.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MixedGraph, VertexId, VertexSet};

/// Assignment of a direction to some (partial) or all (total) edges of an
/// arc-free base graph. Stored as the tail of every oriented edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "OrientationDoc", into = "OrientationDoc")]
pub struct Orientation {
    base: Arc<MixedGraph>,
    tails: BTreeMap<EdgeId, VertexId>,
}

impl Orientation {
    /// Empty partial orientation of `base`.
    pub fn new(base: Arc<MixedGraph>) -> Result<Self> {
        if !base.is_undirected() {
            return Err(Error::BaseHasArcs);
        }
        Ok(Orientation {
            base,
            tails: BTreeMap::new(),
        })
    }

    pub fn from_directions<I>(base: Arc<MixedGraph>, dirs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (EdgeId, VertexId, VertexId)>,
    {
        let mut o = Self::new(base)?;
        for (e, t, h) in dirs {
            o.orient(e, t, h)?;
        }
        Ok(o)
    }

    /// Views a digraph as a total orientation of its underlying graph.
    pub fn from_digraph(d: &MixedGraph) -> Result<Self> {
        let mut base = MixedGraph::new();
        for v in d.vertices() {
            base.insert_vertex(v)?;
        }
        for (id, u, v) in d.edges() {
            base.insert_edge(id, u, v)?;
        }
        for (id, t, h) in d.arcs() {
            base.insert_edge(id, t, h)?;
        }
        let mut o = Self::new(Arc::new(base))?;
        for (id, t, h) in d.arcs() {
            o.orient(id, t, h)?;
        }
        Ok(o)
    }

    /// Every edge oriented from its first stored endpoint to its second.
    pub fn canonical(base: Arc<MixedGraph>) -> Result<Self> {
        let dirs: Vec<_> = base.edges().collect();
        Self::from_directions(base, dirs)
    }

    pub fn base(&self) -> &Arc<MixedGraph> {
        &self.base
    }

    pub fn orient(&mut self, e: EdgeId, tail: VertexId, head: VertexId) -> Result<()> {
        let (u, v) = self.base.edge(e).ok_or(Error::UnknownEdge(e))?;
        if !((tail == u && head == v) || (tail == v && head == u)) {
            return Err(Error::BadDirection { edge: e, tail, head });
        }
        self.tails.insert(e, tail);
        Ok(())
    }

    /// Orients `e` away from `tail`.
    pub fn orient_from(&mut self, e: EdgeId, tail: VertexId) -> Result<()> {
        let head = self.other_end(e, tail)?;
        self.orient(e, tail, head)
    }

    pub fn unorient(&mut self, e: EdgeId) {
        self.tails.remove(&e);
    }

    fn other_end(&self, e: EdgeId, w: VertexId) -> Result<VertexId> {
        let (u, v) = self.base.edge(e).ok_or(Error::UnknownEdge(e))?;
        if w == u {
            Ok(v)
        } else if w == v {
            Ok(u)
        } else {
            Err(Error::BadDirection {
                edge: e,
                tail: w,
                head: w,
            })
        }
    }

    pub fn direction(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        let &t = self.tails.get(&e)?;
        let (u, v) = self.base.edge(e)?;
        Some(if t == u { (u, v) } else { (v, u) })
    }

    /// Oriented edges as `(edge, tail, head)`, ascending edge id.
    pub fn directions(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.tails.keys().map(|&e| {
            let (t, h) = self.direction(e).expect("oriented edge exists in base");
            (e, t, h)
        })
    }

    pub fn free_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.base
            .edges()
            .map(|(e, _, _)| e)
            .filter(|e| !self.tails.contains_key(e))
    }

    pub fn oriented_count(&self) -> usize {
        self.tails.len()
    }

    pub fn is_total(&self) -> bool {
        self.tails.len() == self.base.edge_count()
    }

    pub fn check_total(&self) -> Result<()> {
        match self.free_edges().next() {
            Some(e) => Err(Error::PartialOrientation(e)),
            None => Ok(()),
        }
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.tails.values().filter(|&&t| t == v).count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.directions().filter(|&(_, _, h)| h == v).count()
    }

    /// Out-degree of every base vertex, zeros included.
    pub fn out_degrees(&self) -> BTreeMap<VertexId, usize> {
        let mut out: BTreeMap<VertexId, usize> = self.base.vertices().map(|v| (v, 0)).collect();
        for t in self.tails.values() {
            *out.get_mut(t).expect("tail is a base vertex") += 1;
        }
        out
    }

    pub fn in_degrees(&self) -> BTreeMap<VertexId, usize> {
        let mut inn: BTreeMap<VertexId, usize> = self.base.vertices().map(|v| (v, 0)).collect();
        for (_, _, h) in self.directions() {
            *inn.get_mut(&h).expect("head is a base vertex") += 1;
        }
        inn
    }

    /// Oriented edges become arcs with the same id, the rest stay edges.
    pub fn to_mixed(&self) -> MixedGraph {
        let mut g = MixedGraph::new();
        for v in self.base.vertices() {
            g.insert_vertex(v).expect("fresh vertex");
        }
        for (e, u, v) in self.base.edges() {
            match self.direction(e) {
                Some((t, h)) => g.insert_arc(e, t, h),
                None => g.insert_edge(e, u, v),
            }
            .expect("fresh id");
        }
        g
    }

    pub fn to_digraph(&self) -> Result<MixedGraph> {
        self.check_total()?;
        Ok(self.to_mixed())
    }

    /// Copy with the oriented edges in `set` reversed.
    pub fn reversed(&self, set: &BTreeSet<EdgeId>) -> Result<Orientation> {
        let mut out = self.clone();
        for &e in set {
            let (_, h) = self.direction(e).ok_or(Error::UnknownEdge(e))?;
            out.tails.insert(e, h);
        }
        Ok(out)
    }

    pub fn reverse_all(&self) -> Orientation {
        let all: BTreeSet<EdgeId> = self.tails.keys().copied().collect();
        self.reversed(&all).expect("all edges are oriented")
    }

    /// Orientation of the induced subgraph on `x`.
    pub fn restrict(&self, x: &VertexSet) -> Result<Orientation> {
        let base = Arc::new(self.base.induced(x)?);
        let dirs: Vec<_> = self
            .directions()
            .filter(|(_, t, h)| x.contains(t) && x.contains(h))
            .collect();
        Orientation::from_directions(base, dirs)
    }

    /// True when every edge oriented in `other` has the same direction here.
    pub fn agrees_with(&self, other: &Orientation) -> bool {
        other.tails.iter().all(|(e, t)| self.tails.get(e) == Some(t))
    }
}

/// JSON shape: `{"graph":{...},"dir":[[edge,tail,head]]}`.
#[derive(Serialize, Deserialize)]
struct OrientationDoc {
    graph: MixedGraph,
    dir: Vec<(EdgeId, VertexId, VertexId)>,
}

impl TryFrom<OrientationDoc> for Orientation {
    type Error = Error;

    fn try_from(doc: OrientationDoc) -> Result<Self> {
        Orientation::from_directions(Arc::new(doc.graph), doc.dir)
    }
}

impl From<Orientation> for OrientationDoc {
    fn from(o: Orientation) -> Self {
        OrientationDoc {
            dir: o.directions().collect(),
            graph: (*o.base).clone(),
        }
    }
}
