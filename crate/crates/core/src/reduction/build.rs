//! Construction of the orientation instance `(G, ℓ)` from a cubic vertex
//! cover instance `(H, k)`, and of its best-balanced variant `(G', ℓ')`.
//!
//! Layout of `G` (ids are assigned in this order):
//!
//! * hub `a`, sink `b`;
//! * per vertex `v` of `H`: `p0 p1 p2 q0 q1 q2` with edges
//!   `p0p1 p1p2 q0q1 q1q2 p0q0`;
//! * per edge `e` of `H`: `x y z1 z2 z3 z4` with edges `xy xz1 yz2 yz3 yz4`;
//! * `az` and `bz` for every `z`;
//! * per vertex `v` with incident edges `e1 < e2 < e3`:
//!   `ap0 aq0 p1y(e1) p2y(e2) p2y(e3) q1x(e1) q2x(e2) q2x(e3)`;
//! * best-balanced variant only: `2k` pendant vertices `w`, each with `wa`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::balance::BoundFn;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MixedGraph, VertexId, VertexSet};
use crate::reduction::instance::CvcInstance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    WellBalanced,
    BestBalanced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeRole {
    VertexGadget,
    EdgeGadget,
    Linking,
    Pendant,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexGadget {
    pub vertex: VertexId,
    pub p: [VertexId; 3],
    pub q: [VertexId; 3],
    /// Incident edges of `vertex` in `H`, ascending id.
    pub incidence: [EdgeId; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeGadget {
    pub edge: EdgeId,
    pub ends: (VertexId, VertexId),
    pub x: VertexId,
    pub y: VertexId,
    pub z: [VertexId; 4],
}

/// The three edges at the root of a vertex gadget, left unoriented by the
/// partial orientation `F`. Stored as `(a,p0)`, `(a,q0)`, `(p0,q0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootEdges {
    pub a_p: EdgeId,
    pub a_q: EdgeId,
    pub p_q: EdgeId,
}

/// The constructed graph with its bound function and the labels locating
/// every gadget vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ArtifactDoc", into = "ArtifactDoc")]
pub struct ReductionArtifact {
    variant: Variant,
    source: CvcInstance,
    graph: Arc<MixedGraph>,
    ell: BoundFn,
    hub: VertexId,
    sink: VertexId,
    vertex_gadgets: Vec<VertexGadget>,
    edge_gadgets: Vec<EdgeGadget>,
    pendants: Vec<VertexId>,
    roles: BTreeMap<EdgeId, EdgeRole>,
    pairs: BTreeMap<(VertexId, VertexId), EdgeId>,
}

#[derive(Serialize, Deserialize)]
struct ArtifactDoc {
    variant: Variant,
    n: usize,
    k: usize,
    n_below_two: bool,
    source: CvcInstance,
    graph: MixedGraph,
    ell: BoundFn,
    hub: VertexId,
    sink: VertexId,
    vertex_gadgets: Vec<VertexGadget>,
    edge_gadgets: Vec<EdgeGadget>,
    pendants: Vec<VertexId>,
    edge_roles: Vec<(EdgeId, EdgeRole)>,
}

impl From<ReductionArtifact> for ArtifactDoc {
    fn from(art: ReductionArtifact) -> Self {
        ArtifactDoc {
            variant: art.variant,
            n: art.n(),
            k: art.k(),
            n_below_two: art.n() < 2,
            graph: (*art.graph).clone(),
            edge_roles: art.roles.into_iter().collect(),
            source: art.source,
            ell: art.ell,
            hub: art.hub,
            sink: art.sink,
            vertex_gadgets: art.vertex_gadgets,
            edge_gadgets: art.edge_gadgets,
            pendants: art.pendants,
        }
    }
}

impl TryFrom<ArtifactDoc> for ReductionArtifact {
    type Error = Error;

    /// Rebuilds from the embedded source instance and accepts the document
    /// only if it matches the rebuild exactly.
    fn try_from(doc: ArtifactDoc) -> Result<Self> {
        let rebuilt = match doc.variant {
            Variant::WellBalanced => build_ubwbo(&doc.source)?,
            Variant::BestBalanced => build_ubbbo(&doc.source)?,
        };
        let consistent = doc.n == rebuilt.n()
            && doc.k == rebuilt.k()
            && doc.n_below_two == (rebuilt.n() < 2)
            && doc.graph == *rebuilt.graph
            && doc.ell == rebuilt.ell
            && doc.hub == rebuilt.hub
            && doc.sink == rebuilt.sink
            && doc.vertex_gadgets == rebuilt.vertex_gadgets
            && doc.edge_gadgets == rebuilt.edge_gadgets
            && doc.pendants == rebuilt.pendants
            && doc
                .edge_roles
                .iter()
                .copied()
                .eq(rebuilt.roles.iter().map(|(&e, &r)| (e, r)));
        if consistent {
            Ok(rebuilt)
        } else {
            Err(Error::Parse(
                "artifact does not match the construction for its source instance".into(),
            ))
        }
    }
}

fn key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    (u.min(v), u.max(v))
}

struct Builder {
    graph: MixedGraph,
    roles: BTreeMap<EdgeId, EdgeRole>,
    pairs: BTreeMap<(VertexId, VertexId), EdgeId>,
}

impl Builder {
    fn edge(&mut self, u: VertexId, v: VertexId, role: EdgeRole) -> Result<EdgeId> {
        let id = self.graph.add_edge(u, v)?;
        self.roles.insert(id, role);
        if self.pairs.insert(key(u, v), id).is_some() {
            return Err(Error::internal(format!("parallel edge {u}-{v} in G")));
        }
        Ok(id)
    }
}

fn build(inst: &CvcInstance, variant: Variant) -> Result<ReductionArtifact> {
    let h = inst.graph();
    let (n, k) = (inst.n(), inst.k());
    let mut b = Builder {
        graph: MixedGraph::new(),
        roles: BTreeMap::new(),
        pairs: BTreeMap::new(),
    };
    let hub = b.graph.add_vertex();
    let sink = b.graph.add_vertex();

    let mut vertex_gadgets = Vec::with_capacity(2 * n);
    for v in h.vertices() {
        let ids: Vec<VertexId> = (0..6).map(|_| b.graph.add_vertex()).collect();
        let incidence: Vec<EdgeId> = h.incident_edges(v).collect();
        let incidence: [EdgeId; 3] = incidence
            .try_into()
            .map_err(|_| Error::internal("cubic vertex without three incident edges"))?;
        vertex_gadgets.push(VertexGadget {
            vertex: v,
            p: [ids[0], ids[1], ids[2]],
            q: [ids[3], ids[4], ids[5]],
            incidence,
        });
    }
    let mut edge_gadgets = Vec::with_capacity(3 * n);
    for (e, u, v) in h.edges() {
        let ids: Vec<VertexId> = (0..6).map(|_| b.graph.add_vertex()).collect();
        edge_gadgets.push(EdgeGadget {
            edge: e,
            ends: (u, v),
            x: ids[0],
            y: ids[1],
            z: [ids[2], ids[3], ids[4], ids[5]],
        });
    }

    for g in &vertex_gadgets {
        let (p, q) = (g.p, g.q);
        for (s, t) in [(p[0], p[1]), (p[1], p[2]), (q[0], q[1]), (q[1], q[2]), (p[0], q[0])] {
            b.edge(s, t, EdgeRole::VertexGadget)?;
        }
    }
    for g in &edge_gadgets {
        let (x, y, z) = (g.x, g.y, g.z);
        for (s, t) in [(x, y), (x, z[0]), (y, z[1]), (y, z[2]), (y, z[3])] {
            b.edge(s, t, EdgeRole::EdgeGadget)?;
        }
    }
    for g in &edge_gadgets {
        for &z in &g.z {
            b.edge(hub, z, EdgeRole::Linking)?;
            b.edge(sink, z, EdgeRole::Linking)?;
        }
    }
    let gadget_of_edge: BTreeMap<EdgeId, &EdgeGadget> = edge_gadgets.iter().map(|g| (g.edge, g)).collect();
    for g in &vertex_gadgets {
        let [e1, e2, e3] = g.incidence.map(|e| gadget_of_edge[&e]);
        let (p, q) = (g.p, g.q);
        for (s, t) in [
            (hub, p[0]),
            (hub, q[0]),
            (p[1], e1.y),
            (p[2], e2.y),
            (p[2], e3.y),
            (q[1], e1.x),
            (q[2], e2.x),
            (q[2], e3.x),
        ] {
            b.edge(s, t, EdgeRole::Linking)?;
        }
    }

    let mut pendants = Vec::new();
    if variant == Variant::BestBalanced {
        for _ in 0..2 * k {
            let w = b.graph.add_vertex();
            b.edge(w, hub, EdgeRole::Pendant)?;
            pendants.push(w);
        }
    }

    let mut ell = BoundFn::degrees(&b.graph);
    for g in &edge_gadgets {
        for &z in &g.z {
            ell.set(z, 1);
        }
    }
    if variant == Variant::WellBalanced {
        ell.set(hub, 8 * n + k);
    }

    Ok(ReductionArtifact {
        variant,
        source: inst.clone(),
        graph: Arc::new(b.graph),
        ell,
        hub,
        sink,
        vertex_gadgets,
        edge_gadgets,
        pendants,
        roles: b.roles,
        pairs: b.pairs,
    })
}

/// `(G, ℓ)` with `ℓ(a) = 8n + k`, `ℓ(z) = 1` on `Z` and `ℓ(s) = d_G(s)`
/// elsewhere.
pub fn build_ubwbo(inst: &CvcInstance) -> Result<ReductionArtifact> {
    build(inst, Variant::WellBalanced)
}

/// `(G', ℓ')`: `G` plus `2k` pendant vertices on `a`, `ℓ'(z) = 1` on `Z`,
/// `ℓ'(s) = d_{G'}(s)` elsewhere.
pub fn build_ubbbo(inst: &CvcInstance) -> Result<ReductionArtifact> {
    build(inst, Variant::BestBalanced)
}

impl ReductionArtifact {
    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn source(&self) -> &CvcInstance {
        &self.source
    }

    pub fn n(&self) -> usize {
        self.source.n()
    }

    pub fn k(&self) -> usize {
        self.source.k()
    }

    pub fn graph(&self) -> &Arc<MixedGraph> {
        &self.graph
    }

    pub fn ell(&self) -> &BoundFn {
        &self.ell
    }

    /// The vertex `a`.
    pub fn hub(&self) -> VertexId {
        self.hub
    }

    /// The vertex `b`.
    pub fn sink(&self) -> VertexId {
        self.sink
    }

    pub fn vertex_gadgets(&self) -> &[VertexGadget] {
        &self.vertex_gadgets
    }

    pub fn edge_gadgets(&self) -> &[EdgeGadget] {
        &self.edge_gadgets
    }

    pub fn vertex_gadget(&self, v: VertexId) -> Option<&VertexGadget> {
        self.vertex_gadgets
            .binary_search_by_key(&v, |g| g.vertex)
            .ok()
            .map(|i| &self.vertex_gadgets[i])
    }

    /// The set `W` (empty for the well-balanced variant).
    pub fn pendants(&self) -> &[VertexId] {
        &self.pendants
    }

    pub fn role(&self, e: EdgeId) -> Option<EdgeRole> {
        self.roles.get(&e).copied()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.pairs.get(&key(u, v)).copied()
    }

    pub(crate) fn edge_id(&self, u: VertexId, v: VertexId) -> EdgeId {
        self.edge_between(u, v).expect("edge of the construction")
    }

    /// All `z` vertices, edge gadget by edge gadget.
    pub fn z_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.edge_gadgets.iter().flat_map(|g| g.z)
    }

    /// `Z^{1,2}`: the `z1`, `z2` of every edge gadget.
    pub fn z12(&self) -> VertexSet {
        self.edge_gadgets.iter().flat_map(|g| [g.z[0], g.z[1]]).collect()
    }

    /// `Z^{3,4}`.
    pub fn z34(&self) -> VertexSet {
        self.edge_gadgets.iter().flat_map(|g| [g.z[2], g.z[3]]).collect()
    }

    /// `X`: all `x` and `y` vertices.
    pub fn x_vertices(&self) -> VertexSet {
        self.edge_gadgets.iter().flat_map(|g| [g.x, g.y]).collect()
    }

    /// `P`: all vertex-gadget vertices.
    pub fn p_vertices(&self) -> VertexSet {
        self.vertex_gadgets
            .iter()
            .flat_map(|g| g.p.into_iter().chain(g.q))
            .collect()
    }

    /// The `x`/`y` neighbour of `z` inside its edge gadget.
    pub fn gadget_partner(&self, z: VertexId) -> Option<VertexId> {
        self.edge_gadgets
            .iter()
            .find_map(|g| match g.z.iter().position(|&w| w == z) {
                Some(0) => Some(g.x),
                Some(_) => Some(g.y),
                None => None,
            })
    }

    pub fn root_edges(&self, v: VertexId) -> Option<RootEdges> {
        let g = self.vertex_gadget(v)?;
        Some(RootEdges {
            a_p: self.edge_id(self.hub, g.p[0]),
            a_q: self.edge_id(self.hub, g.q[0]),
            p_q: self.edge_id(g.p[0], g.q[0]),
        })
    }

    /// The `6n` root edges, ascending id.
    pub fn root_free_edges(&self) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self
            .vertex_gadgets
            .iter()
            .flat_map(|g| {
                let r = self.root_edges(g.vertex).expect("own gadget");
                [r.a_p, r.a_q, r.p_q]
            })
            .collect();
        out.sort();
        out
    }

    /// `V(G)` without the pendants.
    pub fn core_vertices(&self) -> VertexSet {
        let w: VertexSet = self.pendants.iter().copied().collect();
        self.graph.vertices().filter(|v| !w.contains(v)).collect()
    }

    /// The well-balanced graph `G` inside this artifact's graph.
    pub fn core_graph(&self) -> Arc<MixedGraph> {
        if self.pendants.is_empty() {
            self.graph.clone()
        } else {
            Arc::new(self.graph.induced(&self.core_vertices()).expect("own vertices"))
        }
    }

    /// ℓ on `G`: `ℓ(a) = 8n + k`, `ℓ(z) = 1`, degree elsewhere.
    pub fn core_ell(&self) -> BoundFn {
        let mut ell = BoundFn::new();
        let core = self.core_vertices();
        for (v, b) in self.ell.iter().filter(|(v, _)| core.contains(v)) {
            ell.set(v, b);
        }
        ell.set(self.hub, 8 * self.n() + self.k());
        ell
    }

    /// `d_G(a)`-style summary used by the CLI.
    pub fn summary(&self) -> String {
        let a = self.hub;
        let base = format!(
            "V={} E={} ell(a)={}",
            self.graph.vertex_count(),
            self.graph.edge_count(),
            self.ell.get(a).expect("bound on a")
        );
        match self.variant {
            Variant::WellBalanced => base,
            Variant::BestBalanced => format!("{base} d(a)={}", self.graph.degree(a).expect("hub")),
        }
    }
}
