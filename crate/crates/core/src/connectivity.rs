//! Local edge- and arc-connectivity by unit-capacity max-flow, with
//! extraction of arc-disjoint path systems.
//!
//! Augmenting paths are found by breadth-first search, scanning each
//! vertex's incident arcs in ascending id order, so both the flow value and
//! the extracted witnesses are reproducible. Undirected queries run on the
//! bidirected digraph (every edge replaced by two opposite arcs).

use std::collections::{BTreeMap, VecDeque};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{ArcId, MixedGraph, VertexId, VertexSet};
use crate::orientation::Orientation;

#[derive(Clone, Copy, Debug)]
struct NetArc {
    from: usize,
    to: usize,
    id: ArcId,
}

/// Compact unit-capacity network over a fixed vertex set.
#[derive(Clone, Debug)]
pub struct Network {
    ids: Vec<VertexId>,
    index: BTreeMap<VertexId, usize>,
    arcs: Vec<NetArc>,
    // every arc appears at both endpoints, ascending arc index
    adj: Vec<Vec<usize>>,
}

struct Flow {
    value: usize,
    used: Vec<bool>,
}

impl Network {
    fn build<I>(vertices: impl Iterator<Item = VertexId>, arcs: I) -> Self
    where
        I: IntoIterator<Item = (ArcId, VertexId, VertexId)>,
    {
        let ids: Vec<VertexId> = vertices.collect();
        let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); ids.len()];
        let arcs: Vec<NetArc> = arcs
            .into_iter()
            .map(|(id, t, h)| NetArc {
                from: index[&t],
                to: index[&h],
                id,
            })
            .collect();
        for (i, a) in arcs.iter().enumerate() {
            adj[a.from].push(i);
            adj[a.to].push(i);
        }
        Network { ids, index, arcs, adj }
    }

    /// Network on the arcs of `d`; edges are ignored.
    pub fn from_digraph(d: &MixedGraph) -> Self {
        Self::build(d.vertices(), d.arcs())
    }

    pub fn from_orientation(o: &Orientation) -> Result<Self> {
        o.check_total()?;
        Ok(Self::build(o.base().vertices(), o.directions()))
    }

    /// Each edge of `g` becomes two opposite arcs sharing the edge id.
    pub fn bidirected(g: &MixedGraph) -> Self {
        let arcs = g.edges().flat_map(|(id, u, v)| [(id, u, v), (id, v, u)]);
        Self::build(g.vertices(), arcs)
    }

    pub fn vertex_ids(&self) -> &[VertexId] {
        &self.ids
    }

    fn idx(&self, v: VertexId) -> Result<usize> {
        self.index.get(&v).copied().ok_or(Error::UnknownVertex(v))
    }

    fn endpoints(&self, u: VertexId, v: VertexId) -> Result<(usize, usize)> {
        let (s, t) = (self.idx(u)?, self.idx(v)?);
        if s == t {
            return Err(Error::SameEndpoints(u));
        }
        Ok((s, t))
    }

    fn max_flow(&self, s: usize, t: usize, limit: usize) -> Flow {
        let n = self.ids.len();
        let mut used = vec![false; self.arcs.len()];
        let mut value = 0;
        let mut pred: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        while value < limit {
            seen.fill(false);
            pred.fill(None);
            queue.clear();
            seen[s] = true;
            queue.push_back(s);
            'bfs: while let Some(x) = queue.pop_front() {
                for &a in &self.adj[x] {
                    let arc = self.arcs[a];
                    let next = if arc.from == x && !used[a] {
                        arc.to
                    } else if arc.to == x && used[a] {
                        arc.from
                    } else {
                        continue;
                    };
                    if !seen[next] {
                        seen[next] = true;
                        pred[next] = Some(a);
                        if next == t {
                            break 'bfs;
                        }
                        queue.push_back(next);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut x = t;
            while x != s {
                let a = pred[x].expect("augmenting path is connected");
                used[a] = !used[a];
                let arc = self.arcs[a];
                x = if arc.to == x && used[a] { arc.from } else { arc.to };
            }
            value += 1;
        }
        Flow { value, used }
    }

    /// Maximum number of arc-disjoint `u`→`v` paths.
    pub fn lambda(&self, u: VertexId, v: VertexId) -> Result<usize> {
        let (s, t) = self.endpoints(u, v)?;
        Ok(self.max_flow(s, t, usize::MAX).value)
    }

    /// Stops augmenting once `k` paths are found.
    pub fn lambda_at_least(&self, u: VertexId, v: VertexId, k: usize) -> Result<bool> {
        let (s, t) = self.endpoints(u, v)?;
        Ok(self.max_flow(s, t, k).value >= k)
    }

    /// Vertices reachable from `u` along arcs.
    pub fn reachable(&self, u: VertexId) -> Result<VertexSet> {
        let s = self.idx(u)?;
        Ok(self
            .reach_mask(s)
            .into_iter()
            .enumerate()
            .filter(|&(_, r)| r)
            .map(|(i, _)| self.ids[i])
            .collect())
    }

    pub(crate) fn reach_mask(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.ids.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            for &a in &self.adj[x] {
                let arc = self.arcs[a];
                if arc.from == x && !seen[arc.to] {
                    seen[arc.to] = true;
                    stack.push(arc.to);
                }
            }
        }
        seen
    }

    /// A minimum `u`→`v` cut, given by its sink side: the vertices not
    /// reachable from `u` in the final residual network.
    pub fn min_cut_sink_side(&self, u: VertexId, v: VertexId) -> Result<VertexSet> {
        let (s, t) = self.endpoints(u, v)?;
        let flow = self.max_flow(s, t, usize::MAX);
        let mut seen = vec![false; self.ids.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            for &a in &self.adj[x] {
                let arc = self.arcs[a];
                let next = if arc.from == x && !flow.used[a] {
                    arc.to
                } else if arc.to == x && flow.used[a] {
                    arc.from
                } else {
                    continue;
                };
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        Ok((0..self.ids.len()).filter(|&i| !seen[i]).map(|i| self.ids[i]).collect())
    }

    /// Maximum family of arc-disjoint `u`→`v` paths.
    ///
    /// The flow is decomposed by walking from the source along the
    /// lowest-id unused flow arc; a walk that revisits a vertex drops the
    /// closed part, so every returned path is simple.
    pub fn disjoint_paths(&self, u: VertexId, v: VertexId) -> Result<PathSet> {
        let (s, t) = self.endpoints(u, v)?;
        let flow = self.max_flow(s, t, usize::MAX);
        let mut out_flow: Vec<VecDeque<usize>> = vec![VecDeque::new(); self.ids.len()];
        for (a, arc) in self.arcs.iter().enumerate() {
            if flow.used[a] {
                out_flow[arc.from].push_back(a);
            }
        }
        let mut paths = Vec::with_capacity(flow.value);
        for _ in 0..flow.value {
            let mut walk: Vec<usize> = Vec::new();
            let mut position: BTreeMap<usize, usize> = BTreeMap::from([(s, 0)]);
            let mut x = s;
            while x != t {
                let a = out_flow[x]
                    .pop_front()
                    .expect("flow conservation leaves an outgoing flow arc");
                walk.push(a);
                x = self.arcs[a].to;
                if let Some(&p) = position.get(&x) {
                    for dropped in walk.drain(p..) {
                        position.remove(&self.arcs[dropped].to);
                    }
                    position.insert(x, p);
                } else {
                    position.insert(x, walk.len());
                }
            }
            paths.push(walk.into_iter().map(|a| self.arcs[a].id).collect());
        }
        Ok(PathSet {
            source: u,
            sink: v,
            paths,
        })
    }
}

/// Pairwise arc-disjoint directed paths from `source` to `sink`, each a
/// sequence of arc ids. Serializes as a list of arc-id lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSet {
    pub source: VertexId,
    pub sink: VertexId,
    pub paths: Vec<Vec<ArcId>>,
}

impl PathSet {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Vertex sequence of path `i` in the digraph `d`.
    pub fn vertices_of(&self, d: &MixedGraph, i: usize) -> Result<Vec<VertexId>> {
        let mut seq = vec![self.source];
        for &a in &self.paths[i] {
            let (_, h) = d.arc(a).ok_or(Error::UnknownEdge(a))?;
            seq.push(h);
        }
        Ok(seq)
    }

    /// Checks the path-system invariants against `d`: every path is a
    /// directed source→sink walk, and no arc is used twice overall.
    pub fn validate(&self, d: &MixedGraph) -> Result<()> {
        let mut seen = std::collections::BTreeSet::new();
        for path in &self.paths {
            let mut at = self.source;
            for &a in path {
                let (t, h) = d.arc(a).ok_or(Error::UnknownEdge(a))?;
                if t != at {
                    return Err(Error::internal(format!("path breaks at arc {a}")));
                }
                if !seen.insert(a) {
                    return Err(Error::internal(format!("arc {a} used twice")));
                }
                at = h;
            }
            if at != self.sink || path.is_empty() {
                return Err(Error::internal("path does not end at the sink"));
            }
        }
        Ok(())
    }
}

impl Serialize for PathSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.paths.serialize(serializer)
    }
}

/// λ_G(u, v): maximum number of edge-disjoint u–v paths in the edges of `g`.
pub fn lambda_undirected(g: &MixedGraph, u: VertexId, v: VertexId) -> Result<usize> {
    Network::bidirected(g).lambda(u, v)
}

/// λ_D(u, v): maximum number of arc-disjoint u→v paths in the arcs of `d`.
pub fn lambda_directed(d: &MixedGraph, u: VertexId, v: VertexId) -> Result<usize> {
    Network::from_digraph(d).lambda(u, v)
}

pub fn arc_disjoint_paths(d: &MixedGraph, u: VertexId, v: VertexId) -> Result<PathSet> {
    Network::from_digraph(d).disjoint_paths(u, v)
}

/// λ_D(u, v) for every ordered pair of distinct vertices.
pub fn lambda_matrix(d: &MixedGraph) -> BTreeMap<(VertexId, VertexId), usize> {
    let net = Network::from_digraph(d);
    let mut out = BTreeMap::new();
    for u in d.vertices() {
        for v in d.vertices() {
            if u != v {
                out.insert((u, v), net.lambda(u, v).expect("distinct known vertices"));
            }
        }
    }
    out
}
