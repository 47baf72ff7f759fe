use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MixedGraph, VertexId};

/// Cubic vertex cover instance: a loopless cubic multigraph `H` and a
/// budget `k`. `|V(H)| = 2n` and `|E(H)| = 3n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CvcDoc", into = "CvcDoc")]
pub struct CvcInstance {
    graph: MixedGraph,
    k: usize,
}

/// JSON shape: `{"vertices":[...],"edges":[[id,u,v]],"k":int}`.
#[derive(Serialize, Deserialize)]
struct CvcDoc {
    vertices: Vec<VertexId>,
    edges: Vec<(EdgeId, VertexId, VertexId)>,
    k: usize,
}

impl TryFrom<CvcDoc> for CvcInstance {
    type Error = Error;

    fn try_from(doc: CvcDoc) -> Result<Self> {
        let mut g = MixedGraph::new();
        for v in doc.vertices {
            g.insert_vertex(v)?;
        }
        for (id, u, v) in doc.edges {
            g.insert_edge(id, u, v)?;
        }
        CvcInstance::new(g, doc.k)
    }
}

impl From<CvcInstance> for CvcDoc {
    fn from(inst: CvcInstance) -> Self {
        CvcDoc {
            vertices: inst.graph.vertices().collect(),
            edges: inst.graph.edges().collect(),
            k: inst.k,
        }
    }
}

impl CvcInstance {
    pub fn new(graph: MixedGraph, k: usize) -> Result<Self> {
        if !graph.is_undirected() {
            return Err(Error::precondition("cubic instance must not contain arcs"));
        }
        if graph.vertex_count() == 0 {
            return Err(Error::EmptyInstance);
        }
        if graph.vertex_count() % 2 == 1 {
            return Err(Error::OddVertexCount(graph.vertex_count()));
        }
        for v in graph.vertices() {
            let degree = graph.degree(v)?;
            if degree != 3 {
                return Err(Error::NotCubic { vertex: v, degree });
            }
        }
        Ok(CvcInstance { graph, k })
    }

    pub fn graph(&self) -> &MixedGraph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Half the number of vertices of `H`.
    pub fn n(&self) -> usize {
        self.graph.vertex_count() / 2
    }

    pub fn with_k(&self, k: usize) -> Self {
        CvcInstance {
            graph: self.graph.clone(),
            k,
        }
    }

    /// Reads either the JSON form or the line-based text form, picked by the
    /// first non-blank character.
    pub fn parse(input: &str) -> Result<Self> {
        if input.trim_start().starts_with('{') {
            serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))
        } else {
            Self::parse_text(input)
        }
    }

    /// Text form: `c` comment lines, one `p <nv> <ne>` header, `ne` lines
    /// `e <u> <v>` with 1-based vertex numbers, and one `k <int>` line.
    /// Vertex `i` becomes id `i-1`; edges get ids `0..ne` in file order.
    pub fn parse_text(input: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut k: Option<usize> = None;
        let mut graph = MixedGraph::new();
        let mut edges = 0usize;
        for (lineno, line) in input.lines().enumerate() {
            let bad = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |i: usize| -> Result<usize> {
                fields
                    .get(i)
                    .ok_or_else(|| bad("missing field"))?
                    .parse()
                    .map_err(|_| bad("expected a nonnegative integer"))
            };
            match fields.first().copied() {
                None | Some("c") => continue,
                Some("p") => {
                    // tolerate DIMACS-style `p edge <nv> <ne>`
                    let off = usize::from(fields.get(1).is_some_and(|f| f.parse::<usize>().is_err()));
                    if header.is_some() {
                        return Err(bad("duplicate p line"));
                    }
                    let (nv, ne) = (num(1 + off)?, num(2 + off)?);
                    graph = MixedGraph::with_vertices(nv);
                    header = Some((nv, ne));
                }
                Some("e") => {
                    let (nv, _) = header.ok_or_else(|| bad("e line before p line"))?;
                    let (u, v) = (num(1)?, num(2)?);
                    if u == 0 || v == 0 || u > nv || v > nv {
                        return Err(bad("vertex number out of range 1..=nv"));
                    }
                    graph
                        .insert_edge(EdgeId(edges), VertexId(u - 1), VertexId(v - 1))
                        .map_err(|e| bad(&e.to_string()))?;
                    edges += 1;
                }
                Some("k") => {
                    if k.is_some() {
                        return Err(bad("duplicate k line"));
                    }
                    k = Some(num(1)?);
                }
                Some(other) => return Err(bad(&format!("unknown line type {other:?}"))),
            }
        }
        let (_, ne) = header.ok_or_else(|| Error::Parse("missing p line".into()))?;
        if ne != edges {
            return Err(Error::Parse(format!("header declares {ne} edges, found {edges}")));
        }
        let k = k.ok_or_else(|| Error::Parse("missing k line".into()))?;
        CvcInstance::new(graph, k)
    }

    /// Text form of an instance whose vertex ids are `0..nv`.
    pub fn to_text(&self) -> Result<String> {
        let nv = self.graph.vertex_count();
        if self.graph.vertices().enumerate().any(|(i, v)| v.0 != i) {
            return Err(Error::precondition("text form needs vertex ids 0..nv"));
        }
        let mut out = format!("p {} {}\n", nv, self.graph.edge_count());
        for (_, u, v) in self.graph.edges() {
            writeln!(out, "e {} {}", u.0 + 1, v.0 + 1).expect("string write");
        }
        writeln!(out, "k {}", self.k).expect("string write");
        Ok(out)
    }
}
