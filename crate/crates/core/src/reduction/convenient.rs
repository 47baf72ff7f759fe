//! The partial orientation `F` and convenient orientations.
//!
//! `F` fixes every edge of `G` except the three root edges `ap0`, `aq0`,
//! `p0q0` of each vertex gadget:
//!
//! * `a→z1, a→z2, z1→b, z2→b` and `z3→a, z4→a, b→z3, b→z4`;
//! * `X→Z`, `x→y`, `P→X`;
//! * `p0→p1→p2` and `q0→q1→q2`.

use crate::connectivity::Network;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId, VertexSet};
use crate::orientation::Orientation;
use crate::reduction::build::ReductionArtifact;

pub fn build_partial_f(art: &ReductionArtifact) -> Result<Orientation> {
    let mut f = Orientation::new(art.graph().clone())?;
    let (a, b) = (art.hub(), art.sink());
    let mut fix = |tail: VertexId, head: VertexId| -> Result<()> {
        let e = art
            .edge_between(tail, head)
            .ok_or_else(|| Error::internal(format!("labels inconsistent: no edge {tail}-{head}")))?;
        f.orient(e, tail, head)
    };
    for g in art.edge_gadgets() {
        let [z1, z2, z3, z4] = g.z;
        for z in [z1, z2] {
            fix(a, z)?;
            fix(z, b)?;
        }
        for z in [z3, z4] {
            fix(z, a)?;
            fix(b, z)?;
        }
        fix(g.x, z1)?;
        fix(g.y, z2)?;
        fix(g.y, z3)?;
        fix(g.y, z4)?;
        fix(g.x, g.y)?;
    }
    let gadget_of_edge = |e: EdgeId| {
        art.edge_gadgets()
            .iter()
            .find(|g| g.edge == e)
            .expect("incidence lists edges of H")
    };
    for g in art.vertex_gadgets() {
        let [e1, e2, e3] = g.incidence.map(gadget_of_edge);
        let (p, q) = (g.p, g.q);
        fix(p[0], p[1])?;
        fix(p[1], p[2])?;
        fix(q[0], q[1])?;
        fix(q[1], q[2])?;
        fix(p[1], e1.y)?;
        fix(p[2], e2.y)?;
        fix(p[2], e3.y)?;
        fix(q[1], e1.x)?;
        fix(q[2], e2.x)?;
        fix(q[2], e3.x)?;
    }
    Ok(f)
}

fn check_graph(o: &Orientation, art: &ReductionArtifact) -> Result<()> {
    if **o.base() != **art.graph() {
        return Err(Error::GraphMismatch);
    }
    o.check_total()
}

/// Total orientation of `G` that agrees with `F` on every edge `F` orients.
pub fn is_convenient(o: &Orientation, art: &ReductionArtifact) -> Result<bool> {
    check_graph(o, art)?;
    Ok(o.agrees_with(&build_partial_f(art)?))
}

/// For a convenient orientation, decides well-balancedness through the
/// local conditions at the gadget roots: for every edge `uv` of `H`,
///
/// 1. `a→p0` and `a→q0` at `u`, or both at `v`;
/// 2. inside the orientation induced on `{a, p0u, q0u, p0v, q0v}`, each of
///    the four roots is reachable from `a`.
pub fn check_vfasf(o: &Orientation, art: &ReductionArtifact) -> Result<bool> {
    if !is_convenient(o, art)? {
        return Err(Error::precondition("orientation is not convenient"));
    }
    let a = art.hub();
    let full = |v: VertexId| {
        let g = art.vertex_gadget(v).expect("vertex of H");
        [g.p[0], g.q[0]]
            .iter()
            .all(|&r| o.direction(art.edge_id(a, r)) == Some((a, r)))
    };
    for eg in art.edge_gadgets() {
        let (u, v) = eg.ends;
        if !(full(u) || full(v)) {
            return Ok(false);
        }
        let (gu, gv) = (art.vertex_gadget(u).expect("u"), art.vertex_gadget(v).expect("v"));
        let roots = [gu.p[0], gu.q[0], gv.p[0], gv.q[0]];
        let mut set: VertexSet = roots.into_iter().collect();
        set.insert(a);
        let local = o.to_digraph()?.induced(&set)?;
        let reach = Network::from_digraph(&local).reachable(a)?;
        if !roots.iter().all(|r| reach.contains(r)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Directions of the three root edges of one vertex gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootState {
    pub a_to_p: bool,
    pub a_to_q: bool,
    pub p_to_q: bool,
}

impl RootState {
    /// Bit 0 is the `ap0` edge, bit 1 `aq0`, bit 2 `p0q0`; a set bit means
    /// the edge points away from `a` (resp. from `p0`).
    pub fn from_bits(bits: u8) -> Self {
        RootState {
            a_to_p: bits & 1 != 0,
            a_to_q: bits & 2 != 0,
            p_to_q: bits & 4 != 0,
        }
    }

    /// Both `a→p0` and `a→q0`.
    pub fn full(self) -> bool {
        self.a_to_p && self.a_to_q
    }

    /// `p0` and `q0` both reachable from `a` using the three root edges.
    pub fn rooted(self) -> bool {
        (self.a_to_p && (self.a_to_q || self.p_to_q)) || (self.a_to_q && (self.a_to_p || !self.p_to_q))
    }

    pub fn hub_out(self) -> usize {
        usize::from(self.a_to_p) + usize::from(self.a_to_q)
    }
}

/// Completes `F` by orienting the `6n` root edges from the bits of `mask`:
/// bit `i` belongs to the `i`-th root edge in ascending id order; a clear
/// bit keeps the stored endpoint order (`a→p0`, `a→q0`, `p0→q0`), a set
/// bit reverses it.
pub fn convenient_from_mask(art: &ReductionArtifact, f: &Orientation, mask: u64) -> Result<Orientation> {
    let mut o = f.clone();
    for (i, e) in art.root_free_edges().into_iter().enumerate() {
        let (u, v) = art.graph().edge(e).ok_or(Error::UnknownEdge(e))?;
        if mask >> i & 1 == 0 {
            o.orient(e, u, v)?;
        } else {
            o.orient(e, v, u)?;
        }
    }
    Ok(o)
}
