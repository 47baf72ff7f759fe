//! Maps between vertex covers of `H` and bounded well-balanced orientations
//! of `G`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::balance::{apply_eulerian_reversal, hub_certify_well_balanced, is_ell_bounded};
use crate::connectivity::{arc_disjoint_paths, PathSet};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MixedGraph, VertexId, VertexSet};
use crate::orientation::Orientation;
use crate::reduction::build::{ReductionArtifact, Variant};
use crate::reduction::convenient::{build_partial_f, check_vfasf, is_convenient};

fn require_well_balanced_variant(art: &ReductionArtifact) -> Result<()> {
    if art.variant() != Variant::WellBalanced {
        return Err(Error::precondition("expected a well-balanced (UBWBO) artifact"));
    }
    Ok(())
}

/// The convenient orientation with `a→p0→q0` at every vertex gadget and
/// `a→q0` exactly for the vertices in `cover` (otherwise `q0→a`).
///
/// `cover` need not be a vertex cover: the result is well-balanced iff it
/// is one, and ℓ-bounded iff `|cover| ≤ k`, since `d⁺(a) = 6n + 2n + |cover|`.
pub fn cover_to_orientation(art: &ReductionArtifact, cover: &VertexSet) -> Result<Orientation> {
    require_well_balanced_variant(art)?;
    if let Some(&v) = cover.iter().find(|&&v| art.vertex_gadget(v).is_none()) {
        return Err(Error::UnknownVertex(v));
    }
    let a = art.hub();
    let mut o = build_partial_f(art)?;
    for g in art.vertex_gadgets() {
        let r = art.root_edges(g.vertex).expect("own gadget");
        o.orient_from(r.a_p, a)?;
        o.orient_from(r.p_q, g.p[0])?;
        if cover.contains(&g.vertex) {
            o.orient_from(r.a_q, a)?;
        } else {
            o.orient_from(r.a_q, g.q[0])?;
        }
    }
    Ok(o)
}

/// Intermediate objects of [`convenientize`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvenientizeTrace {
    /// `z` with `b→z`.
    pub z0_plus: VertexSet,
    pub z0_minus: VertexSet,
    /// `z` with an arc from `z` into `X`.
    pub z0_star: VertexSet,
    /// `6n` arc-disjoint `b→a` paths of the input orientation.
    pub path_family: PathSet,
    /// For each `z` in `z0_star`, the circuit `a→z` followed by the rest of
    /// the path through `z`.
    pub circuits: BTreeMap<VertexId, Vec<EdgeId>>,
    /// Arc set of the second reversal.
    pub eulerian_d: BTreeSet<EdgeId>,
}

fn arc_is(o: &Orientation, e: EdgeId, tail: VertexId, head: VertexId) -> bool {
    o.direction(e) == Some((tail, head))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::internal(msg()))
    }
}

fn eulerian_subgraph(o: &Orientation, arcs: &[EdgeId]) -> Result<bool> {
    let mut sub = MixedGraph::new();
    for v in o.base().vertices() {
        sub.insert_vertex(v)?;
    }
    for &e in arcs {
        let (t, h) = o.direction(e).ok_or(Error::UnknownEdge(e))?;
        sub.insert_arc(e, t, h)?;
    }
    Ok(sub.is_eulerian())
}

/// Turns an ℓ-bounded well-balanced orientation of `G` into a convenient
/// one with the same out-degree at every vertex, by two eulerian reversals:
///
/// 1. For every `z` sending an arc into `X`, the `b→a` path `T_z` through
///    `z` (from a maximum arc-disjoint family) becomes the circuit
///    `T_z − bz + az`; all these circuits are reversed.
/// 2. The arcs `bz, za` for `z ∈ Z0⁺ ∩ Z^{1,2}` and `az, zb` for
///    `z ∈ Z0⁻ ∩ Z^{3,4}` form an eulerian digraph, which is reversed.
///
/// Each guarantee the construction relies on is checked; a failed check
/// returns [`Error::Internal`].
pub fn convenientize(o: &Orientation, art: &ReductionArtifact) -> Result<(Orientation, ConvenientizeTrace)> {
    require_well_balanced_variant(art)?;
    if **o.base() != **art.graph() {
        return Err(Error::GraphMismatch);
    }
    o.check_total()?;
    if !is_ell_bounded(o, art.ell())? {
        return Err(Error::precondition("orientation is not ℓ-bounded"));
    }
    // exact on G, since λ_G(s,a) = d_G(s) for every s ≠ a
    if !hub_certify_well_balanced(o, art.hub())? {
        return Err(Error::precondition("orientation is not well-balanced"));
    }
    let (a, b) = (art.hub(), art.sink());
    let n = art.n();
    let z_all: VertexSet = art.z_vertices().collect();

    let z0_plus: VertexSet = z_all
        .iter()
        .copied()
        .filter(|&z| arc_is(o, art.edge_id(b, z), b, z))
        .collect();
    let z0_minus: VertexSet = z_all.difference(&z0_plus).copied().collect();
    ensure(z0_plus.len() == 6 * n && z0_minus.len() == 6 * n, || {
        format!("|Z0+| = {}, expected {}", z0_plus.len(), 6 * n)
    })?;
    let z0_star: VertexSet = z_all
        .iter()
        .copied()
        .filter(|&z| {
            let partner = art.gadget_partner(z).expect("z lies in an edge gadget");
            arc_is(o, art.edge_id(z, partner), z, partner)
        })
        .collect();
    ensure(z0_star.is_subset(&z0_plus), || "Z0* is not inside Z0+".into())?;

    let d0 = o.to_digraph()?;
    let path_family = arc_disjoint_paths(&d0, b, a)?;
    ensure(path_family.len() == 6 * n, || {
        format!("found {} arc-disjoint b→a paths, expected {}", path_family.len(), 6 * n)
    })?;
    let mut path_of: BTreeMap<VertexId, usize> = BTreeMap::new();
    for i in 0..path_family.len() {
        let on_path: Vec<VertexId> = path_family
            .vertices_of(&d0, i)?
            .into_iter()
            .filter(|v| z_all.contains(v))
            .collect();
        ensure(on_path.len() == 1, || {
            format!("path {i} meets Z in {} vertices", on_path.len())
        })?;
        path_of.insert(on_path[0], i);
    }
    ensure(path_of.keys().copied().eq(z0_plus.iter().copied()), || {
        "paths do not match Z0+ one-to-one".into()
    })?;

    let mut circuits = BTreeMap::new();
    let mut first_reversal = BTreeSet::new();
    for &z in &z0_star {
        let path = &path_family.paths[path_of[&z]];
        let (bz, az) = (art.edge_id(b, z), art.edge_id(a, z));
        ensure(path.first() == Some(&bz), || {
            format!("path through {z} does not start with bz")
        })?;
        ensure(arc_is(o, az, a, z), || format!("arc a→{z} missing"))?;
        let circuit: Vec<EdgeId> = std::iter::once(az).chain(path[1..].iter().copied()).collect();
        ensure(eulerian_subgraph(o, &circuit)?, || format!("C_{z} is not a circuit"))?;
        for &e in &circuit {
            ensure(first_reversal.insert(e), || format!("circuits share arc {e}"))?;
        }
        circuits.insert(z, circuit);
    }
    let g1 = apply_eulerian_reversal(o, &first_reversal)?;

    let z12 = art.z12();
    let z34 = art.z34();
    let mut eulerian_d = BTreeSet::new();
    for &z in z0_plus.intersection(&z12) {
        let (bz, za) = (art.edge_id(b, z), art.edge_id(a, z));
        ensure(arc_is(&g1, bz, b, z) && arc_is(&g1, za, z, a), || {
            format!("no path b→{z}→a")
        })?;
        eulerian_d.extend([bz, za]);
    }
    for &z in z0_minus.intersection(&z34) {
        let (az, zb) = (art.edge_id(a, z), art.edge_id(b, z));
        ensure(arc_is(&g1, az, a, z) && arc_is(&g1, zb, z, b), || {
            format!("no path a→{z}→b")
        })?;
        eulerian_d.extend([az, zb]);
    }
    let g2 = apply_eulerian_reversal(&g1, &eulerian_d)?;

    ensure(is_convenient(&g2, art)?, || "result is not convenient".into())?;
    ensure(g2.out_degrees() == o.out_degrees(), || "out-degrees changed".into())?;
    ensure(is_ell_bounded(&g2, art.ell())?, || "result is not ℓ-bounded".into())?;

    let trace = ConvenientizeTrace {
        z0_plus,
        z0_minus,
        z0_star,
        path_family,
        circuits,
        eulerian_d,
    };
    Ok((g2, trace))
}

/// The vertices `v` with both `a→p0` and `a→q0`. For a convenient,
/// ℓ-bounded, well-balanced orientation this is a vertex cover of `H` of
/// size `d⁺(a) − 8n ≤ k`.
pub fn orientation_to_cover(o: &Orientation, art: &ReductionArtifact) -> Result<VertexSet> {
    require_well_balanced_variant(art)?;
    if !is_convenient(o, art)? {
        return Err(Error::precondition("orientation is not convenient"));
    }
    if !is_ell_bounded(o, art.ell())? {
        return Err(Error::precondition("orientation is not ℓ-bounded"));
    }
    if !check_vfasf(o, art)? {
        return Err(Error::precondition("orientation is not well-balanced"));
    }
    let a = art.hub();
    let cover: VertexSet = art
        .vertex_gadgets()
        .iter()
        .filter(|g| {
            let r = art.root_edges(g.vertex).expect("own gadget");
            arc_is(o, r.a_p, a, g.p[0]) && arc_is(o, r.a_q, a, g.q[0])
        })
        .map(|g| g.vertex)
        .collect();
    let expected = o.out_degree(a) - 8 * art.n();
    ensure(cover.len() == expected, || {
        format!("cover has {} vertices, d+(a) - 8n = {expected}", cover.len())
    })?;
    Ok(cover)
}
