//! Well-balanced, best-balanced and ℓ-bounded predicates on orientations,
//! and eulerian reversals.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::connectivity::Network;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MixedGraph, VertexId};
use crate::orientation::Orientation;

/// Upper bound ℓ(v) on the out-degree of each vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "BoundDoc", into = "BoundDoc")]
pub struct BoundFn {
    bounds: BTreeMap<VertexId, usize>,
}

#[derive(Serialize, Deserialize)]
struct BoundDoc {
    bounds: Vec<(VertexId, usize)>,
}

impl From<BoundDoc> for BoundFn {
    fn from(doc: BoundDoc) -> Self {
        BoundFn {
            bounds: doc.bounds.into_iter().collect(),
        }
    }
}

impl From<BoundFn> for BoundDoc {
    fn from(b: BoundFn) -> Self {
        BoundDoc {
            bounds: b.bounds.into_iter().collect(),
        }
    }
}

impl BoundFn {
    pub fn new() -> Self {
        Self::default()
    }

    /// ℓ(v) = d_G(v) everywhere.
    pub fn degrees(g: &MixedGraph) -> Self {
        BoundFn {
            bounds: g.vertices().map(|v| (v, g.degree(v).expect("own vertex"))).collect(),
        }
    }

    pub fn constant(g: &MixedGraph, c: usize) -> Self {
        BoundFn {
            bounds: g.vertices().map(|v| (v, c)).collect(),
        }
    }

    pub fn set(&mut self, v: VertexId, bound: usize) {
        self.bounds.insert(v, bound);
    }

    pub fn get(&self, v: VertexId) -> Option<usize> {
        self.bounds.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, usize)> + '_ {
        self.bounds.iter().map(|(&v, &b)| (v, b))
    }
}

fn half_floor(x: usize) -> usize {
    x / 2
}

fn half_ceil(x: usize) -> usize {
    x.div_ceil(2)
}

/// Precomputed ⌊λ_G(u,v)/2⌋ for every pair of a fixed graph, so that many
/// orientations of the same graph can be checked without recomputing the
/// undirected connectivities.
#[derive(Clone, Debug)]
pub struct BalanceChecker {
    graph: Arc<MixedGraph>,
    degrees: Vec<usize>,
    // targets[i][j] = ⌊λ_G(i,j)/2⌋, symmetric
    targets: Vec<Vec<usize>>,
}

impl BalanceChecker {
    pub fn new(graph: Arc<MixedGraph>) -> Self {
        let net = Network::bidirected(&graph);
        let ids: Vec<VertexId> = graph.vertices().collect();
        let n = ids.len();
        // λ_G is symmetric: one flow per unordered pair
        let upper: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|i| {
                (i + 1..n)
                    .map(|j| half_floor(net.lambda(ids[i], ids[j]).expect("distinct vertices")))
                    .collect()
            })
            .collect();
        let mut targets = vec![vec![0; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let t = upper[i][j - i - 1];
                targets[i][j] = t;
                targets[j][i] = t;
            }
        }
        let degrees = ids.iter().map(|&v| graph.degree(v).expect("own vertex")).collect();
        BalanceChecker {
            graph,
            degrees,
            targets,
        }
    }

    pub fn graph(&self) -> &Arc<MixedGraph> {
        &self.graph
    }

    fn check_same_graph(&self, o: &Orientation) -> Result<()> {
        if Arc::ptr_eq(o.base(), &self.graph) || **o.base() == *self.graph {
            Ok(())
        } else {
            Err(Error::GraphMismatch)
        }
    }

    /// λ_D(u,v) ≥ ⌊λ_G(u,v)/2⌋ for every ordered pair.
    ///
    /// Pairs with target 1 are settled by reachability from `u`; larger
    /// targets run a flow that stops as soon as the target is met.
    pub fn is_well_balanced(&self, o: &Orientation) -> Result<bool> {
        self.check_same_graph(o)?;
        o.check_total()?;
        let net = Network::from_orientation(o)?;
        let ids = net.vertex_ids();
        let n = ids.len();
        Ok((0..n).into_par_iter().all(|i| {
            let row = &self.targets[i];
            if row.iter().all(|&t| t == 0) {
                return true;
            }
            let reach = net.reach_mask(i);
            (0..n).all(|j| match row[j] {
                0 => true,
                1 => reach[j],
                t => reach[j] && net.lambda_at_least(ids[i], ids[j], t).expect("distinct vertices"),
            })
        }))
    }

    pub fn has_balanced_degrees(&self, o: &Orientation) -> Result<bool> {
        self.check_same_graph(o)?;
        o.check_total()?;
        let out = o.out_degrees();
        Ok(out
            .values()
            .zip(&self.degrees)
            .all(|(&k, &d)| k == half_floor(d) || k == half_ceil(d)))
    }

    pub fn is_best_balanced(&self, o: &Orientation) -> Result<bool> {
        Ok(self.has_balanced_degrees(o)? && self.is_well_balanced(o)?)
    }
}

pub fn is_well_balanced(o: &Orientation) -> Result<bool> {
    o.check_total()?;
    BalanceChecker::new(o.base().clone()).is_well_balanced(o)
}

/// Well-balanced, and every out-degree is ⌊d/2⌋ or ⌈d/2⌉.
pub fn is_best_balanced(o: &Orientation) -> Result<bool> {
    o.check_total()?;
    let checker = BalanceChecker::new(o.base().clone());
    checker.is_best_balanced(o)
}

/// d⁺(v) ≤ ℓ(v) for every vertex. Unoriented edges count for neither end.
pub fn is_ell_bounded(o: &Orientation, ell: &BoundFn) -> Result<bool> {
    let mut bounded = true;
    for (v, k) in o.out_degrees() {
        let bound = ell.get(v).ok_or(Error::MissingBound(v))?;
        bounded &= k <= bound;
    }
    Ok(bounded)
}

/// Checks λ_D(a,s) ≥ ⌊d_G(s)/2⌋ and λ_D(s,a) ≥ ⌊d_G(s)/2⌋ for all s ≠ a.
///
/// A positive answer implies the orientation is well-balanced. On graphs
/// where λ_G(s,a) = d_G(s) for all s ≠ a the two predicates coincide.
pub fn hub_certify_well_balanced(o: &Orientation, hub: VertexId) -> Result<bool> {
    o.check_total()?;
    let g = o.base();
    if !g.contains_vertex(hub) {
        return Err(Error::UnknownVertex(hub));
    }
    let net = Network::from_orientation(o)?;
    let others: Vec<VertexId> = g.vertices().filter(|&s| s != hub).collect();
    Ok(others.par_iter().all(|&s| {
        let need = half_floor(g.degree(s).expect("own vertex"));
        need == 0
            || (net.lambda_at_least(hub, s, need).expect("distinct vertices")
                && net.lambda_at_least(s, hub, need).expect("distinct vertices"))
    }))
}

/// Reverses the arcs in `set`, which must form an eulerian sub-digraph.
/// Degrees and every λ_D value are unchanged by such a reversal.
pub fn apply_eulerian_reversal(o: &Orientation, set: &BTreeSet<EdgeId>) -> Result<Orientation> {
    o.check_total()?;
    let mut sub = MixedGraph::new();
    for v in o.base().vertices() {
        sub.insert_vertex(v)?;
    }
    for &e in set {
        let (t, h) = o.direction(e).ok_or(Error::UnknownEdge(e))?;
        sub.insert_arc(e, t, h)?;
    }
    if let Some(v) = sub.eulerian_violation() {
        return Err(Error::NotEulerian(v));
    }
    o.reversed(set)
}
