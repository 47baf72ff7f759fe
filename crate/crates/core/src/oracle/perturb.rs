//! Random directed circuits and their reversal.

use std::collections::{BTreeMap, BTreeSet};

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::balance::apply_eulerian_reversal;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId};
use crate::orientation::Orientation;

/// A directed circuit of `o`, as arc ids in walk order. A seed-chosen arc
/// inside a strong component starts a random walk that stays in the
/// component until a vertex repeats; the closed part of the walk is
/// returned.
pub fn find_circuit(o: &Orientation, seed: u64) -> Result<Vec<EdgeId>> {
    let d = o.to_digraph()?;
    let mut pg = DiGraph::<VertexId, EdgeId>::new();
    let nodes: BTreeMap<VertexId, _> = d.vertices().map(|v| (v, pg.add_node(v))).collect();
    for (e, t, h) in d.arcs() {
        pg.add_edge(nodes[&t], nodes[&h], e);
    }
    let mut component = BTreeMap::new();
    for (i, scc) in tarjan_scc(&pg).into_iter().enumerate() {
        for n in scc {
            component.insert(pg[n], i);
        }
    }
    // an arc lies on a circuit iff both ends share a strong component
    let mut out: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>> = BTreeMap::new();
    for (e, t, h) in d.arcs() {
        if component[&t] == component[&h] {
            out.entry(t).or_default().push((e, h));
        }
    }
    let cyclic: Vec<(EdgeId, VertexId, VertexId)> = d.arcs().filter(|(_, t, h)| component[t] == component[h]).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let &(e0, t0, h0) = cyclic.choose(&mut rng).ok_or(Error::Acyclic)?;

    let mut position = BTreeMap::from([(t0, 0usize)]);
    let mut walk = vec![e0];
    let mut at = h0;
    while !position.contains_key(&at) {
        position.insert(at, walk.len());
        let &(e, next) = out[&at].choose(&mut rng).expect("vertex inside a strong component");
        walk.push(e);
        at = next;
    }
    Ok(walk.split_off(position[&at]))
}

/// Reverses one seed-chosen directed circuit of `o`.
pub fn perturb_by_eulerian(o: &Orientation, seed: u64) -> Result<Orientation> {
    let circuit: BTreeSet<EdgeId> = find_circuit(o, seed)?.into_iter().collect();
    apply_eulerian_reversal(o, &circuit)
}
