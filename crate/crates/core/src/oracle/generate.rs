//! Small cubic multigraphs.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{MixedGraph, VertexId};

const ATTEMPTS: usize = 1000;

fn from_pairs(nv: usize, pairs: &[(usize, usize)]) -> MixedGraph {
    let mut g = MixedGraph::with_vertices(nv);
    for &(u, v) in pairs {
        g.add_edge(VertexId(u), VertexId(v)).expect("valid endpoints");
    }
    g
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> MixedGraph {
    from_pairs(2, &[(0, 1), (0, 1), (0, 1)])
}

pub fn complete4() -> MixedGraph {
    from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// `K_{3,3}` with sides `{0,1,2}` and `{3,4,5}`.
pub fn k33() -> MixedGraph {
    let pairs: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    from_pairs(6, &pairs)
}

/// Triangles `0,1,2` and `3,4,5` joined by the rungs `i, i+3`.
pub fn prism() -> MixedGraph {
    from_pairs(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
}

fn connected(nv: usize, pairs: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); nv];
    for &(u, v) in pairs {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; nv];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Connected loopless cubic multigraph on `2n` vertices: the union of three
/// random perfect matchings, redrawn until connected. Deterministic per
/// `(n, seed)`.
pub fn random_cubic_multigraph(n: usize, seed: u64) -> Result<MixedGraph> {
    if n == 0 {
        return Err(Error::Generation("n must be at least 1".into()));
    }
    let nv = 2 * n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..nv).collect();
    for _ in 0..ATTEMPTS {
        let mut pairs = Vec::with_capacity(3 * n);
        for _ in 0..3 {
            order.shuffle(&mut rng);
            pairs.extend(order.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))));
        }
        if connected(nv, &pairs) {
            pairs.sort();
            return Ok(from_pairs(nv, &pairs));
        }
    }
    Err(Error::Generation(format!(
        "no connected cubic multigraph after {ATTEMPTS} draws (n={n}, seed={seed})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::lambda_undirected;

    fn assert_cubic(g: &MixedGraph) {
        for v in g.vertices() {
            assert_eq!(g.degree(v).unwrap(), 3);
        }
    }

    #[test]
    fn fixed_graphs_are_cubic() {
        for g in [theta(), complete4(), k33(), prism()] {
            assert_cubic(&g);
            assert_eq!(g.edge_count() * 2, g.vertex_count() * 3);
        }
    }

    #[test]
    fn n1_is_theta() {
        for seed in 0..20 {
            assert_eq!(random_cubic_multigraph(1, seed).unwrap(), theta());
        }
    }

    #[test]
    fn random_graphs_are_cubic_and_connected() {
        for n in 2..=4 {
            for seed in 0..100 {
                let g = random_cubic_multigraph(n, seed).unwrap();
                assert_eq!(g.vertex_count(), 2 * n);
                assert_eq!(g.edge_count(), 3 * n);
                assert_cubic(&g);
                for v in g.vertices().skip(1) {
                    assert!(lambda_undirected(&g, VertexId(0), v).unwrap() >= 1);
                }
            }
        }
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(
            random_cubic_multigraph(5, 9).unwrap(),
            random_cubic_multigraph(5, 9).unwrap()
        );
        assert!(matches!(random_cubic_multigraph(0, 1), Err(Error::Generation(_))));
    }
}
