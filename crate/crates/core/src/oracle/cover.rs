//! Exact vertex cover by subset enumeration.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{MixedGraph, VertexId, VertexSet};

pub const MAX_COVER_VERTICES: usize = 24;

pub fn is_vertex_cover(h: &MixedGraph, u: &VertexSet) -> bool {
    h.edges().all(|(_, x, y)| u.contains(&x) || u.contains(&y))
}

/// Vertex list and one bitmask per edge.
fn edge_masks(h: &MixedGraph) -> Result<(Vec<VertexId>, Vec<u32>)> {
    let nv = h.vertex_count();
    if nv > MAX_COVER_VERTICES {
        return Err(Error::TooLarge {
            what: "vertices",
            actual: nv,
            limit: MAX_COVER_VERTICES,
        });
    }
    let vs: Vec<VertexId> = h.vertices().collect();
    let bit = |v: VertexId| 1u32 << vs.binary_search(&v).expect("own vertex");
    let masks = h.edges().map(|(_, x, y)| bit(x) | bit(y)).collect();
    Ok((vs, masks))
}

fn set_of(vs: &[VertexId], mask: u32) -> VertexSet {
    vs.iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &v)| v)
        .collect()
}

/// Size of a minimum vertex cover and the lowest-bitmask cover of that size.
pub fn min_vertex_cover(h: &MixedGraph) -> Result<(usize, VertexSet)> {
    let (vs, masks) = edge_masks(h)?;
    let best = (0..1u32 << vs.len())
        .into_par_iter()
        .filter(|&m| masks.iter().all(|&e| e & m != 0))
        .min_by_key(|&m| (m.count_ones(), m))
        .expect("the whole vertex set is a cover");
    Ok((best.count_ones() as usize, set_of(&vs, best)))
}

/// Every vertex cover, in ascending bitmask order.
pub fn all_vertex_covers(h: &MixedGraph) -> Result<Vec<VertexSet>> {
    let (vs, masks) = edge_masks(h)?;
    Ok((0..1u32 << vs.len())
        .filter(|&m| masks.iter().all(|&e| e & m != 0))
        .map(|m| set_of(&vs, m))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;
    use crate::oracle::generate::{complete4, k33, prism, theta};

    #[test]
    fn known_sizes() {
        assert_eq!(min_vertex_cover(&theta()).unwrap(), (1, vset([0])));
        assert_eq!(min_vertex_cover(&complete4()).unwrap().0, 3);
        assert_eq!(min_vertex_cover(&k33()).unwrap().0, 3);
        assert_eq!(min_vertex_cover(&prism()).unwrap().0, 4);
    }

    #[test]
    fn witnesses_cover() {
        for g in [theta(), complete4(), k33(), prism()] {
            let (size, u) = min_vertex_cover(&g).unwrap();
            assert_eq!(u.len(), size);
            assert!(is_vertex_cover(&g, &u));
        }
    }

    #[test]
    fn cover_counts() {
        // theta: any nonempty subset; K4: any set missing at most one vertex
        assert_eq!(all_vertex_covers(&theta()).unwrap().len(), 3);
        assert_eq!(all_vertex_covers(&complete4()).unwrap().len(), 5);
    }

    #[test]
    fn guard() {
        let big = MixedGraph::with_vertices(25);
        assert!(matches!(min_vertex_cover(&big), Err(Error::TooLarge { .. })));
    }
}
