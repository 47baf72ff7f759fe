//! Exhaustive enumeration of orientations.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::balance::BalanceChecker;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MixedGraph, VertexId};
use crate::orientation::Orientation;

pub const MAX_FREE_EDGES: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub total: u64,
    pub matching: u64,
    /// Lowest-bitmask completion satisfying the predicate.
    #[serde(rename = "witness")]
    pub first_witness: Option<Orientation>,
}

struct Completer<'a> {
    template: &'a Orientation,
    free: Vec<(EdgeId, VertexId, VertexId)>,
}

impl Completer<'_> {
    /// Bit `i` orients the `i`-th free edge (ascending id): clear keeps the
    /// stored endpoint order, set reverses it.
    fn complete(&self, mask: u64) -> Result<Orientation> {
        let mut o = self.template.clone();
        for (i, &(e, u, v)) in self.free.iter().enumerate() {
            if mask >> i & 1 == 0 {
                o.orient(e, u, v)?;
            } else {
                o.orient(e, v, u)?;
            }
        }
        Ok(o)
    }
}

fn completer<'a>(template: &'a Orientation, free: Option<&BTreeSet<EdgeId>>, limit: usize) -> Result<Completer<'a>> {
    let g = template.base();
    let free: Vec<_> = match free {
        None => g.edges().collect(),
        Some(set) => set
            .iter()
            .map(|&e| g.edge(e).map(|(u, v)| (e, u, v)).ok_or(Error::UnknownEdge(e)))
            .collect::<Result<_>>()?,
    };
    let limit = limit.min(63);
    if free.len() > limit {
        return Err(Error::TooLarge {
            what: "free edges",
            actual: free.len(),
            limit,
        });
    }
    let c = Completer { template, free };
    c.complete(0)?.check_total()?;
    Ok(c)
}

/// Applies `predicate` to every completion of `template` over `free` (all
/// edges when `None`), counting matches.
pub fn enumerate_orientations<P>(
    template: &Orientation,
    free: Option<&BTreeSet<EdgeId>>,
    predicate: P,
) -> Result<EnumerationReport>
where
    P: Fn(&Orientation) -> Result<bool> + Sync,
{
    enumerate_orientations_with_limit(template, free, predicate, MAX_FREE_EDGES)
}

pub fn enumerate_orientations_with_limit<P>(
    template: &Orientation,
    free: Option<&BTreeSet<EdgeId>>,
    predicate: P,
    limit: usize,
) -> Result<EnumerationReport>
where
    P: Fn(&Orientation) -> Result<bool> + Sync,
{
    let c = completer(template, free, limit)?;
    let total = 1u64 << c.free.len();
    let (matching, first) = (0..total)
        .into_par_iter()
        .map(|m| {
            Ok(if predicate(&c.complete(m)?)? {
                (1, Some(m))
            } else {
                (0, None)
            })
        })
        .try_reduce(
            || (0u64, None),
            |x, y| {
                let first = match (x.1, y.1) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
                Ok((x.0 + y.0, first))
            },
        )?;
    Ok(EnumerationReport {
        total,
        matching,
        first_witness: first.map(|m| c.complete(m)).transpose()?,
    })
}

/// Some best-balanced orientation of `g`, by exhaustive search. Every graph
/// has one, so `None` points at a checker bug.
pub fn nash_williams_witness(g: &MixedGraph) -> Result<Option<Orientation>> {
    let base = Arc::new(g.clone());
    let template = Orientation::new(base.clone())?;
    let c = completer(&template, None, MAX_FREE_EDGES)?;
    let checker = BalanceChecker::new(base);
    let found = (0..1u64 << c.free.len()).into_par_iter().find_first(|&m| {
        c.complete(m)
            .and_then(|o| Ok(checker.has_balanced_degrees(&o)? && checker.is_well_balanced(&o)?))
            .unwrap_or(false)
    });
    found.map(|m| c.complete(m)).transpose()
}
