//! Exhaustive decision procedures over the convenient orientations of the
//! constructed graph.

use rayon::prelude::*;
use serde::Serialize;

use crate::balance::{hub_certify_well_balanced, is_ell_bounded, BalanceChecker};
use crate::error::{Error, Result};
use crate::orientation::Orientation;
use crate::reduction::best::lift_orientation;
use crate::reduction::build::{build_ubbbo, build_ubwbo, ReductionArtifact};
use crate::reduction::convenient::{build_partial_f, check_vfasf, convenient_from_mask, RootState};
use crate::reduction::instance::CvcInstance;

/// Largest `n` scanned by default: `2^{6n}` masks.
pub const DEFAULT_MAX_N: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub positive: bool,
    /// Lowest-mask convenient orientation that is bounded and well-balanced
    /// (lifted to `G'` by [`decide_ubbbo`]).
    pub witness: Option<Orientation>,
}

/// Bit positions of `(ap0, aq0, p0q0)` for every vertex gadget.
fn root_bits(art: &ReductionArtifact) -> Vec<[usize; 3]> {
    let order = art.root_free_edges();
    let pos = |e| order.binary_search(&e).expect("root edge");
    art.vertex_gadgets()
        .iter()
        .map(|g| {
            let r = art.root_edges(g.vertex).expect("own gadget");
            [pos(r.a_p), pos(r.a_q), pos(r.p_q)]
        })
        .collect()
}

/// Local evaluation of one completion of `F`: every gadget root is reached
/// from `a`, the full vertices cover `H`, and `d⁺(a) ≤ ℓ(a)`.
fn mask_is_positive(art: &ReductionArtifact, bits: &[[usize; 3]], ends: &[(usize, usize)], mask: u64) -> bool {
    // a clear bit keeps the stored direction a→p0, a→q0, p0→q0
    let clear = |i: usize| mask >> i & 1 == 0;
    let mut full = Vec::with_capacity(bits.len());
    let mut out_a = 6 * art.n();
    for b in bits {
        let s = RootState {
            a_to_p: clear(b[0]),
            a_to_q: clear(b[1]),
            p_to_q: clear(b[2]),
        };
        if !s.rooted() {
            return false;
        }
        out_a += s.hub_out();
        full.push(s.full());
    }
    out_a <= 8 * art.n() + art.k() && ends.iter().all(|&(u, v)| full[u] || full[v])
}

/// Decides the bounded well-balanced orientation problem on the graph built
/// from `inst`, with the default size guard.
pub fn decide_ubwbo(inst: &CvcInstance) -> Result<Decision> {
    decide_ubwbo_with_limit(inst, DEFAULT_MAX_N)
}

pub fn decide_ubwbo_with_limit(inst: &CvcInstance, max_n: usize) -> Result<Decision> {
    // masks are u64
    let limit = max_n.min(10);
    if inst.n() > limit {
        return Err(Error::TooLarge {
            what: "n",
            actual: inst.n(),
            limit,
        });
    }
    let art = build_ubwbo(inst)?;
    let bits = root_bits(&art);
    let index_of = |v| {
        art.vertex_gadgets()
            .binary_search_by_key(&v, |g| g.vertex)
            .expect("vertex of H")
    };
    let ends: Vec<(usize, usize)> = art
        .edge_gadgets()
        .iter()
        .map(|g| (index_of(g.ends.0), index_of(g.ends.1)))
        .collect();
    let found = (0..1u64 << (6 * art.n()))
        .into_par_iter()
        .find_first(|&m| mask_is_positive(&art, &bits, &ends, m));
    let Some(mask) = found else {
        return Ok(Decision {
            positive: false,
            witness: None,
        });
    };
    let witness = convenient_from_mask(&art, &build_partial_f(&art)?, mask)?;
    if !check_vfasf(&witness, &art)? || !is_ell_bounded(&witness, art.ell())? {
        return Err(Error::internal(format!("mask {mask} passed the local test only")));
    }
    Ok(Decision {
        positive: true,
        witness: Some(witness),
    })
}

/// Decides the bounded best-balanced problem on `G'` by lifting the
/// well-balanced witness.
pub fn decide_ubbbo(inst: &CvcInstance, max_n: usize) -> Result<Decision> {
    let wb = decide_ubwbo_with_limit(inst, max_n)?;
    let Some(d) = wb.witness else {
        return Ok(wb);
    };
    let art = build_ubbbo(inst)?;
    let lifted = lift_orientation(&d, &art)?;
    let ok = is_ell_bounded(&lifted, art.ell())?
        && BalanceChecker::new(art.graph().clone()).has_balanced_degrees(&lifted)?
        && hub_certify_well_balanced(&lifted, art.hub())?;
    if !ok {
        return Err(Error::internal("lifted witness is not bounded and best-balanced"));
    }
    Ok(Decision {
        positive: true,
        witness: Some(lifted),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::generate::{complete4, theta};

    fn local_agrees_with_root_check(inst: &CvcInstance) {
        let art = build_ubwbo(inst).unwrap();
        let f = build_partial_f(&art).unwrap();
        let bits = root_bits(&art);
        let idx = |v| art.vertex_gadgets().iter().position(|g| g.vertex == v).unwrap();
        let ends: Vec<_> = art
            .edge_gadgets()
            .iter()
            .map(|g| (idx(g.ends.0), idx(g.ends.1)))
            .collect();
        for mask in 0..1u64 << (6 * art.n()) {
            let o = convenient_from_mask(&art, &f, mask).unwrap();
            let slow = check_vfasf(&o, &art).unwrap() && is_ell_bounded(&o, art.ell()).unwrap();
            assert_eq!(mask_is_positive(&art, &bits, &ends, mask), slow, "mask {mask}");
        }
    }

    #[test]
    fn local_test_matches_root_check_n1() {
        for k in 0..=2 {
            local_agrees_with_root_check(&CvcInstance::new(theta(), k).unwrap());
        }
    }

    #[test]
    fn local_test_matches_root_check_n2() {
        local_agrees_with_root_check(&CvcInstance::new(complete4(), 3).unwrap());
    }

    #[test]
    fn theta_decisions() {
        let yes = decide_ubwbo(&CvcInstance::new(theta(), 1).unwrap()).unwrap();
        assert!(yes.positive);
        assert!(yes.witness.is_some());
        assert!(!decide_ubwbo(&CvcInstance::new(theta(), 0).unwrap()).unwrap().positive);
    }

    #[test]
    fn k4_decisions() {
        assert!(
            !decide_ubwbo(&CvcInstance::new(complete4(), 2).unwrap())
                .unwrap()
                .positive
        );
        assert!(
            decide_ubwbo(&CvcInstance::new(complete4(), 3).unwrap())
                .unwrap()
                .positive
        );
    }

    #[test]
    fn best_balanced_decisions_follow() {
        for k in 0..=2 {
            let inst = CvcInstance::new(theta(), k).unwrap();
            let bb = decide_ubbbo(&inst, DEFAULT_MAX_N).unwrap();
            assert_eq!(bb.positive, k >= 1);
            if let Some(w) = bb.witness {
                let hub = build_ubbbo(&inst).unwrap().hub();
                assert_eq!(w.out_degree(hub), 8 + k);
            }
        }
    }

    #[test]
    fn guard() {
        let inst = CvcInstance::new(complete4(), 3).unwrap();
        assert!(matches!(decide_ubwbo_with_limit(&inst, 1), Err(Error::TooLarge { .. })));
    }
}
