//! Passing between bounded well-balanced orientations of `G` and bounded
//! best-balanced orientations of `G'`.

use crate::balance::{hub_certify_well_balanced, is_ell_bounded, BalanceChecker};
use crate::error::{Error, Result};
use crate::orientation::Orientation;
use crate::reduction::build::{build_ubwbo, ReductionArtifact, Variant};
use crate::reduction::convenient::is_convenient;

fn require_best_balanced_variant(art: &ReductionArtifact) -> Result<()> {
    if art.variant() != Variant::BestBalanced {
        return Err(Error::precondition("expected a best-balanced (UBBBO) artifact"));
    }
    Ok(())
}

/// Extends a convenient, ℓ-bounded, well-balanced orientation `D` of `G` to
/// `G'`: `8n + k − d⁺_D(a)` pendant edges become `a→w` (lowest `w` first),
/// the others `w→a`. The result has `d⁺(a) = 8n + k = d_{G'}(a)/2`.
pub fn lift_orientation(d: &Orientation, art: &ReductionArtifact) -> Result<Orientation> {
    require_best_balanced_variant(art)?;
    let core = build_ubwbo(art.source())?;
    if !is_convenient(d, &core)? {
        return Err(Error::precondition("orientation is not convenient"));
    }
    if !is_ell_bounded(d, core.ell())? {
        return Err(Error::precondition("orientation is not ℓ-bounded"));
    }
    let a = art.hub();
    if !hub_certify_well_balanced(d, a)? {
        return Err(Error::precondition("orientation is not well-balanced"));
    }
    let (n, k) = (art.n(), art.k());
    let out_a = d.out_degree(a);
    if !(8 * n..=8 * n + k).contains(&out_a) {
        return Err(Error::precondition(format!(
            "d+(a) = {out_a} lies outside [{}, {}]",
            8 * n,
            8 * n + k
        )));
    }
    let outward = 8 * n + k - out_a;
    let mut lifted = Orientation::new(art.graph().clone())?;
    for (e, t, h) in d.directions() {
        lifted.orient(e, t, h)?;
    }
    let mut pendants = art.pendants().to_vec();
    pendants.sort();
    for (i, &w) in pendants.iter().enumerate() {
        let e = art.edge_id(a, w);
        if i < outward {
            lifted.orient(e, a, w)?;
        } else {
            lifted.orient(e, w, a)?;
        }
    }
    lifted.check_total()?;
    Ok(lifted)
}

/// Restricts an ℓ'-bounded best-balanced orientation of `G'` to `G`. The
/// result is ℓ-bounded and well-balanced.
pub fn restrict_orientation(d: &Orientation, art: &ReductionArtifact) -> Result<Orientation> {
    require_best_balanced_variant(art)?;
    if **d.base() != **art.graph() {
        return Err(Error::GraphMismatch);
    }
    d.check_total()?;
    if !is_ell_bounded(d, art.ell())? {
        return Err(Error::precondition("orientation is not ℓ'-bounded"));
    }
    if !BalanceChecker::new(art.graph().clone()).has_balanced_degrees(d)? {
        return Err(Error::precondition("out-degrees are not balanced"));
    }
    // exact on G' as well: λ_{G'}(s,a) = d_{G'}(s) for every s ≠ a
    if !hub_certify_well_balanced(d, art.hub())? {
        return Err(Error::precondition("orientation is not well-balanced"));
    }
    let restricted = d.restrict(&art.core_vertices())?;
    if !is_ell_bounded(&restricted, &art.core_ell())? {
        return Err(Error::internal("restriction exceeds ℓ(a) = 8n + k"));
    }
    Ok(restricted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::{is_best_balanced, is_well_balanced};
    use crate::graph::VertexId;
    use crate::oracle::generate::theta;
    use crate::reduction::build::build_ubbbo;
    use crate::reduction::instance::CvcInstance;
    use crate::reduction::transform::cover_to_orientation;

    fn lifted(k: usize) -> (ReductionArtifact, Orientation, Orientation) {
        let inst = CvcInstance::new(theta(), k).unwrap();
        let wb = build_ubwbo(&inst).unwrap();
        let bb = build_ubbbo(&inst).unwrap();
        let d = cover_to_orientation(&wb, &[VertexId(0)].into()).unwrap();
        let up = lift_orientation(&d, &bb).unwrap();
        (bb, d, up)
    }

    #[test]
    fn tight_budget_flips_no_pendant_outward() {
        let (bb, _, up) = lifted(1);
        assert_eq!(up.out_degree(bb.hub()), 9);
        for &w in bb.pendants() {
            assert_eq!(up.direction(bb.edge_id(bb.hub(), w)), Some((w, bb.hub())));
        }
    }

    #[test]
    fn slack_budget_flips_lowest_pendant() {
        let (bb, _, up) = lifted(2);
        assert_eq!(bb.pendants().len(), 4);
        assert_eq!(up.out_degree(bb.hub()), 10);
        let w0 = bb.pendants()[0];
        assert_eq!(up.direction(bb.edge_id(bb.hub(), w0)), Some((bb.hub(), w0)));
        assert!(is_best_balanced(&up).unwrap());
        assert!(is_ell_bounded(&up, bb.ell()).unwrap());
    }

    #[test]
    fn restrict_undoes_lift() {
        for k in 1..=2 {
            let (bb, d, up) = lifted(k);
            let down = restrict_orientation(&up, &bb).unwrap();
            assert_eq!(down, d);
            assert!(is_well_balanced(&down).unwrap());
        }
    }

    #[test]
    fn wrong_variant_rejected() {
        let inst = CvcInstance::new(theta(), 1).unwrap();
        let wb = build_ubwbo(&inst).unwrap();
        let d = cover_to_orientation(&wb, &[VertexId(0)].into()).unwrap();
        assert!(matches!(lift_orientation(&d, &wb), Err(Error::Precondition(_))));
    }

    #[test]
    fn over_budget_orientation_rejected() {
        // both vertices full: d+(a) = 10 > 8n + k = 9
        let inst = CvcInstance::new(theta(), 1).unwrap();
        let wb = build_ubwbo(&inst).unwrap();
        let bb = build_ubbbo(&inst).unwrap();
        let d = cover_to_orientation(&wb, &[VertexId(0), VertexId(1)].into()).unwrap();
        assert!(matches!(lift_orientation(&d, &bb), Err(Error::Precondition(_))));
    }
}
