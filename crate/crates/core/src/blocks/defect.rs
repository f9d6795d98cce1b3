use std::sync::Arc;

use crate::error::BlockError;
use crate::field::FiniteField;
use crate::group::{FiniteGroup, Limits, Subgroup};

use super::brauer::brauer_hom;
use super::trace::{trace_membership, TraceKind};
use super::{block_decomposition, Block};

pub(super) fn compute_defect_group(block: &Block, limits: Limits) -> Result<Subgroup, BlockError> {
    let g = block.group();
    let p = block.field().characteristic();
    let e = block.idempotent();
    let mut best: Vec<Subgroup> = Vec::new();
    for d in g.p_subgroups_up_to_conjugacy(p, limits)? {
        if brauer_hom(&d, e)?.is_zero() {
            continue;
        }
        match best.first().map(|b| b.order()) {
            Some(o) if o > d.order() => {}
            Some(o) if o == d.order() => best.push(d),
            _ => best = vec![d],
        }
    }
    match best.len() {
        1 => Ok(best.pop().expect("one candidate")),
        0 => Err(BlockError::AmbiguousDefect(Vec::new())),
        _ => Err(BlockError::AmbiguousDefect(best.iter().map(|b| b.order()).collect())),
    }
}

/// A defect group: among the p-subgroup classes, the one of largest order
/// with `Br_D(e) != 0`. Non-conjugate maximal candidates are an error.
pub fn defect_group(block: &Block, limits: Limits) -> Result<Subgroup, BlockError> {
    block.defect_group(limits)
}

/// `g R g^-1 <= Q` for some `g`.
fn is_subconjugate(r: &Subgroup, q: &Subgroup) -> bool {
    if q.order() % r.order() != 0 {
        return false;
    }
    let g = r.parent();
    (0..g.order()).any(|x| r.elements().iter().all(|&y| q.contains(g.conj(x, y))))
}

/// Classes in `set` with no other member properly subconjugate to them.
fn minimal_classes(set: &[Subgroup]) -> Vec<Subgroup> {
    set.iter()
        .filter(|q| !set.iter().any(|r| r.order() < q.order() && is_subconjugate(r, q)))
        .cloned()
        .collect()
}

/// The defect group as seen by each characterization.
#[derive(Clone, Debug)]
pub struct DefectCrosscheck {
    /// Defect group from maximality of `Br_D(e) != 0`.
    pub defect: Subgroup,
    /// Minimal classes `Q` with `e` in `Tr_Q^G(kG^Q)`.
    pub trace_minimal: Vec<Subgroup>,
    /// Minimal classes `Q` with `e` in `Tr~_Q^G(kG^Q)`.
    pub modified_trace_minimal: Vec<Subgroup>,
    /// `e` in `Tr_D^G(kG^D)` and `Br_D(e) != 0`.
    pub trace_and_brauer: bool,
    /// Every class with `Br_Q(e) != 0` is subconjugate to `D`.
    pub brauer_maximal: bool,
}

impl DefectCrosscheck {
    pub fn trace_agrees(&self) -> bool {
        matches!(&self.trace_minimal[..], [q] if q.is_conjugate_to(&self.defect))
    }

    pub fn modified_trace_agrees(&self) -> bool {
        matches!(&self.modified_trace_minimal[..], [q] if q.is_conjugate_to(&self.defect))
    }

    pub fn all_agree(&self) -> bool {
        self.trace_agrees() && self.modified_trace_agrees() && self.trace_and_brauer && self.brauer_maximal
    }
}

pub fn defect_crosscheck(block: &Block, limits: Limits) -> Result<DefectCrosscheck, BlockError> {
    let g = block.group();
    let p = block.field().characteristic();
    let e = block.idempotent();
    let whole = Subgroup::whole(g);
    let defect = block.defect_group(limits)?;
    let classes = g.p_subgroups_up_to_conjugacy(p, limits)?;
    let mut plain = Vec::new();
    let mut modified = Vec::new();
    let mut brauer_nonzero = Vec::new();
    for q in &classes {
        if trace_membership(e, q, &whole, TraceKind::Plain)? {
            plain.push(q.clone());
        }
        if trace_membership(e, q, &whole, TraceKind::Modified)? {
            modified.push(q.clone());
        }
        if !brauer_hom(q, e)?.is_zero() {
            brauer_nonzero.push(q.clone());
        }
    }
    let trace_and_brauer = trace_membership(e, &defect, &whole, TraceKind::Plain)? && !brauer_hom(&defect, e)?.is_zero();
    let brauer_maximal = brauer_nonzero.iter().all(|q| is_subconjugate(q, &defect));
    Ok(DefectCrosscheck {
        trace_minimal: minimal_classes(&plain),
        modified_trace_minimal: minimal_classes(&modified),
        trace_and_brauer,
        brauer_maximal,
        defect,
    })
}

/// An element `g` of `C_G(D)` with `D = P cap gPg^-1`, `P` the fixed
/// Sylow subgroup containing the defect group.
pub fn defect_sylow_intersection_check(block: &Block, limits: Limits) -> Result<Option<usize>, BlockError> {
    let g = block.group();
    let d = block.defect_group(limits)?;
    let sylow = g.sylow(block.field().characteristic());
    // Class representatives are chosen inside the fixed Sylow subgroup.
    let sylow = if d.is_subgroup_of(&sylow) {
        sylow
    } else {
        let x = (0..g.order()).find(|&x| d.is_subgroup_of(&sylow.conjugate(x))).expect("D lies in some Sylow");
        sylow.conjugate(x)
    };
    Ok(d.centralizer().elements().iter().copied().find(|&x| sylow.intersection(&sylow.conjugate(x)) == d))
}

/// Whether `D = O_p(N_G(D))`.
pub fn defect_normalizer_check(block: &Block, limits: Limits) -> Result<bool, BlockError> {
    let d = block.defect_group(limits)?;
    let embedding = d.normalizer().as_group();
    let core = embedding.source().largest_normal_p_subgroup(block.field().characteristic());
    Ok(embedding.image_of(&core) == d)
}

/// For `D` normal in `G`: every block idempotent is supported on `C_G(D)`.
pub fn central_idempotent_support_check(g: &Arc<FiniteGroup>, field: &FiniteField, d: &Subgroup) -> Result<bool, BlockError> {
    if !d.is_normal() {
        return Err(BlockError::NotNormal);
    }
    let c = d.centralizer();
    Ok(block_decomposition(g, field)?.iter().all(|b| b.idempotent().support().iter().all(|&x| c.contains(x))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named_group;

    fn setup(name: &str, p: u32) -> (Arc<FiniteGroup>, FiniteField, Vec<Block>) {
        let g = named_group(&name.parse().unwrap(), Limits::default()).unwrap();
        let f = FiniteField::new(p, 1).unwrap();
        let b = block_decomposition(&g, &f).unwrap();
        (g, f, b)
    }

    #[test]
    fn defect_groups_of_s3() {
        let (_, _, b) = setup("S3", 2);
        assert_eq!(defect_group(&b[0], Limits::default()).unwrap().order(), 2);
        assert_eq!(defect_group(&b[1], Limits::default()).unwrap().order(), 1);
        let (_, _, b) = setup("S3", 3);
        assert_eq!(defect_group(&b[0], Limits::default()).unwrap().order(), 3);
    }

    #[test]
    fn p_group_principal_block_has_full_defect() {
        let (g, _, b) = setup("D4", 2);
        assert!(defect_group(&b[0], Limits::default()).unwrap().is_whole());
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn crosscheck_agrees_on_s3() {
        for p in [2, 3, 5] {
            let (_, _, blocks) = setup("S3", p);
            for b in &blocks {
                let r = defect_crosscheck(b, Limits::default()).unwrap();
                assert!(r.all_agree(), "p={p}: {r:?}");
                assert!(defect_sylow_intersection_check(b, Limits::default()).unwrap().is_some());
                assert!(defect_normalizer_check(b, Limits::default()).unwrap());
            }
        }
    }

    #[test]
    fn a4_idempotents_live_on_centralizer_of_v4() {
        let (g, f, _) = setup("A4", 2);
        let v4 = g.sylow(2);
        assert_eq!(v4.order(), 4);
        assert!(central_idempotent_support_check(&g, &f, &v4).unwrap());
        assert!(central_idempotent_support_check(&g, &f, &Subgroup::trivial(&g)).unwrap());
    }
}
