use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::BlockError;
use crate::field::FiniteField;
use crate::group::{FiniteGroup, GroupMorphism, Limits, Subgroup};

use super::brauer::brauer_hom;
use super::{block_decomposition, subgroup_blocks, Block};

/// The unique block `e` of `G` (index into `group_blocks`) with
/// `f Br_D(e) = f`, where `f` is a block of `H` (given on `H` as a
/// standalone group with `embedding` into `G`) and
/// `D C_G(D) <= H <= N_G(D)`.
pub fn brauer_correspondent(d: &Subgroup, embedding: &GroupMorphism, b: &Block, group_blocks: &[Block]) -> Result<usize, BlockError> {
    let h = embedding.image();
    if !h.is_subgroup_of(&d.normalizer()) || !d.join(&d.centralizer()).is_subgroup_of(&h) {
        return Err(BlockError::Sandwich);
    }
    let f = b.idempotent().embed(embedding);
    let mut hits = Vec::new();
    for (i, e) in group_blocks.iter().enumerate() {
        if &f * &brauer_hom(d, e.idempotent())? == f {
            hits.push(i);
        }
    }
    match hits[..] {
        [i] => Ok(i),
        _ => Err(BlockError::Correspondent(hits.len())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondencePair {
    /// Index among the blocks of `N_G(D)`.
    pub local: usize,
    /// Index among the blocks of `G`.
    pub global: usize,
}

#[derive(Clone, Debug)]
pub struct FirstMainReport {
    pub defect_order: usize,
    pub normalizer_order: usize,
    /// Blocks of `N_G(D)` with defect group `D`.
    pub local_blocks: Vec<usize>,
    /// Blocks of `G` with defect group conjugate to `D`.
    pub global_blocks: Vec<usize>,
    pub pairs: Vec<CorrespondencePair>,
    pub defects_match: bool,
    pub injective: bool,
    pub surjective: bool,
    pub intermediate: Option<IntermediateReport>,
}

impl FirstMainReport {
    pub fn verified(&self) -> bool {
        self.defects_match && self.injective && self.surjective && self.intermediate.as_ref().map_or(true, |i| i.verified())
    }
}

/// The correspondence through an intermediate subgroup `N_G(D) <= L <= G`.
#[derive(Clone, Debug)]
pub struct IntermediateReport {
    pub intermediate_order: usize,
    /// `N_G(D)` against `L`.
    pub lower: Box<FirstMainReport>,
    /// Composite pairs (block of `L`, block of `G`).
    pub composite: Vec<(usize, usize)>,
    pub composite_bijective: bool,
}

impl IntermediateReport {
    pub fn verified(&self) -> bool {
        self.lower.verified() && self.composite_bijective
    }
}

fn with_defect(blocks: &[Block], embedding: Option<&GroupMorphism>, d: &Subgroup, limits: Limits) -> Result<Vec<usize>, BlockError> {
    let mut out = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let mut defect = b.defect_group(limits)?;
        if let Some(m) = embedding {
            defect = m.image_of(&defect);
        }
        if defect.is_conjugate_to(d) {
            out.push(i);
        }
    }
    Ok(out)
}

/// Brauer's first main theorem for one p-subgroup `D`: the correspondence
/// between blocks of `N_G(D)` with defect group `D` and blocks of `G` with
/// defect group `D` is a bijection. With `intermediate`, the composite
/// through `L` is checked as well.
pub fn first_main_check(
    g: &Arc<FiniteGroup>,
    field: &FiniteField,
    d: &Subgroup,
    intermediate: Option<&Subgroup>,
    limits: Limits,
) -> Result<FirstMainReport, BlockError> {
    if !d.is_p_group(field.characteristic()) {
        return Err(BlockError::NotAPGroup(d.order()));
    }
    let normalizer = d.normalizer();
    let (embedding, local) = subgroup_blocks(&normalizer, field)?;
    let global = block_decomposition(g, field)?;
    let local_blocks = with_defect(&local, Some(&embedding), d, limits)?;
    let global_blocks = with_defect(&global, None, d, limits)?;
    let mut pairs = Vec::new();
    for &i in &local_blocks {
        pairs.push(CorrespondencePair { local: i, global: brauer_correspondent(d, &embedding, &local[i], &global)? });
    }
    let hit: BTreeSet<usize> = pairs.iter().map(|p| p.global).collect();
    let defects_match = pairs.iter().all(|p| global_blocks.contains(&p.global));
    let injective = hit.len() == pairs.len();
    let surjective = global_blocks.iter().all(|i| hit.contains(i));

    let intermediate = match intermediate {
        None => None,
        Some(l) => {
            if !normalizer.is_subgroup_of(l) {
                return Err(BlockError::NotASubgroupOf("N_G(D)".into(), "L".into()));
            }
            let l_embedding = l.as_group();
            let ls = l_embedding.source();
            let d_in_l = l_embedding.preimage_of(d);
            let lower = first_main_check(ls, field, &d_in_l, None, limits)?;
            let composite: Vec<(usize, usize)> = lower
                .pairs
                .iter()
                .filter_map(|lp| pairs.iter().find(|p| p.local == lp.local).map(|p| (lp.global, p.global)))
                .collect();
            let ls_hit: BTreeSet<usize> = composite.iter().map(|c| c.0).collect();
            let g_hit: BTreeSet<usize> = composite.iter().map(|c| c.1).collect();
            let composite_bijective = ls_hit.len() == composite.len()
                && g_hit.len() == composite.len()
                && lower.global_blocks.iter().all(|i| ls_hit.contains(i))
                && global_blocks.iter().all(|i| g_hit.contains(i));
            Some(IntermediateReport { intermediate_order: l.order(), lower: Box::new(lower), composite, composite_bijective })
        }
    };

    Ok(FirstMainReport {
        defect_order: d.order(),
        normalizer_order: normalizer.order(),
        local_blocks,
        global_blocks,
        pairs,
        defects_match,
        injective,
        surjective,
        intermediate,
    })
}
