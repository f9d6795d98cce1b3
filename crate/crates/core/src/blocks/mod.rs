//! Blocks of `kG`, trace maps, the Brauer homomorphism, defect groups and
//! the Brauer correspondence.

mod brauer;
mod correspondence;
mod defect;
mod trace;

use std::cmp::Ordering;
use std::sync::{Arc, OnceLock};

pub use brauer::{brauer_hom, brauer_kernel_check, brauer_multiplicativity_check, diagram_commutation_check, BrauerKernelReport, DiagramReport};
pub use correspondence::{brauer_correspondent, first_main_check, CorrespondencePair, FirstMainReport, IntermediateReport};
pub use defect::{
    central_idempotent_support_check, defect_crosscheck, defect_group, defect_normalizer_check, defect_sylow_intersection_check,
    DefectCrosscheck,
};
pub use trace::{
    mackey_verify, modified_trace, trace_image, trace_map, trace_map_with_representatives, trace_membership, MackeyReport,
    TraceKind,
};

use crate::algebra::{AlgebraElement, SubalgebraBasis};
use crate::error::BlockError;
use crate::field::FiniteField;
use crate::group::{FiniteGroup, GroupMorphism, Limits, Subgroup};
use crate::idempotent::CommutativeAlgebra;
use crate::linalg::Matrix;

/// A block `e kG` of the group algebra.
#[derive(Clone, Debug)]
pub struct Block {
    idempotent: AlgebraElement,
    algebra_dim: usize,
    is_principal: bool,
    defect: OnceLock<Subgroup>,
}

impl Block {
    pub fn idempotent(&self) -> &AlgebraElement {
        &self.idempotent
    }

    /// `dim(e kG)`.
    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    /// The block containing the trivial module (augmentation of `e` is 1).
    pub fn is_principal(&self) -> bool {
        self.is_principal
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.idempotent.group()
    }

    pub fn field(&self) -> &FiniteField {
        self.idempotent.field()
    }

    /// The defect group, computed on first use and cached.
    pub fn defect_group(&self, limits: Limits) -> Result<Subgroup, BlockError> {
        if let Some(d) = self.defect.get() {
            return Ok(d.clone());
        }
        let d = defect::compute_defect_group(self, limits)?;
        Ok(self.defect.get_or_init(|| d).clone())
    }
}

/// Blocks together with the data of the idempotent computation.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub center_dim: usize,
    pub radical_dim: usize,
    pub frobenius_fixed_dim: usize,
}

/// Rank of `x -> e x` on `kG`.
pub fn ideal_dimension(e: &AlgebraElement) -> usize {
    let g = e.group();
    let f = e.field();
    let rows: Vec<_> = (0..g.order()).map(|x| (e * &AlgebraElement::basis(g, f, x)).into_coeffs()).collect();
    Matrix::from_rows(f, g.order(), &rows).rank()
}

pub fn decompose(group: &Arc<FiniteGroup>, field: &FiniteField) -> Result<BlockDecomposition, BlockError> {
    let center = SubalgebraBasis::center(group, field);
    let decomposition = CommutativeAlgebra::new(&center)?.primitive_idempotents()?;
    let single = decomposition.idempotents.len() == 1;
    let mut blocks: Vec<Block> = decomposition
        .idempotents
        .into_iter()
        .map(|e| Block {
            algebra_dim: if single { group.order() } else { ideal_dimension(&e) },
            is_principal: e.augmentation() == field.one(),
            idempotent: e,
            defect: OnceLock::new(),
        })
        .collect();
    blocks.sort_by(compare_blocks);
    Ok(BlockDecomposition {
        blocks,
        center_dim: center.dim(),
        radical_dim: decomposition.radical_dim,
        frobenius_fixed_dim: decomposition.frobenius_fixed_dim,
    })
}

fn compare_blocks(a: &Block, b: &Block) -> Ordering {
    b.is_principal
        .cmp(&a.is_principal)
        .then(a.algebra_dim.cmp(&b.algebra_dim))
        .then_with(|| {
            let ka: Vec<u32> = a.idempotent.coeffs().iter().map(|c| c.index()).collect();
            let kb: Vec<u32> = b.idempotent.coeffs().iter().map(|c| c.index()).collect();
            ka.cmp(&kb)
        })
}

/// All blocks of `kG`: principal block first, then by dimension, then by
/// idempotent coefficients.
pub fn block_decomposition(group: &Arc<FiniteGroup>, field: &FiniteField) -> Result<Vec<Block>, BlockError> {
    Ok(decompose(group, field)?.blocks)
}

/// Blocks of a subgroup `H`, computed on `H` as a standalone group, with
/// the embedding into the parent.
pub fn subgroup_blocks(h: &Subgroup, field: &FiniteField) -> Result<(GroupMorphism, Vec<Block>), BlockError> {
    let embedding = h.as_group();
    let blocks = block_decomposition(embedding.source(), field)?;
    Ok((embedding, blocks))
}

pub(crate) fn ensure_subgroup(h: &Subgroup, l: &Subgroup, names: (&str, &str)) -> Result<(), BlockError> {
    if h.is_subgroup_of(l) {
        Ok(())
    } else {
        Err(BlockError::NotASubgroupOf(names.0.into(), names.1.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named_group;

    fn blocks(name: &str, p: u32) -> Vec<Block> {
        let g = named_group(&name.parse().unwrap(), Limits::default()).unwrap();
        block_decomposition(&g, &FiniteField::new(p, 1).unwrap()).unwrap()
    }

    #[test]
    fn cyclic_p_group_has_one_block() {
        let b = blocks("C5", 5);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].algebra_dim(), 5);
        assert!(b[0].is_principal());
    }

    #[test]
    fn s3_block_dimensions() {
        let b2 = blocks("S3", 2);
        assert_eq!(b2.iter().map(|b| b.algebra_dim()).collect::<Vec<_>>(), vec![2, 4]);
        assert!(b2[0].is_principal() && !b2[1].is_principal());
        let b3 = blocks("S3", 3);
        assert_eq!(b3.len(), 1);
        assert_eq!(b3[0].algebra_dim(), 6);
    }

    #[test]
    fn dimensions_sum_to_group_order() {
        for (name, p) in [("S4", 2), ("S4", 3), ("A4", 2), ("A4", 3), ("D6", 2), ("A5", 5)] {
            let b = blocks(name, p);
            let order = b[0].group().order();
            assert_eq!(b.iter().map(|b| b.algebra_dim()).sum::<usize>(), order, "{name} p={p}");
        }
    }
}
