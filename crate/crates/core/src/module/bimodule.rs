use std::sync::Arc;

use crate::blocks::Block;
use crate::error::ModuleError;
use crate::field::FiniteField;
use crate::group::{direct_square, FiniteGroup, GroupMorphism, Limits, Subgroup};
use crate::linalg::{Matrix, SemiEchelon, Vector};

use super::{higman, Rep};

/// `kG` as a `k[G x G]`-module, `(a, b) . x = a x b^-1`.
fn group_algebra_bimodule(g: &Arc<FiniteGroup>, gg: &Arc<FiniteGroup>, field: &FiniteField) -> Rep {
    let n = g.order();
    Rep::from_permutation(gg, field, n, |ab, x| g.mul(g.mul(ab / n, x), g.inv(ab % n)))
}

/// Checks that `kG`, as a module for `G x G`, is isomorphic to the
/// permutation module on the cosets of the diagonal. Returns an explicit
/// isomorphism.
pub fn bimodule_induced_check(g: &Arc<FiniteGroup>, field: &FiniteField, limits: Limits) -> Result<Option<Matrix>, ModuleError> {
    let (gg, delta) = direct_square(g, limits)?;
    let bimodule = group_algebra_bimodule(g, &gg, field);
    let induced = Rep::permutation(&delta.image(), field);
    Ok(induced.isomorphism(&bimodule, 1 << 16))
}

/// The block `e kG` as a `k[G x G]`-module, with `G x G` and the diagonal
/// embedding.
pub fn block_bimodule(block: &Block, limits: Limits) -> Result<(Rep, GroupMorphism), ModuleError> {
    let g = block.group();
    let f = block.field();
    let (gg, delta) = direct_square(g, limits)?;
    let whole = group_algebra_bimodule(g, &gg, f);
    let e = block.idempotent();
    let mut echelon = SemiEchelon::new(f, g.order());
    let mut basis: Vec<Vector> = Vec::new();
    for x in 0..g.order() {
        let v = e.coeffs().iter().enumerate().fold(vec![f.zero(); g.order()], |mut acc, (y, &c)| {
            acc[g.mul(y, x)] = f.add(acc[g.mul(y, x)], c);
            acc
        });
        if echelon.insert(&v).is_ok() {
            basis.push(v);
        }
    }
    Ok((whole.subrep(&basis)?, delta))
}

#[derive(Clone, Debug)]
pub struct BimoduleVertexReport {
    pub vertex: Subgroup,
    /// `delta(D)` for the defect group `D`.
    pub diagonal_defect: Subgroup,
    pub matches: bool,
}

/// The vertex of `e kG` as a `k[G x G]`-module, compared with the diagonal
/// copy of the defect group.
pub fn bimodule_vertex(block: &Block, limits: Limits) -> Result<BimoduleVertexReport, ModuleError> {
    let (rep, delta) = block_bimodule(block, limits)?;
    let vertex = higman::vertex(&rep, limits)?;
    let diagonal_defect = delta.image_of(&block.defect_group(limits)?);
    let matches = vertex.is_conjugate_to(&diagonal_defect);
    Ok(BimoduleVertexReport { vertex, diagonal_defect, matches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::block_decomposition;
    use crate::group::named_group;

    #[test]
    fn group_algebra_is_induced_from_the_diagonal() {
        for (name, p) in [("S3", 2), ("C4", 2), ("S3", 3)] {
            let g = named_group(&name.parse().unwrap(), Limits::default()).unwrap();
            let f = FiniteField::new(p, 1).unwrap();
            assert!(bimodule_induced_check(&g, &f, Limits::default()).unwrap().is_some(), "{name}");
        }
    }

    #[test]
    fn block_vertices_of_s3() {
        let g = named_group(&"S3".parse().unwrap(), Limits::default()).unwrap();
        let f = FiniteField::new(2, 1).unwrap();
        for b in block_decomposition(&g, &f).unwrap() {
            let r = bimodule_vertex(&b, Limits::default()).unwrap();
            assert!(r.matches, "{r:?}");
            assert_eq!(r.vertex.order(), b.defect_group(Limits::default()).unwrap().order());
        }
    }
}
