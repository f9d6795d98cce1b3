//! Finite-dimensional `kG`-modules as explicit matrix representations.

mod bimodule;
mod higman;
mod meataxe;

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

pub use bimodule::{bimodule_induced_check, bimodule_vertex, block_bimodule, BimoduleVertexReport};
pub use higman::{higman_projectivity, simple_with_vertex_equal_defect, vertex};
pub use meataxe::{chop_simples, composition_factors, is_simple, spin, MeataxeLimits};

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::blocks::Block;
use crate::error::ModuleError;
use crate::field::{FieldElement, FiniteField};
use crate::group::{FiniteGroup, GroupMorphism, Subgroup};
use crate::linalg::{Matrix, SemiEchelon, Vector};

/// A representation `g -> M(g)` acting on column vectors, with a matrix
/// for every group element.
#[derive(Clone)]
pub struct Rep {
    group: Arc<FiniteGroup>,
    field: FiniteField,
    dim: usize,
    matrices: Vec<Matrix>,
}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep(dim {} over GF({}), group order {})", self.dim, self.field.size(), self.group.order())
    }
}

/// Serialized form: generator images as row-major matrices of field
/// element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepData {
    pub dim: usize,
    pub generators: Vec<Vec<Vec<u32>>>,
}

impl Rep {
    pub fn to_data(&self) -> RepData {
        let generators = self
            .generator_images()
            .into_iter()
            .map(|m| (0..m.rows()).map(|r| m.row(r).iter().map(|c| c.index()).collect()).collect())
            .collect();
        RepData { dim: self.dim, generators }
    }

    pub fn from_data(group: &Arc<FiniteGroup>, field: &FiniteField, data: &RepData) -> Result<Self, ModuleError> {
        let images = data
            .generators
            .iter()
            .map(|rows| {
                if rows.len() != data.dim || rows.iter().any(|r| r.len() != data.dim) {
                    return Err(ModuleError::Dimension(data.dim));
                }
                let entries = rows.iter().flatten().map(|&i| if i < field.size() { Ok(field.element(i)) } else { Err(ModuleError::Check(format!("{i} is not a field element index"))) });
                Ok(Matrix::from_data(field, data.dim, data.dim, entries.collect::<Result<_, _>>()?))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_generator_images(group, field, images)
    }
    /// Extends images of `group.generators()` to all elements along the
    /// Cayley graph and checks `M(x) M(s) = M(xs)` on every edge, which
    /// proves the homomorphism property.
    pub fn from_generator_images(group: &Arc<FiniteGroup>, field: &FiniteField, images: Vec<Matrix>) -> Result<Self, ModuleError> {
        let gens = group.generators();
        if images.len() != gens.len() {
            return Err(ModuleError::GeneratorCount { expected: gens.len(), got: images.len() });
        }
        let dim = images.first().map_or_else(|| 0, |m| m.rows());
        if images.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(ModuleError::Dimension(dim));
        }
        let dim = if gens.is_empty() { 1 } else { dim };
        let n = group.order();
        let mut matrices: Vec<Option<Matrix>> = vec![None; n];
        matrices[0] = Some(Matrix::identity(field, dim));
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (s, m) in gens.iter().zip(&images) {
                let y = group.mul(x, *s);
                if matrices[y].is_none() {
                    matrices[y] = Some(matrices[x].as_ref().expect("visited").mul(m));
                    queue.push_back(y);
                }
            }
        }
        let matrices: Vec<Matrix> = matrices.into_iter().map(|m| m.expect("generators generate")).collect();
        for x in 0..n {
            for (s, m) in gens.iter().zip(&images) {
                if matrices[x].mul(m) != matrices[group.mul(x, *s)] {
                    return Err(ModuleError::NotAHomomorphism(x, *s));
                }
            }
        }
        Ok(Rep { group: group.clone(), field: field.clone(), dim, matrices })
    }

    fn from_permutation(group: &Arc<FiniteGroup>, field: &FiniteField, dim: usize, action: impl Fn(usize, usize) -> usize) -> Self {
        let matrices = (0..group.order())
            .map(|g| {
                let mut m = Matrix::zeros(field, dim, dim);
                for j in 0..dim {
                    m[(action(g, j), j)] = FieldElement::ONE;
                }
                m
            })
            .collect();
        Rep { group: group.clone(), field: field.clone(), dim, matrices }
    }

    pub fn trivial(group: &Arc<FiniteGroup>, field: &FiniteField) -> Self {
        Self::from_permutation(group, field, 1, |_, _| 0)
    }

    /// Left regular representation on the basis `G`.
    pub fn regular(group: &Arc<FiniteGroup>, field: &FiniteField) -> Self {
        Self::from_permutation(group, field, group.order(), |g, x| group.mul(g, x))
    }

    /// `k[G/H]` with basis the left cosets `xH` (smallest representatives).
    pub fn permutation(h: &Subgroup, field: &FiniteField) -> Self {
        let group = h.parent().clone();
        let reps = h.left_transversal(&Subgroup::whole(&group));
        let mut coset = vec![0usize; group.order()];
        for (i, &r) in reps.iter().enumerate() {
            for &y in h.elements() {
                coset[group.mul(r, y)] = i;
            }
        }
        Self::from_permutation(&group, field, reps.len(), |g, j| coset[group.mul(g, reps[j])])
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    pub fn generator_images(&self) -> Vec<&Matrix> {
        self.group.generators().iter().map(|&g| &self.matrices[g]).collect()
    }

    /// `M(x)M(y) = M(xy)` for every pair.
    pub fn verify_exhaustive(&self) -> bool {
        let n = self.group.order();
        self.matrices[0].is_identity() && (0..n).all(|x| (0..n).all(|y| self.matrices[x].mul(&self.matrices[y]) == self.matrices[self.group.mul(x, y)]))
    }

    /// Action of an algebra element `sum a_g g`.
    pub fn act(&self, a: &AlgebraElement) -> Matrix {
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.dim, self.dim);
        for (g, c) in a.to_sparse() {
            out = out.add(&self.matrices[g].scale(c));
        }
        out
    }

    /// `M o phi` for `phi: H -> G`: restriction along an embedding,
    /// inflation along a surjection.
    pub fn pull_back(&self, phi: &GroupMorphism) -> Rep {
        let matrices = (0..phi.source().order()).map(|h| self.matrices[phi.apply(h)].clone()).collect();
        Rep { group: phi.source().clone(), field: self.field.clone(), dim: self.dim, matrices }
    }

    /// The subrepresentation on an invariant subspace spanned by `basis`.
    pub fn subrep(&self, basis: &[Vector]) -> Result<Rep, ModuleError> {
        let echelon = SemiEchelon::from_vectors(&self.field, self.dim, basis.iter());
        if echelon.rank() != basis.len() {
            return Err(ModuleError::Check("subspace basis is dependent".into()));
        }
        let images = self
            .group
            .generators()
            .iter()
            .map(|&g| {
                let columns = basis
                    .iter()
                    .map(|b| echelon.coordinates(&self.matrices[g].apply(b)).ok_or_else(|| ModuleError::Check("subspace is not invariant".into())))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Matrix::from_columns(&self.field, basis.len(), &columns))
            })
            .collect::<Result<Vec<_>, ModuleError>>()?;
        Self::from_generator_images(&self.group, &self.field, images)
    }

    /// The quotient by an invariant subspace, on the complement spanned by
    /// the standard basis vectors outside the echelon pivots.
    pub fn quotient(&self, sub: &[Vector]) -> Result<Rep, ModuleError> {
        let echelon = SemiEchelon::from_vectors(&self.field, self.dim, sub.iter());
        let pivots = echelon.pivots();
        let complement: Vec<usize> = (0..self.dim).filter(|i| !pivots.contains(i)).collect();
        let k = complement.len();
        let images = self
            .group
            .generators()
            .iter()
            .map(|&g| {
                let columns: Vec<Vector> = complement
                    .iter()
                    .map(|&c| {
                        let (residual, _) = echelon.reduce(&self.matrices[g].column(c));
                        complement.iter().map(|&i| residual[i]).collect()
                    })
                    .collect();
                Matrix::from_columns(&self.field, k, &columns)
            })
            .collect();
        Self::from_generator_images(&self.group, &self.field, images)
    }

    /// Basis of `Hom_G(self, other)` as `other.dim x self.dim` matrices.
    pub fn intertwiners(&self, other: &Rep) -> Vec<Matrix> {
        let (m, n) = (other.dim, self.dim);
        let f = &self.field;
        let mut rows: Vec<Vector> = Vec::new();
        for &g in self.group.generators() {
            let (a, b) = (&other.matrices[g], &self.matrices[g]);
            // (A X - X B)[i][j] with X[k][l] at index k*n + l.
            for i in 0..m {
                for j in 0..n {
                    let mut row = vec![FieldElement::ZERO; m * n];
                    for k in 0..m {
                        row[k * n + j] = f.add(row[k * n + j], a[(i, k)]);
                    }
                    for l in 0..n {
                        row[i * n + l] = f.sub(row[i * n + l], b[(l, j)]);
                    }
                    rows.push(row);
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..m * n)
                .map(|i| {
                    let mut v = vec![FieldElement::ZERO; m * n];
                    v[i] = FieldElement::ONE;
                    v
                })
                .collect()
        } else {
            Matrix::from_rows(f, m * n, &rows).right_kernel()
        };
        kernel.into_iter().map(|v| Matrix::from_data(f, m, n, v)).collect()
    }

    /// An invertible intertwiner, searched among basis elements, their sum,
    /// and then all combinations while `q^r` stays within `budget`.
    pub fn isomorphism(&self, other: &Rep, budget: u128) -> Option<Matrix> {
        if self.dim != other.dim {
            return None;
        }
        let basis = self.intertwiners(other);
        if basis.is_empty() {
            return None;
        }
        if let Some(m) = basis.iter().find(|m| m.is_invertible()) {
            return Some(m.clone());
        }
        let sum = basis.iter().skip(1).fold(basis[0].clone(), |acc, m| acc.add(m));
        if sum.is_invertible() {
            return Some(sum);
        }
        let q = self.field.size() as u128;
        let r = basis.len() as u32;
        if q.checked_pow(r).map_or(true, |t| t > budget) {
            return None;
        }
        let elements: Vec<FieldElement> = self.field.elements().collect();
        let mut digits = vec![0usize; basis.len()];
        loop {
            let mut i = 0;
            while i < digits.len() {
                digits[i] += 1;
                if digits[i] < elements.len() {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == digits.len() {
                return None;
            }
            let mut m = Matrix::zeros(&self.field, self.dim, self.dim);
            for (b, &d) in basis.iter().zip(&digits) {
                if d != 0 {
                    m = m.add(&b.scale(elements[d]));
                }
            }
            if m.is_invertible() {
                return Some(m);
            }
        }
    }

    /// Whether the block idempotent acts as the identity.
    pub fn lies_in(&self, block: &Block) -> bool {
        self.act(block.idempotent()).is_identity()
    }
}

/// `U = sum e U` over the blocks; returns `(block index, e U)` for the
/// nonzero summands.
pub fn module_block_split(u: &Rep, blocks: &[Block]) -> Result<Vec<(usize, Rep)>, ModuleError> {
    let mut out = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let action = u.act(b.idempotent());
        let mut echelon = SemiEchelon::new(u.field(), u.dim());
        let basis: Vec<Vector> = (0..u.dim()).map(|c| action.column(c)).filter(|v| echelon.insert(v).is_ok()).collect();
        if basis.is_empty() {
            continue;
        }
        out.push((i, u.subrep(&basis)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::block_decomposition;
    use crate::group::{named_group, Limits};

    fn group(name: &str) -> Arc<FiniteGroup> {
        named_group(&name.parse().unwrap(), Limits::default()).unwrap()
    }

    #[test]
    fn standard_representations() {
        let g = group("S3");
        let f = FiniteField::new(2, 1).unwrap();
        let t = Rep::trivial(&g, &f);
        assert_eq!(t.dim(), 1);
        assert!((0..6).all(|x| t.matrix(x).is_identity()));
        let p = Rep::permutation(&Subgroup::generated(&g, &[1]).unwrap(), &f);
        assert_eq!(p.dim(), 3);
        assert!(p.verify_exhaustive());
        assert!(Rep::regular(&g, &f).verify_exhaustive());
    }

    #[test]
    fn data_round_trip() {
        let g = group("S3");
        let f = FiniteField::new(2, 2).unwrap();
        let r = Rep::permutation(&Subgroup::generated(&g, &[1]).unwrap(), &f);
        let back = Rep::from_data(&g, &f, &r.to_data()).unwrap();
        assert!((0..6).all(|x| back.matrix(x) == r.matrix(x)));
    }

    #[test]
    fn regular_c2_is_a_jordan_block() {
        let g = group("C2");
        let f = FiniteField::new(2, 1).unwrap();
        let r = Rep::regular(&g, &f);
        let n = r.matrix(1).sub(&Matrix::identity(&f, 2));
        assert!(!n.is_zero());
        assert!(n.mul(&n).is_zero());
    }

    #[test]
    fn generator_images_are_validated() {
        let g = group("C3");
        let f = FiniteField::new(2, 1).unwrap();
        let swap = Matrix::from_data(&f, 2, 2, vec![FieldElement::ZERO, FieldElement::ONE, FieldElement::ONE, FieldElement::ZERO]);
        assert!(matches!(Rep::from_generator_images(&g, &f, vec![swap]), Err(ModuleError::NotAHomomorphism(..))));
        assert!(matches!(Rep::from_generator_images(&g, &f, vec![]), Err(ModuleError::GeneratorCount { .. })));
    }

    #[test]
    fn block_split_of_regular_s3_mod_2() {
        let g = group("S3");
        let f = FiniteField::new(2, 1).unwrap();
        let blocks = block_decomposition(&g, &f).unwrap();
        let split = module_block_split(&Rep::regular(&g, &f), &blocks).unwrap();
        assert_eq!(split.iter().map(|(i, r)| (*i, r.dim())).collect::<Vec<_>>(), vec![(0, 2), (1, 4)]);
        let trivial = module_block_split(&Rep::trivial(&g, &f), &blocks).unwrap();
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial[0].0, 0);
    }

    #[test]
    fn permutation_module_isomorphism() {
        let g = group("S3");
        let f = FiniteField::new(3, 1).unwrap();
        let a = Rep::permutation(&Subgroup::generated(&g, &[1]).unwrap(), &f);
        let other = g.conjugacy_classes().iter().find(|c| c.contains(&1)).unwrap().iter().copied().find(|&x| x != 1).unwrap();
        let b = Rep::permutation(&Subgroup::generated(&g, &[other]).unwrap(), &f);
        assert!(a.isomorphism(&b, 1 << 16).is_some());
        assert!(a.isomorphism(&Rep::regular(&g, &f), 1 << 16).is_none());
    }
}
