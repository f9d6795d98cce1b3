//! Primitive idempotents of finite-dimensional commutative algebras over
//! GF(q).
//!
//! The radical is the kernel of the linear map `x -> x^(q^t)` with
//! `q^t >= dim`. Modulo the radical the algebra is a product of fields, the
//! fixed space of `x -> x^q` has one dimension per factor, and a fixed
//! element outside `k*1` has a minimal polynomial with distinct roots in
//! GF(q) whose Lagrange idempotents split the algebra. Idempotents found
//! modulo the radical lift by `x -> x^(q^t)`.

use crate::algebra::{AlgebraElement, SubalgebraBasis, SubalgebraKind};
use crate::error::AlgebraError;
use crate::field::{FieldElement, FiniteField};
use crate::linalg::{is_zero_vector, krylov_min_poly, Matrix, SemiEchelon, Vector};
use crate::poly::{degree, distinct_roots_in_field};

/// A commutative subalgebra of `kG` in the coordinates of its basis.
pub struct CommutativeAlgebra<'a> {
    space: &'a SubalgebraBasis,
    one: Vector,
    /// `t` with `q^t >= dim`.
    frobenius_steps: u32,
}

#[derive(Clone, Debug)]
pub struct IdempotentDecomposition {
    pub idempotents: Vec<AlgebraElement>,
    pub radical_dim: usize,
    /// Dimension of the fixed space of `x -> x^q` on `S/J`.
    pub frobenius_fixed_dim: usize,
}

impl<'a> CommutativeAlgebra<'a> {
    /// Checks commutativity and closure on basis pairs and locates the identity.
    pub fn new(space: &'a SubalgebraBasis) -> Result<Self, AlgebraError> {
        let basis = space.basis();
        for i in 0..basis.len() {
            for j in i..basis.len() {
                let ij = &basis[i] * &basis[j];
                if i != j && ij != &basis[j] * &basis[i] {
                    return Err(AlgebraError::NotCommutative(i, j));
                }
                if space.kind() != SubalgebraKind::Center && !space.contains(&ij) {
                    return Err(AlgebraError::NotClosed);
                }
            }
        }
        let one = find_identity(space)?;
        let q = space.field().size() as u64;
        let mut t = 1;
        let mut qt = q;
        while (qt as usize) < space.dim().max(1) {
            qt *= q;
            t += 1;
        }
        Ok(CommutativeAlgebra { space, one, frobenius_steps: t })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> &FiniteField {
        self.space.field()
    }

    pub fn one(&self) -> &[FieldElement] {
        &self.one
    }

    pub fn element(&self, coords: &[FieldElement]) -> AlgebraElement {
        self.space.combine(coords)
    }

    pub fn mul(&self, x: &[FieldElement], y: &[FieldElement]) -> Vector {
        let product = &self.space.combine(x) * &self.space.combine(y);
        self.space.coordinates(&product).expect("closed under multiplication")
    }

    fn pow(&self, x: &[FieldElement], mut e: u64) -> Vector {
        let mut base = self.space.combine(x);
        let mut acc = self.space.combine(&self.one);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        self.space.coordinates(&acc).expect("closed under multiplication")
    }

    /// `x -> x^q`, linear over GF(q).
    pub fn frobenius(&self, x: &[FieldElement]) -> Vector {
        self.pow(x, self.field().size() as u64)
    }

    /// `x -> x^(q^t)` with `q^t >= dim`.
    pub fn frobenius_iterate(&self, x: &[FieldElement]) -> Vector {
        (0..self.frobenius_steps).fold(x.to_vec(), |acc, _| self.frobenius(&acc))
    }

    /// Basis (in coordinates) of the nilradical.
    pub fn radical_coordinates(&self) -> Vec<Vector> {
        let d = self.dim();
        let columns: Vec<Vector> = (0..d).map(|i| self.frobenius_iterate(&unit(d, i))).collect();
        Matrix::from_columns(self.field(), d, &columns).right_kernel()
    }

    pub fn radical(&self) -> SubalgebraBasis {
        let elements = self.radical_coordinates().iter().map(|c| self.element(c)).collect();
        SubalgebraBasis::spanned_by(self.space.group(), self.field(), SubalgebraKind::Radical, elements)
    }

    pub fn primitive_idempotents(&self) -> Result<IdempotentDecomposition, AlgebraError> {
        let radical = self.radical_coordinates();
        let quotient = Quotient { alg: self, radical: SemiEchelon::from_vectors(self.field(), self.dim(), radical.iter()) };
        let one = quotient.reduce(&self.one);
        let fixed_dim = quotient.fixed_space(&one).len();
        let mut reduced = Vec::new();
        quotient.split(one, &mut reduced)?;
        if reduced.len() != fixed_dim {
            return Err(AlgebraError::Inconsistent(format!("{} idempotents but Frobenius-fixed dimension {fixed_dim}", reduced.len())));
        }
        let lifted: Vec<Vector> = reduced.iter().map(|e| self.frobenius_iterate(e)).collect();
        self.verify(&lifted)?;
        Ok(IdempotentDecomposition {
            idempotents: lifted.iter().map(|c| self.element(c)).collect(),
            radical_dim: radical.len(),
            frobenius_fixed_dim: fixed_dim,
        })
    }

    fn verify(&self, idempotents: &[Vector]) -> Result<(), AlgebraError> {
        let f = self.field();
        let mut sum = vec![FieldElement::ZERO; self.dim()];
        for (i, e) in idempotents.iter().enumerate() {
            if self.mul(e, e) != *e || is_zero_vector(e) {
                return Err(AlgebraError::Inconsistent(format!("lifted element {i} is not a nonzero idempotent")));
            }
            for (j, other) in idempotents.iter().enumerate().skip(i + 1) {
                if !is_zero_vector(&self.mul(e, other)) {
                    return Err(AlgebraError::Inconsistent(format!("idempotents {i} and {j} are not orthogonal")));
                }
            }
            crate::linalg::axpy(f, &mut sum, FieldElement::ONE, e);
        }
        if sum != self.one {
            return Err(AlgebraError::Inconsistent("idempotents do not sum to 1".into()));
        }
        Ok(())
    }
}

/// The identity of a subalgebra: `1` itself when it lies in the span,
/// otherwise the solution `u` of `u * b_i = b_i` for every basis element.
fn find_identity(space: &SubalgebraBasis) -> Result<Vector, AlgebraError> {
    let one = AlgebraElement::one(space.group(), space.field());
    if let Some(c) = space.coordinates(&one) {
        return Ok(c);
    }
    let d = space.dim();
    let n = space.group().order();
    let basis = space.basis();
    // Unknown u = sum u_k b_k; constraints sum_k u_k (b_k b_i) = b_i in kG.
    let mut rows = Vec::with_capacity(d * n);
    let mut rhs = Vec::with_capacity(d * n);
    let products: Vec<Vec<AlgebraElement>> = basis.iter().map(|bk| basis.iter().map(|bi| bk * bi).collect()).collect();
    for i in 0..d {
        for g in 0..n {
            rows.push((0..d).map(|k| products[k][i].coeff(g)).collect::<Vector>());
            rhs.push(basis[i].coeff(g));
        }
    }
    Matrix::from_rows(space.field(), d, &rows).solve(&rhs).ok_or(AlgebraError::NoIdentity)
}

fn unit(d: usize, i: usize) -> Vector {
    let mut v = vec![FieldElement::ZERO; d];
    v[i] = FieldElement::ONE;
    v
}

/// Arithmetic in `S/J`, each class represented by its canonical residual.
struct Quotient<'a, 'b> {
    alg: &'b CommutativeAlgebra<'a>,
    radical: SemiEchelon,
}

impl Quotient<'_, '_> {
    fn reduce(&self, v: &[FieldElement]) -> Vector {
        self.radical.reduce(v).0
    }

    fn mul(&self, x: &[FieldElement], y: &[FieldElement]) -> Vector {
        self.reduce(&self.alg.mul(x, y))
    }

    /// Basis of `e S / J` as residuals.
    fn ideal_basis(&self, e: &[FieldElement]) -> (SemiEchelon, Vec<Vector>) {
        let d = self.alg.dim();
        let mut echelon = self.radical.clone();
        let mut basis = Vec::new();
        for i in 0..d {
            let v = self.mul(e, &unit(d, i));
            if echelon.insert(&v).is_ok() {
                basis.push(v);
            }
        }
        (echelon, basis)
    }

    /// Frobenius-fixed elements of `e S / J`, as residuals.
    fn fixed_space(&self, e: &[FieldElement]) -> Vec<Vector> {
        let f = self.alg.field();
        let (echelon, basis) = self.ideal_basis(e);
        let offset = self.radical.rank();
        let k = basis.len();
        let columns: Vec<Vector> = basis
            .iter()
            .map(|b| {
                let image = self.reduce(&self.alg.frobenius(b));
                let diff: Vector = image.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect();
                let coords = echelon.coordinates(&diff).expect("Frobenius preserves e S");
                coords[offset..].to_vec()
            })
            .collect();
        Matrix::from_columns(f, k, &columns)
            .right_kernel()
            .into_iter()
            .map(|c| {
                let mut v = vec![FieldElement::ZERO; self.alg.dim()];
                for (b, &x) in basis.iter().zip(&c) {
                    crate::linalg::axpy(f, &mut v, x, b);
                }
                self.reduce(&v)
            })
            .collect()
    }

    fn split(&self, e: Vector, out: &mut Vec<Vector>) -> Result<(), AlgebraError> {
        let f = self.alg.field().clone();
        let fixed = self.fixed_space(&e);
        if fixed.len() <= 1 {
            out.push(e);
            return Ok(());
        }
        let mut scalars = self.radical.clone();
        let _ = scalars.insert(&e);
        let a = fixed
            .into_iter()
            .find(|a| !scalars.contains(a))
            .ok_or_else(|| AlgebraError::Inconsistent("fixed space lies in k*e".into()))?;
        let min_poly = krylov_min_poly(&f, &e, |v| self.mul(&a, v));
        let roots = distinct_roots_in_field(&f, &min_poly);
        if Some(roots.len()) != degree(&min_poly) || roots.len() < 2 {
            return Err(AlgebraError::Inconsistent("minimal polynomial of a fixed element does not split".into()));
        }
        for &lambda in &roots {
            let mut piece = e.clone();
            for &mu in roots.iter().filter(|&&mu| mu != lambda) {
                let scale = f.inv(f.sub(lambda, mu)).expect("distinct roots");
                let factor: Vector = a.iter().zip(&e).map(|(&x, &y)| f.mul(f.sub(x, f.mul(mu, y)), scale)).collect();
                piece = self.mul(&piece, &factor);
            }
            self.split(piece, out)?;
        }
        Ok(())
    }
}

/// Primitive idempotents of a commutative subalgebra of `kG`.
pub fn primitive_idempotents_commutative(space: &SubalgebraBasis) -> Result<IdempotentDecomposition, AlgebraError> {
    CommutativeAlgebra::new(space)?.primitive_idempotents()
}

/// Nilradical of a commutative subalgebra of `kG`.
pub fn radical_of_commutative(space: &SubalgebraBasis) -> Result<SubalgebraBasis, AlgebraError> {
    Ok(CommutativeAlgebra::new(space)?.radical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{named_group, FiniteGroup, Limits};
    use std::sync::Arc;

    fn center(name: &str, p: u32, m: u32) -> SubalgebraBasis {
        let g: Arc<FiniteGroup> = named_group(&name.parse().unwrap(), Limits::default()).unwrap();
        SubalgebraBasis::center(&g, &FiniteField::new(p, m).unwrap())
    }

    #[test]
    fn local_algebra_has_one_idempotent() {
        let z = center("C3", 3, 1);
        let d = primitive_idempotents_commutative(&z).unwrap();
        assert_eq!(d.idempotents.len(), 1);
        assert_eq!(d.radical_dim, 2);
    }

    #[test]
    fn counts_for_s3() {
        assert_eq!(primitive_idempotents_commutative(&center("S3", 2, 1)).unwrap().idempotents.len(), 2);
        assert_eq!(primitive_idempotents_commutative(&center("S3", 3, 1)).unwrap().idempotents.len(), 1);
        let semisimple = primitive_idempotents_commutative(&center("S3", 5, 1)).unwrap();
        assert_eq!(semisimple.radical_dim, 0);
        assert_eq!(semisimple.idempotents.len(), 3);
    }

    #[test]
    fn splitting_field_matters() {
        // Over GF(2) the two non-trivial characters of C3 are Galois conjugate.
        assert_eq!(primitive_idempotents_commutative(&center("C3", 2, 1)).unwrap().idempotents.len(), 2);
        assert_eq!(primitive_idempotents_commutative(&center("C3", 2, 2)).unwrap().idempotents.len(), 3);
    }

    #[test]
    fn radical_of_f3c3_is_augmentation_ideal() {
        let z = center("C3", 3, 1);
        let j = radical_of_commutative(&z).unwrap();
        assert_eq!(j.dim(), 2);
        for b in j.basis() {
            assert!(b.augmentation().is_zero());
            assert!(b.pow(3).is_zero());
        }
    }

    #[test]
    fn min_poly_of_identity_and_zero() {
        let z = center("S3", 2, 1);
        let alg = CommutativeAlgebra::new(&z).unwrap();
        let f = alg.field().clone();
        let one = alg.one().to_vec();
        assert_eq!(krylov_min_poly(&f, &one, |v| alg.mul(&one, v)), vec![f.neg(f.one()), f.one()]);
        let zero = vec![FieldElement::ZERO; z.dim()];
        assert_eq!(krylov_min_poly(&f, &one, |v| alg.mul(&zero, v)), vec![f.zero(), f.one()]);
    }
}
