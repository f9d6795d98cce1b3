//! The group algebra `kG`, its fixed-point subalgebras and its center.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::{Arc, OnceLock};

use crate::error::AlgebraError;
use crate::field::{FieldElement, FiniteField};
use crate::group::{FiniteGroup, GroupMorphism, Subgroup};
use crate::linalg::{axpy, SemiEchelon, Vector};

/// An element `sum a_g g` of `kG`, stored densely by group element index.
#[derive(Clone)]
pub struct AlgebraElement {
    group: Arc<FiniteGroup>,
    field: FiniteField,
    coeffs: Vector,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement {}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.support().into_iter().map(|g| format!("{}*{}", self.coeffs[g], self.group.label(g))).collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl AlgebraElement {
    pub fn zero(group: &Arc<FiniteGroup>, field: &FiniteField) -> Self {
        AlgebraElement { group: group.clone(), field: field.clone(), coeffs: vec![FieldElement::ZERO; group.order()] }
    }

    pub fn one(group: &Arc<FiniteGroup>, field: &FiniteField) -> Self {
        Self::basis(group, field, 0)
    }

    /// The group element `g` as an algebra element.
    pub fn basis(group: &Arc<FiniteGroup>, field: &FiniteField, g: usize) -> Self {
        let mut x = Self::zero(group, field);
        x.coeffs[g] = FieldElement::ONE;
        x
    }

    pub fn from_coeffs(group: &Arc<FiniteGroup>, field: &FiniteField, coeffs: Vector) -> Self {
        assert_eq!(coeffs.len(), group.order(), "coefficient vector length must equal the group order");
        AlgebraElement { group: group.clone(), field: field.clone(), coeffs }
    }

    pub fn from_sparse(group: &Arc<FiniteGroup>, field: &FiniteField, terms: &[(usize, FieldElement)]) -> Self {
        let mut x = Self::zero(group, field);
        for &(g, c) in terms {
            x.coeffs[g] = field.add(x.coeffs[g], c);
        }
        x
    }

    /// Sum of the given group elements.
    pub fn sum_of(group: &Arc<FiniteGroup>, field: &FiniteField, elements: &[usize]) -> Self {
        let mut x = Self::zero(group, field);
        for &g in elements {
            x.coeffs[g] = field.add(x.coeffs[g], FieldElement::ONE);
        }
        x
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vector {
        self.coeffs
    }

    pub fn coeff(&self, g: usize) -> FieldElement {
        self.coeffs[g]
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&g| !self.coeffs[g].is_zero()).collect()
    }

    pub fn to_sparse(&self) -> Vec<(usize, FieldElement)> {
        self.support().into_iter().map(|g| (g, self.coeffs[g])).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn same_ambient(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.field == other.field
    }

    fn check_ambient(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(AlgebraError::AmbientMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_ambient(other)?;
        let f = &self.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(AlgebraElement { coeffs, ..self.clone_empty() })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_ambient(other)?;
        let f = &self.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(AlgebraElement { coeffs, ..self.clone_empty() })
    }

    /// Convolution product through the Cayley table.
    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_ambient(other)?;
        let f = &self.field;
        let g = &self.group;
        let mut out = vec![FieldElement::ZERO; g.order()];
        let right: Vec<(usize, FieldElement)> = other.to_sparse();
        for (x, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(y, b) in &right {
                let xy = g.mul(x, y);
                out[xy] = f.add(out[xy], f.mul(a, b));
            }
        }
        Ok(AlgebraElement { coeffs: out, ..self.clone_empty() })
    }

    fn clone_empty(&self) -> Self {
        AlgebraElement { group: self.group.clone(), field: self.field.clone(), coeffs: Vec::new() }
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let f = &self.field;
        AlgebraElement { coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(), ..self.clone_empty() }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.group, &self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `g a g^-1`
    pub fn conjugate(&self, g: usize) -> Self {
        let mut out = vec![FieldElement::ZERO; self.coeffs.len()];
        for (x, &a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                out[self.group.conj(g, x)] = a;
            }
        }
        AlgebraElement { coeffs: out, ..self.clone_empty() }
    }

    /// A generator of `h` that moves `self` under conjugation, if any.
    pub fn fixed_violation(&self, h: &Subgroup) -> Option<usize> {
        h.generators().into_iter().find(|&g| (0..self.coeffs.len()).any(|x| self.coeffs[x] != self.coeffs[self.group.conj(g, x)]))
    }

    pub fn is_fixed_by(&self, h: &Subgroup) -> bool {
        self.fixed_violation(h).is_none()
    }

    /// Commutes with every group element.
    pub fn is_central(&self) -> bool {
        self.is_fixed_by(&Subgroup::whole(&self.group))
    }

    /// Sum of coefficients: the scalar by which the element acts on the
    /// trivial module.
    pub fn augmentation(&self) -> FieldElement {
        self.coeffs.iter().fold(FieldElement::ZERO, |acc, &c| self.field.add(acc, c))
    }

    /// Keep only the coefficients on `h`.
    pub fn truncate_to(&self, h: &Subgroup) -> Self {
        let mut out = vec![FieldElement::ZERO; self.coeffs.len()];
        for &x in h.elements() {
            out[x] = self.coeffs[x];
        }
        AlgebraElement { coeffs: out, ..self.clone_empty() }
    }

    /// Image under the algebra map induced by a group homomorphism.
    pub fn push_forward(&self, phi: &GroupMorphism) -> Self {
        let target = phi.target();
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; target.order()];
        for (x, &a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                let y = phi.apply(x);
                out[y] = f.add(out[y], a);
            }
        }
        AlgebraElement { group: target.clone(), field: self.field.clone(), coeffs: out }
    }

    /// Element of the subgroup algebra `kH` (as a standalone group via
    /// `embedding`) carried into `kG`.
    pub fn embed(&self, embedding: &GroupMorphism) -> Self {
        self.push_forward(embedding)
    }

    /// Restriction to a subgroup: the coefficients on `embedding`'s image,
    /// read in the standalone group's numbering.
    pub fn restrict(&self, embedding: &GroupMorphism) -> Self {
        let coeffs = embedding.images().iter().map(|&x| self.coeffs[x]).collect();
        AlgebraElement { group: embedding.source().clone(), field: self.field.clone(), coeffs }
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    /// Panics if the operands live in different algebras.
    fn add(self, rhs: Self) -> AlgebraElement {
        self.try_add(rhs).expect("algebra elements from the same ambient")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> AlgebraElement {
        self.try_sub(rhs).expect("algebra elements from the same ambient")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        self.try_mul(rhs).expect("algebra elements from the same ambient")
    }
}

/// Orbits of `h` acting on `G` by conjugation, each sorted, ordered by
/// smallest member.
pub fn conjugation_orbits(group: &FiniteGroup, h: &Subgroup) -> Vec<Vec<usize>> {
    let gens = h.generators();
    let n = group.order();
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        seen[x] = true;
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for &g in &gens {
                let z = group.conj(g, y);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SubalgebraKind {
    Center,
    FixedPoints,
    Block,
    Radical,
    Other,
}

/// A subspace of `kG` given by a basis.
#[derive(Clone)]
pub struct SubalgebraBasis {
    group: Arc<FiniteGroup>,
    field: FiniteField,
    kind: SubalgebraKind,
    basis: Vec<AlgebraElement>,
    /// For orbit-sum bases: the orbits, which make coordinates a read-off.
    orbits: Option<Vec<Vec<usize>>>,
    echelon: OnceLock<SemiEchelon>,
}

impl fmt::Debug for SubalgebraBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubalgebraBasis({:?}, dim {})", self.kind, self.basis.len())
    }
}

impl SubalgebraBasis {
    /// A basis from arbitrary elements; dependent ones are dropped.
    pub fn spanned_by(group: &Arc<FiniteGroup>, field: &FiniteField, kind: SubalgebraKind, elements: Vec<AlgebraElement>) -> Self {
        let mut echelon = SemiEchelon::new(field, group.order());
        let basis: Vec<AlgebraElement> = elements.into_iter().filter(|x| echelon.insert(x.coeffs()).is_ok()).collect();
        SubalgebraBasis {
            group: group.clone(),
            field: field.clone(),
            kind,
            basis,
            orbits: None,
            echelon: OnceLock::from(echelon),
        }
    }

    /// `kG^H`, with the H-conjugation orbit sums as basis.
    pub fn fixed_points(h: &Subgroup, field: &FiniteField) -> Self {
        let group = h.parent().clone();
        let orbits = conjugation_orbits(&group, h);
        let basis = orbits.iter().map(|o| AlgebraElement::sum_of(&group, field, o)).collect();
        let kind = if h.is_whole() { SubalgebraKind::Center } else { SubalgebraKind::FixedPoints };
        SubalgebraBasis { group, field: field.clone(), kind, basis, orbits: Some(orbits), echelon: OnceLock::new() }
    }

    /// `Z(kG)` with the class-sum basis.
    pub fn center(group: &Arc<FiniteGroup>, field: &FiniteField) -> Self {
        let basis = group.conjugacy_classes().iter().map(|c| AlgebraElement::sum_of(group, field, c)).collect();
        SubalgebraBasis {
            group: group.clone(),
            field: field.clone(),
            kind: SubalgebraKind::Center,
            basis,
            orbits: Some(group.conjugacy_classes().to_vec()),
            echelon: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn kind(&self) -> SubalgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[AlgebraElement] {
        &self.basis
    }

    pub fn orbits(&self) -> Option<&[Vec<usize>]> {
        self.orbits.as_deref()
    }

    fn echelon(&self) -> &SemiEchelon {
        self.echelon.get_or_init(|| SemiEchelon::from_vectors(&self.field, self.group.order(), self.basis.iter().map(|b| &b.coeffs)))
    }

    /// Coordinates of `x` in this basis, or `None` if `x` is outside the span.
    pub fn coordinates(&self, x: &AlgebraElement) -> Option<Vector> {
        match &self.orbits {
            Some(orbits) => {
                let coords: Vector = orbits.iter().map(|o| x.coeffs[o[0]]).collect();
                let consistent = orbits.iter().zip(&coords).all(|(o, &c)| o.iter().all(|&g| x.coeffs[g] == c));
                consistent.then_some(coords)
            }
            None => self.echelon().coordinates(&x.coeffs),
        }
    }

    pub fn contains(&self, x: &AlgebraElement) -> bool {
        self.coordinates(x).is_some()
    }

    pub fn combine(&self, coords: &[FieldElement]) -> AlgebraElement {
        assert_eq!(coords.len(), self.basis.len());
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; self.group.order()];
        match &self.orbits {
            Some(orbits) => {
                for (o, &c) in orbits.iter().zip(coords) {
                    for &g in o {
                        out[g] = c;
                    }
                }
            }
            None => {
                for (b, &c) in self.basis.iter().zip(coords) {
                    if !c.is_zero() {
                        axpy(f, &mut out, c, &b.coeffs);
                    }
                }
            }
        }
        AlgebraElement::from_coeffs(&self.group, f, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{named_group, Limits};

    fn setup(name: &str, p: u32) -> (Arc<FiniteGroup>, FiniteField) {
        (named_group(&name.parse().unwrap(), Limits::default()).unwrap(), FiniteField::new(p, 1).unwrap())
    }

    #[test]
    fn one_is_neutral() {
        let (g, f) = setup("S3", 3);
        let a = AlgebraElement::from_coeffs(&g, &f, (0..6).map(|i| f.from_int(i)).collect());
        assert_eq!(&a * &AlgebraElement::one(&g, &f), a);
        assert_eq!(&AlgebraElement::one(&g, &f) * &a, a);
    }

    #[test]
    fn one_plus_g_squares_to_zero_in_f2c2() {
        let (g, f) = setup("C2", 2);
        let x = AlgebraElement::sum_of(&g, &f, &[0, 1]);
        assert!((&x * &x).is_zero());
    }

    #[test]
    fn mismatched_ambients_are_rejected() {
        let (g, f) = setup("C2", 2);
        let (h, _) = setup("C2", 2);
        let a = AlgebraElement::one(&g, &f);
        let b = AlgebraElement::one(&h, &f);
        assert_eq!(a.try_mul(&b), Err(AlgebraError::AmbientMismatch));
    }

    #[test]
    fn fixed_point_dimensions_in_s3() {
        let (g, f) = setup("S3", 2);
        assert_eq!(SubalgebraBasis::fixed_points(&Subgroup::trivial(&g), &f).dim(), 6);
        let z = SubalgebraBasis::fixed_points(&Subgroup::whole(&g), &f);
        assert_eq!(z.dim(), 3);
        assert_eq!(z.kind(), SubalgebraKind::Center);
        let t = Subgroup::generated(&g, &[1]).unwrap();
        let fixed = SubalgebraBasis::fixed_points(&t, &f);
        let sizes: Vec<usize> = fixed.orbits().unwrap().iter().map(|o| o.len()).collect();
        assert_eq!(sizes.len(), 4);
        assert_eq!(sizes.iter().filter(|&&s| s == 1).count(), 2);
    }

    #[test]
    fn coordinates_round_trip() {
        let (g, f) = setup("A4", 3);
        let z = SubalgebraBasis::center(&g, &f);
        let coords: Vector = (0..z.dim()).map(|i| f.from_int(i as i64 + 1)).collect();
        let x = z.combine(&coords);
        assert_eq!(z.coordinates(&x), Some(coords));
        assert!(z.coordinates(&AlgebraElement::basis(&g, &f, 1)).is_none());
        let generic = SubalgebraBasis::spanned_by(&g, &f, SubalgebraKind::Other, z.basis().to_vec());
        assert_eq!(generic.coordinates(&x), z.coordinates(&x));
    }

    #[test]
    fn conjugation_and_truncation() {
        let (g, f) = setup("S3", 2);
        let t = Subgroup::generated(&g, &[1]).unwrap();
        let class: Vec<usize> = g.conjugacy_classes().iter().find(|c| c.contains(&1)).unwrap().clone();
        let x = AlgebraElement::sum_of(&g, &f, &class);
        assert!(x.is_central());
        assert_eq!(x.truncate_to(&t.centralizer()), AlgebraElement::basis(&g, &f, 1));
        assert_eq!(AlgebraElement::basis(&g, &f, 2).conjugate(1), AlgebraElement::basis(&g, &f, g.conj(1, 2)));
    }
}
