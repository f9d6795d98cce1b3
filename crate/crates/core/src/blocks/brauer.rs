use crate::algebra::{AlgebraElement, SubalgebraBasis};
use crate::error::{AlgebraError, BlockError};
use crate::field::{FieldElement, FiniteField};
use crate::group::{p_prime_part, Limits, Subgroup};
use crate::linalg::SemiEchelon;

use super::trace::{modified_trace, trace_map};

fn ensure_p_group(d: &Subgroup, field: &FiniteField) -> Result<(), BlockError> {
    if d.is_p_group(field.characteristic()) {
        Ok(())
    } else {
        Err(BlockError::NotAPGroup(d.order()))
    }
}

/// `Br_D(x)`: the part of a `D`-fixed element supported on `C_G(D)`.
pub fn brauer_hom(d: &Subgroup, x: &AlgebraElement) -> Result<AlgebraElement, BlockError> {
    ensure_p_group(d, x.field())?;
    if let Some(g) = x.fixed_violation(d) {
        return Err(AlgebraError::NotFixed(g).into());
    }
    Ok(x.truncate_to(&d.centralizer()))
}

/// `Br_D(xy) = Br_D(x) Br_D(y)` on all pairs of `D`-orbit sums. Returns
/// the first failing pair, if any.
pub fn brauer_multiplicativity_check(d: &Subgroup, field: &FiniteField) -> Result<Option<(usize, usize)>, BlockError> {
    ensure_p_group(d, field)?;
    let fixed = SubalgebraBasis::fixed_points(d, field);
    let c = d.centralizer();
    let basis = fixed.basis();
    let truncated: Vec<AlgebraElement> = basis.iter().map(|b| b.truncate_to(&c)).collect();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if (&basis[i] * &basis[j]).truncate_to(&c) != &truncated[i] * &truncated[j] {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerKernelReport {
    pub holds: bool,
    /// Dimension of `ker Br_D`: `D`-orbit sums off `C_G(D)`.
    pub kernel_dim: usize,
    /// Dimension of `sum_{Q<D} Tr_Q^D(kG^Q)`.
    pub trace_span_dim: usize,
    /// Dimension of the sum of both spaces.
    pub joint_dim: usize,
    pub proper_subgroup_classes: usize,
}

/// Checks `ker Br_D = sum_{Q<D} Tr_Q^D(kG^Q)` as subspaces of `kG^D`.
pub fn brauer_kernel_check(d: &Subgroup, field: &FiniteField, limits: Limits) -> Result<BrauerKernelReport, BlockError> {
    ensure_p_group(d, field)?;
    let g = d.parent();
    let n = g.order();
    let p = field.characteristic();
    let embedding = d.as_group();
    let proper: Vec<Subgroup> = embedding
        .source()
        .p_subgroups_up_to_conjugacy(p, limits)?
        .iter()
        .map(|q| embedding.image_of(q))
        .filter(|q| q.order() < d.order())
        .collect();
    let mut traces = SemiEchelon::new(field, n);
    let mut vectors = Vec::new();
    for q in &proper {
        for b in SubalgebraBasis::fixed_points(q, field).basis() {
            let t = trace_map(q, d, b)?.into_coeffs();
            if traces.insert(&t).is_ok() {
                vectors.push(t);
            }
        }
    }
    let fixed = SubalgebraBasis::fixed_points(d, field);
    let mut kernel = SemiEchelon::new(field, n);
    for (orbit, b) in fixed.orbits().expect("orbit basis").iter().zip(fixed.basis()) {
        if orbit.len() > 1 {
            let _ = kernel.insert(b.coeffs());
        }
    }
    let mut joint = kernel.clone();
    for v in &vectors {
        let _ = joint.insert(v);
    }
    let (kd, td, jd) = (kernel.rank(), traces.rank(), joint.rank());
    Ok(BrauerKernelReport { holds: kd == td && td == jd, kernel_dim: kd, trace_span_dim: td, joint_dim: jd, proper_subgroup_classes: proper.len() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramReport {
    pub holds: bool,
    /// `1 / |G : N_G(D)|_{p'}`
    pub scalar: FieldElement,
    pub basis_size: usize,
    pub mismatches: usize,
    pub first_mismatch: Option<usize>,
}

/// Checks `Br_D o Tr~_D^G = b * (Tr~_D^{N_G(D)} o Br_D)` on every `D`-orbit
/// sum, with `b = 1 / |G : N_G(D)|_{p'}`.
pub fn diagram_commutation_check(d: &Subgroup, field: &FiniteField) -> Result<DiagramReport, BlockError> {
    ensure_p_group(d, field)?;
    let g = d.parent();
    let whole = Subgroup::whole(g);
    let normalizer = d.normalizer();
    let index = p_prime_part(g.order() / normalizer.order(), field.characteristic());
    let scalar = field.inv(field.from_int(index as i64))?;
    let fixed = SubalgebraBasis::fixed_points(d, field);
    let mut mismatches = 0;
    let mut first = None;
    for (i, x) in fixed.basis().iter().enumerate() {
        let lhs = brauer_hom(d, &modified_trace(d, &whole, x)?)?;
        let rhs = modified_trace(d, &normalizer, &brauer_hom(d, x)?)?.scale(scalar);
        if lhs != rhs {
            mismatches += 1;
            first.get_or_insert(i);
        }
    }
    Ok(DiagramReport { holds: mismatches == 0, scalar, basis_size: fixed.dim(), mismatches, first_mismatch: first })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named_group;

    #[test]
    fn brauer_of_transposition_class_in_f2s3() {
        let g = named_group(&"S3".parse().unwrap(), Limits::default()).unwrap();
        let f = FiniteField::new(2, 1).unwrap();
        let class = g.conjugacy_classes().iter().find(|c| c.contains(&1)).unwrap().clone();
        let d = Subgroup::generated(&g, &[1]).unwrap();
        let x = AlgebraElement::sum_of(&g, &f, &class);
        assert_eq!(brauer_hom(&d, &x).unwrap(), AlgebraElement::basis(&g, &f, 1));
        let one = AlgebraElement::one(&g, &f);
        assert_eq!(brauer_hom(&d, &one).unwrap(), one);
        assert!(matches!(brauer_hom(&g.sylow(3), &one), Err(BlockError::NotAPGroup(3))));
    }

    #[test]
    fn kernel_identity_in_s3() {
        let g = named_group(&"S3".parse().unwrap(), Limits::default()).unwrap();
        let f = FiniteField::new(2, 1).unwrap();
        let d = Subgroup::generated(&g, &[1]).unwrap();
        let r = brauer_kernel_check(&d, &f, Limits::default()).unwrap();
        assert!(r.holds);
        assert_eq!(r.kernel_dim, 2);
        let trivial = brauer_kernel_check(&Subgroup::trivial(&g), &f, Limits::default()).unwrap();
        assert!(trivial.holds);
        assert_eq!(trivial.kernel_dim, 0);
    }

    #[test]
    fn diagram_in_s3_over_gf4() {
        let g = named_group(&"S3".parse().unwrap(), Limits::default()).unwrap();
        let f = FiniteField::new(2, 2).unwrap();
        let d = Subgroup::generated(&g, &[1]).unwrap();
        let r = diagram_commutation_check(&d, &f).unwrap();
        assert!(r.holds);
        assert_eq!(r.basis_size, 4);
        assert_eq!(r.scalar, f.inv(f.from_int(3)).unwrap());
    }
}
