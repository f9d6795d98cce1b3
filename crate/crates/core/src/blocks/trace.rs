use crate::algebra::{AlgebraElement, SubalgebraBasis, SubalgebraKind};
use crate::error::{AlgebraError, BlockError};
use crate::field::{FieldElement, FiniteField};
use crate::group::{p_prime_part, Subgroup};

use super::ensure_subgroup;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TraceKind {
    /// `Tr_H^L`
    Plain,
    /// `Tr~_H^L = |L:H|_{p'}^-1 Tr_H^L`
    Modified,
}

fn check_inputs(h: &Subgroup, l: &Subgroup, x: &AlgebraElement) -> Result<(), BlockError> {
    ensure_subgroup(h, l, ("H", "L"))?;
    if let Some(g) = x.fixed_violation(h) {
        return Err(AlgebraError::NotFixed(g).into());
    }
    Ok(())
}

/// `sum_{r in reps} r x r^-1` for the given left coset representatives.
pub fn trace_map_with_representatives(h: &Subgroup, l: &Subgroup, x: &AlgebraElement, reps: &[usize]) -> Result<AlgebraElement, BlockError> {
    check_inputs(h, l, x)?;
    Ok(sum_conjugates(x, reps))
}

fn sum_conjugates(x: &AlgebraElement, reps: &[usize]) -> AlgebraElement {
    let g = x.group();
    let f = x.field();
    let mut out = vec![FieldElement::ZERO; g.order()];
    let terms = x.to_sparse();
    for &r in reps {
        for &(y, c) in &terms {
            let z = g.conj(r, y);
            out[z] = f.add(out[z], c);
        }
    }
    AlgebraElement::from_coeffs(g, f, out)
}

/// `Tr_H^L(x)` with smallest-index coset representatives.
pub fn trace_map(h: &Subgroup, l: &Subgroup, x: &AlgebraElement) -> Result<AlgebraElement, BlockError> {
    trace_map_with_representatives(h, l, x, &h.left_transversal(l))
}

pub(crate) fn p_prime_index_inverse(field: &FiniteField, h: &Subgroup, l: &Subgroup) -> FieldElement {
    let m = p_prime_part(l.order() / h.order(), field.characteristic());
    field.inv(field.from_int(m as i64)).expect("p'-part is invertible")
}

/// `Tr~_H^L(x)`.
pub fn modified_trace(h: &Subgroup, l: &Subgroup, x: &AlgebraElement) -> Result<AlgebraElement, BlockError> {
    Ok(trace_map(h, l, x)?.scale(p_prime_index_inverse(x.field(), h, l)))
}

/// The image `Tr_Q^L(kG^Q)`, spanned by traces of `Q`-orbit sums.
pub fn trace_image(q: &Subgroup, l: &Subgroup, field: &FiniteField, kind: TraceKind) -> Result<SubalgebraBasis, BlockError> {
    ensure_subgroup(q, l, ("Q", "L"))?;
    let fixed = SubalgebraBasis::fixed_points(q, field);
    let reps = q.left_transversal(l);
    let scale = match kind {
        TraceKind::Plain => field.one(),
        TraceKind::Modified => p_prime_index_inverse(field, q, l),
    };
    let images = fixed.basis().iter().map(|b| sum_conjugates(b, &reps).scale(scale)).collect();
    Ok(SubalgebraBasis::spanned_by(q.parent(), field, SubalgebraKind::Other, images))
}

/// Whether `x` lies in `Tr_Q^L(kG^Q)` (or its modified counterpart),
/// decided as a linear system in the orbit-sum basis.
pub fn trace_membership(x: &AlgebraElement, q: &Subgroup, l: &Subgroup, kind: TraceKind) -> Result<bool, BlockError> {
    Ok(trace_image(q, l, x.field(), kind)?.contains(x))
}

#[derive(Clone, Debug)]
pub struct MackeyReport {
    pub holds: bool,
    pub double_cosets: usize,
    /// `Tr_L^G(a)`
    pub lhs: AlgebraElement,
    /// `sum_{g in H\G/L} Tr_{H cap gLg^-1}^H(g a g^-1)`
    pub rhs: AlgebraElement,
}

/// Checks `Tr_L^G(a) = sum_{g in H\G/L} Tr_{H cap gL}^H(g a)` for `a` in `kG^L`.
pub fn mackey_verify(h: &Subgroup, l: &Subgroup, a: &AlgebraElement) -> Result<MackeyReport, BlockError> {
    let g = h.parent();
    let whole = Subgroup::whole(g);
    let lhs = trace_map(l, &whole, a)?;
    let reps = g.double_cosets(h, l);
    let mut rhs = AlgebraElement::zero(g, a.field());
    for &x in &reps {
        let inner = h.intersection(&l.conjugate(x));
        rhs = &rhs + &trace_map(&inner, h, &a.conjugate(x))?;
    }
    Ok(MackeyReport { holds: lhs == rhs, double_cosets: reps.len(), lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{named_group, Limits};

    #[test]
    fn trace_of_one_is_the_index() {
        let g = named_group(&"S3".parse().unwrap(), Limits::default()).unwrap();
        let f = FiniteField::new(3, 1).unwrap();
        let c3 = g.sylow(3);
        let whole = Subgroup::whole(&g);
        let one = AlgebraElement::one(&g, &f);
        assert_eq!(trace_map(&c3, &whole, &one).unwrap(), one.scale(f.from_int(2)));
        assert_eq!(modified_trace(&c3, &whole, &one).unwrap(), one);
        assert_eq!(modified_trace(&c3, &c3, &one).unwrap(), one);
    }

    #[test]
    fn trace_from_trivial_subgroup_of_c2() {
        let g = named_group(&"C2".parse().unwrap(), Limits::default()).unwrap();
        let f = FiniteField::new(2, 1).unwrap();
        let t = trace_map(&Subgroup::trivial(&g), &Subgroup::whole(&g), &AlgebraElement::one(&g, &f)).unwrap();
        assert!(t.is_zero());
        let x = AlgebraElement::basis(&g, &f, 1);
        assert_eq!(trace_map(&Subgroup::trivial(&g), &Subgroup::whole(&g), &x).unwrap(), x.scale(f.from_int(2)));
    }

    #[test]
    fn rejects_unfixed_input() {
        let g = named_group(&"S3".parse().unwrap(), Limits::default()).unwrap();
        let f = FiniteField::new(2, 1).unwrap();
        let x = AlgebraElement::basis(&g, &f, 2);
        let t = Subgroup::generated(&g, &[1]).unwrap();
        assert!(matches!(trace_map(&t, &Subgroup::whole(&g), &x), Err(BlockError::Algebra(AlgebraError::NotFixed(_)))));
    }
}
