use std::sync::Arc;

use crate::blocks::Block;
use crate::error::{GroupError, ModuleError};
use crate::group::{Limits, Subgroup};
use crate::linalg::{Matrix, Vector};

use super::Rep;

/// Higman's criterion: `U` is relatively `H`-projective iff some
/// `a in End_{kH}(U)` has `sum_{s in G/H} s a s^-1 = id`. Returns such an
/// `a` when it exists.
pub fn higman_projectivity(u: &Rep, h: &Subgroup) -> Result<Option<Matrix>, ModuleError> {
    if !Arc::ptr_eq(h.parent(), u.group()) {
        return Err(GroupError::ParentMismatch.into());
    }
    let f = u.field();
    let d = u.dim();
    let restricted = u.pull_back(&h.as_group());
    let endomorphisms = restricted.intertwiners(&restricted);
    let reps = h.left_transversal(&Subgroup::whole(u.group()));
    let g = u.group();
    let traces: Vec<Matrix> = endomorphisms
        .iter()
        .map(|a| {
            reps.iter().fold(Matrix::zeros(f, d, d), |acc, &s| acc.add(&u.matrix(s).mul(a).mul(u.matrix(g.inv(s)))))
        })
        .collect();
    if traces.is_empty() {
        return Ok(None);
    }
    // Columns are the vectorised traces; solve for the identity.
    let columns: Vec<Vector> = traces.iter().map(|t| t.data().to_vec()).collect();
    let system = Matrix::from_columns(f, d * d, &columns);
    let target = Matrix::identity(f, d);
    Ok(system.solve(target.data()).map(|c| {
        endomorphisms
            .iter()
            .zip(&c)
            .filter(|(_, x)| !x.is_zero())
            .fold(Matrix::zeros(f, d, d), |acc, (a, &x)| acc.add(&a.scale(x)))
    }))
}

/// The vertex of an indecomposable module: the unique class of minimal
/// p-subgroups relative to which it is projective.
pub fn vertex(u: &Rep, limits: Limits) -> Result<Subgroup, ModuleError> {
    let p = u.field().characteristic();
    let mut found: Vec<Subgroup> = Vec::new();
    for q in u.group().p_subgroups_up_to_conjugacy(p, limits)? {
        if found.first().is_some_and(|f| f.order() < q.order()) {
            break;
        }
        if higman_projectivity(u, &q)?.is_some() {
            found.push(q);
        }
    }
    match found.len() {
        0 => Err(ModuleError::NoVertex),
        1 => Ok(found.pop().expect("one class")),
        _ => Err(ModuleError::AmbiguousVertex(found.iter().map(|q| q.order()).collect())),
    }
}

/// A simple module of the block whose vertex is conjugate to the defect
/// group, as `(index into simples, vertex)`.
pub fn simple_with_vertex_equal_defect(block: &Block, simples: &[Rep], limits: Limits) -> Result<Option<(usize, Subgroup)>, ModuleError> {
    let d = block.defect_group(limits)?;
    for (i, s) in simples.iter().enumerate() {
        if !s.lies_in(block) {
            continue;
        }
        let v = vertex(s, limits)?;
        if v.is_conjugate_to(&d) {
            return Ok(Some((i, v)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::group::named_group;

    #[test]
    fn regular_module_is_projective_and_trivial_is_not() {
        let g = named_group(&"S3".parse().unwrap(), Limits::default()).unwrap();
        let f = FiniteField::new(3, 1).unwrap();
        let one = Subgroup::trivial(&g);
        assert!(higman_projectivity(&Rep::regular(&g, &f), &one).unwrap().is_some());
        assert!(higman_projectivity(&Rep::trivial(&g, &f), &one).unwrap().is_none());
        let witness = higman_projectivity(&Rep::trivial(&g, &f), &g.sylow(3)).unwrap();
        assert!(witness.is_some());
    }

    #[test]
    fn trivial_module_has_sylow_vertex() {
        for (name, p) in [("S3", 2), ("S3", 3), ("A4", 2), ("C6", 3)] {
            let g = named_group(&name.parse().unwrap(), Limits::default()).unwrap();
            let f = FiniteField::new(p, 1).unwrap();
            let v = vertex(&Rep::trivial(&g, &f), Limits::default()).unwrap();
            assert_eq!(v.order(), g.sylow(p).order(), "{name} p={p}");
        }
    }
}
