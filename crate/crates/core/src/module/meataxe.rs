//! Deterministic splitting of modules into composition factors using
//! Norton's irreducibility test.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::ModuleError;
use crate::field::{FieldElement, FiniteField};
use crate::group::FiniteGroup;
use crate::linalg::{Matrix, SemiEchelon, Vector};

use super::Rep;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct MeataxeLimits {
    /// Largest number of kernel points spun for one test.
    pub exhaustive_cap: u128,
    /// Candidate algebra elements examined when looking for a small kernel.
    pub candidate_budget: usize,
}

impl Default for MeataxeLimits {
    fn default() -> Self {
        MeataxeLimits { exhaustive_cap: 1 << 20, candidate_budget: 256 }
    }
}

/// Smallest subspace containing `seeds` and closed under `generators`.
pub fn spin(field: &FiniteField, dim: usize, generators: &[&Matrix], seeds: &[Vector]) -> Vec<Vector> {
    let mut echelon = SemiEchelon::new(field, dim);
    let mut basis = Vec::new();
    for s in seeds {
        if echelon.insert(s).is_ok() {
            basis.push(s.clone());
        }
    }
    let mut i = 0;
    while i < basis.len() && basis.len() < dim {
        for m in generators {
            let w = m.apply(&basis[i]);
            if echelon.insert(&w).is_ok() {
                basis.push(w);
            }
        }
        i += 1;
    }
    basis
}

/// Nonzero vectors of the span of `basis` up to scalars: the first nonzero
/// coordinate is one.
fn projective_points<'a>(field: &'a FiniteField, basis: &'a [Vector]) -> impl Iterator<Item = Vector> + 'a {
    let n = basis.len();
    let q = field.size() as u64;
    let len = basis.first().map_or(0, |b| b.len());
    (0..n).flat_map(move |lead| {
        let tail = n - lead - 1;
        (0..q.pow(tail as u32)).map(move |mut code| {
            let mut v = basis[lead].clone();
            for b in &basis[lead + 1..] {
                let c = field.element((code % q) as u32);
                code /= q;
                if !c.is_zero() {
                    crate::linalg::axpy(field, &mut v, c, b);
                }
            }
            debug_assert_eq!(v.len(), len);
            v
        })
    })
}

fn point_count(q: u128, n: usize) -> Option<u128> {
    q.checked_pow(n as u32).map(|t| (t - 1) / (q - 1))
}

/// A singular algebra element with the smallest positive nullity among
/// `M(g) - c I` and `M(g) + M(h) - c I`, visited in a fixed order.
fn singular_element(u: &Rep, limits: MeataxeLimits) -> Matrix {
    let f = u.field();
    let d = u.dim();
    let n = u.group().order();
    let scalars: Vec<FieldElement> = f.elements().take(64).collect();
    let identity = Matrix::identity(f, d);
    let mut best: Option<(usize, Matrix)> = None;
    let singles = (1..n).map(|g| u.matrix(g).clone());
    let pairs = (1..n).flat_map(|g| (g + 1..n).map(move |h| (g, h))).map(|(g, h)| u.matrix(g).add(u.matrix(h)));
    for base in singles.chain(pairs).take(limits.candidate_budget) {
        for &c in &scalars {
            let a = base.sub(&identity.scale(c));
            let nullity = d - a.rank();
            if nullity > 0 && best.as_ref().map_or(true, |(b, _)| nullity < *b) {
                best = Some((nullity, a));
                if nullity == 1 {
                    return best.expect("set").1;
                }
            }
        }
    }
    best.map_or_else(|| Matrix::zeros(f, d, d), |(_, a)| a)
}

/// A basis of a proper nonzero submodule, or `None` when `u` is simple.
pub(crate) fn find_submodule(u: &Rep, limits: MeataxeLimits) -> Result<Option<Vec<Vector>>, ModuleError> {
    let d = u.dim();
    if d <= 1 {
        return Ok(None);
    }
    let f = u.field();
    let gens = u.generator_images();
    let a = singular_element(u, limits);
    let kernel = a.right_kernel();
    let q = f.size() as u128;
    let size = point_count(q, kernel.len()).filter(|&s| s <= limits.exhaustive_cap);
    let Some(_) = size else {
        return Err(ModuleError::Feasibility { size: q.saturating_pow(kernel.len() as u32) });
    };
    for v in projective_points(f, &kernel) {
        let w = spin(f, d, &gens, &[v]);
        if w.len() < d {
            return Ok(Some(w));
        }
    }
    // Every kernel vector generates U; U is reducible iff one vector of the
    // transposed kernel fails to generate the dual.
    let transposed: Vec<Matrix> = gens.iter().map(|m| m.transpose()).collect();
    let transposed: Vec<&Matrix> = transposed.iter().collect();
    let dual_kernel = a.transpose().right_kernel();
    let dual = spin(f, d, &transposed, &dual_kernel[..1]);
    if dual.len() < d {
        let annihilator = Matrix::from_rows(f, d, &dual).right_kernel();
        return Ok(Some(annihilator));
    }
    Ok(None)
}

/// Whether `u` has no proper nonzero submodule.
pub fn is_simple(u: &Rep, limits: MeataxeLimits) -> Result<bool, ModuleError> {
    Ok(find_submodule(u, limits)?.is_none())
}

/// Composition factors of `u` up to isomorphism, each with its
/// multiplicity, in order of first appearance.
pub fn composition_factors(u: &Rep, limits: MeataxeLimits) -> Result<Vec<(Rep, usize)>, ModuleError> {
    let mut factors: Vec<(Rep, usize)> = Vec::new();
    let mut pending = VecDeque::from([u.clone()]);
    while let Some(m) = pending.pop_front() {
        if m.dim() == 0 {
            continue;
        }
        match find_submodule(&m, limits)? {
            Some(w) => {
                pending.push_front(m.quotient(&w)?);
                pending.push_front(m.subrep(&w)?);
            }
            None => match factors.iter_mut().find(|(s, _)| s.dim() == m.dim() && !s.intertwiners(&m).is_empty()) {
                Some((_, k)) => *k += 1,
                None => factors.push((m, 1)),
            },
        }
    }
    Ok(factors)
}

/// Every simple `kG`-module up to isomorphism, obtained by chopping the
/// regular module; sorted by dimension, ties in order of discovery.
pub fn chop_simples(group: &Arc<FiniteGroup>, field: &FiniteField, limits: MeataxeLimits) -> Result<Vec<Rep>, ModuleError> {
    let mut simples: Vec<Rep> = composition_factors(&Rep::regular(group, field), limits)?.into_iter().map(|(s, _)| s).collect();
    simples.sort_by_key(|s| s.dim());
    Ok(simples)
}
