use std::fmt;
use std::sync::Arc;

use super::{FiniteGroup, Limits, Subgroup};
use crate::error::GroupError;

/// A homomorphism given by the image of every source element.
#[derive(Clone)]
pub struct GroupMorphism {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<usize>,
}

impl fmt::Debug for GroupMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupMorphism({} -> {})", self.source.order(), self.target.order())
    }
}

impl GroupMorphism {
    /// Validates `images[xy] = images[x] images[y]` exhaustively.
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self, GroupError> {
        if images.len() != source.order() {
            return Err(GroupError::BadParameters(format!("expected {} images, got {}", source.order(), images.len())));
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= target.order()) {
            return Err(GroupError::BadElement(bad));
        }
        let m = Self::new_unchecked(source, target, images);
        m.check()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<usize>) -> Self {
        GroupMorphism { source, target, images }
    }

    pub fn check(&self) -> Result<(), GroupError> {
        let (s, t) = (&self.source, &self.target);
        if self.images[0] != 0 {
            return Err(GroupError::NotAHomomorphism { x: 0, y: 0 });
        }
        for x in 0..s.order() {
            for y in 0..s.order() {
                if self.images[s.mul(x, y)] != t.mul(self.images[x], self.images[y]) {
                    return Err(GroupError::NotAHomomorphism { x, y });
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn kernel(&self) -> Subgroup {
        let list = (0..self.source.order()).filter(|&x| self.images[x] == 0).collect();
        Subgroup::from_sorted(&self.source, list)
    }

    pub fn image_of(&self, h: &Subgroup) -> Subgroup {
        let mut list: Vec<usize> = h.elements().iter().map(|&x| self.images[x]).collect();
        list.sort_unstable();
        list.dedup();
        Subgroup::from_sorted(&self.target, list)
    }

    pub fn image(&self) -> Subgroup {
        self.image_of(&Subgroup::whole(&self.source))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &y in &self.images {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Full preimage of a subgroup of the target.
    pub fn preimage_of(&self, k: &Subgroup) -> Subgroup {
        let list = (0..self.source.order()).filter(|&x| k.contains(self.images[x])).collect();
        Subgroup::from_sorted(&self.source, list)
    }

    pub fn compose(&self, after: &GroupMorphism) -> GroupMorphism {
        let images = self.images.iter().map(|&y| after.images[y]).collect();
        GroupMorphism::new_unchecked(self.source.clone(), after.target.clone(), images)
    }
}

/// `G/N` with cosets numbered by their smallest member, and the projection.
pub fn quotient(g: &Arc<FiniteGroup>, n: &Subgroup) -> Result<(Arc<FiniteGroup>, GroupMorphism), GroupError> {
    if !Arc::ptr_eq(n.parent(), g) {
        return Err(GroupError::ParentMismatch);
    }
    if let Some((conjugator, element)) = n.normality_witness(&Subgroup::whole(g)) {
        return Err(GroupError::NotNormal { conjugator, element });
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for &h in n.elements() {
            coset_of[g.mul(x, h)] = reps.len();
        }
        reps.push(x);
    }
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            table.push(coset_of[g.mul(a, b)] as u16);
        }
    }
    let mut gens: Vec<usize> = Vec::new();
    for &x in g.generators() {
        let c = coset_of[x];
        if c != 0 && !gens.contains(&c) {
            gens.push(c);
        }
    }
    let labels = g.labels().map(|l| reps.iter().map(|&r| if n.is_trivial() { l[r].clone() } else { format!("{}N", l[r]) }).collect());
    let q = FiniteGroup::from_flat_table(m, table, Some(gens), labels);
    let proj = GroupMorphism::new_unchecked(g.clone(), q.clone(), coset_of);
    Ok((q, proj))
}

/// `A x B` with `(a, b)` numbered `a * |B| + b`.
pub fn direct_product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>, limits: Limits) -> Result<Arc<FiniteGroup>, GroupError> {
    let (na, nb) = (a.order(), b.order());
    let n = na.checked_mul(nb).unwrap_or(usize::MAX);
    let cap = limits.max_order.min(super::HARD_MAX_ORDER);
    if n > cap {
        return Err(GroupError::TooLarge { cap });
    }
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            table.push((a.mul(xa, ya) * nb + b.mul(xb, yb)) as u16);
        }
    }
    let mut gens: Vec<usize> = a.generators().iter().map(|&g| g * nb).collect();
    gens.extend(b.generators().iter().copied());
    let labels = (0..n).map(|x| format!("({},{})", a.label(x / nb), b.label(x % nb))).collect();
    Ok(FiniteGroup::from_flat_table(n, table, Some(gens), Some(labels)))
}

/// `G x G` and the diagonal embedding `g -> (g, g)`.
pub fn direct_square(g: &Arc<FiniteGroup>, limits: Limits) -> Result<(Arc<FiniteGroup>, GroupMorphism), GroupError> {
    let gg = direct_product(g, g, limits)?;
    let n = g.order();
    let delta = (0..n).map(|x| x * n + x).collect();
    Ok((gg.clone(), GroupMorphism::new_unchecked(g.clone(), gg, delta)))
}

#[cfg(test)]
mod tests {
    use super::super::{named_group, NamedGroup};
    use super::*;

    fn group(name: &str) -> Arc<FiniteGroup> {
        named_group(&name.parse::<NamedGroup>().unwrap(), Limits::default()).unwrap()
    }

    #[test]
    fn quotient_of_c4_by_its_involution() {
        let c4 = group("C4");
        let n = Subgroup::generated(&c4, &[c4.pow(1, 2)]).unwrap();
        let (q, proj) = quotient(&c4, &n).unwrap();
        assert_eq!(q.order(), 2);
        assert!(proj.check().is_ok());
        assert_eq!(proj.kernel(), n);
    }

    #[test]
    fn quotient_by_trivial_is_isomorphic() {
        let s3 = group("S3");
        let (q, proj) = quotient(&s3, &Subgroup::trivial(&s3)).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(proj.images(), &(0..6).collect::<Vec<_>>()[..]);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = group("S3");
        let t = Subgroup::generated(&s3, &[1]).unwrap();
        assert!(matches!(quotient(&s3, &t), Err(GroupError::NotNormal { .. })));
    }

    #[test]
    fn diagonal_of_c2() {
        let c2 = group("C2");
        let (gg, d) = direct_square(&c2, Limits::default()).unwrap();
        assert_eq!(gg.order(), 4);
        assert_eq!(d.apply(1), 3);
        assert!(d.check().is_ok());
        assert_eq!(direct_square(&group("S3"), Limits::default()).unwrap().0.order(), 36);
    }
}
