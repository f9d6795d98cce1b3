use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::{is_power_of, p_part, FiniteGroup, GroupMorphism, Limits};
use crate::error::GroupError;

/// A subgroup as a strictly sorted list of parent element indices.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

/// Ordered by order, then by element list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.elements.len(), &self.elements).cmp(&(other.elements.len(), &other.elements))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order(), self.elements)
    }
}

impl Subgroup {
    /// Validates closure; `elements` may be in any order.
    pub fn new(parent: &Arc<FiniteGroup>, elements: &[usize]) -> Result<Self, GroupError> {
        let n = parent.order();
        let mut member = vec![false; n];
        for &x in elements {
            if x >= n {
                return Err(GroupError::BadElement(x));
            }
            member[x] = true;
        }
        if !member[0] {
            return Err(GroupError::NotASubgroup("identity missing".into()));
        }
        let list: Vec<usize> = (0..n).filter(|&x| member[x]).collect();
        for &a in &list {
            for &b in &list {
                if !member[parent.mul(a, b)] {
                    return Err(GroupError::NotASubgroup(format!("{a}*{b} not in set")));
                }
            }
        }
        Ok(Subgroup { parent: parent.clone(), elements: list })
    }

    pub(crate) fn from_sorted(parent: &Arc<FiniteGroup>, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { parent: parent.clone(), elements }
    }

    pub fn generated(parent: &Arc<FiniteGroup>, generators: &[usize]) -> Result<Self, GroupError> {
        if let Some(&bad) = generators.iter().find(|&&g| g >= parent.order()) {
            return Err(GroupError::BadElement(bad));
        }
        Ok(Self::from_sorted(parent, parent.closure(generators)))
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Self {
        Self::from_sorted(parent, vec![0])
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Self {
        Self::from_sorted(parent, (0..parent.order()).collect())
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent.order()
    }

    pub fn index_in(&self, larger: &Subgroup) -> usize {
        larger.order() / self.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_p_group(&self, p: u32) -> bool {
        is_power_of(self.order(), p)
    }

    /// Greedy generators in increasing index order.
    pub fn generators(&self) -> Vec<usize> {
        self.parent.greedy_generators(self.elements.iter().copied())
    }

    /// `g H g^-1`
    pub fn conjugate(&self, g: usize) -> Subgroup {
        let mut list: Vec<usize> = self.elements.iter().map(|&x| self.parent.conj(g, x)).collect();
        list.sort_unstable();
        Self::from_sorted(&self.parent, list)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let list = self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        Self::from_sorted(&self.parent, list)
    }

    /// Subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.generators();
        gens.extend(other.generators());
        Self::from_sorted(&self.parent, self.parent.closure(&gens))
    }

    /// Exhaustive normality test with a violation witness `(g, h)`.
    pub fn normality_witness(&self, within: &Subgroup) -> Option<(usize, usize)> {
        for &g in within.elements() {
            for &h in &self.elements {
                if !self.contains(self.parent.conj(g, h)) {
                    return Some((g, h));
                }
            }
        }
        None
    }

    pub fn is_normal_in(&self, within: &Subgroup) -> bool {
        self.normality_witness(within).is_none()
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal_in(&Subgroup::whole(&self.parent))
    }

    /// `N_within(H)`, by scanning `within`.
    pub fn normalizer_in(&self, within: &Subgroup) -> Subgroup {
        let list = within
            .elements()
            .iter()
            .copied()
            .filter(|&g| self.elements.iter().all(|&h| self.contains(self.parent.conj(g, h))))
            .collect();
        Self::from_sorted(&self.parent, list)
    }

    pub fn normalizer(&self) -> Subgroup {
        self.normalizer_in(&Subgroup::whole(&self.parent))
    }

    /// `C_within(H)`; only the generators of `H` need checking.
    pub fn centralizer_in(&self, within: &Subgroup) -> Subgroup {
        let gens = self.generators();
        let g = &self.parent;
        let list = within.elements().iter().copied().filter(|&x| gens.iter().all(|&h| g.mul(x, h) == g.mul(h, x))).collect();
        Self::from_sorted(&self.parent, list)
    }

    pub fn centralizer(&self) -> Subgroup {
        self.centralizer_in(&Subgroup::whole(&self.parent))
    }

    /// Left coset representatives of `self` in `larger` (cosets `gH`),
    /// smallest index first.
    pub fn left_transversal(&self, larger: &Subgroup) -> Vec<usize> {
        let g = &self.parent;
        let mut covered = vec![false; g.order()];
        let mut reps = Vec::with_capacity(larger.order() / self.order());
        for &x in larger.elements() {
            if covered[x] {
                continue;
            }
            reps.push(x);
            for &h in &self.elements {
                covered[g.mul(x, h)] = true;
            }
        }
        reps
    }

    /// Same cosets as [`Self::left_transversal`], each represented by its
    /// largest member. Used to test representative independence.
    pub fn left_transversal_largest(&self, larger: &Subgroup) -> Vec<usize> {
        let g = &self.parent;
        self.left_transversal(larger)
            .into_iter()
            .map(|x| self.elements.iter().map(|&h| g.mul(x, h)).max().unwrap_or(x))
            .collect()
    }

    /// Conjugating element `g` with `g A g^-1 = B`, if any.
    pub fn conjugating_element(&self, other: &Subgroup) -> Option<usize> {
        if self.order() != other.order() {
            return None;
        }
        (0..self.parent.order()).find(|&g| self.elements.iter().all(|&x| other.contains(self.parent.conj(g, x))))
    }

    pub fn is_conjugate_to(&self, other: &Subgroup) -> bool {
        self.conjugating_element(other).is_some()
    }

    /// Lexicographically smallest conjugate element list; a canonical
    /// key for the conjugacy class.
    pub fn canonical_conjugate(&self) -> Vec<usize> {
        let g = &self.parent;
        let mut best: Option<Vec<usize>> = None;
        let mut buf = Vec::with_capacity(self.order());
        for x in 0..g.order() {
            buf.clear();
            buf.extend(self.elements.iter().map(|&h| g.conj(x, h)));
            buf.sort_unstable();
            if best.as_ref().map_or(true, |b| buf < *b) {
                best = Some(buf.clone());
            }
        }
        best.unwrap_or_default()
    }

    /// The subgroup as a standalone group with its embedding into the
    /// parent. Element `i` of the new group is `elements()[i]`.
    pub fn as_group(&self) -> GroupMorphism {
        let g = &self.parent;
        let n = self.order();
        let pos = |x: usize| self.elements.binary_search(&x).expect("closed");
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.elements {
            for &b in &self.elements {
                table.push(pos(g.mul(a, b)) as u16);
            }
        }
        let gens = self.generators().into_iter().map(pos).collect();
        let labels = g.labels().map(|l| self.elements.iter().map(|&x| l[x].clone()).collect());
        let sub = FiniteGroup::from_flat_table(n, table, Some(gens), labels);
        GroupMorphism::new_unchecked(sub, g.clone(), self.elements.clone())
    }
}

impl FiniteGroup {
    /// Sylow p-subgroup grown deterministically: starting from the trivial
    /// group, repeatedly adjoin the smallest-index p-element `x` of
    /// `N_G(H)` outside `H` with `x^p` in `H`.
    pub fn sylow(self: &Arc<Self>, p: u32) -> Subgroup {
        let target = p_part(self.order(), p);
        let whole = Subgroup::whole(self);
        let mut h = Subgroup::trivial(self);
        while h.order() < target {
            let n = h.normalizer_in(&whole);
            let x = n
                .elements()
                .iter()
                .copied()
                .find(|&x| !h.contains(x) && self.is_p_element(x, p) && h.contains(self.pow(x, p as usize)))
                .expect("a p-subgroup below the Sylow order has a normalizer extension");
            let mut gens = h.generators();
            gens.push(x);
            h = Subgroup::from_sorted(self, self.closure(&gens));
        }
        h
    }

    /// One representative per conjugacy class of p-subgroups, sorted by
    /// order and element list. Each representative is the smallest
    /// member of its class lying inside the fixed Sylow subgroup.
    pub fn p_subgroups_up_to_conjugacy(self: &Arc<Self>, p: u32, limits: Limits) -> Result<Vec<Subgroup>, GroupError> {
        let pp = p_part(self.order(), p);
        if pp > limits.max_p_part {
            return Err(GroupError::EnumerationCap { p_part: pp, cap: limits.max_p_part });
        }
        let sylow = self.sylow(p);
        // Every subgroup of a p-group has a normal subgroup of index p, so
        // extending level by level inside the Sylow reaches all of them.
        let mut all: Vec<Subgroup> = vec![Subgroup::trivial(self)];
        let mut level: BTreeSet<Vec<usize>> = BTreeSet::from([vec![0]]);
        while !level.is_empty() {
            let mut next = BTreeSet::new();
            for list in &level {
                let h = Subgroup::from_sorted(self, list.clone());
                let gens = h.generators();
                for &x in h.normalizer_in(&sylow).elements() {
                    if h.contains(x) || !h.contains(self.pow(x, p as usize)) {
                        continue;
                    }
                    let mut g = gens.clone();
                    g.push(x);
                    next.insert(self.closure(&g));
                }
            }
            all.extend(next.iter().map(|l| Subgroup::from_sorted(self, l.clone())));
            level = next;
        }
        all.sort();
        let mut seen = BTreeSet::new();
        Ok(all.into_iter().filter(|h| seen.insert(h.canonical_conjugate())).collect())
    }

    /// Representatives of `H\G/K`, the smallest index in each double coset.
    pub fn double_cosets(self: &Arc<Self>, h: &Subgroup, k: &Subgroup) -> Vec<usize> {
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if covered[g] {
                continue;
            }
            reps.push(g);
            for &a in h.elements() {
                let ag = self.mul(a, g);
                for &b in k.elements() {
                    covered[self.mul(ag, b)] = true;
                }
            }
        }
        reps
    }

    /// Centralizer of a single element.
    pub fn centralizer_of_element(self: &Arc<Self>, x: usize) -> Subgroup {
        let list = (0..self.order()).filter(|&g| self.mul(g, x) == self.mul(x, g)).collect();
        Subgroup::from_sorted(self, list)
    }

    /// Largest normal p-subgroup: the intersection of all Sylow
    /// p-subgroups, i.e. of the conjugates of one of them.
    pub fn largest_normal_p_subgroup(self: &Arc<Self>, p: u32) -> Subgroup {
        let sylow = self.sylow(p);
        let mut core = sylow.clone();
        for g in 0..self.order() {
            core = core.intersection(&sylow.conjugate(g));
        }
        core
    }
}

#[cfg(test)]
mod tests {
    use super::super::{named_group, NamedGroup};
    use super::*;

    fn group(name: &str) -> Arc<FiniteGroup> {
        named_group(&name.parse::<NamedGroup>().unwrap(), Limits::default()).unwrap()
    }

    #[test]
    fn sylow_orders() {
        assert_eq!(group("S3").sylow(2).order(), 2);
        let p = group("S4").sylow(2);
        assert_eq!(p.order(), 8);
        assert!(p.elements().iter().all(|&x| p.parent().is_p_element(x, 2)));
        assert!(group("C4").sylow(3).is_trivial());
    }

    #[test]
    fn normalizers_and_centralizers() {
        let s3 = group("S3");
        assert!(s3.sylow(3).normalizer().is_whole());
        let t = Subgroup::generated(&s3, &[1]).unwrap();
        assert_eq!(t.centralizer().elements(), &[0, 1]);
        assert!(Subgroup::whole(&s3).normalizer().is_whole());
    }

    #[test]
    fn p_subgroup_classes() {
        assert_eq!(group("C9").p_subgroups_up_to_conjugacy(3, Limits::default()).unwrap().len(), 3);
        let s3 = group("S3").p_subgroups_up_to_conjugacy(2, Limits::default()).unwrap();
        assert_eq!(s3.iter().map(|h| h.order()).collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn double_coset_counts() {
        let s3 = group("S3");
        let whole = Subgroup::whole(&s3);
        let triv = Subgroup::trivial(&s3);
        assert_eq!(s3.double_cosets(&whole, &whole), vec![0]);
        assert_eq!(s3.double_cosets(&triv, &triv).len(), 6);
        let t = Subgroup::generated(&s3, &[1]).unwrap();
        assert_eq!(s3.double_cosets(&t, &t).len(), 2);
    }

    #[test]
    fn transversals_cover_each_coset_once() {
        let s4 = group("S4");
        let h = s4.sylow(2);
        let whole = Subgroup::whole(&s4);
        let a = h.left_transversal(&whole);
        let b = h.left_transversal_largest(&whole);
        assert_eq!(a.len(), 3);
        for (x, y) in a.iter().zip(&b) {
            assert!(h.contains(s4.mul(s4.inv(*x), *y)));
        }
    }

    #[test]
    fn as_group_embeds() {
        let s4 = group("S4");
        let m = s4.sylow(2).as_group();
        assert_eq!(m.source().order(), 8);
        assert!(m.source().validate().is_ok());
        assert!(m.check().is_ok());
    }

    #[test]
    fn largest_normal_p_subgroup_of_s4() {
        let s4 = group("S4");
        assert_eq!(s4.largest_normal_p_subgroup(2).order(), 4);
        assert!(s4.largest_normal_p_subgroup(3).is_trivial());
    }
}
