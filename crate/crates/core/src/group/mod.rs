//! Finite groups given by full Cayley tables.
//!
//! Element `0` is always the identity. Groups built from permutations are
//! enumerated breadth-first over generator words (extending words on the
//! right, generators tried in index order), so element numbering is stable.

mod morphism;
mod named;
mod subgroup;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

pub use morphism::{direct_product, direct_square, quotient, GroupMorphism};
pub use named::{named_group, NamedGroup};
pub use subgroup::Subgroup;

use crate::error::GroupError;

/// Size limits for group constructions and subgroup enumeration.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    /// Largest p-part `|G|_p` for which all p-subgroups are enumerated.
    pub max_p_part: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_order: 20_000, max_p_part: 256 }
    }
}

/// Tables are stored as `u16`.
const HARD_MAX_ORDER: usize = u16::MAX as usize;

/// Groups up to this order have associativity verified exhaustively when
/// built from a user-supplied table.
pub const EXHAUSTIVE_CHECK_ORDER: usize = 512;

pub type Permutation = Vec<u32>;

pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverses: Vec<usize>,
    generators: Vec<usize>,
    labels: Option<Vec<String>>,
    permutations: Option<Vec<Permutation>>,
    classes: OnceLock<Vec<Vec<usize>>>,
    element_orders: OnceLock<Vec<usize>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {}, {} generators)", self.order, self.generators.len())
    }
}

impl FiniteGroup {
    /// Closure of the given permutations (arrays of point images, 0-based)
    /// under composition; `(a*b)[x] = a[b[x]]`.
    pub fn from_permutations(generators: &[Permutation], limits: Limits) -> Result<Arc<Self>, GroupError> {
        let cap = limits.max_order.min(HARD_MAX_ORDER);
        let degree = generators.first().map_or(1, |g| g.len().max(1));
        for (index, g) in generators.iter().enumerate() {
            if g.len() != degree && !(generators.is_empty()) {
                return Err(GroupError::DegreeMismatch);
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x as usize >= degree || std::mem::replace(&mut seen[x as usize], true) {
                    return Err(GroupError::NotABijection { index, degree });
                }
            }
        }
        let identity: Permutation = (0..degree as u32).collect();
        let compose = |a: &Permutation, b: &Permutation| -> Permutation { b.iter().map(|&x| a[x as usize]).collect() };

        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Permutation, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = compose(&elements[x], g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(GroupError::TooLarge { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elements[a], &elements[b])] as u16;
            }
        }
        let gen_indices: Vec<usize> = {
            let mut out: Vec<usize> = Vec::new();
            for g in generators {
                let i = index[g];
                if i != 0 && !out.contains(&i) {
                    out.push(i);
                }
            }
            out
        };
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        let mut group = Self::assemble(n, table, Some(gen_indices), Some(labels));
        group.permutations = Some(elements);
        Ok(Arc::new(group))
    }

    /// A group from an explicit multiplication table (`table[a][b] = a*b`).
    /// The table is validated: `0` is the identity, rows and columns are
    /// permutations, and for orders up to 512 associativity is checked.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Arc<Self>, GroupError> {
        let n = table.len();
        if n == 0 || n > HARD_MAX_ORDER {
            return Err(GroupError::BadTable(format!("unsupported order {n}")));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in table {
            if row.len() != n {
                return Err(GroupError::BadTable("table is not square".into()));
            }
            for &x in row {
                if x >= n {
                    return Err(GroupError::BadElement(x));
                }
                flat.push(x as u16);
            }
        }
        let group = Self::assemble(n, flat, None, None);
        group.validate()?;
        Ok(Arc::new(group))
    }

    pub(crate) fn from_flat_table(n: usize, table: Vec<u16>, generators: Option<Vec<usize>>, labels: Option<Vec<String>>) -> Arc<Self> {
        let g = Self::assemble(n, table, generators, labels);
        debug_assert!(n > EXHAUSTIVE_CHECK_ORDER / 4 || g.validate().is_ok());
        Arc::new(g)
    }

    fn assemble(n: usize, table: Vec<u16>, generators: Option<Vec<usize>>, labels: Option<Vec<String>>) -> Self {
        let mut inverses = vec![0usize; n];
        for a in 0..n {
            if let Some(b) = (0..n).find(|&b| table[a * n + b] == 0) {
                inverses[a] = b;
            }
        }
        let mut group = FiniteGroup {
            order: n,
            table,
            inverses,
            generators: Vec::new(),
            labels,
            permutations: None,
            classes: OnceLock::new(),
            element_orders: OnceLock::new(),
        };
        group.generators = match generators {
            Some(g) => g,
            None => group.greedy_generators(0..n),
        };
        group
    }

    /// Exhaustive structural checks: identity, Latin square, inverses and
    /// (up to [`EXHAUSTIVE_CHECK_ORDER`]) associativity.
    pub fn validate(&self) -> Result<(), GroupError> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(GroupError::BadTable("element 0 is not the identity".into()));
            }
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                if std::mem::replace(&mut row[self.mul(a, b)], true) || std::mem::replace(&mut col[self.mul(b, a)], true) {
                    return Err(GroupError::BadTable(format!("row or column {a} is not a permutation")));
                }
            }
            if self.mul(a, self.inverses[a]) != 0 || self.mul(self.inverses[a], a) != 0 {
                return Err(GroupError::BadTable(format!("element {a} has no two-sided inverse")));
            }
        }
        if n <= EXHAUSTIVE_CHECK_ORDER {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(GroupError::BadTable(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverses[g])
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => format!("g{g}"),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Point images of each element when the group was built from permutations.
    pub fn permutation(&self, g: usize) -> Option<&Permutation> {
        self.permutations.as_ref().map(|p| &p[g])
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.element_orders.get_or_init(|| {
            (0..self.order)
                .map(|g| {
                    let mut k = 1;
                    let mut x = g;
                    while x != 0 {
                        x = self.mul(x, g);
                        k += 1;
                    }
                    k
                })
                .collect()
        })[g]
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        self.classes.get_or_init(|| {
            let n = self.order;
            let mut seen = vec![false; n];
            let mut classes = Vec::new();
            for x in 0..n {
                if seen[x] {
                    continue;
                }
                let mut class: Vec<usize> = (0..n).map(|g| self.conj(g, x)).collect();
                class.sort_unstable();
                class.dedup();
                for &y in &class {
                    seen[y] = true;
                }
                classes.push(class);
            }
            classes
        })
    }

    /// Elements `x` with `x^{p^k} = 1`.
    pub fn is_p_element(&self, g: usize, p: u32) -> bool {
        is_power_of(self.element_order(g), p)
    }

    /// Closure of a set of elements under multiplication (finite, so a subgroup).
    pub(crate) fn closure(&self, seeds: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elements = vec![0usize];
        let mut gens: Vec<usize> = Vec::new();
        for &s in seeds {
            if !gens.contains(&s) && s != 0 {
                gens.push(s);
            }
        }
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            for &g in &gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elements.push(y);
                }
            }
            i += 1;
        }
        elements.sort_unstable();
        elements
    }

    /// A generating set chosen greedily from `candidates` in order.
    pub(crate) fn greedy_generators(&self, candidates: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut gens = Vec::new();
        let mut current = vec![0usize];
        for c in candidates {
            if member[c] {
                continue;
            }
            gens.push(c);
            current = self.closure(&gens);
            member.iter_mut().for_each(|m| *m = false);
            for &x in &current {
                member[x] = true;
            }
        }
        let _ = current;
        gens
    }
}

pub fn is_power_of(mut n: usize, p: u32) -> bool {
    let p = p as usize;
    if n == 0 {
        return false;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: u32) -> usize {
    let p = p as usize;
    let mut out = 1;
    while n > 0 && n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

/// `n / p_part(n, p)`.
pub fn p_prime_part(n: usize, p: u32) -> usize {
    n / p_part(n, p)
}

pub fn cycle_notation(perm: &[u32]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] as usize == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = perm[start] as usize;
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = perm[x] as usize;
        }
        out.push('(');
        out.push_str(&cycle.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(list: &[&[u32]]) -> Vec<Permutation> {
        list.iter().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn single_involution_gives_c2() {
        let g = FiniteGroup::from_permutations(&perms(&[&[1, 0]]), Limits::default()).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.label(1), "(0 1)");
    }

    #[test]
    fn transposition_and_three_cycle_give_s3() {
        let g = FiniteGroup::from_permutations(&perms(&[&[1, 0, 2], &[1, 2, 0]]), Limits::default()).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.conjugacy_classes().len(), 3);
    }

    #[test]
    fn square_symmetries_have_order_eight() {
        // Brute-force closure of the 4-cycle and the reflection (1 3), counted independently.
        let gens = perms(&[&[1, 2, 3, 0], &[0, 3, 2, 1]]);
        let mut seen: std::collections::BTreeSet<Vec<u32>> = [vec![0, 1, 2, 3]].into_iter().collect();
        loop {
            let mut next = seen.clone();
            for a in &seen {
                for b in &gens {
                    next.insert(b.iter().map(|&x| a[x as usize]).collect());
                }
            }
            if next.len() == seen.len() {
                break;
            }
            seen = next;
        }
        assert_eq!(seen.len(), 8);
        let g = FiniteGroup::from_permutations(&gens, Limits::default()).unwrap();
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn rejects_non_bijections_and_enforces_cap() {
        assert!(matches!(
            FiniteGroup::from_permutations(&perms(&[&[0, 0, 1]]), Limits::default()),
            Err(GroupError::NotABijection { .. })
        ));
        let limits = Limits { max_order: 10, ..Limits::default() };
        let s4 = perms(&[&[1, 0, 2, 3], &[1, 2, 3, 0]]);
        assert!(matches!(FiniteGroup::from_permutations(&s4, limits), Err(GroupError::TooLarge { cap: 10 })));
    }

    #[test]
    fn bfs_ordering_is_deterministic() {
        let gens = perms(&[&[1, 0, 2], &[1, 2, 0]]);
        let a = FiniteGroup::from_permutations(&gens, Limits::default()).unwrap();
        let b = FiniteGroup::from_permutations(&gens, Limits::default()).unwrap();
        assert_eq!(a.table, b.table);
        assert_eq!(a.label(0), "()");
        assert_eq!(a.label(1), "(0 1)");
        assert_eq!(a.label(2), "(0 1 2)");
    }

    #[test]
    fn table_validation_catches_non_groups() {
        let bad = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]];
        assert!(FiniteGroup::from_table(&bad).is_err());
        let c3 = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let g = FiniteGroup::from_table(&c3).unwrap();
        assert_eq!(g.inv(1), 2);
        assert_eq!(g.generators(), &[1]);
    }

    #[test]
    fn p_parts() {
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_prime_part(24, 2), 3);
        assert_eq!(p_part(24, 5), 1);
        assert!(is_power_of(27, 3));
        assert!(!is_power_of(12, 2));
    }
}
