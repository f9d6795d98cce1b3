use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::{direct_product, FiniteGroup, Limits, Permutation};
use crate::error::GroupError;
use crate::field::is_prime;

/// Standard groups by name.
///
/// Textual forms: `C<n>`, `D<n>` (dihedral of order `2n`), `S<n>`, `A<n>`,
/// `Q8`, `V4`, `E<p>^<k>` (elementary abelian), and products joined by
/// `x`, e.g. `C2xS3`. Long forms such as `cyclic 5`, `dihedral 3`,
/// `symmetric 4`, `alternating 5`, `quaternion 8` and
/// `elementary_abelian 2 3` are accepted too.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NamedGroup {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    ElementaryAbelian(u32, u32),
    DirectProduct(Box<NamedGroup>, Box<NamedGroup>),
}

impl NamedGroup {
    /// Order computed without constructing the group; `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        match self {
            NamedGroup::Cyclic(n) => Some(*n),
            NamedGroup::Dihedral(n) => n.checked_mul(2),
            NamedGroup::Symmetric(n) => (1..=*n).try_fold(1usize, |a, k| a.checked_mul(k)),
            NamedGroup::Alternating(n) => (1..=*n).try_fold(1usize, |a, k| a.checked_mul(k)).map(|f| (f / 2).max(1)),
            NamedGroup::Quaternion8 => Some(8),
            NamedGroup::ElementaryAbelian(p, k) => (*p as usize).checked_pow(*k),
            NamedGroup::DirectProduct(a, b) => a.order()?.checked_mul(b.order()?),
        }
    }
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGroup::Cyclic(n) => write!(f, "C{n}"),
            NamedGroup::Dihedral(n) => write!(f, "D{n}"),
            NamedGroup::Symmetric(n) => write!(f, "S{n}"),
            NamedGroup::Alternating(n) => write!(f, "A{n}"),
            NamedGroup::Quaternion8 => write!(f, "Q8"),
            NamedGroup::ElementaryAbelian(p, k) => write!(f, "E{p}^{k}"),
            NamedGroup::DirectProduct(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

fn parse_count(s: &str, whole: &str) -> Result<usize, GroupError> {
    s.trim().parse().map_err(|_| GroupError::UnknownName(whole.to_string()))
}

impl FromStr for NamedGroup {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let words: Vec<&str> = t.split_whitespace().collect();
        if words.len() >= 2 {
            let arg = |i: usize| parse_count(words.get(i).copied().unwrap_or(""), t);
            return match (words[0].to_ascii_lowercase().as_str(), words.len()) {
                ("cyclic", 2) => Ok(NamedGroup::Cyclic(arg(1)?)),
                ("dihedral", 2) => Ok(NamedGroup::Dihedral(arg(1)?)),
                ("symmetric", 2) => Ok(NamedGroup::Symmetric(arg(1)?)),
                ("alternating", 2) => Ok(NamedGroup::Alternating(arg(1)?)),
                ("quaternion", 2) if arg(1)? == 8 => Ok(NamedGroup::Quaternion8),
                ("elementary_abelian", 3) => Ok(NamedGroup::ElementaryAbelian(arg(1)? as u32, arg(2)? as u32)),
                _ => Err(GroupError::UnknownName(t.to_string())),
            };
        }
        if let Some((a, b)) = t.split_once(['x', '×']) {
            let factor = |f: &str| f.parse().map_err(|_| GroupError::UnknownName(t.to_string()));
            return Ok(NamedGroup::DirectProduct(Box::new(factor(a)?), Box::new(factor(b)?)));
        }
        if t.eq_ignore_ascii_case("Q8") {
            return Ok(NamedGroup::Quaternion8);
        }
        if t.eq_ignore_ascii_case("V4") {
            return Ok(NamedGroup::ElementaryAbelian(2, 2));
        }
        let mut chars = t.chars();
        let head = chars.next().ok_or_else(|| GroupError::UnknownName(t.to_string()))?;
        let rest = chars.as_str();
        match head.to_ascii_uppercase() {
            'C' => Ok(NamedGroup::Cyclic(parse_count(rest, t)?)),
            'D' => Ok(NamedGroup::Dihedral(parse_count(rest, t)?)),
            'S' => Ok(NamedGroup::Symmetric(parse_count(rest, t)?)),
            'A' => Ok(NamedGroup::Alternating(parse_count(rest, t)?)),
            'E' => {
                let (p, k) = rest.split_once('^').ok_or_else(|| GroupError::UnknownName(t.to_string()))?;
                Ok(NamedGroup::ElementaryAbelian(parse_count(p, t)? as u32, parse_count(k, t)? as u32))
            }
            _ => Err(GroupError::UnknownName(t.to_string())),
        }
    }
}

fn cycle(n: usize) -> Permutation {
    (0..n as u32).map(|i| (i + 1) % n as u32).collect()
}

fn transposition(n: usize, a: usize, b: usize) -> Permutation {
    let mut p: Permutation = (0..n as u32).collect();
    p.swap(a, b);
    p
}

/// Builds a named group. Element order is the breadth-first order over the
/// documented generators:
///
/// * `C<n>`: the n-cycle `x -> x+1`;
/// * `D<n>`: rotation `x -> x+1` and reflection `x -> -x` on `n` points
///   (`D1 = C2`, `D2` is the Klein group on four points);
/// * `S<n>`: `(0 1)` and the n-cycle;
/// * `A<n>`: the 3-cycles `(0 1 i)` for `i = 2..n-1`;
/// * `Q8`: left multiplication by `i` and `j` on the eight units;
/// * products and `E<p>^<k>`: lexicographic pairs of the factors.
pub fn named_group(spec: &NamedGroup, limits: Limits) -> Result<Arc<FiniteGroup>, GroupError> {
    let cap = limits.max_order.min(super::HARD_MAX_ORDER);
    match spec.order() {
        Some(n) if n <= cap => {}
        _ => return Err(GroupError::TooLarge { cap }),
    }
    let bad = |msg: &str| Err(GroupError::BadParameters(format!("{spec}: {msg}")));
    let gens: Vec<Permutation> = match *spec {
        NamedGroup::Cyclic(0) | NamedGroup::Dihedral(0) | NamedGroup::Symmetric(0) => return bad("parameter must be positive"),
        NamedGroup::Cyclic(n) => vec![cycle(n)],
        NamedGroup::Dihedral(1) => vec![vec![1, 0]],
        NamedGroup::Dihedral(2) => vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2]],
        NamedGroup::Dihedral(n) => {
            let reflection = (0..n).map(|i| ((n - i) % n) as u32).collect();
            vec![cycle(n), reflection]
        }
        NamedGroup::Symmetric(n) if n < 3 => vec![cycle(n)],
        NamedGroup::Symmetric(n) => vec![transposition(n, 0, 1), cycle(n)],
        NamedGroup::Alternating(n) if n < 3 => vec![vec![0]],
        NamedGroup::Alternating(n) => (2..n)
            .map(|i| {
                let mut p: Permutation = (0..n as u32).collect();
                p[0] = 1;
                p[1] = i as u32;
                p[i] = 0;
                p
            })
            .collect(),
        NamedGroup::Quaternion8 => {
            // Units 1, i, j, k as 0..3; sign flips add 4.
            let table = [[0, 1, 2, 3], [1, 4, 3, 6], [2, 7, 4, 1], [3, 2, 5, 4]];
            let mul = |a: usize, b: usize| -> u32 {
                let (sa, ua) = (a / 4, a % 4);
                let (sb, ub) = (b / 4, b % 4);
                let r = table[ua][ub];
                ((r / 4 + sa + sb) % 2 * 4 + r % 4) as u32
            };
            vec![(0..8).map(|x| mul(1, x)).collect(), (0..8).map(|x| mul(2, x)).collect()]
        }
        NamedGroup::ElementaryAbelian(p, k) => {
            if !is_prime(p) {
                return bad("p must be prime");
            }
            let mut g = named_group(&NamedGroup::Cyclic(1), limits)?;
            for _ in 0..k {
                g = direct_product(&g, &named_group(&NamedGroup::Cyclic(p as usize), limits)?, limits)?;
            }
            return Ok(g);
        }
        NamedGroup::DirectProduct(ref a, ref b) => {
            return direct_product(&named_group(a, limits)?, &named_group(b, limits)?, limits);
        }
    };
    FiniteGroup::from_permutations(&gens, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(name: &str) -> usize {
        named_group(&name.parse().unwrap(), Limits::default()).unwrap().order()
    }

    #[test]
    fn orders_of_standard_groups() {
        assert_eq!(order("cyclic 5"), 5);
        assert_eq!(order("symmetric 4"), 24);
        assert_eq!(order("D4"), 8);
        assert_eq!(order("D6"), 12);
        assert_eq!(order("A4"), 12);
        assert_eq!(order("A5"), 60);
        assert_eq!(order("Q8"), 8);
        assert_eq!(order("C2xC2"), 4);
        assert_eq!(order("E2^3"), 8);
        assert_eq!(order("elementary_abelian 3 2"), 9);
        assert_eq!(order("D1"), 2);
        assert_eq!(order("D2"), 4);
        assert_eq!(order("C1"), 1);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = named_group(&NamedGroup::Quaternion8, Limits::default()).unwrap();
        assert_eq!((0..8).filter(|&x| q.element_order(x) == 2).count(), 1);
        assert!(!q.is_abelian());
    }

    #[test]
    fn unknown_names_and_caps() {
        assert!(matches!("Z7".parse::<NamedGroup>(), Err(GroupError::UnknownName(_))));
        let small = Limits { max_order: 100, ..Limits::default() };
        assert!(matches!(named_group(&NamedGroup::Symmetric(6), small), Err(GroupError::TooLarge { .. })));
    }

    #[test]
    fn display_round_trips() {
        for name in ["C4", "D3", "S4", "A5", "Q8", "E2^2", "C2xS3"] {
            assert_eq!(name.parse::<NamedGroup>().unwrap().to_string(), name);
        }
    }
}
