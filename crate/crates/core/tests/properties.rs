use std::sync::Arc;

use proptest::prelude::*;

use blocktower::blocks::{block_decomposition, brauer_hom, modified_trace, trace_map};
use blocktower::group::quotient;
use blocktower::{named_group, AlgebraElement, FiniteField, FiniteGroup, Limits, Rep, SubalgebraBasis, Subgroup};

const FIELDS: [(u32, u32); 7] = [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3), (7, 1)];
const GROUPS: [&str; 6] = ["S3", "C6", "A4", "D4", "Q8", "S4"];

fn group(name: &str) -> Arc<FiniteGroup> {
    named_group(&name.parse().unwrap(), Limits::default()).unwrap()
}

fn field_strategy() -> impl Strategy<Value = FiniteField> {
    prop::sample::select(FIELDS.to_vec()).prop_map(|(p, m)| FiniteField::new(p, m).unwrap())
}

fn element(g: &Arc<FiniteGroup>, f: &FiniteField, raw: &[u32]) -> AlgebraElement {
    let coeffs = (0..g.order()).map(|i| f.element(raw[i % raw.len()] % f.size())).collect();
    AlgebraElement::from_coeffs(g, f, coeffs)
}

fn fixed_element(h: &Subgroup, f: &FiniteField, raw: &[u32]) -> AlgebraElement {
    let space = SubalgebraBasis::fixed_points(h, f);
    let coords: Vec<_> = (0..space.dim()).map(|i| f.element(raw[i % raw.len()] % f.size())).collect();
    space.combine(&coords)
}

fn raw() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(any::<u32>(), 1..32)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(f in field_strategy(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let q = f.size();
        let (a, b, c) = (f.element(a % q), f.element(b % q), f.element(c % q));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        prop_assert_eq!(f.mul_add(a, b, c), f.add(a, f.mul(b, c)));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        } else {
            prop_assert!(f.inv(a).is_err());
        }
    }

    #[test]
    fn frobenius_is_additive_and_fixes_the_field(f in field_strategy(), a in any::<u32>(), b in any::<u32>()) {
        let q = f.size();
        let p = f.characteristic() as u64;
        let (a, b) = (f.element(a % q), f.element(b % q));
        prop_assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
        prop_assert_eq!(f.pow(a, q as u64), a);
    }

    #[test]
    fn group_algebra_is_associative_and_unital(
        name in prop::sample::select(GROUPS.to_vec()), f in field_strategy(), x in raw(), y in raw(), z in raw()
    ) {
        let g = group(name);
        let (a, b, c) = (element(&g, &f, &x), element(&g, &f, &y), element(&g, &f, &z));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &AlgebraElement::one(&g, &f), a.clone());
        prop_assert_eq!(a.pow(2), &a * &a);
    }

    #[test]
    fn regular_representation_is_multiplicative(
        name in prop::sample::select(vec!["S3", "C4", "A4"]), f in field_strategy(), x in raw(), y in raw()
    ) {
        let g = group(name);
        let u = Rep::regular(&g, &f);
        let (a, b) = (element(&g, &f, &x), element(&g, &f, &y));
        prop_assert_eq!(u.act(&(&a * &b)), u.act(&a).mul(&u.act(&b)));
    }

    #[test]
    fn block_idempotents_are_central_orthogonal_and_sum_to_one(
        name in prop::sample::select(GROUPS.to_vec()), f in field_strategy()
    ) {
        let g = group(name);
        let blocks = block_decomposition(&g, &f).unwrap();
        let mut total = AlgebraElement::zero(&g, &f);
        for (i, b) in blocks.iter().enumerate() {
            let e = b.idempotent();
            prop_assert!(e.is_central());
            prop_assert_eq!(&(e * e), e);
            for c in &blocks[i + 1..] {
                prop_assert!((e * c.idempotent()).is_zero());
            }
            total = &total + e;
        }
        prop_assert_eq!(total, AlgebraElement::one(&g, &f));
        prop_assert_eq!(blocks.iter().map(|b| b.algebra_dim()).sum::<usize>(), g.order());
    }

    #[test]
    fn quotient_kernels_are_normal(name in prop::sample::select(GROUPS.to_vec()), p in prop::sample::select(vec![2u32, 3])) {
        let g = group(name);
        let n = g.largest_normal_p_subgroup(p);
        prop_assert!(n.is_normal());
        let (q, pi) = quotient(&g, &n).unwrap();
        prop_assert_eq!(q.order() * n.order(), g.order());
        prop_assert_eq!(pi.kernel(), n);
        for x in g.elements() {
            for y in g.elements() {
                prop_assert_eq!(pi.apply(g.mul(x, y)), q.mul(pi.apply(x), pi.apply(y)));
            }
        }
    }

    #[test]
    fn traces_are_transitive(name in prop::sample::select(vec!["S3", "S4", "D4", "A4"]), f in field_strategy(), x in raw()) {
        let g = group(name);
        let p = f.characteristic();
        let whole = Subgroup::whole(&g);
        let sylow = g.sylow(p);
        let k = Subgroup::trivial(&g);
        let a = fixed_element(&k, &f, &x);
        let through = trace_map(&sylow, &whole, &trace_map(&k, &sylow, &a).unwrap()).unwrap();
        prop_assert_eq!(through, trace_map(&k, &whole, &a).unwrap());
        let b = fixed_element(&sylow, &f, &x);
        let n = sylow.normalizer();
        let m1 = modified_trace(&n, &whole, &modified_trace(&sylow, &n, &b).unwrap()).unwrap();
        prop_assert_eq!(m1, modified_trace(&sylow, &whole, &b).unwrap());
    }

    #[test]
    fn brauer_homomorphism_is_multiplicative(
        name in prop::sample::select(vec!["S3", "S4", "D4", "A4", "C6"]), f in field_strategy(), x in raw(), y in raw()
    ) {
        let g = group(name);
        let d = g.sylow(f.characteristic());
        let (a, b) = (fixed_element(&d, &f, &x), fixed_element(&d, &f, &y));
        let lhs = brauer_hom(&d, &(&a * &b)).unwrap();
        let rhs = &brauer_hom(&d, &a).unwrap() * &brauer_hom(&d, &b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
