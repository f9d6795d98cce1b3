use std::sync::Arc;

use blocktower::blocks::{block_decomposition, defect_group};
use blocktower::module::{chop_simples, composition_factors, higman_projectivity, is_simple, module_block_split, vertex, MeataxeLimits};
use blocktower::{named_group, FiniteField, FiniteGroup, Limits, Rep, Subgroup};

fn setup(name: &str, p: u32) -> (Arc<FiniteGroup>, FiniteField) {
    (named_group(&name.parse().unwrap(), Limits::default()).unwrap(), FiniteField::new(p, 1).unwrap())
}

#[test]
fn simple_modules_of_s3_and_their_vertices() {
    let (g, f) = setup("S3", 2);
    let simples = chop_simples(&g, &f, MeataxeLimits::default()).unwrap();
    assert_eq!(simples.iter().map(Rep::dim).collect::<Vec<_>>(), vec![1, 2]);
    // The 2-dimensional simple module is projective: its vertex is trivial.
    assert!(vertex(&simples[1], Limits::default()).unwrap().is_trivial());
    assert_eq!(vertex(&simples[0], Limits::default()).unwrap().order(), 2);

    let (g, f) = setup("S3", 3);
    for u in chop_simples(&g, &f, MeataxeLimits::default()).unwrap() {
        assert_eq!(u.dim(), 1);
        let v = vertex(&u, Limits::default()).unwrap();
        assert_eq!(v, g.sylow(3));
    }
}

#[test]
fn relative_projectivity_is_monotone_and_conjugation_invariant() {
    let (g, f) = setup("S4", 2);
    let simples = chop_simples(&g, &f, MeataxeLimits::default()).unwrap();
    let classes = g.p_subgroups_up_to_conjugacy(2, Limits::default()).unwrap();
    for u in &simples {
        for h in &classes {
            let projective = higman_projectivity(u, h).unwrap().is_some();
            for x in [1, 5, g.order() - 1] {
                assert_eq!(higman_projectivity(u, &h.conjugate(x)).unwrap().is_some(), projective);
            }
            if projective {
                for k in classes.iter().filter(|k| h.is_subgroup_of(k)) {
                    assert!(higman_projectivity(u, k).unwrap().is_some());
                }
            }
        }
    }
}

#[test]
fn regular_module_splits_along_blocks() {
    for (name, p) in [("S4", 3), ("A4", 2), ("A5", 5)] {
        let (g, f) = setup(name, p);
        let blocks = block_decomposition(&g, &f).unwrap();
        let split = module_block_split(&Rep::regular(&g, &f), &blocks).unwrap();
        let dims: Vec<usize> = split.iter().map(|(_, u)| u.dim()).collect();
        let expect: Vec<usize> = blocks.iter().map(|b| b.algebra_dim()).collect();
        assert_eq!(dims, expect, "{name}");
        for (i, u) in &split {
            assert!(u.lies_in(&blocks[*i]));
        }
    }
}

#[test]
fn composition_length_of_regular_module() {
    // Over a splitting field a simple S occurs dim(P_S) times in kG. For
    // F3[S4] every projective cover has dimension 3.
    let (g, f) = setup("S4", 3);
    let factors = composition_factors(&Rep::regular(&g, &f), MeataxeLimits::default()).unwrap();
    let total: usize = factors.iter().map(|(u, m)| u.dim() * m).sum();
    assert_eq!(total, 24);
    let mut pairs: Vec<(usize, usize)> = factors.iter().map(|(u, m)| (u.dim(), *m)).collect();
    pairs.sort();
    assert_eq!(pairs, vec![(1, 3), (1, 3), (3, 3), (3, 3)]);
    for (u, _) in &factors {
        assert!(is_simple(u, MeataxeLimits::default()).unwrap());
    }
}

#[test]
fn defect_zero_simples_are_projective() {
    let (g, f) = setup("S4", 3);
    let blocks = block_decomposition(&g, &f).unwrap();
    let simples = chop_simples(&g, &f, MeataxeLimits::default()).unwrap();
    for b in &blocks {
        if defect_group(b, Limits::default()).unwrap().is_trivial() {
            let inside: Vec<&Rep> = simples.iter().filter(|u| u.lies_in(b)).collect();
            assert_eq!(inside.len(), 1);
            assert!(higman_projectivity(inside[0], &Subgroup::trivial(&g)).unwrap().is_some());
        }
    }
}
