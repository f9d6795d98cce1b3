use blocktower::tower::{defect_stabilization, gamma_check, otr_membership};
use blocktower::{named_tower, thread_blocks, FieldElement, FiniteField, Limits, TowerSpec};

// `phi_*(d) c == c`, computed from the image table alone.
fn pushes_onto(images: &[usize], target_order: usize, f: &FiniteField, d: &[FieldElement], c: &[FieldElement], mul: impl Fn(usize, usize) -> usize) -> bool {
    let mut pushed = vec![f.zero(); target_order];
    for (x, &y) in images.iter().enumerate() {
        pushed[y] = f.add(pushed[y], d[x]);
    }
    let mut prod = vec![f.zero(); target_order];
    for x in 0..target_order {
        for y in 0..target_order {
            let z = mul(x, y);
            prod[z] = f.add(prod[z], f.mul(pushed[x], c[y]));
        }
    }
    prod == c
}

#[test]
fn psi_matches_a_direct_computation() {
    for (spec, p) in [("prodihedral_3", 2), ("prodihedral_3", 3), ("cyclic_p:2", 2), ("constant:S3", 2), ("product:S3:3", 3)] {
        let spec = spec.parse::<TowerSpec>().unwrap().with_depth(3);
        let tower = named_tower(&spec, Limits::default()).unwrap();
        let f = FiniteField::new(p, 1).unwrap();
        let system = thread_blocks(&tower, &f).unwrap();
        assert!(system.partition_consistent);
        for (i, map) in tower.maps().iter().enumerate() {
            let coarse = &tower.levels()[i];
            for (c, target) in system.psi[i].iter().enumerate() {
                let hits: Vec<usize> = (0..system.blocks[i + 1].len())
                    .filter(|&d| {
                        pushes_onto(
                            map.images(),
                            coarse.order(),
                            &f,
                            system.idempotent(i + 1, d).coeffs(),
                            system.idempotent(i, c).coeffs(),
                            |x, y| coarse.mul(x, y),
                        )
                    })
                    .collect();
                assert_eq!(hits, vec![*target], "{} level {i} block {c}", spec.label());
            }
        }
    }
}

#[test]
fn prodihedral_levels_have_the_expected_shape() {
    let tower = named_tower(&TowerSpec::Prodihedral3 { depth: 4 }, Limits::default()).unwrap();
    assert_eq!(tower.orders(), vec![6, 18, 54, 162]);
    for (n, g) in tower.levels().iter().enumerate() {
        let sylow = g.sylow(3);
        assert_eq!(sylow.order(), 3usize.pow(n as u32 + 1));
        assert!(sylow.is_normal());
        assert!(sylow.elements().iter().any(|&x| g.element_order(x) == sylow.order()), "cyclic");
        assert!(!g.is_abelian());
    }
    for k in tower.kernels() {
        assert_eq!(k.order(), 3);
        assert!(k.is_normal());
    }
}

#[test]
fn threads_through_a_two_tower() {
    let tower = named_tower(&TowerSpec::CyclicP { p: 2, depth: 4 }, Limits::default()).unwrap();
    let f = FiniteField::new(2, 1).unwrap();
    let system = thread_blocks(&tower, &f).unwrap();
    assert_eq!(system.threads.len(), 1);
    let thread = &system.threads[0];
    assert!(gamma_check(&system, thread).holds());
    let s = defect_stabilization(&system, thread, Limits::default()).unwrap();
    assert_eq!(s.defect_orders, vec![2, 4, 8, 16]);
    assert_eq!(s.stable_from, Some(0));
    assert!(otr_membership(&system, thread, 0..4, Limits::default()).unwrap().holds());
}

#[test]
fn prodihedral_in_characteristic_two_has_many_threads() {
    let tower = named_tower(&TowerSpec::Prodihedral3 { depth: 3 }, Limits::default()).unwrap();
    let f = FiniteField::new(2, 1).unwrap();
    let system = thread_blocks(&tower, &f).unwrap();
    let counts: Vec<usize> = system.blocks.iter().map(Vec::len).collect();
    // Blocks follow the orbits of Frobenius and inversion on the characters
    // of the cyclic normal subgroup C_{3^n}. Since 2 generates the units mod
    // 3^k, there is one orbit per divisor, giving n + 1 blocks.
    assert_eq!(counts, vec![2, 3, 4]);
    for thread in &system.threads {
        assert!(gamma_check(&system, thread).holds());
    }
    assert_eq!(system.threads.iter().map(|t| t.start_level).collect::<Vec<_>>(), vec![0, 0, 1, 2]);
}
