use std::ops::Range;

use crate::algebra::AlgebraElement;
use crate::blocks::{first_main_check, subgroup_blocks, trace_membership, TraceKind};
use crate::error::{ModuleError, TowerError};
use crate::group::{p_part, GroupMorphism, Limits, Subgroup};
use crate::linalg::SemiEchelon;
use crate::module::{chop_simples, MeataxeLimits};

use super::{psi_step, BlockThread, ThreadSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaStep {
    /// The coarser level.
    pub level: usize,
    pub fine_dim: usize,
    pub coarse_dim: usize,
    pub rank: usize,
    pub surjective: bool,
    pub multiplicative: bool,
    pub unital: bool,
}

#[derive(Clone, Debug)]
pub struct GammaReport {
    pub steps: Vec<GammaStep>,
}

impl GammaReport {
    pub fn holds(&self) -> bool {
        self.steps.iter().all(|s| s.surjective && s.multiplicative && s.unital)
    }
}

/// For each step of the thread, `gamma: d kG_{i+1} -> c kG_i`,
/// `x -> phi(x) c`, checked for surjectivity by rank, multiplicativity on
/// all pairs of a basis, and `gamma(d) = c`.
pub fn gamma_check(system: &ThreadSystem, thread: &BlockThread) -> GammaReport {
    let field = &system.field;
    let mut steps = Vec::new();
    for level in thread.levels().take(thread.blocks.len().saturating_sub(1)) {
        let map = &system.tower.maps()[level];
        let fine_group = &system.tower.levels()[level + 1];
        let coarse = &system.blocks[level][thread.block_at(level).expect("on thread")];
        let fine = &system.blocks[level + 1][thread.block_at(level + 1).expect("on thread")];
        let (c, d) = (coarse.idempotent(), fine.idempotent());
        let gamma = |x: &AlgebraElement| &x.push_forward(map) * c;

        let mut echelon = SemiEchelon::new(field, fine_group.order());
        let basis: Vec<AlgebraElement> = (0..fine_group.order())
            .map(|g| d * &AlgebraElement::basis(fine_group, field, g))
            .filter(|x| echelon.insert(x.coeffs()).is_ok())
            .collect();
        let images: Vec<AlgebraElement> = basis.iter().map(gamma).collect();
        let rank = SemiEchelon::from_vectors(field, system.tower.levels()[level].order(), images.iter().map(|x| x.coeffs().to_vec()).collect::<Vec<_>>().iter()).rank();
        let multiplicative = basis
            .iter()
            .enumerate()
            .all(|(i, a)| basis.iter().enumerate().all(|(j, b)| gamma(&(a * b)) == &images[i] * &images[j]));
        steps.push(GammaStep {
            level,
            fine_dim: basis.len(),
            coarse_dim: coarse.algebra_dim(),
            rank,
            surjective: rank == coarse.algebra_dim(),
            multiplicative,
            unital: &gamma(d) == c,
        });
    }
    GammaReport { steps }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationReport {
    pub defect_orders: Vec<usize>,
    /// `|G_i : D_i|`
    pub indices: Vec<usize>,
    /// `|G_i : D_i|_p`
    pub p_indices: Vec<usize>,
    /// Whether `maps[i](D_{i+1})` is conjugate to `D_i`, per step.
    pub image_conjugate: Vec<bool>,
    /// First level from which the p-index is constant and every further
    /// step maps defect groups onto conjugates. `None` when the truncation
    /// shows no such level; a deeper tower may still stabilize.
    pub stable_from: Option<usize>,
}

fn thread_defects(system: &ThreadSystem, thread: &BlockThread, limits: Limits) -> Result<Vec<Subgroup>, TowerError> {
    thread.levels().map(|l| system.defect_group(l, thread.block_at(l).expect("on thread"), limits)).collect()
}

pub fn defect_stabilization(system: &ThreadSystem, thread: &BlockThread, limits: Limits) -> Result<StabilizationReport, TowerError> {
    let p = system.field.characteristic();
    let defects = thread_defects(system, thread, limits)?;
    let orders: Vec<usize> = thread.levels().map(|l| system.tower.levels()[l].order()).collect();
    let defect_orders: Vec<usize> = defects.iter().map(|d| d.order()).collect();
    let indices: Vec<usize> = orders.iter().zip(&defect_orders).map(|(g, d)| g / d).collect();
    let p_indices: Vec<usize> = indices.iter().map(|&i| p_part(i, p)).collect();
    let image_conjugate: Vec<bool> = thread
        .levels()
        .zip(defects.windows(2))
        .map(|(l, w)| system.tower.maps()[l].image_of(&w[1]).is_conjugate_to(&w[0]))
        .collect();
    let n = defects.len();
    let stable = |k: usize| (k..n).all(|j| p_indices[j] == p_indices[k]) && image_conjugate[k..].iter().all(|&b| b);
    let first = (0..n).find(|&k| stable(k));
    let stable_from = match first {
        Some(k) if k + 1 < n || n == 1 => Some(thread.start_level + k),
        _ => None,
    };
    Ok(StabilizationReport { defect_orders, indices, p_indices, image_conjugate, stable_from })
}

#[derive(Clone, Debug)]
pub struct LevelFirstMain {
    pub level: usize,
    pub defect_order: usize,
    pub normalizer_order: usize,
    /// `(local, global)` correspondence pairs.
    pub pairs: Vec<(usize, usize)>,
    pub verified: bool,
    /// The thread's block is among the correspondents.
    pub thread_block_hit: bool,
}

/// Comparison of the correspondence at two consecutive levels. This is an
/// exploratory observation: nothing guarantees that the correspondence
/// commutes with threading.
#[derive(Clone, Debug)]
pub struct CrossLevelNote {
    /// The coarser level.
    pub level: usize,
    pub normalizer_compatible: bool,
    pub consistent: Option<bool>,
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct TowerFirstMainReport {
    pub stable_from: Option<usize>,
    pub levels: Vec<LevelFirstMain>,
    pub cross_level: Vec<CrossLevelNote>,
}

impl TowerFirstMainReport {
    /// Every checked level passed; false when nothing could be checked.
    pub fn verified(&self) -> bool {
        !self.levels.is_empty() && self.levels.iter().all(|l| l.verified && l.thread_block_hit)
    }
}

/// The restriction of `map` to `n1 -> n0`, on the subgroups as standalone
/// groups.
fn restricted_map(map: &GroupMorphism, n1: &GroupMorphism, n0: &GroupMorphism) -> Result<GroupMorphism, TowerError> {
    let targets = n0.images();
    let images = (0..n1.source().order())
        .map(|x| {
            let y = map.apply(n1.apply(x));
            targets.iter().position(|&t| t == y).ok_or(TowerError::NotSurjective(0))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupMorphism::new(n1.source().clone(), n0.source().clone(), images)?)
}

/// The first main theorem at every stabilized level of the thread, with
/// the cross-level observation for consecutive levels whose normalizers
/// and defect groups map onto each other.
pub fn tower_first_main(system: &ThreadSystem, thread: &BlockThread, limits: Limits) -> Result<TowerFirstMainReport, TowerError> {
    let stabilization = defect_stabilization(system, thread, limits)?;
    let Some(from) = stabilization.stable_from else {
        return Ok(TowerFirstMainReport { stable_from: None, levels: Vec::new(), cross_level: Vec::new() });
    };
    let defects = thread_defects(system, thread, limits)?;
    let defect = |l: usize| &defects[l - thread.start_level];
    let field = &system.field;
    let mut levels = Vec::new();
    let range: Range<usize> = from..thread.levels().end;
    for l in range.clone() {
        let g = &system.tower.levels()[l];
        let r = first_main_check(g, field, defect(l), None, limits)?;
        let block = thread.block_at(l).expect("on thread");
        levels.push(LevelFirstMain {
            level: l,
            defect_order: r.defect_order,
            normalizer_order: r.normalizer_order,
            pairs: r.pairs.iter().map(|p| (p.local, p.global)).collect(),
            verified: r.verified(),
            thread_block_hit: r.pairs.iter().any(|p| p.global == block),
        });
    }
    let mut cross_level = Vec::new();
    for l in range.clone().take(range.len().saturating_sub(1)) {
        let map = &system.tower.maps()[l];
        let (d0, d1) = (defect(l), defect(l + 1));
        let (n0, n1) = (d0.normalizer(), d1.normalizer());
        if map.image_of(d1) != *d0 || map.image_of(&n1) != n0 {
            cross_level.push(CrossLevelNote {
                level: l,
                normalizer_compatible: false,
                consistent: None,
                note: "defect groups or normalizers do not map onto each other; skipped".into(),
            });
            continue;
        }
        let (emb1, local1) = subgroup_blocks(&n1, field)?;
        let (emb0, local0) = subgroup_blocks(&n0, field)?;
        let r = restricted_map(map, &emb1, &emb0)?;
        let (local_psi, _) = psi_step(&r, &local0, &local1, l)?;
        let (coarse_pairs, fine_pairs) = (&levels[l - from].pairs, &levels[l + 1 - from].pairs);
        let mismatches = coarse_pairs
            .iter()
            .filter(|&&(f, e)| fine_pairs.iter().find(|p| p.0 == local_psi[f]).map(|p| p.1) != Some(system.psi[l][e]))
            .count();
        cross_level.push(CrossLevelNote {
            level: l,
            normalizer_compatible: true,
            consistent: Some(mismatches == 0),
            note: if mismatches == 0 {
                "correspondence commutes with threading".into()
            } else {
                format!("observation: {mismatches} correspondent(s) do not thread compatibly")
            },
        });
    }
    Ok(TowerFirstMainReport { stable_from: Some(from), levels, cross_level })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OtrLevel {
    pub level: usize,
    /// `e_i` in `Tr_{D_i}^{G_i}(kG_i^{D_i})`.
    pub trace: bool,
    /// `e_i` in the image of the modified trace.
    pub modified_trace: bool,
}

#[derive(Clone, Debug)]
pub struct OtrReport {
    pub levels: Vec<OtrLevel>,
}

impl OtrReport {
    pub fn holds(&self) -> bool {
        !self.levels.is_empty() && self.levels.iter().all(|l| l.trace && l.modified_trace)
    }
}

/// Level-wise trace memberships of the thread idempotents over the given
/// levels (clipped to the thread).
pub fn otr_membership(system: &ThreadSystem, thread: &BlockThread, levels: Range<usize>, limits: Limits) -> Result<OtrReport, TowerError> {
    let mut out = Vec::new();
    let span = thread.levels();
    for l in levels.start.max(span.start)..levels.end.min(span.end) {
        let block = thread.block_at(l).expect("on thread");
        let e = system.idempotent(l, block);
        let d = system.defect_group(l, block, limits)?;
        let whole = Subgroup::whole(&system.tower.levels()[l]);
        out.push(OtrLevel {
            level: l,
            trace: trace_membership(e, &d, &whole, TraceKind::Plain)?,
            modified_trace: trace_membership(e, &d, &whole, TraceKind::Modified)?,
        });
    }
    Ok(OtrReport { levels: out })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleThreadReport {
    pub level: usize,
    /// Per simple module of the coarser level: its block there and the
    /// block of the finer level containing its inflation.
    pub placements: Vec<(usize, Option<usize>)>,
}

impl SimpleThreadReport {
    /// Each inflated simple lies in the block threaded over its own block.
    pub fn holds(&self, psi: &[usize]) -> bool {
        self.placements.iter().all(|&(c, d)| d == Some(psi[c]))
    }
}

/// Simple modules of `levels[level]`, inflated to the next level, lie in
/// the block threaded over their original block.
pub fn simple_thread_check(system: &ThreadSystem, level: usize, limits: MeataxeLimits) -> Result<SimpleThreadReport, ModuleError> {
    let tower = &system.tower;
    let map = &tower.maps()[level];
    let mut placements = Vec::new();
    for s in chop_simples(&tower.levels()[level], &system.field, limits)? {
        let c = system.blocks[level].iter().position(|b| s.lies_in(b)).ok_or_else(|| ModuleError::Check("simple module lies in no block".into()))?;
        let inflated = s.pull_back(map);
        placements.push((c, system.blocks[level + 1].iter().position(|b| inflated.lies_in(b))));
    }
    Ok(SimpleThreadReport { level, placements })
}

#[cfg(test)]
mod tests {
    use super::super::{named_tower, thread_blocks, TowerSpec};
    use super::*;
    use crate::field::FiniteField;

    fn system(spec: TowerSpec, p: u32) -> ThreadSystem {
        let t = named_tower(&spec, Limits::default()).unwrap();
        thread_blocks(&t, &FiniteField::new(p, 1).unwrap()).unwrap()
    }

    #[test]
    fn cyclic_tower_checks() {
        let s = system(TowerSpec::CyclicP { p: 3, depth: 3 }, 3);
        let t = &s.threads[0];
        assert!(gamma_check(&s, t).holds());
        let st = defect_stabilization(&s, t, Limits::default()).unwrap();
        assert_eq!(st.defect_orders, vec![3, 9, 27]);
        assert_eq!(st.p_indices, vec![1, 1, 1]);
        assert_eq!(st.stable_from, Some(0));
        let fm = tower_first_main(&s, t, Limits::default()).unwrap();
        assert!(fm.verified());
        assert!(fm.levels.iter().all(|l| l.pairs == vec![(0, 0)]));
        assert!(otr_membership(&s, t, 0..3, Limits::default()).unwrap().holds());
    }

    #[test]
    fn prodihedral_principal_thread() {
        let s = system(TowerSpec::Prodihedral3 { depth: 3 }, 3);
        assert_eq!(s.blocks.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 1, 1]);
        let t = &s.threads[0];
        let st = defect_stabilization(&s, t, Limits::default()).unwrap();
        assert_eq!(st.defect_orders, vec![3, 9, 27]);
        assert_eq!(st.indices, vec![2, 2, 2]);
        assert_eq!(st.stable_from, Some(0));
        assert!(gamma_check(&s, t).holds());
        let fm = tower_first_main(&s, t, Limits::default()).unwrap();
        assert!(fm.verified(), "{fm:?}");
        assert!(fm.cross_level.iter().all(|c| c.normalizer_compatible));
    }

    #[test]
    fn constant_tower_gamma_is_identity() {
        let s = system(TowerSpec::Constant { group: "S3".into(), depth: 2 }, 2);
        for t in &s.threads {
            let g = gamma_check(&s, t);
            assert!(g.holds());
            assert!(g.steps.iter().all(|st| st.fine_dim == st.coarse_dim));
        }
    }

    #[test]
    fn inflated_simples_follow_threads() {
        let s = system(TowerSpec::Prodihedral3 { depth: 2 }, 2);
        let r = simple_thread_check(&s, 0, MeataxeLimits::default()).unwrap();
        assert!(r.holds(&s.psi[0]));
        assert_eq!(r.placements.len(), 2);
    }
}
