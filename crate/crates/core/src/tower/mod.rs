//! Finite truncations `G_0 <- G_1 <- ... <- G_n` of inverse systems of
//! finite groups and the block threads along them.

mod checks;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use checks::{
    defect_stabilization, gamma_check, otr_membership, simple_thread_check, tower_first_main, CrossLevelNote, GammaReport,
    GammaStep, LevelFirstMain, OtrLevel, OtrReport, SimpleThreadReport, StabilizationReport, TowerFirstMainReport,
};

use crate::algebra::AlgebraElement;
use crate::blocks::{block_decomposition, Block};
use crate::error::{GroupError, TowerError};
use crate::field::FiniteField;
use crate::group::{direct_product, named_group, FiniteGroup, GroupMorphism, Limits, NamedGroup, Subgroup};

/// `levels[0]` is the coarsest quotient; `maps[i]: levels[i+1] -> levels[i]`.
#[derive(Clone)]
pub struct Tower {
    levels: Vec<Arc<FiniteGroup>>,
    maps: Vec<GroupMorphism>,
}

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tower").field("orders", &self.orders()).finish()
    }
}

impl Tower {
    /// Checks that every map is a surjective homomorphism between the
    /// consecutive levels.
    pub fn new(levels: Vec<Arc<FiniteGroup>>, maps: Vec<GroupMorphism>) -> Result<Self, TowerError> {
        if levels.is_empty() {
            return Err(TowerError::ZeroDepth);
        }
        if maps.len() + 1 != levels.len() {
            return Err(TowerError::MapCount { expected: levels.len() - 1, got: maps.len() });
        }
        for (i, m) in maps.iter().enumerate() {
            if !Arc::ptr_eq(m.source(), &levels[i + 1]) || !Arc::ptr_eq(m.target(), &levels[i]) {
                return Err(GroupError::ParentMismatch.into());
            }
            m.check()?;
            if !m.is_surjective() {
                return Err(TowerError::NotSurjective(i));
            }
        }
        Ok(Tower { levels, maps })
    }

    pub fn levels(&self) -> &[Arc<FiniteGroup>] {
        &self.levels
    }

    pub fn maps(&self) -> &[GroupMorphism] {
        &self.maps
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn orders(&self) -> Vec<usize> {
        self.levels.iter().map(|g| g.order()).collect()
    }

    /// `ker(maps[i])`, a normal subgroup of `levels[i+1]`.
    pub fn kernels(&self) -> Vec<Subgroup> {
        self.maps.iter().map(|m| m.kernel()).collect()
    }
}

/// The homomorphism sending `source.generators()[i]` to `images[i]`,
/// extended along the Cayley graph and then validated.
pub fn morphism_from_generator_images(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>, images: &[usize]) -> Result<GroupMorphism, GroupError> {
    let gens = source.generators();
    if gens.len() != images.len() {
        return Err(GroupError::BadTable(format!("expected {} generator images, got {}", gens.len(), images.len())));
    }
    let mut out: Vec<Option<usize>> = vec![None; source.order()];
    out[0] = Some(0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let fx = out[x].expect("visited");
        for (&s, &t) in gens.iter().zip(images) {
            let y = source.mul(x, s);
            if out[y].is_none() {
                out[y] = Some(target.mul(fx, t));
                queue.push_back(y);
            }
        }
    }
    GroupMorphism::new(source.clone(), target.clone(), out.into_iter().map(|x| x.expect("generated")).collect())
}

/// Named tower families and explicit towers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum TowerSpec {
    /// `Z/p <- Z/p^2 <- ...`
    CyclicP { p: u32, depth: usize },
    /// `D_3 <- D_9 <- D_27 <- ...`, dihedral of order `2 * 3^n`.
    #[serde(rename = "prodihedral_3")]
    Prodihedral3 { depth: usize },
    Constant { group: String, depth: usize },
    /// `F x Z/p^n` with the identity on `F`.
    Product { group: String, p: u32, depth: usize },
    /// Level group specs, and per map the images of the finer level's
    /// elements.
    Explicit { levels: Vec<String>, maps: Vec<Vec<usize>> },
}

impl FromStr for TowerSpec {
    type Err = TowerError;

    /// Accepts `cyclic_p:P`, `prodihedral_3`, `constant:G`, `product:G:P`;
    /// the depth is supplied separately with [`TowerSpec::with_depth`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let prime = |t: &str| t.parse::<u32>().map_err(|_| TowerError::UnknownKind(s.into()));
        match parts[..] {
            ["prodihedral_3"] => Ok(TowerSpec::Prodihedral3 { depth: 1 }),
            ["cyclic_p", p] => Ok(TowerSpec::CyclicP { p: prime(p)?, depth: 1 }),
            ["constant", g] => Ok(TowerSpec::Constant { group: g.into(), depth: 1 }),
            ["product", g, p] => Ok(TowerSpec::Product { group: g.into(), p: prime(p)?, depth: 1 }),
            _ => Err(TowerError::UnknownKind(s.into())),
        }
    }
}

impl TowerSpec {
    pub fn with_depth(self, depth: usize) -> Self {
        match self {
            TowerSpec::CyclicP { p, .. } => TowerSpec::CyclicP { p, depth },
            TowerSpec::Prodihedral3 { .. } => TowerSpec::Prodihedral3 { depth },
            TowerSpec::Constant { group, .. } => TowerSpec::Constant { group, depth },
            TowerSpec::Product { group, p, .. } => TowerSpec::Product { group, p, depth },
            e @ TowerSpec::Explicit { .. } => e,
        }
    }

    pub fn label(&self) -> String {
        match self {
            TowerSpec::CyclicP { p, depth } => format!("cyclic_p:{p} depth {depth}"),
            TowerSpec::Prodihedral3 { depth } => format!("prodihedral_3 depth {depth}"),
            TowerSpec::Constant { group, depth } => format!("constant:{group} depth {depth}"),
            TowerSpec::Product { group, p, depth } => format!("product:{group}:{p} depth {depth}"),
            TowerSpec::Explicit { levels, .. } => format!("explicit [{}]", levels.join(", ")),
        }
    }
}

fn parse_group(s: &str, limits: Limits) -> Result<Arc<FiniteGroup>, TowerError> {
    Ok(named_group(&s.parse::<NamedGroup>()?, limits)?)
}

/// Builds a tower whose maps send generators to the corresponding
/// generators of the coarser level.
fn generator_tower(levels: Vec<Arc<FiniteGroup>>) -> Result<Tower, TowerError> {
    let maps = levels
        .windows(2)
        .map(|w| {
            let images: Vec<usize> = w[0].generators().to_vec();
            morphism_from_generator_images(&w[1], &w[0], &images)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Tower::new(levels, maps)
}

fn prime_powers(p: u32, depth: usize) -> Result<Vec<usize>, TowerError> {
    if depth == 0 {
        return Err(TowerError::ZeroDepth);
    }
    if !crate::field::is_prime(p) {
        return Err(GroupError::BadParameters(format!("{p} is not prime")).into());
    }
    (1..=depth)
        .map(|n| (p as usize).checked_pow(n as u32).ok_or(TowerError::Group(GroupError::TooLarge { cap: usize::MAX })))
        .collect()
}

pub fn named_tower(spec: &TowerSpec, limits: Limits) -> Result<Tower, TowerError> {
    match spec {
        TowerSpec::CyclicP { p, depth } => {
            let levels = prime_powers(*p, *depth)?
                .into_iter()
                .map(|n| named_group(&NamedGroup::Cyclic(n), limits))
                .collect::<Result<Vec<_>, _>>()?;
            generator_tower(levels)
        }
        TowerSpec::Prodihedral3 { depth } => {
            let levels = prime_powers(3, *depth)?
                .into_iter()
                .map(|n| named_group(&NamedGroup::Dihedral(n), limits))
                .collect::<Result<Vec<_>, _>>()?;
            generator_tower(levels)
        }
        TowerSpec::Constant { group, depth } => {
            if *depth == 0 {
                return Err(TowerError::ZeroDepth);
            }
            let g = parse_group(group, limits)?;
            let identity = GroupMorphism::new(g.clone(), g.clone(), (0..g.order()).collect())?;
            Tower::new(vec![g.clone(); *depth], vec![identity; depth - 1])
        }
        TowerSpec::Product { group, p, depth } => {
            let f = parse_group(group, limits)?;
            let levels = prime_powers(*p, *depth)?
                .into_iter()
                .map(|n| direct_product(&f, &named_group(&NamedGroup::Cyclic(n), limits)?, limits))
                .collect::<Result<Vec<_>, _>>()?;
            generator_tower(levels)
        }
        TowerSpec::Explicit { levels, maps } => {
            let groups = levels.iter().map(|s| parse_group(s, limits)).collect::<Result<Vec<_>, _>>()?;
            if maps.len() + 1 != groups.len() {
                return Err(TowerError::MapCount { expected: groups.len().saturating_sub(1), got: maps.len() });
            }
            let morphisms = maps
                .iter()
                .enumerate()
                .map(|(i, images)| GroupMorphism::new(groups[i + 1].clone(), groups[i].clone(), images.clone()))
                .collect::<Result<Vec<_>, _>>()?;
            Tower::new(groups, morphisms)
        }
    }
}

/// A sequence of blocks, one per level from `start_level` on, each lying
/// over the previous one.
#[derive(Clone, Debug)]
pub struct BlockThread {
    pub start_level: usize,
    /// Block indices at levels `start_level..`.
    pub blocks: Vec<usize>,
}

impl BlockThread {
    pub fn levels(&self) -> std::ops::Range<usize> {
        self.start_level..self.start_level + self.blocks.len()
    }

    pub fn block_at(&self, level: usize) -> Option<usize> {
        level.checked_sub(self.start_level).and_then(|i| self.blocks.get(i).copied())
    }
}

/// Several coarse blocks lying under one finer block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Merge {
    /// The finer level.
    pub level: usize,
    pub fine_block: usize,
    pub coarse_blocks: Vec<usize>,
}

/// Blocks at every level together with the threads through them.
#[derive(Clone, Debug)]
pub struct ThreadSystem {
    pub tower: Tower,
    pub field: FiniteField,
    pub blocks: Vec<Vec<Block>>,
    /// `psi[i][c]`: the block of level `i+1` lying over block `c` of level `i`.
    pub psi: Vec<Vec<usize>>,
    pub threads: Vec<BlockThread>,
    pub merges: Vec<Merge>,
    /// The images of the finer idempotents sum to one at every step.
    pub partition_consistent: bool,
}

impl ThreadSystem {
    pub fn idempotent(&self, level: usize, block: usize) -> &AlgebraElement {
        self.blocks[level][block].idempotent()
    }

    pub fn defect_group(&self, level: usize, block: usize, limits: Limits) -> Result<Subgroup, TowerError> {
        Ok(self.blocks[level][block].defect_group(limits)?)
    }
}

/// The unique finer block `d` with `phi(d) c = c` for each coarse block `c`.
fn psi_step(map: &GroupMorphism, coarse: &[Block], fine: &[Block], level: usize) -> Result<(Vec<usize>, Vec<AlgebraElement>), TowerError> {
    let pushed: Vec<AlgebraElement> = fine.iter().map(|d| d.idempotent().push_forward(map)).collect();
    let mut psi = Vec::with_capacity(coarse.len());
    for c in coarse {
        let e = c.idempotent();
        let hits: Vec<usize> = pushed.iter().enumerate().filter(|(_, pd)| &(*pd * e) == e).map(|(i, _)| i).collect();
        match hits[..] {
            [d] => psi.push(d),
            _ => return Err(TowerError::ThreadUniqueness { level: level + 1, found: hits.len() }),
        }
    }
    Ok((psi, pushed))
}

/// Blocks at every level, threaded coarse to fine. Level-0 blocks start
/// threads; a finer block over no coarse block starts a new thread at its
/// level. Threads meeting in one finer block are recorded as merges and
/// share the rest of their path.
pub fn thread_blocks(tower: &Tower, field: &FiniteField) -> Result<ThreadSystem, TowerError> {
    let blocks: Vec<Vec<Block>> = tower.levels().iter().map(|g| block_decomposition(g, field)).collect::<Result<_, _>>()?;
    let mut psi = Vec::new();
    let mut merges = Vec::new();
    let mut partition_consistent = true;
    for (i, map) in tower.maps().iter().enumerate() {
        let (step, pushed) = psi_step(map, &blocks[i], &blocks[i + 1], i)?;
        let coarse = tower.levels()[i].clone();
        let total = pushed.iter().fold(AlgebraElement::zero(&coarse, field), |acc, x| &acc + x);
        partition_consistent &= total == AlgebraElement::one(&coarse, field);
        for d in 0..blocks[i + 1].len() {
            let over: Vec<usize> = (0..step.len()).filter(|&c| step[c] == d).collect();
            if over.len() > 1 {
                merges.push(Merge { level: i + 1, fine_block: d, coarse_blocks: over });
            }
        }
        psi.push(step);
    }
    let mut threads: Vec<BlockThread> = Vec::new();
    for level in 0..tower.depth() {
        let hit: Vec<usize> = if level == 0 { Vec::new() } else { psi[level - 1].clone() };
        for b in 0..blocks[level].len() {
            if level > 0 && hit.contains(&b) {
                continue;
            }
            let mut path = vec![b];
            for step in &psi[level..] {
                path.push(step[*path.last().expect("nonempty")]);
            }
            threads.push(BlockThread { start_level: level, blocks: path });
        }
    }
    Ok(ThreadSystem { tower: tower.clone(), field: field.clone(), blocks, psi, threads, merges, partition_consistent })
}
