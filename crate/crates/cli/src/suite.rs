//! The verification suite behind `verify` and the acceptance tests. Each
//! criterion runs over a list of corpus entries and yields one result per
//! (check, subject).

use blocktower::blocks::{
    brauer_kernel_check, brauer_multiplicativity_check, decompose, defect_crosscheck, defect_normalizer_check,
    defect_sylow_intersection_check, diagram_commutation_check, first_main_check, mackey_verify, modified_trace, trace_map,
    trace_map_with_representatives, Block,
};
use blocktower::module::{bimodule_induced_check, bimodule_vertex, chop_simples, higman_projectivity, simple_with_vertex_equal_defect, vertex, MeataxeLimits};
use blocktower::tower::{defect_stabilization, gamma_check, otr_membership, tower_first_main};
use blocktower::{named_tower, thread_blocks, AlgebraElement, FieldElement, FiniteField, FiniteGroup, Limits, Rep, Subgroup, SubalgebraBasis, TowerSpec};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::CorpusEntry;
use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckResult {
    pub criterion: u8,
    pub check: String,
    /// The statement being tested, by its usual name.
    pub anchor: String,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub anchor: &'static str,
}

pub const CRITERIA: [Criterion; 11] = [
    Criterion { id: 1, title: "block axioms", anchor: "decomposition of kG into blocks by centrally primitive idempotents" },
    Criterion { id: 2, title: "exhaustive idempotent oracle", anchor: "primitive idempotents of the centre Z(kG)" },
    Criterion { id: 3, title: "trace identities", anchor: "trace maps: Mackey formula, transitivity of the normalized trace" },
    Criterion { id: 4, title: "Brauer homomorphism", anchor: "Brauer homomorphism and its kernel" },
    Criterion { id: 5, title: "defect characterizations", anchor: "equivalent characterizations of the defect group" },
    Criterion { id: 6, title: "structure of defect groups", anchor: "defect group as Sylow intersection; D = O_p(N_G(D))" },
    Criterion { id: 7, title: "first main theorem", anchor: "Brauer's first main theorem" },
    Criterion { id: 8, title: "diagram lemma", anchor: "Brauer map intertwines the normalized traces" },
    Criterion { id: 9, title: "module legs", anchor: "Higman's criterion; a simple module with vertex D" },
    Criterion { id: 10, title: "towers", anchor: "inverse systems of blocks along a tower" },
    Criterion { id: 11, title: "determinism", anchor: "reproducible reports" },
];

fn anchor(criterion: u8) -> String {
    CRITERIA[criterion as usize - 1].anchor.to_string()
}

fn outcome(criterion: u8, check: &str, subject: &str, r: Result<(bool, String), CliError>) -> CheckResult {
    let (passed, detail) = r.unwrap_or_else(|e| (false, format!("error: {e}")));
    CheckResult { criterion, check: check.to_string(), anchor: anchor(criterion), subject: subject.to_string(), passed, detail }
}

/// Runs `f` on every entry in parallel; results stay in corpus order.
fn per_entry<F>(entries: &[CorpusEntry], f: F) -> Vec<CheckResult>
where
    F: Fn(&CorpusEntry) -> Vec<CheckResult> + Sync + Send,
{
    entries.par_iter().map(f).collect::<Vec<_>>().into_iter().flatten().collect()
}

fn describe_failures(failures: &[String], ok: &str) -> (bool, String) {
    if failures.is_empty() {
        (true, ok.to_string())
    } else {
        (false, failures.join("; "))
    }
}

// ---------------------------------------------------------------- 1 ----

pub fn block_axioms(entries: &[CorpusEntry]) -> Vec<CheckResult> {
    per_entry(entries, |e| {
        let r = (|| {
            let d = decompose(&e.group, &e.field)?;
            let f = &e.field;
            let ids: Vec<&AlgebraElement> = d.blocks.iter().map(|b| b.idempotent()).collect();
            let mut failures = Vec::new();
            if !ids.iter().all(|x| x.is_central()) {
                failures.push("an idempotent is not central".to_string());
            }
            if !ids.iter().all(|x| &(*x * *x) == *x) {
                failures.push("not idempotent".to_string());
            }
            for (i, a) in ids.iter().enumerate() {
                for b in &ids[i + 1..] {
                    if !(*a * *b).is_zero() {
                        failures.push(format!("blocks {i} and another are not orthogonal"));
                    }
                }
            }
            let total = ids.iter().fold(AlgebraElement::zero(&e.group, f), |acc, x| &acc + *x);
            if total != AlgebraElement::one(&e.group, f) {
                failures.push("idempotents do not sum to 1".to_string());
            }
            if ids.len() != d.frobenius_fixed_dim {
                failures.push(format!("{} blocks but Frobenius-fixed dimension {}", ids.len(), d.frobenius_fixed_dim));
            }
            let dims: Vec<usize> = d.blocks.iter().map(|b| b.algebra_dim()).collect();
            if dims.iter().sum::<usize>() != e.group.order() {
                failures.push(format!("block dimensions {dims:?} do not sum to |G|"));
            }
            Ok(describe_failures(&failures, &format!("{} blocks, dimensions {dims:?}, dim Z = {}, dim J(Z) = {}", ids.len(), d.center_dim, d.radical_dim)))
        })();
        vec![outcome(1, "block axioms", &e.label(), r)]
    })
}

// ---------------------------------------------------------------- 2 ----

/// Largest `q^{dim Z}` searched exhaustively.
pub const ORACLE_CAP: u128 = 1 << 20;

/// Centrally primitive idempotents found by enumerating all of `Z(kG)` in
/// the class-sum basis, with structure constants counted directly.
pub fn exhaustive_block_idempotents(g: &FiniteGroup, field: &FiniteField) -> Option<Vec<Vec<FieldElement>>> {
    let classes = g.conjugacy_classes();
    let k = classes.len();
    let q = field.size() as u128;
    if q.checked_pow(k as u32).map_or(true, |t| t > ORACLE_CAP) {
        return None;
    }
    let mut class_of = vec![0usize; g.order()];
    for (i, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = i;
        }
    }
    // a[i][j][l] = #{(x, y) in C_i x C_j : xy = z_l} for a fixed z_l in C_l.
    let mut a = vec![vec![vec![field.zero(); k]; k]; k];
    for (l, cl) in classes.iter().enumerate() {
        let z = cl[0];
        for (i, ci) in classes.iter().enumerate() {
            for &x in ci {
                let y = g.mul(g.inv(x), z);
                let j = class_of[y];
                a[i][j][l] = field.add(a[i][j][l], field.one());
            }
        }
    }
    let mul = |x: &[FieldElement], y: &[FieldElement]| -> Vec<FieldElement> {
        let mut out = vec![field.zero(); k];
        for i in (0..k).filter(|&i| !x[i].is_zero()) {
            for j in (0..k).filter(|&j| !y[j].is_zero()) {
                let c = field.mul(x[i], y[j]);
                for l in 0..k {
                    out[l] = field.mul_add(out[l], c, a[i][j][l]);
                }
            }
        }
        out
    };
    let total = q.pow(k as u32) as u64;
    let mut idempotents = Vec::new();
    for code in 1..total {
        let mut c = code;
        let x: Vec<FieldElement> = (0..k)
            .map(|_| {
                let d = (c % q as u64) as u32;
                c /= q as u64;
                field.element(d)
            })
            .collect();
        if mul(&x, &x) == x {
            idempotents.push(x);
        }
    }
    let primitive: Vec<&Vec<FieldElement>> = idempotents
        .iter()
        .filter(|e| !idempotents.iter().any(|f| f != *e && &mul(f, e) == f))
        .collect();
    let mut out: Vec<Vec<FieldElement>> =
        primitive.into_iter().map(|e| (0..g.order()).map(|x| e[class_of[x]]).collect()).collect();
    out.sort_by_key(|v| v.iter().map(|c| c.index()).collect::<Vec<_>>());
    Some(out)
}

pub fn oracle_equivalence(entries: &[CorpusEntry]) -> Vec<CheckResult> {
    per_entry(entries, |e| {
        let Some(mut oracle) = exhaustive_block_idempotents(&e.group, &e.field) else {
            return Vec::new();
        };
        let r = (|| {
            let mut pipeline: Vec<Vec<FieldElement>> = decompose(&e.group, &e.field)?.blocks.iter().map(|b| b.idempotent().coeffs().to_vec()).collect();
            let key = |v: &Vec<FieldElement>| v.iter().map(|c| c.index()).collect::<Vec<_>>();
            pipeline.sort_by_key(key);
            oracle.sort_by_key(key);
            Ok((pipeline == oracle, format!("{} idempotents by enumeration, {} by the pipeline", oracle.len(), pipeline.len())))
        })();
        vec![outcome(2, "Frobenius pipeline equals exhaustive search", &e.label(), r)]
    })
}

// ---------------------------------------------------------------- 3 ----

/// `Q <= L` for every p-subgroup class `Q` and `L` among `Q`, the Sylow
/// subgroup, `N_G(Q)` and `G`.
fn chains(e: &CorpusEntry, limits: Limits) -> Result<Vec<(Subgroup, Subgroup)>, CliError> {
    let g = &e.group;
    let sylow = g.sylow(e.p());
    let mut out = Vec::new();
    for q in g.p_subgroups_up_to_conjugacy(e.p(), limits)? {
        let mut ls = vec![q.clone(), sylow.clone(), q.normalizer(), Subgroup::whole(g)];
        ls.sort();
        ls.dedup();
        for l in ls {
            if q.is_subgroup_of(&l) {
                out.push((q.clone(), l));
            }
        }
    }
    Ok(out)
}

pub fn trace_identities(entries: &[CorpusEntry], limits: Limits) -> Vec<CheckResult> {
    per_entry(entries, |e| {
        let g = &e.group;
        let f = &e.field;
        let whole = Subgroup::whole(g);
        let chains = match chains(e, limits) {
            Ok(c) => c,
            Err(err) => return vec![outcome(3, "trace identities", &e.label(), Err(err))],
        };
        let mut results = Vec::new();

        let independence = (|| {
            let mut n = 0;
            for (h, l) in &chains {
                let small = h.left_transversal(l);
                let large = h.left_transversal_largest(l);
                for x in SubalgebraBasis::fixed_points(h, f).basis() {
                    n += 1;
                    if trace_map_with_representatives(h, l, x, &small)? != trace_map_with_representatives(h, l, x, &large)? {
                        return Ok((false, format!("Tr depends on representatives for |H| = {}, |L| = {}", h.order(), l.order())));
                    }
                }
            }
            Ok((true, format!("{n} orbit sums over {} chains", chains.len())))
        })();
        results.push(outcome(3, "representative independence", &e.label(), independence));

        let transitivity = (|| {
            let mut n = 0;
            for (h, l) in &chains {
                for x in SubalgebraBasis::fixed_points(h, f).basis() {
                    n += 1;
                    let direct = modified_trace(h, &whole, x)?;
                    let staged = modified_trace(l, &whole, &modified_trace(h, l, x)?)?;
                    let plain = trace_map(l, &whole, &trace_map(h, l, x)?)? == trace_map(h, &whole, x)?;
                    if direct != staged || !plain {
                        return Ok((false, format!("transitivity fails for |H| = {}, |L| = {}", h.order(), l.order())));
                    }
                }
            }
            Ok((true, format!("{n} orbit sums")))
        })();
        results.push(outcome(3, "transitivity of traces", &e.label(), transitivity));

        let bimodule = (|| {
            let mut n = 0;
            for (h, l) in &chains {
                let outer = SubalgebraBasis::fixed_points(l, f);
                let outer: Vec<&AlgebraElement> = outer.basis().iter().take(3).collect();
                for x in SubalgebraBasis::fixed_points(h, f).basis() {
                    let t = trace_map(h, l, x)?;
                    for a in &outer {
                        for b in &outer {
                            n += 1;
                            if trace_map(h, l, &(&(*a * x) * *b))? != &(*a * &t) * *b {
                                return Ok((false, format!("Tr(a x b) != a Tr(x) b for |H| = {}, |L| = {}", h.order(), l.order())));
                            }
                        }
                    }
                }
            }
            Ok((true, format!("{n} products")))
        })();
        results.push(outcome(3, "bimodule identity", &e.label(), bimodule));

        let mackey = (|| {
            let mut n = 0;
            for (h, l) in &chains {
                for (first, second) in [(h, l), (l, h)] {
                    for a in SubalgebraBasis::fixed_points(second, f).basis() {
                        n += 1;
                        let r = mackey_verify(first, second, a)?;
                        if !r.holds {
                            return Ok((false, format!("Mackey fails for |H| = {}, |L| = {}", first.order(), second.order())));
                        }
                    }
                }
            }
            Ok((true, format!("{n} instances")))
        })();
        results.push(outcome(3, "Mackey formula", &e.label(), mackey));
        results
    })
}

// ---------------------------------------------------------------- 4 ----

pub fn brauer_homomorphism(entries: &[CorpusEntry], limits: Limits) -> Vec<CheckResult> {
    per_entry(entries, |e| {
        let classes = match e.group.p_subgroups_up_to_conjugacy(e.p(), limits) {
            Ok(c) => c,
            Err(err) => return vec![outcome(4, "Brauer homomorphism", &e.label(), Err(err.into()))],
        };
        let orders: Vec<usize> = classes.iter().map(|d| d.order()).collect();
        let mult = (|| {
            for d in &classes {
                if let Some((i, j)) = brauer_multiplicativity_check(d, &e.field)? {
                    return Ok((false, format!("Br_D not multiplicative for |D| = {} on orbit sums {i}, {j}", d.order())));
                }
            }
            Ok((true, format!("D orders {orders:?}")))
        })();
        let kernel = (|| {
            let mut dims = Vec::new();
            for d in &classes {
                let r = brauer_kernel_check(d, &e.field, limits)?;
                if !r.holds {
                    return Ok((false, format!("kernel {} vs trace span {} for |D| = {}", r.kernel_dim, r.trace_span_dim, d.order())));
                }
                dims.push(r.kernel_dim);
            }
            Ok((true, format!("kernel dimensions {dims:?}")))
        })();
        vec![outcome(4, "multiplicativity of Br_D", &e.label(), mult), outcome(4, "kernel of Br_D", &e.label(), kernel)]
    })
}

// ---------------------------------------------------------------- 5 ----

pub fn defect_agreement(entries: &[CorpusEntry], deep: bool, limits: Limits) -> Vec<CheckResult> {
    per_entry(entries, |e| {
        let blocks = match decompose(&e.group, &e.field) {
            Ok(d) => d.blocks,
            Err(err) => return vec![outcome(5, "defect characterizations", &e.label(), Err(err.into()))],
        };
        let mut out = Vec::new();
        let r = (|| {
            let mut orders = Vec::new();
            for (i, b) in blocks.iter().enumerate() {
                let c = defect_crosscheck(b, limits)?;
                if !c.all_agree() {
                    return Ok((false, format!("block {i}: characterizations disagree ({c:?})")));
                }
                orders.push(c.defect.order());
            }
            Ok((true, format!("defect orders {orders:?}")))
        })();
        out.push(outcome(5, "trace, normalized trace and Brauer characterizations", &e.label(), r));
        if deep && e.group.order() <= 12 {
            let r = (|| {
                let mut orders = Vec::new();
                for (i, b) in blocks.iter().enumerate() {
                    let v = bimodule_vertex(b, limits)?;
                    if !v.matches {
                        return Ok((false, format!("block {i}: bimodule vertex of order {} is not delta(D)", v.vertex.order())));
                    }
                    orders.push(v.vertex.order());
                }
                Ok((true, format!("bimodule vertex orders {orders:?}")))
            })();
            out.push(outcome(5, "bimodule vertex is delta(D)", &e.label(), r));
        }
        out
    })
}

// ---------------------------------------------------------------- 6 ----

pub fn defect_structure(entries: &[CorpusEntry], limits: Limits) -> Vec<CheckResult> {
    per_entry(entries, |e| {
        let r = (|| {
            let blocks = decompose(&e.group, &e.field)?.blocks;
            let mut witnesses = Vec::new();
            for (i, b) in blocks.iter().enumerate() {
                match defect_sylow_intersection_check(b, limits)? {
                    Some(g) => witnesses.push(e.group.label(g)),
                    None => return Ok((false, format!("block {i}: no g in C_G(D) with D = P cap gP"))),
                }
                if !defect_normalizer_check(b, limits)? {
                    return Ok((false, format!("block {i}: D != O_p(N_G(D))")));
                }
            }
            Ok((true, format!("witnesses {}", witnesses.join(", "))))
        })();
        vec![outcome(6, "Sylow intersection and O_p(N_G(D))", &e.label(), r)]
    })
}

// ---------------------------------------------------------------- 7 ----

/// Defect groups of the blocks, one per conjugacy class.
fn defect_classes(blocks: &[Block], limits: Limits) -> Result<Vec<Subgroup>, CliError> {
    let mut out: Vec<Subgroup> = Vec::new();
    for b in blocks {
        let d = b.defect_group(limits)?;
        if !out.iter().any(|x| x.is_conjugate_to(&d)) {
            out.push(d);
        }
    }
    out.sort();
    Ok(out)
}

pub fn first_main(entries: &[CorpusEntry], limits: Limits) -> Vec<CheckResult> {
    let mut results = per_entry(entries, |e| {
        if !e.p_divides_order() {
            return Vec::new();
        }
        let r = (|| {
            let blocks = decompose(&e.group, &e.field)?.blocks;
            let mut summary = Vec::new();
            for d in defect_classes(&blocks, limits)? {
                let r = first_main_check(&e.group, &e.field, &d, None, limits)?;
                if !r.verified() {
                    return Ok((false, format!("|D| = {}: correspondence is not a bijection ({r:?})", d.order())));
                }
                summary.push(format!("|D|={}: {}<->{}", d.order(), r.local_blocks.len(), r.global_blocks.len()));
            }
            Ok((true, summary.join(", ")))
        })();
        vec![outcome(7, "bijection for each defect class", &e.label(), r)]
    });
    results.push(known_first_main_instance(limits));
    results
}

/// S4 over GF(3) with D generated by a 3-cycle: exactly one pair.
pub fn known_first_main_instance(limits: Limits) -> CheckResult {
    let r = (|| {
        let e = CorpusEntry::new("S4", 3, 1, limits)?;
        let d = crate::config::parse_subgroup(&e.group, "3-cycle", 3, limits)?;
        let r = first_main_check(&e.group, &e.field, &d, None, limits)?;
        Ok((r.verified() && r.pairs.len() == 1, format!("{} pair(s), |N_G(D)| = {}", r.pairs.len(), r.normalizer_order)))
    })();
    outcome(7, "known instance: one correspondence pair", "S4 / GF(3), D = C3", r)
}

// ---------------------------------------------------------------- 8 ----

pub fn diagram_lemma(entries: &[CorpusEntry], limits: Limits) -> Vec<CheckResult> {
    per_entry(entries, |e| {
        let r = (|| {
            let mut sizes = Vec::new();
            for d in e.group.p_subgroups_up_to_conjugacy(e.p(), limits)? {
                let r = diagram_commutation_check(&d, &e.field)?;
                if !r.holds {
                    return Ok((false, format!("|D| = {}: {} mismatches, first at orbit sum {:?}", d.order(), r.mismatches, r.first_mismatch)));
                }
                sizes.push(r.basis_size);
            }
            Ok((true, format!("basis sizes {sizes:?}")))
        })();
        vec![outcome(8, "Br_D Tr_D^G = b Tr_D^N Br_D", &e.label(), r)]
    })
}

// ---------------------------------------------------------------- 9 ----

/// Largest group order for the module checks.
pub const MODULE_ORDER_CAP: usize = 24;

pub fn module_legs(entries: &[CorpusEntry], limits: Limits) -> Vec<CheckResult> {
    per_entry(entries, |e| {
        if e.group.order() > MODULE_ORDER_CAP {
            return Vec::new();
        }
        let trivial = (|| {
            let v = vertex(&Rep::trivial(&e.group, &e.field), limits)?;
            let sylow = e.group.sylow(e.p());
            Ok((v.is_conjugate_to(&sylow), format!("vertex of order {}, Sylow of order {}", v.order(), sylow.order())))
        })();
        let simples = (|| {
            let simples = chop_simples(&e.group, &e.field, MeataxeLimits::default())?;
            let blocks = decompose(&e.group, &e.field)?.blocks;
            let mut summary = Vec::new();
            for (i, b) in blocks.iter().enumerate() {
                let d = b.defect_group(limits)?;
                let members: Vec<&Rep> = simples.iter().filter(|s| s.lies_in(b)).collect();
                if members.is_empty() {
                    return Ok((false, format!("block {i} contains no simple module")));
                }
                for s in &members {
                    if higman_projectivity(s, &d)?.is_none() {
                        return Ok((false, format!("block {i}: a simple of dim {} is not relatively D-projective", s.dim())));
                    }
                }
                match simple_with_vertex_equal_defect(b, &simples, limits)? {
                    Some((j, _)) => summary.push(format!("B{i}: simple dim {} has vertex D (|D|={})", simples[j].dim(), d.order())),
                    None => return Ok((false, format!("block {i}: no simple module with vertex D"))),
                }
            }
            Ok((true, format!("{} simples; {}", simples.len(), summary.join("; "))))
        })();
        vec![
            outcome(9, "trivial module has Sylow vertex", &e.label(), trivial),
            outcome(9, "simples are D-projective; one has vertex D", &e.label(), simples),
        ]
    })
}

/// The group algebra as a bimodule is induced from the diagonal; run for
/// groups with `|G|^2 <= 256`.
pub fn bimodule_induction(entries: &[CorpusEntry], limits: Limits) -> Vec<CheckResult> {
    per_entry(entries, |e| {
        if e.group.order() * e.group.order() > 256 {
            return Vec::new();
        }
        let r = bimodule_induced_check(&e.group, &e.field, limits).map(|m| (m.is_some(), "explicit isomorphism found".to_string())).map_err(CliError::from);
        vec![outcome(5, "kG is induced from the diagonal", &e.label(), r)]
    })
}

// --------------------------------------------------------------- 10 ----

pub fn corpus_towers() -> Vec<(TowerSpec, u32)> {
    vec![
        (TowerSpec::CyclicP { p: 2, depth: 6 }, 2),
        (TowerSpec::CyclicP { p: 3, depth: 4 }, 3),
        (TowerSpec::Prodihedral3 { depth: 3 }, 3),
    ]
}

pub fn tower_checks(towers: &[(TowerSpec, u32)], limits: Limits) -> Vec<CheckResult> {
    towers
        .par_iter()
        .map(|(spec, p)| {
            let subject = format!("{} / GF({p})", spec.label());
            let r = (|| {
                let field = FiniteField::new(*p, 1)?;
                let tower = named_tower(spec, limits)?;
                let system = thread_blocks(&tower, &field)?;
                let mut failures = Vec::new();
                if !system.partition_consistent {
                    failures.push("finer idempotents do not push down to a partition of 1".to_string());
                }
                let mut stable = Vec::new();
                for (i, t) in system.threads.iter().enumerate() {
                    if !gamma_check(&system, t).holds() {
                        failures.push(format!("thread {i}: gamma is not a surjective unital homomorphism"));
                    }
                    let st = defect_stabilization(&system, t, limits)?;
                    let Some(from) = st.stable_from else {
                        failures.push(format!("thread {i}: defect groups do not stabilize within the truncation"));
                        continue;
                    };
                    stable.push(from);
                    if !tower_first_main(&system, t, limits)?.verified() {
                        failures.push(format!("thread {i}: level-wise first main theorem fails"));
                    }
                    if !otr_membership(&system, t, from..tower.depth(), limits)?.holds() {
                        failures.push(format!("thread {i}: trace memberships fail"));
                    }
                }
                let ok = format!(
                    "orders {:?}, {} thread(s), stable from {:?}, psi unique at every step",
                    tower.orders(),
                    system.threads.len(),
                    stable
                );
                Ok(describe_failures(&failures, &ok))
            })();
            outcome(10, "threads, gamma, stabilization, first main, trace memberships", &subject, r)
        })
        .collect()
}

// ------------------------------------------------------------- suite ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyReport {
    pub corpus: String,
    pub deep: bool,
    pub entries: Vec<String>,
    pub results: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Criteria 1 to 10 over the given entries.
pub fn run_suite(corpus: &str, entries: &[CorpusEntry], deep: bool, limits: Limits) -> VerifyReport {
    let mut results = Vec::new();
    results.extend(block_axioms(entries));
    results.extend(oracle_equivalence(entries));
    results.extend(trace_identities(entries, limits));
    results.extend(brauer_homomorphism(entries, limits));
    results.extend(defect_agreement(entries, deep, limits));
    if deep {
        results.extend(bimodule_induction(entries, limits));
    }
    results.extend(defect_structure(entries, limits));
    results.extend(first_main(entries, limits));
    results.extend(diagram_lemma(entries, limits));
    results.extend(module_legs(entries, limits));
    results.extend(tower_checks(&corpus_towers(), limits));
    let passed = results.iter().filter(|r| r.passed).count();
    VerifyReport {
        corpus: corpus.to_string(),
        deep,
        entries: entries.iter().map(|e| e.label()).collect(),
        failed: results.len() - passed,
        passed,
        results,
    }
}
