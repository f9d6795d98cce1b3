//! The subcommands. Each returns a serializable report, its text
//! rendering, and whether every check it ran passed.

use std::fmt::Write as _;

use blocktower::blocks::{decompose, defect_crosscheck, defect_normalizer_check, defect_sylow_intersection_check, first_main_check};
use blocktower::module::bimodule_vertex;
use blocktower::tower::{defect_stabilization, gamma_check, otr_membership, tower_first_main};
use blocktower::{named_tower, thread_blocks, FiniteGroup, Limits, Subgroup};
use serde::{Deserialize, Serialize};

use crate::config::{field_label, parse_subgroup, JobConfig};
use crate::corpus::corpus;
use crate::error::CliError;
use crate::suite::{run_suite, VerifyReport, CRITERIA};

/// A finished command.
pub struct Outcome {
    pub text: String,
    pub json: String,
    pub passed: bool,
}

impl Outcome {
    fn new<T: Serialize>(report: &T, text: String, passed: bool) -> Self {
        let json = serde_json::to_string_pretty(report).expect("reports serialize");
        Outcome { text, json, passed }
    }
}

fn labels(g: &FiniteGroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| g.label(x)).collect()
}

fn describe(s: &Subgroup) -> String {
    let gens = labels(s.parent(), &s.generators());
    if gens.is_empty() {
        format!("order {}", s.order())
    } else {
        format!("order {} <{}>", s.order(), gens.join(", "))
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "yes"
    } else {
        "NO"
    }
}

// -------------------------------------------------------------- blocks ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockRow {
    pub index: usize,
    pub dim: usize,
    pub principal: bool,
    pub support: usize,
    /// Nonzero coefficients as (element label, field element index).
    pub idempotent: Vec<(String, u32)>,
    pub defect_order: usize,
    pub defect_generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlocksReport {
    pub group: String,
    pub field: String,
    pub order: usize,
    pub center_dim: usize,
    pub radical_dim: usize,
    pub frobenius_fixed_dim: usize,
    pub blocks: Vec<BlockRow>,
}

pub fn cmd_blocks(config: &JobConfig, limits: Limits) -> Result<Outcome, CliError> {
    let (spec, g) = config.group(limits)?;
    let field = config.field()?;
    let d = decompose(&g, &field)?;
    let mut rows = Vec::new();
    for (index, b) in d.blocks.iter().enumerate() {
        let defect = b.defect_group(limits)?;
        let terms = b.idempotent().to_sparse();
        rows.push(BlockRow {
            index,
            dim: b.algebra_dim(),
            principal: b.is_principal(),
            support: terms.len(),
            idempotent: terms.iter().map(|&(x, c)| (g.label(x), c.index())).collect(),
            defect_order: defect.order(),
            defect_generators: labels(&g, &defect.generators()),
        });
    }
    let report = BlocksReport {
        group: spec.to_string(),
        field: field_label(&field),
        order: g.order(),
        center_dim: d.center_dim,
        radical_dim: d.radical_dim,
        frobenius_fixed_dim: d.frobenius_fixed_dim,
        blocks: rows,
    };
    let passed = report.blocks.len() == d.frobenius_fixed_dim && report.blocks.iter().map(|b| b.dim).sum::<usize>() == g.order();
    let mut text = format!(
        "{} over {}: {} block(s); dim Z = {}, dim J(Z) = {}\n{:>5}  {:>5}  {:>9}  {:>7}  {:>6}  defect generators\n",
        report.group,
        report.field,
        report.blocks.len(),
        report.center_dim,
        report.radical_dim,
        "block",
        "dim",
        "principal",
        "support",
        "|D|"
    );
    for r in &report.blocks {
        let _ = writeln!(
            text,
            "{:>5}  {:>5}  {:>9}  {:>7}  {:>6}  {}",
            r.index,
            r.dim,
            if r.principal { "yes" } else { "" },
            r.support,
            r.defect_order,
            if r.defect_generators.is_empty() { "-".to_string() } else { r.defect_generators.join(", ") }
        );
    }
    Ok(Outcome::new(&report, text, passed))
}

// -------------------------------------------------------------- defect ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefectRow {
    pub index: usize,
    pub defect_order: usize,
    pub defect_generators: Vec<String>,
    pub trace_agrees: bool,
    pub modified_trace_agrees: bool,
    pub trace_and_brauer: bool,
    pub brauer_maximal: bool,
    pub sylow_intersection_witness: Option<String>,
    pub normalizer_core: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bimodule_vertex_order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bimodule_vertex_matches: Option<bool>,
}

impl DefectRow {
    fn passed(&self) -> bool {
        self.trace_agrees
            && self.modified_trace_agrees
            && self.trace_and_brauer
            && self.brauer_maximal
            && self.sylow_intersection_witness.is_some()
            && self.normalizer_core
            && self.bimodule_vertex_matches != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefectReport {
    pub group: String,
    pub field: String,
    pub blocks: Vec<DefectRow>,
}

pub fn cmd_defect(config: &JobConfig, limits: Limits) -> Result<Outcome, CliError> {
    let (spec, g) = config.group(limits)?;
    let field = config.field()?;
    let blocks = decompose(&g, &field)?.blocks;
    let deep = config.deep() && g.order() <= 12;
    let mut rows = Vec::new();
    for (index, b) in blocks.iter().enumerate() {
        let c = defect_crosscheck(b, limits)?;
        let vertex = if deep { Some(bimodule_vertex(b, limits)?) } else { None };
        rows.push(DefectRow {
            index,
            defect_order: c.defect.order(),
            defect_generators: labels(&g, &c.defect.generators()),
            trace_agrees: c.trace_agrees(),
            modified_trace_agrees: c.modified_trace_agrees(),
            trace_and_brauer: c.trace_and_brauer,
            brauer_maximal: c.brauer_maximal,
            sylow_intersection_witness: defect_sylow_intersection_check(b, limits)?.map(|x| g.label(x)),
            normalizer_core: defect_normalizer_check(b, limits)?,
            bimodule_vertex_order: vertex.as_ref().map(|v| v.vertex.order()),
            bimodule_vertex_matches: vertex.as_ref().map(|v| v.matches),
        });
    }
    let report = DefectReport { group: spec.to_string(), field: field_label(&field), blocks: rows };
    let passed = report.blocks.iter().all(DefectRow::passed);
    let mut text = format!("{} over {}: defect groups\n", report.group, report.field);
    let _ = writeln!(text, "{:>5}  {:>4}  {:>5}  {:>6}  {:>9}  {:>9}  {:>10}  {:>8}  {:>8}", "block", "|D|", "trace", "trace~", "Tr+Br", "Br-max", "P cap gP", "O_p(N)", "bimodule");
    for r in &report.blocks {
        let _ = writeln!(
            text,
            "{:>5}  {:>4}  {:>5}  {:>6}  {:>9}  {:>9}  {:>10}  {:>8}  {:>8}",
            r.index,
            r.defect_order,
            mark(r.trace_agrees),
            mark(r.modified_trace_agrees),
            mark(r.trace_and_brauer),
            mark(r.brauer_maximal),
            r.sylow_intersection_witness.as_deref().unwrap_or("NONE"),
            mark(r.normalizer_core),
            r.bimodule_vertex_matches.map_or("-", mark)
        );
    }
    Ok(Outcome::new(&report, text, passed))
}

// ----------------------------------------------------------- correspond ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorrespondReport {
    pub group: String,
    pub field: String,
    pub defect_order: usize,
    pub defect_generators: Vec<String>,
    pub normalizer_order: usize,
    /// `(block of N_G(D), block of G)`
    pub pairs: Vec<(usize, usize)>,
    pub local_blocks: Vec<usize>,
    pub global_blocks: Vec<usize>,
    pub defects_match: bool,
    pub injective: bool,
    pub surjective: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intermediate_order: Option<usize>,
    /// `(block of L, block of G)` through the intermediate subgroup.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub composite: Option<Vec<(usize, usize)>>,
    pub verified: bool,
}

pub fn cmd_correspond(config: &JobConfig, limits: Limits) -> Result<Outcome, CliError> {
    let (spec, g) = config.group(limits)?;
    let field = config.field()?;
    let p = field.characteristic();
    let selector = config.subgroup.as_deref().ok_or_else(|| CliError::Input("--subgroup is required".into()))?;
    let d = parse_subgroup(&g, selector, p, limits)?;
    let l = config.intermediate.as_deref().map(|s| parse_subgroup(&g, s, p, limits)).transpose()?;
    let r = first_main_check(&g, &field, &d, l.as_ref(), limits)?;
    let report = CorrespondReport {
        group: spec.to_string(),
        field: field_label(&field),
        defect_order: d.order(),
        defect_generators: labels(&g, &d.generators()),
        normalizer_order: r.normalizer_order,
        pairs: r.pairs.iter().map(|p| (p.local, p.global)).collect(),
        local_blocks: r.local_blocks.clone(),
        global_blocks: r.global_blocks.clone(),
        defects_match: r.defects_match,
        injective: r.injective,
        surjective: r.surjective,
        intermediate_order: r.intermediate.as_ref().map(|i| i.intermediate_order),
        composite: r.intermediate.as_ref().map(|i| i.composite.clone()),
        verified: r.verified(),
    };
    let mut text = format!(
        "{} over {}: D {}, |N_G(D)| = {}\n{} block(s) of N_G(D) with defect group D, {} block(s) of G\n",
        report.group,
        report.field,
        describe(&d),
        report.normalizer_order,
        report.local_blocks.len(),
        report.global_blocks.len()
    );
    for (local, global) in &report.pairs {
        let _ = writeln!(text, "  N_G(D) block {local}  <->  G block {global}");
    }
    if let Some(composite) = &report.composite {
        let _ = writeln!(text, "through L of order {}:", report.intermediate_order.unwrap_or(0));
        for (lb, gb) in composite {
            let _ = writeln!(text, "  L block {lb}  <->  G block {gb}");
        }
    }
    let _ = writeln!(text, "bijection verified: {}", mark(report.verified));
    let passed = report.verified;
    Ok(Outcome::new(&report, text, passed))
}

// ---------------------------------------------------------------- tower ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreadRow {
    pub index: usize,
    pub start_level: usize,
    pub blocks: Vec<usize>,
    /// Per level: nonzero coefficients of the idempotent.
    pub idempotents: Vec<Vec<(String, u32)>>,
    pub defect_orders: Vec<usize>,
    pub p_indices: Vec<usize>,
    pub stable_from: Option<usize>,
    pub gamma: bool,
    pub first_main: Option<bool>,
    pub trace_memberships: Option<bool>,
    pub observations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerReport {
    pub tower: String,
    pub field: String,
    pub orders: Vec<usize>,
    pub kernel_orders: Vec<usize>,
    pub block_counts: Vec<usize>,
    pub partition_consistent: bool,
    /// `(finer level, finer block, coarse blocks)`
    pub merges: Vec<(usize, usize, Vec<usize>)>,
    pub threads: Vec<ThreadRow>,
}

pub fn cmd_tower(config: &JobConfig, limits: Limits) -> Result<Outcome, CliError> {
    let field = config.field()?;
    let arg = config.tower.as_ref().ok_or_else(|| CliError::Input("--spec is required".into()))?;
    let spec = arg.resolve(config.depth, field.characteristic())?;
    let tower = named_tower(&spec, limits)?;
    let system = thread_blocks(&tower, &field)?;
    let mut threads = Vec::new();
    for (index, t) in system.threads.iter().enumerate() {
        let st = defect_stabilization(&system, t, limits)?;
        let (first_main, memberships, observations) = match st.stable_from {
            Some(from) => {
                let fm = tower_first_main(&system, t, limits)?;
                let otr = otr_membership(&system, t, from..tower.depth(), limits)?;
                let notes = fm.cross_level.iter().map(|c| format!("levels {}-{}: {}", c.level, c.level + 1, c.note)).collect();
                (Some(fm.verified()), Some(otr.holds()), notes)
            }
            None => (None, None, vec!["defect groups not stabilized within the truncation; a deeper tower may help".to_string()]),
        };
        threads.push(ThreadRow {
            index,
            start_level: t.start_level,
            blocks: t.blocks.clone(),
            idempotents: t
                .levels()
                .map(|l| {
                    let g = &tower.levels()[l];
                    system.idempotent(l, t.block_at(l).expect("on thread")).to_sparse().iter().map(|&(x, c)| (g.label(x), c.index())).collect()
                })
                .collect(),
            defect_orders: st.defect_orders,
            p_indices: st.p_indices,
            stable_from: st.stable_from,
            gamma: gamma_check(&system, t).holds(),
            first_main,
            trace_memberships: memberships,
            observations,
        });
    }
    let report = TowerReport {
        tower: spec.label(),
        field: field_label(&field),
        orders: tower.orders(),
        kernel_orders: tower.kernels().iter().map(|k| k.order()).collect(),
        block_counts: system.blocks.iter().map(Vec::len).collect(),
        partition_consistent: system.partition_consistent,
        merges: system.merges.iter().map(|m| (m.level, m.fine_block, m.coarse_blocks.clone())).collect(),
        threads,
    };
    let passed = report.partition_consistent
        && report.threads.iter().all(|t| t.gamma && t.first_main != Some(false) && t.trace_memberships != Some(false));
    let mut text = format!(
        "{} over {}: orders {:?}, blocks per level {:?}\n{:>6}  {:>5}  {:<16}  {:<16}  {:>6}  {:>5}  {:>10}  {:>5}\n",
        report.tower, report.field, report.orders, report.block_counts, "thread", "start", "blocks", "|D_i|", "stable", "gamma", "first main", "oTr"
    );
    let opt = |b: Option<bool>| b.map_or("-", mark);
    for t in &report.threads {
        let _ = writeln!(
            text,
            "{:>6}  {:>5}  {:<16}  {:<16}  {:>6}  {:>5}  {:>10}  {:>5}",
            t.index,
            t.start_level,
            format!("{:?}", t.blocks),
            format!("{:?}", t.defect_orders),
            t.stable_from.map_or("-".to_string(), |s| s.to_string()),
            mark(t.gamma),
            opt(t.first_main),
            opt(t.trace_memberships)
        );
        for note in &t.observations {
            let _ = writeln!(text, "        {note}");
        }
    }
    for (level, fine, coarse) in &report.merges {
        let _ = writeln!(text, "merge at level {level}: block {fine} lies over blocks {coarse:?}");
    }
    Ok(Outcome::new(&report, text, passed))
}

// --------------------------------------------------------------- verify ----

pub fn cmd_verify(config: &JobConfig, limits: Limits) -> Result<Outcome, CliError> {
    let kind = config.corpus.unwrap_or_default();
    let entries = corpus(kind, config.deep(), limits)?;
    let report: VerifyReport = run_suite(&kind.to_string(), &entries, config.deep(), limits);
    let mut text = format!("verify: corpus {} ({} pairs){}\n", report.corpus, report.entries.len(), if report.deep { ", deep" } else { "" });
    for c in &CRITERIA[..10] {
        let mine: Vec<_> = report.results.iter().filter(|r| r.criterion == c.id).collect();
        let failed = mine.iter().filter(|r| !r.passed).count();
        let _ = writeln!(text, "[{}] {:>2}. {} ({} checks) -- {}", if failed == 0 { "PASS" } else { "FAIL" }, c.id, c.title, mine.len(), c.anchor);
        for r in mine.iter().filter(|r| !r.passed) {
            let _ = writeln!(text, "       {} :: {} :: {}", r.subject, r.check, r.detail);
        }
    }
    let _ = writeln!(text, "{} passed, {} failed", report.passed, report.failed);
    let passed = report.all_passed();
    Ok(Outcome::new(&report, text, passed))
}
