//! The acceptance suite: every criterion on the full corpus, each against
//! its time budget, one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use blocktower::Limits;
use blocktower_cli::commands::cmd_verify;
use blocktower_cli::config::{CorpusKind, Format, JobConfig};
use blocktower_cli::corpus::corpus;
use blocktower_cli::suite::{self, CheckResult, CRITERIA};

struct Line {
    id: u8,
    checks: usize,
    failures: Vec<String>,
    elapsed: Duration,
    limit: Duration,
}

impl Line {
    fn passed(&self) -> bool {
        self.checks > 0 && self.failures.is_empty() && self.elapsed <= self.limit
    }
}

fn timed(id: u8, limit_secs: u64, run: impl FnOnce() -> Vec<CheckResult>) -> Line {
    let start = Instant::now();
    let results = run();
    let elapsed = start.elapsed();
    let mut failures: Vec<String> =
        results.iter().filter(|r| !r.passed).map(|r| format!("{} :: {} :: {}", r.subject, r.check, r.detail)).collect();
    if let Some(r) = results.iter().find(|r| r.criterion != id) {
        failures.push(format!("result filed under criterion {}: {}", r.criterion, r.check));
    }
    Line { id, checks: results.len(), failures, elapsed, limit: Duration::from_secs(limit_secs) }
}

fn verify_json(limits: Limits) -> String {
    let config = JobConfig { corpus: Some(CorpusKind::Full), format: Some(Format::Json), ..JobConfig::default() };
    cmd_verify(&config, limits).expect("verify runs").json
}

#[test]
fn acceptance() {
    let limits = Limits::default();
    let full = corpus(CorpusKind::Full, false, limits).unwrap();
    let deep = corpus(CorpusKind::Full, true, limits).unwrap();

    let lines = vec![
        timed(1, 60, || suite::block_axioms(&full)),
        timed(2, 120, || suite::oracle_equivalence(&full)),
        timed(3, 120, || suite::trace_identities(&full, limits)),
        timed(4, 120, || suite::brauer_homomorphism(&full, limits)),
        timed(5, 15 * 60, || {
            let mut r = suite::defect_agreement(&deep, true, limits);
            r.extend(suite::bimodule_induction(&deep, limits));
            r
        }),
        timed(6, 60, || suite::defect_structure(&full, limits)),
        timed(7, 5 * 60, || suite::first_main(&full, limits)),
        timed(8, 5 * 60, || suite::diagram_lemma(&full, limits)),
        timed(9, 10 * 60, || suite::module_legs(&full, limits)),
        timed(10, 10 * 60, || suite::tower_checks(&suite::corpus_towers(), limits)),
        timed(11, 10 * 60, || {
            let (a, b) = (verify_json(limits), verify_json(limits));
            let same = a == b;
            vec![CheckResult {
                criterion: 11,
                check: "two verify runs give byte-identical JSON".into(),
                anchor: CRITERIA[10].anchor.into(),
                subject: "full corpus".into(),
                passed: same,
                detail: format!("{} bytes", a.len()),
            }]
        }),
    ];

    println!("acceptance: {} corpus pairs, {} with deep additions", full.len(), deep.len());
    for line in &lines {
        let c = &CRITERIA[line.id as usize - 1];
        println!(
            "[{}] {:>2}. {:<28} {:>4} checks  {:>8.2?} / {:>5}s  ({})",
            if line.passed() { "PASS" } else { "FAIL" },
            line.id,
            c.title,
            line.checks,
            line.elapsed,
            line.limit.as_secs(),
            c.anchor
        );
        for f in &line.failures {
            println!("       {f}");
        }
    }
    let failed: Vec<u8> = lines.iter().filter(|l| !l.passed()).map(|l| l.id).collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
