use std::io::Write;
use std::process::{Command, Output};

use blocktower_cli::commands::{BlocksReport, CorrespondReport, DefectReport, TowerReport};
use blocktower_cli::suite::VerifyReport;

fn blocktower(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blocktower")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn blocks_of_s3_in_characteristic_two() {
    let o = blocktower(&["blocks", "--group", "S3", "--field", "p=2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: BlocksReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.order, 6);
    assert_eq!(r.field, "GF(2)");
    assert_eq!(r.blocks.iter().map(|b| b.dim).collect::<Vec<_>>(), vec![2, 4]);
    assert_eq!(r.blocks.iter().map(|b| b.defect_order).collect::<Vec<_>>(), vec![2, 1]);
    assert!(r.blocks[0].principal);
}

#[test]
fn json_reports_round_trip() {
    let o = blocktower(&["defect", "--group", "A4", "--field", "p=2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let r: DefectReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", text);

    let o = blocktower(&["correspond", "--group", "S4", "--field", "p=3", "--subgroup", "3-cycle", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: CorrespondReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.pairs, vec![(0, 0)]);
    assert_eq!(r.normalizer_order, 6);
    assert!(r.verified);

    let o = blocktower(&["tower", "--spec", "prodihedral_3", "--depth", "3", "--field", "p=3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: TowerReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.orders, vec![6, 18, 54]);
    assert_eq!(r.threads.len(), 1);
    assert_eq!(r.threads[0].defect_orders, vec![3, 9, 27]);
    assert_eq!(r.threads[0].stable_from, Some(0));
}

#[test]
fn reports_carry_no_unknown_fields() {
    let o = blocktower(&["blocks", "--group", "C4", "--field", "p=2", "--format", "json"]);
    let mut value: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    value["extra"] = serde_json::json!(1);
    assert!(serde_json::from_value::<BlocksReport>(value).is_err());
}

#[test]
fn exit_codes() {
    assert_eq!(blocktower(&["blocks", "--group", "S3", "--field", "p=5"]).status.code(), Some(0));
    assert_eq!(blocktower(&["blocks", "--group", "Z7", "--field", "p=2"]).status.code(), Some(2));
    assert_eq!(blocktower(&["blocks", "--group", "S3", "--field", "p=4"]).status.code(), Some(2));
    assert_eq!(blocktower(&["blocks", "--group", "S3"]).status.code(), Some(2));
    assert_eq!(blocktower(&["correspond", "--group", "S3", "--field", "p=2", "--subgroup", "3-cycle"]).status.code(), Some(2));
    assert_eq!(blocktower(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(blocktower(&["--help"]).status.code(), Some(0));
}

#[test]
fn text_output_names_the_blocks() {
    let o = blocktower(&["blocks", "--group", "S3", "--field", "p=5"]);
    let text = stdout(&o);
    assert!(text.starts_with("S3 over GF(5): 3 block(s)"), "{text}");
    assert_eq!(text.lines().filter(|l| l.trim_start().starts_with(char::is_numeric)).count(), 3, "{text}");
}

#[test]
fn config_file_supplies_the_job_and_flags_override_it() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"{{"group": "S4", "field": {{"p": 3, "m": 1}}, "format": "json"}}"#).unwrap();
    let path = file.path().to_str().unwrap();
    let o = blocktower(&["blocks", "--config", path]);
    assert_eq!(o.status.code(), Some(0));
    let r: BlocksReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.blocks.len(), 3);
    let o = blocktower(&["blocks", "--config", path, "--field", "p=2"]);
    let r: BlocksReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.blocks.len(), 1);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, r#"{{"group": "S4", "field": "p=3", "colour": "blue"}}"#).unwrap();
    let o = blocktower(&["blocks", "--config", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("colour"));
}

#[test]
fn verify_small_corpus_is_deterministic() {
    let a = blocktower(&["verify", "--corpus", "small", "--format", "json"]);
    let b = blocktower(&["verify", "--corpus", "small", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r: VerifyReport = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(r.failed, 0);
    assert_eq!(r.entries.len(), 28);
}

#[test]
fn explicit_tower_from_a_config_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"{{"tower": {{"levels": ["C1", "C2"], "maps": [[0, 0]]}}, "field": "p=3", "format": "json"}}"#).unwrap();
    let o = blocktower(&["tower", "--config", file.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r: TowerReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.orders, vec![1, 2]);
    assert_eq!(r.block_counts, vec![1, 2]);
    assert_eq!(r.threads.iter().map(|t| t.start_level).collect::<Vec<_>>(), vec![0, 1]);
}
