//! The built-in corpus of (group, field) pairs.

use std::sync::Arc;

use blocktower::{named_group, FiniteField, FiniteGroup, Limits};

use crate::config::{field_label, CorpusKind};
use crate::error::CliError;

const GROUPS: [&str; 12] = ["C2", "C3", "C4", "C6", "C8", "C2xC2", "S3", "S4", "A4", "D4", "D6", "Q8"];
const DEEP_GROUPS: [&str; 1] = ["A5"];
const FIELDS: [(u32, u32); 5] = [(2, 1), (3, 1), (2, 2), (3, 2), (5, 1)];
const SMALL_FIELDS: [(u32, u32); 3] = [(2, 1), (3, 1), (5, 1)];

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub group: Arc<FiniteGroup>,
    pub field: FiniteField,
}

impl CorpusEntry {
    pub fn new(name: &str, p: u32, m: u32, limits: Limits) -> Result<Self, CliError> {
        let group = named_group(&name.parse()?, limits)?;
        Ok(CorpusEntry { name: name.to_string(), group, field: FiniteField::new(p, m)? })
    }

    pub fn label(&self) -> String {
        format!("{} / {}", self.name, field_label(&self.field))
    }

    pub fn p(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn p_divides_order(&self) -> bool {
        self.group.order() % self.p() as usize == 0
    }
}

/// `small`: groups of order at most 12 over GF(2), GF(3), GF(5).
/// `full`: every corpus group over GF(2), GF(3), GF(4), GF(9), GF(5).
/// `deep` adds A5. Pairs with `p > |G|` are left out.
pub fn corpus(kind: CorpusKind, deep: bool, limits: Limits) -> Result<Vec<CorpusEntry>, CliError> {
    let fields: &[(u32, u32)] = match kind {
        CorpusKind::Small => &SMALL_FIELDS,
        CorpusKind::Full => &FIELDS,
    };
    let mut names: Vec<&str> = GROUPS.to_vec();
    if deep {
        names.extend(DEEP_GROUPS);
    }
    let mut out = Vec::new();
    for name in names {
        let group = named_group(&name.parse()?, limits)?;
        if kind == CorpusKind::Small && group.order() > 12 {
            continue;
        }
        for &(p, m) in fields {
            if p as usize <= group.order() {
                out.push(CorpusEntry { name: name.to_string(), group: group.clone(), field: FiniteField::new(p, m)? });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        let small = corpus(CorpusKind::Small, false, Limits::default()).unwrap();
        assert!(small.iter().all(|e| e.group.order() <= 12 && e.field.degree() == 1));
        let full = corpus(CorpusKind::Full, false, Limits::default()).unwrap();
        assert!(full.len() > small.len());
        assert!(full.iter().all(|e| e.name != "A5"));
        let deep = corpus(CorpusKind::Full, true, Limits::default()).unwrap();
        assert!(deep.iter().any(|e| e.name == "A5"));
        assert!(!full.iter().any(|e| e.name == "C2" && e.p() == 3));
    }
}
