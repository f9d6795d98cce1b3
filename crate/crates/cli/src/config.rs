//! Job configuration shared by flags and `--config` files.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use blocktower::{named_group, FiniteField, FiniteGroup, Limits, NamedGroup, Subgroup, TowerSpec};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum CorpusKind {
    #[default]
    Small,
    Full,
}

impl fmt::Display for CorpusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CorpusKind::Small => "small",
            CorpusKind::Full => "full",
        })
    }
}

/// `p=3` or `p=2,m=2`, or the object form `{"p": 2, "m": 2}` in files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldArg {
    Text(String),
    Spec {
        p: u32,
        #[serde(default)]
        m: Option<u32>,
    },
}

impl FieldArg {
    pub fn resolve(&self) -> Result<FiniteField, CliError> {
        let (p, m) = match self {
            FieldArg::Spec { p, m } => (*p, m.unwrap_or(1)),
            FieldArg::Text(s) => parse_field_text(s)?,
        };
        Ok(FiniteField::new(p, m)?)
    }
}

fn parse_field_text(s: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::Input(format!("field must look like p=3 or p=2,m=2, got `{s}`"));
    let (mut p, mut m) = (None, None);
    for part in s.split(',') {
        let (key, value) = part.split_once('=').ok_or_else(bad)?;
        let value: u32 = value.trim().parse().map_err(|_| bad())?;
        match key.trim() {
            "p" if p.is_none() => p = Some(value),
            "m" if m.is_none() => m = Some(value),
            _ => return Err(bad()),
        }
    }
    Ok((p.ok_or_else(bad)?, m.unwrap_or(1)))
}

/// A tower given by name (`prodihedral_3`, `cyclic_p:2`, ...), as the
/// full JSON object, or as bare `levels` and `maps`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TowerArg {
    Name(String),
    Spec(TowerSpec),
    Levels(ExplicitTower),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitTower {
    pub levels: Vec<String>,
    pub maps: Vec<Vec<usize>>,
}

impl TowerArg {
    /// `cyclic_p` without a prime takes the field characteristic.
    pub fn resolve(&self, depth: Option<usize>, characteristic: u32) -> Result<TowerSpec, CliError> {
        match self {
            TowerArg::Spec(s) => Ok(s.clone()),
            TowerArg::Levels(t) => Ok(TowerSpec::Explicit { levels: t.levels.clone(), maps: t.maps.clone() }),
            TowerArg::Name(name) => {
                let name = if name.trim() == "cyclic_p" { format!("cyclic_p:{characteristic}") } else { name.clone() };
                let spec = TowerSpec::from_str(&name)?;
                Ok(spec.with_depth(depth.unwrap_or(3)))
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tower: Option<TowerArg>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldArg>,
    /// The subgroup `D` for `correspond`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<String>,
    /// An intermediate subgroup `N_G(D) <= L <= G` for `correspond`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intermediate: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deep: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corpus: Option<CorpusKind>,
}

impl JobConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid config: {e}")))
    }

    /// Fields set in `other` win.
    pub fn overridden_by(self, other: JobConfig) -> JobConfig {
        JobConfig {
            group: other.group.or(self.group),
            tower: other.tower.or(self.tower),
            depth: other.depth.or(self.depth),
            field: other.field.or(self.field),
            subgroup: other.subgroup.or(self.subgroup),
            intermediate: other.intermediate.or(self.intermediate),
            format: other.format.or(self.format),
            deep: other.deep.or(self.deep),
            corpus: other.corpus.or(self.corpus),
        }
    }

    pub fn format(&self) -> Format {
        self.format.unwrap_or_default()
    }

    pub fn deep(&self) -> bool {
        self.deep.unwrap_or(false)
    }

    pub fn group(&self, limits: Limits) -> Result<(NamedGroup, Arc<FiniteGroup>), CliError> {
        let name = self.group.as_deref().ok_or_else(|| CliError::Input("--group is required".into()))?;
        let spec: NamedGroup = name.parse()?;
        let g = named_group(&spec, limits)?;
        Ok((spec, g))
    }

    pub fn field(&self) -> Result<FiniteField, CliError> {
        self.field.as_ref().ok_or_else(|| CliError::Input("--field is required".into()))?.resolve()
    }
}

pub fn field_label(f: &FiniteField) -> String {
    format!("GF({})", f.size())
}

/// Subgroup selectors:
/// `trivial`, `whole`, `sylow`, `K-cycle` (generated by the first
/// element that is a single K-cycle), `order:N` (first p-subgroup class
/// of order N), `elements:i,j,..` (generated by element indices), or
/// generators in cycle notation separated by `;`, e.g. `(0 1 2);(0 1)`.
pub fn parse_subgroup(g: &Arc<FiniteGroup>, selector: &str, p: u32, limits: Limits) -> Result<Subgroup, CliError> {
    let s = selector.trim();
    let bad = |why: &str| CliError::Input(format!("subgroup `{s}`: {why}"));
    if s == "trivial" {
        return Ok(Subgroup::trivial(g));
    }
    if s == "whole" {
        return Ok(Subgroup::whole(g));
    }
    if s == "sylow" {
        return Ok(g.sylow(p));
    }
    if let Some(k) = s.strip_suffix("-cycle") {
        let k: usize = k.parse().map_err(|_| bad("expected K-cycle"))?;
        let x = (0..g.order())
            .find(|&x| g.permutation(x).is_some_and(|perm| cycle_type(perm) == [k]))
            .ok_or_else(|| bad("no such cycle in the group"))?;
        return Ok(Subgroup::generated(g, &[x])?);
    }
    if let Some(n) = s.strip_prefix("order:") {
        let n: usize = n.parse().map_err(|_| bad("expected order:N"))?;
        return g
            .p_subgroups_up_to_conjugacy(p, limits)?
            .into_iter()
            .find(|q| q.order() == n)
            .ok_or_else(|| bad("no p-subgroup of that order"));
    }
    if let Some(list) = s.strip_prefix("elements:") {
        let elements = list
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad("expected element indices")))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(&x) = elements.iter().find(|&&x| x >= g.order()) {
            return Err(bad(&format!("element {x} out of range")));
        }
        return Ok(Subgroup::generated(g, &elements)?);
    }
    if s.starts_with('(') {
        let degree = g.permutation(0).map(|perm| perm.len()).ok_or_else(|| bad("group has no permutation form"))?;
        let mut gens = Vec::new();
        for word in s.split(';') {
            let perm = parse_cycles(word, degree).map_err(|e| bad(&e))?;
            let x = (0..g.order()).find(|&x| g.permutation(x) == Some(&perm)).ok_or_else(|| bad("permutation is not in the group"))?;
            gens.push(x);
        }
        return Ok(Subgroup::generated(g, &gens)?);
    }
    Err(bad("unknown selector"))
}

fn cycle_type(perm: &[u32]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] as usize;
            len += 1;
        }
        if len > 1 {
            out.push(len);
        }
    }
    out.sort_unstable();
    out
}

/// Cycle notation such as `(0 1 2)(3 4)` or `(0,1,2)`, on points `0..degree`.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Vec<u32>, String> {
    let mut perm: Vec<u32> = (0..degree as u32).collect();
    let mut rest = text.trim();
    if rest == "()" {
        return Ok(perm);
    }
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or("expected `(`")?;
        let close = body.find(')').ok_or("unclosed cycle")?;
        let points = body[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| format!("bad point `{t}`")))
            .collect::<Result<Vec<_>, _>>()?;
        if points.iter().any(|&x| x as usize >= degree) {
            return Err(format!("point out of range 0..{degree}"));
        }
        // Cycles compose right to left, matching the group's product.
        let mut cycle: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in points.iter().enumerate() {
            cycle[x as usize] = points[(i + 1) % points.len()];
        }
        perm = (0..degree).map(|x| perm[cycle[x] as usize]).collect();
        rest = body[close + 1..].trim_start();
    }
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arguments() {
        assert_eq!(parse_field_text("p=3").unwrap(), (3, 1));
        assert_eq!(parse_field_text("p=2, m=2").unwrap(), (2, 2));
        assert!(parse_field_text("q=4").is_err());
        assert!(parse_field_text("p=2,p=3").is_err());
        let spec: FieldArg = serde_json::from_str(r#"{"p": 3, "m": 2}"#).unwrap();
        assert_eq!(spec.resolve().unwrap().size(), 9);
    }

    #[test]
    fn unknown_config_keys_are_rejected() {
        assert!(JobConfig::parse(r#"{"group": "S3", "colour": "red"}"#).is_err());
        let c = JobConfig::parse(r#"{"group": "S3", "field": "p=2", "format": "json"}"#).unwrap();
        assert_eq!(c.format(), Format::Json);
        let t = JobConfig::parse(r#"{"tower": {"kind": "prodihedral_3", "depth": 3}, "field": {"p": 3}}"#).unwrap();
        assert_eq!(t.tower.unwrap().resolve(None, 3).unwrap(), TowerSpec::Prodihedral3 { depth: 3 });
        let e = JobConfig::parse(r#"{"tower": {"levels": ["C1", "C2"], "maps": [[0, 0]]}}"#).unwrap();
        assert!(matches!(e.tower.unwrap().resolve(None, 2).unwrap(), TowerSpec::Explicit { .. }));
        assert!(JobConfig::parse(r#"{"tower": {"levels": ["C1"], "maps": [], "x": 1}}"#).is_err());
    }

    #[test]
    fn selectors() {
        let g = named_group(&"S4".parse().unwrap(), Limits::default()).unwrap();
        let c3 = parse_subgroup(&g, "3-cycle", 3, Limits::default()).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(parse_subgroup(&g, "sylow", 2, Limits::default()).unwrap().order(), 8);
        assert_eq!(parse_subgroup(&g, "(0 1 2);(0 1)", 2, Limits::default()).unwrap().order(), 6);
        assert_eq!(parse_subgroup(&g, "order:4", 2, Limits::default()).unwrap().order(), 4);
        assert!(parse_subgroup(&g, "(0 9)", 2, Limits::default()).is_err());
        assert!(parse_subgroup(&g, "bogus", 2, Limits::default()).is_err());
    }

    #[test]
    fn cycle_notation_matches_labels() {
        let g = named_group(&"S3".parse().unwrap(), Limits::default()).unwrap();
        for x in 0..6 {
            let label = g.label(x);
            assert_eq!(parse_cycles(&label, 3).unwrap(), *g.permutation(x).unwrap(), "{label}");
        }
    }
}
