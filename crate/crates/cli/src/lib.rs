//! File formats, selectors and report records for the `cayley-sum` binary.
//!
//! The computations themselves live in [`cayley_sum_core`]; this crate reads
//! group spec files, turns command-line selections into element sets and
//! shapes results into serializable records.

use std::fs;
use std::path::Path;

use cayley_sum_core::codes::{
    condition_invariant_coset, condition_xh, subgroup_code_witness_with, TotalReading,
};
use cayley_sum_core::group::split_top_level;
use cayley_sum_core::subgroup::is_normal_subgroup;
use cayley_sum_core::{CodeKind, ElementSet, Group, GroupSpec, Subgroup};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("bad group spec: {0}")]
    Spec(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] cayley_sum_core::Error),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

/// Group spec file contents, tagged by `family`.
///
/// ```json
/// {"family": "dihedral", "order": 12}
/// {"family": "product", "factors": [{"family": "cyclic", "order": 2}, {"family": "v8n", "n": 1}]}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
pub enum SpecFile {
    Cyclic {
        order: usize,
    },
    Dihedral {
        order: usize,
    },
    Dicyclic {
        order: usize,
    },
    Quaternion {},
    V8n {
        n: usize,
    },
    Symmetric {
        k: usize,
    },
    Alternating {
        k: usize,
    },
    Product {
        factors: Vec<SpecFile>,
    },
    Table {
        mul: Vec<Vec<usize>>,
        #[serde(default)]
        names: Option<Vec<String>>,
    },
}

impl SpecFile {
    pub fn to_group_spec(&self) -> GroupSpec {
        match self {
            SpecFile::Cyclic { order } => GroupSpec::Cyclic { order: *order },
            SpecFile::Dihedral { order } => GroupSpec::Dihedral { order: *order },
            SpecFile::Dicyclic { order } => GroupSpec::Dicyclic { order: *order },
            SpecFile::Quaternion {} => GroupSpec::quaternion(),
            SpecFile::V8n { n } => GroupSpec::V8n { n: *n },
            SpecFile::Symmetric { k } => GroupSpec::Symmetric { k: *k },
            SpecFile::Alternating { k } => GroupSpec::Alternating { k: *k },
            SpecFile::Product { factors } => {
                GroupSpec::Product(factors.iter().map(SpecFile::to_group_spec).collect())
            }
            SpecFile::Table { mul, names } => GroupSpec::Table {
                mul: mul.clone(),
                names: names.clone(),
            },
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    Ok(serde_json::from_str::<SpecFile>(text)?.to_group_spec())
}

pub fn load_group(path: &Path) -> Result<Group> {
    Ok(parse_spec(&read(path)?)?.build()?)
}

/// A corpus file is a JSON array of group specs.
pub fn load_corpus(path: &Path) -> Result<Vec<GroupSpec>> {
    let specs: Vec<SpecFile> = serde_json::from_str(&read(path)?)?;
    Ok(specs.iter().map(SpecFile::to_group_spec).collect())
}

/// Parses a selection such as `a,a^5,class:3`: element names, plus
/// `class:k` for the `k`-th conjugacy class (0-based, in the order printed
/// by the `classes` command).
pub fn parse_selection(g: &Group, text: &str) -> Result<ElementSet> {
    let mut set = g.empty_set();
    for item in split_top_level(text.trim()) {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        if let Some(k) = item.strip_prefix("class:") {
            let k: usize = k
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad class selector `{item}`")))?;
            if k >= g.classes().len() {
                return Err(CliError::Usage(format!(
                    "class index {k} out of range: the group has {} classes",
                    g.classes().len()
                )));
            }
            set.union_with(g.classes().class(k));
        } else {
            set.insert(g.parse_element(item)?);
        }
    }
    Ok(set)
}

pub fn names(g: &Group, s: &ElementSet) -> Vec<String> {
    s.iter().map(|x| g.name(x).to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Criteria {
    pub xh: bool,
    #[serde(rename = "xH")]
    pub x_h: bool,
}

/// One record per (group, subgroup, kind).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub group: String,
    pub subgroup_elements: Vec<String>,
    pub kind: &'static str,
    pub witness_or_null: Option<Vec<String>>,
    /// Only evaluated for normal subgroups.
    pub criteria: Option<Criteria>,
    /// The witness passes the graph-level check and, for perfect codes of a
    /// normal subgroup, both criteria agree with the search outcome.
    pub verified: bool,
}

pub fn witness_record(
    g: &Group,
    h: &Subgroup,
    kind: CodeKind,
    reading: TotalReading,
) -> Result<WitnessRecord> {
    let w = subgroup_code_witness_with(g, h, kind, reading)?;
    let criteria = if is_normal_subgroup(g, h) {
        Some(Criteria {
            xh: condition_xh(g, h)?.holds,
            x_h: condition_invariant_coset(g, h)?.holds,
        })
    } else {
        None
    };
    let mut verified = w.as_ref().is_none_or(|w| w.verified);
    if let (CodeKind::Perfect, Some(c)) = (kind, &criteria) {
        verified &= c.xh == w.is_some() && c.x_h == w.is_none();
    }
    Ok(WitnessRecord {
        group: g.family().to_string(),
        subgroup_elements: names(g, h.carrier()),
        kind: kind.as_str(),
        witness_or_null: w.map(|w| names(g, w.connection_set.set())),
        criteria,
        verified,
    })
}
