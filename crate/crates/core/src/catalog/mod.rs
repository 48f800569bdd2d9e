//! JSON-lines catalogs of groups.
//!
//! Each non-blank line is one object with a `kind` of `perm_gens`,
//! `group_table` or `construction`:
//!
//! ```text
//! {"name":"C4","kind":"perm_gens","degree":4,"gens":[[1,2,3,0]]}
//! {"name":"V4","kind":"group_table","order":4,"table":[0,1,2,3,1,0,3,2,2,3,0,1,3,2,1,0]}
//! {"name":"hol5","kind":"construction","expr":"holomorph(5)"}
//! ```
//!
//! `perm_gens` entries may carry a `regular_subgroup` generator list.

mod expr;

use std::collections::HashSet;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

pub use expr::{build_expression, Built};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::perm::{PermGroup, Permutation};

/// One catalog line as written.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RawEntry {
    PermGens {
        name: String,
        degree: usize,
        gens: Vec<Vec<u32>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        regular_subgroup: Option<Vec<Vec<u32>>>,
    },
    GroupTable {
        name: String,
        order: usize,
        table: Vec<u32>,
    },
    Construction {
        name: String,
        expr: String,
    },
}

impl RawEntry {
    pub fn name(&self) -> &str {
        match self {
            RawEntry::PermGens { name, .. }
            | RawEntry::GroupTable { name, .. }
            | RawEntry::Construction { name, .. } => name,
        }
    }

    /// The line form of a built object.
    pub fn from_built(name: &str, built: &Built) -> RawEntry {
        let images = |ps: &[Permutation]| ps.iter().map(|p| p.images().to_vec()).collect();
        match built {
            Built::Table(t) => {
                let data = t.data();
                RawEntry::GroupTable {
                    name: name.to_string(),
                    order: data.order,
                    table: data.mul,
                }
            }
            Built::Perm { group, regular } => RawEntry::PermGens {
                name: name.to_string(),
                degree: group.degree(),
                gens: images(group.generators()),
                regular_subgroup: regular.as_deref().map(images),
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// 1-based line number in the source.
    pub line: usize,
    pub name: String,
    pub object: Built,
}

impl CatalogEntry {
    /// Permutation form: tables act on themselves by right multiplication.
    pub fn perm_group(&self) -> Result<PermGroup> {
        match &self.object {
            Built::Perm { group, .. } => Ok(group.clone()),
            Built::Table(t) => {
                let gens = t.generating_set().into_iter().map(|a| t.right_regular(a)).collect();
                PermGroup::generate(t.order(), gens)
            }
        }
    }

    pub fn regular_subgroup(&self) -> Option<&[Permutation]> {
        match &self.object {
            Built::Perm { regular, .. } => regular.as_deref(),
            Built::Table(_) => None,
        }
    }

    pub fn table(&self) -> Option<&GroupTable> {
        match &self.object {
            Built::Table(t) => Some(t),
            Built::Perm { .. } => None,
        }
    }
}

fn permutations(degree: usize, lists: Vec<Vec<u32>>) -> std::result::Result<Vec<Permutation>, String> {
    lists
        .into_iter()
        .map(|images| {
            if images.len() != degree {
                return Err(format!(
                    "generator has {} images, expected degree {degree}",
                    images.len()
                ));
            }
            Permutation::from_images(images).map_err(|e| e.to_string())
        })
        .collect()
}

fn validate(raw: RawEntry) -> std::result::Result<Built, String> {
    match raw {
        RawEntry::PermGens {
            degree,
            gens,
            regular_subgroup,
            ..
        } => {
            if degree == 0 {
                return Err("degree must be positive".into());
            }
            let group = PermGroup::generate(degree, permutations(degree, gens)?).map_err(|e| e.to_string())?;
            let regular = match regular_subgroup {
                Some(lists) => {
                    let perms = permutations(degree, lists)?;
                    if let Some(p) = perms.iter().find(|p| !group.contains(p)) {
                        return Err(format!("regular subgroup generator {p:?} is not in the group"));
                    }
                    Some(perms)
                }
                None => None,
            };
            Ok(Built::Perm { group, regular })
        }
        RawEntry::GroupTable { order, table, .. } => GroupTable::from_mul_table(order, table)
            .map(Built::Table)
            .map_err(|e| e.to_string()),
        RawEntry::Construction { expr, .. } => build_expression(&expr).map_err(|e| e.to_string()),
    }
}

/// Reads and validates a catalog. Blank lines and lines starting with `#`
/// are skipped.
pub fn parse_catalog(reader: impl BufRead) -> Result<Vec<CatalogEntry>> {
    let mut entries = Vec::new();
    let mut names = HashSet::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| Error::Parse {
            line: line_no,
            reason: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let raw: RawEntry = serde_json::from_str(trimmed).map_err(|e| Error::Parse {
            line: line_no,
            reason: e.to_string(),
        })?;
        let name = raw.name().to_string();
        let invalid = |reason: String| Error::Validation {
            line: line_no,
            name: name.clone(),
            reason,
        };
        if !names.insert(name.clone()) {
            return Err(invalid("duplicate name".into()));
        }
        let object = validate(raw).map_err(invalid)?;
        entries.push(CatalogEntry {
            line: line_no,
            name,
            object,
        });
    }
    Ok(entries)
}

pub fn parse_catalog_str(text: &str) -> Result<Vec<CatalogEntry>> {
    parse_catalog(text.as_bytes())
}
