//! The bundled corpus of small groups and its file format.
//!
//! Every entry carries a `(order, index)` identifier, a display name, and a
//! committed list of permutation generators. The generators were produced
//! offline; loading a catalog re-validates each entry by enumerating the
//! group and checking its order and solvability, so a corrupted file is
//! rejected with a message naming the entry and the violated invariant.
//! Spectrum-level checks live in the test suite, which pins every table
//! entry to its expected exponent row.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError, DEFAULT_ENUM_CAP};
use crate::perm::Permutation;

/// Small-groups style identifier `(order, index)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupId(pub u64, pub u64);

impl GroupId {
    pub fn order(&self) -> u64 {
        self.0
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Which table column an entry belongs to. `G` entries multiply into the
/// solvable product, `H` entries into the non-solvable one; auxiliaries are
/// extra test material with multiplicity 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    G,
    H,
    #[serde(rename = "aux")]
    Aux,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::G => write!(f, "G"),
            Side::H => write!(f, "H"),
            Side::Aux => write!(f, "aux"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub id: GroupId,
    pub name: String,
    pub degree: usize,
    /// Zero-based image arrays of length `degree`.
    pub generators: Vec<Vec<u32>>,
    pub solvable: bool,
    pub side: Side,
    pub multiplicity: u64,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot read catalog: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse catalog: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("duplicate catalog id {id}")]
    DuplicateId { id: GroupId },
    #[error("entry {id} {name}: {source}")]
    BadGenerators {
        id: GroupId,
        name: String,
        source: GroupError,
    },
    #[error("entry {id} {name}: generators produce order {actual}, id requires {expected}")]
    OrderMismatch {
        id: GroupId,
        name: String,
        expected: u64,
        actual: u64,
    },
    #[error("entry {id} {name}: computed solvability {actual}, catalog claims {expected}")]
    SolvabilityMismatch {
        id: GroupId,
        name: String,
        expected: bool,
        actual: bool,
    },
    #[error("entry {id} {name}: table entries need multiplicity >= 1")]
    ZeroMultiplicity { id: GroupId, name: String },
    #[error("no catalog entry matches {selector:?}")]
    UnknownSelector { selector: String },
    #[error("table entry {id} is missing from the catalog")]
    MissingTableEntry { id: GroupId },
}

#[derive(Deserialize)]
struct CatalogFile {
    entries: Vec<GroupDescriptor>,
}

/// A validated, immutable collection of group descriptors.
#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<GroupDescriptor>,
    by_id: HashMap<GroupId, usize>,
    by_name: HashMap<String, usize>,
}

/// Table identifiers in row order: the 18 solvable-side entries.
pub const TABLE_G_IDS: [GroupId; 18] = [
    GroupId(4, 1),
    GroupId(6, 1),
    GroupId(7, 1),
    GroupId(8, 3),
    GroupId(14, 1),
    GroupId(24, 3),
    GroupId(48, 6),
    GroupId(56, 7),
    GroupId(84, 1),
    GroupId(84, 5),
    GroupId(84, 11),
    GroupId(98, 4),
    GroupId(168, 9),
    GroupId(168, 15),
    GroupId(168, 17),
    GroupId(168, 43),
    GroupId(224, 106),
    GroupId(336, 31),
];

/// Table identifiers in row order: the 18 entries of the non-solvable side.
pub const TABLE_H_IDS: [GroupId; 18] = [
    GroupId(2, 1),
    GroupId(3, 1),
    GroupId(12, 1),
    GroupId(12, 3),
    GroupId(16, 8),
    GroupId(21, 1),
    GroupId(24, 6),
    GroupId(24, 8),
    GroupId(28, 1),
    GroupId(42, 1),
    GroupId(42, 5),
    GroupId(48, 7),
    GroupId(56, 5),
    GroupId(168, 11),
    GroupId(168, 23),
    GroupId(168, 42),
    GroupId(294, 10),
    GroupId(336, 36),
];

const BUNDLED_JSON: &str = include_str!("../data/catalog.json");

impl Catalog {
    /// Loads and validates a catalog file with the default enumeration cap.
    pub fn load(path: impl AsRef<Path>) -> Result<Self, CatalogError> {
        Self::load_with_cap(path, DEFAULT_ENUM_CAP)
    }

    pub fn load_with_cap(path: impl AsRef<Path>, cap: usize) -> Result<Self, CatalogError> {
        let text = std::fs::read_to_string(path)?;
        Self::parse_with_cap(&text, cap)
    }

    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        Self::parse_with_cap(text, DEFAULT_ENUM_CAP)
    }

    pub fn parse_with_cap(text: &str, cap: usize) -> Result<Self, CatalogError> {
        let file: CatalogFile = serde_json::from_str(text)?;
        Self::validate(file.entries, cap)
    }

    /// The catalog shipped with the crate: both table sides plus the
    /// auxiliary groups.
    pub fn bundled() -> Self {
        Self::parse(BUNDLED_JSON).expect("bundled catalog validates")
    }

    pub fn bundled_with_cap(cap: usize) -> Result<Self, CatalogError> {
        Self::parse_with_cap(BUNDLED_JSON, cap)
    }

    fn validate(entries: Vec<GroupDescriptor>, cap: usize) -> Result<Self, CatalogError> {
        let mut by_id = HashMap::new();
        let mut by_name = HashMap::new();
        for (i, entry) in entries.iter().enumerate() {
            if by_id.insert(entry.id, i).is_some() {
                return Err(CatalogError::DuplicateId { id: entry.id });
            }
            by_name.entry(entry.name.clone()).or_insert(i);
            if entry.side != Side::Aux && entry.multiplicity == 0 {
                return Err(CatalogError::ZeroMultiplicity {
                    id: entry.id,
                    name: entry.name.clone(),
                });
            }
            let group = build_group_capped(entry, cap).map_err(|source| {
                CatalogError::BadGenerators {
                    id: entry.id,
                    name: entry.name.clone(),
                    source,
                }
            })?;
            if group.order() != entry.id.order() {
                return Err(CatalogError::OrderMismatch {
                    id: entry.id,
                    name: entry.name.clone(),
                    expected: entry.id.order(),
                    actual: group.order(),
                });
            }
            let solvable = group.is_solvable();
            if solvable != entry.solvable {
                return Err(CatalogError::SolvabilityMismatch {
                    id: entry.id,
                    name: entry.name.clone(),
                    expected: entry.solvable,
                    actual: solvable,
                });
            }
        }
        Ok(Catalog {
            entries,
            by_id,
            by_name,
        })
    }

    pub fn entries(&self) -> &[GroupDescriptor] {
        &self.entries
    }

    pub fn get(&self, id: GroupId) -> Option<&GroupDescriptor> {
        self.by_id.get(&id).map(|&i| &self.entries[i])
    }

    /// Entries of one side, in catalog order.
    pub fn side(&self, side: Side) -> impl Iterator<Item = &GroupDescriptor> {
        self.entries.iter().filter(move |e| e.side == side)
    }

    /// The solvable table entries (both sides), in catalog order — the
    /// corpus the linear search runs against.
    pub fn solvable_table_entries(&self) -> impl Iterator<Item = &GroupDescriptor> {
        self.entries
            .iter()
            .filter(|e| e.side != Side::Aux && e.solvable)
    }

    /// Resolves `"name"`, `"(order,index)"` or `"order,index"`.
    pub fn find(&self, selector: &str) -> Result<&GroupDescriptor, CatalogError> {
        if let Some(&i) = self.by_name.get(selector) {
            return Ok(&self.entries[i]);
        }
        if let Some(id) = parse_id(selector) {
            if let Some(entry) = self.get(id) {
                return Ok(entry);
            }
        }
        Err(CatalogError::UnknownSelector {
            selector: selector.to_string(),
        })
    }

    /// Checks that every entry of both tables is present.
    pub fn require_full_tables(&self) -> Result<(), CatalogError> {
        for id in TABLE_G_IDS.iter().chain(&TABLE_H_IDS) {
            if self.get(*id).is_none() {
                return Err(CatalogError::MissingTableEntry { id: *id });
            }
        }
        Ok(())
    }
}

fn parse_id(selector: &str) -> Option<GroupId> {
    let trimmed = selector
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')');
    let (order, index) = trimmed.split_once(',')?;
    Some(GroupId(
        order.trim().parse().ok()?,
        index.trim().parse().ok()?,
    ))
}

/// Enumerates the permutation group a descriptor describes.
pub fn build_group(descriptor: &GroupDescriptor) -> Result<FiniteGroup, GroupError> {
    build_group_capped(descriptor, DEFAULT_ENUM_CAP)
}

pub fn build_group_capped(
    descriptor: &GroupDescriptor,
    cap: usize,
) -> Result<FiniteGroup, GroupError> {
    let generators = descriptor
        .generators
        .iter()
        .map(|images| Permutation::from_images(images.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    FiniteGroup::enumerate_capped(&generators, cap)
}
