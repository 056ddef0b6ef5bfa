//! Audit of the subfamily condition proposed as a characterization of `SH`
//! idempotence.
//!
//! The condition: for every nonempty subfamily `{K1..Km}` with a common
//! element, every block `K` that meets `K1 ∪ … ∪ Km` lies inside it. Two
//! readings of the quantifier over `K` are checked:
//!
//! - [`Reading::R1`]: `K` ranges over all blocks.
//! - [`Reading::R2`]: `K` ranges over blocks outside the chosen subfamily.
//!
//! Nothing here decides which reading is intended; the audit records both.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::universe::Subset;

/// Default block-count guard for [`zhu_condition`]; subfamilies are enumerated.
pub const DEFAULT_BLOCK_GUARD: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Reading {
    R1,
    R2,
}

impl Reading {
    pub const BOTH: [Reading; 2] = [Reading::R1, Reading::R2];

    pub fn describe(self) -> &'static str {
        match self {
            Reading::R1 => "K ranges over every block",
            Reading::R2 => "K ranges over blocks outside the subfamily",
        }
    }
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A block `k` meeting the union of `subfamily` without lying inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZhuWitness {
    pub k: Subset,
    pub subfamily: Vec<Subset>,
}

impl ZhuWitness {
    pub fn describe(&self, c: &Covering) -> String {
        let u = c.universe();
        format!(
            "K={}, subfamily {}",
            u.format(self.k),
            u.format_family(&self.subfamily)
        )
    }
}

/// Checks the condition under `reading`.
///
/// Subfamilies are visited by increasing size, then lexicographically by
/// block index, and blocks `K` in mask order; the first violation is
/// returned. Errors when the covering has more than `max_blocks` blocks.
pub fn zhu_condition(
    c: &Covering,
    reading: Reading,
    max_blocks: usize,
) -> Result<Option<ZhuWitness>> {
    let blocks = c.blocks();
    if blocks.len() > max_blocks {
        return Err(Error::OverGuard {
            what: "subfamily enumeration (blocks)",
            limit: max_blocks,
            got: blocks.len(),
        });
    }
    for size in 1..=blocks.len() {
        for chosen in (0..blocks.len()).combinations(size) {
            let common = chosen
                .iter()
                .fold(c.universe().full(), |acc, &i| acc & blocks[i]);
            if common.is_empty() {
                continue;
            }
            let union = chosen.iter().fold(Subset::EMPTY, |acc, &i| acc | blocks[i]);
            let violator = (0..blocks.len())
                .filter(|i| reading == Reading::R1 || !chosen.contains(i))
                .map(|i| blocks[i])
                .find(|k| k.meets(union) && !k.is_subset_of(union));
            if let Some(k) = violator {
                return Ok(Some(ZhuWitness {
                    k,
                    subfamily: chosen.iter().map(|&i| blocks[i]).collect(),
                }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// Condition holds and `SH` is idempotent.
    SupportsSufficiency,
    /// Condition holds but `SH` is not idempotent.
    RefutesSufficiency,
    /// Condition fails, so the covering says nothing about sufficiency.
    Vacuous,
}

impl Classification {
    fn of(condition: bool, idempotent: bool) -> Self {
        match (condition, idempotent) {
            (true, true) => Classification::SupportsSufficiency,
            (true, false) => Classification::RefutesSufficiency,
            (false, _) => Classification::Vacuous,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReadingOutcome {
    pub reading: Reading,
    pub condition: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZhuAuditRecord {
    pub covering: String,
    pub sh_idempotent: bool,
    pub readings: [ReadingOutcome; 2],
}

impl ZhuAuditRecord {
    pub fn reading(&self, reading: Reading) -> &ReadingOutcome {
        &self.readings[reading as usize]
    }
}

/// `SH(SH(X)) = SH(X)` for every `X`.
pub fn sh_idempotent(c: &Covering) -> bool {
    let upper = crate::approx::upper_table(c);
    upper.iter().all(|&y| upper[y.index()] == y)
}

pub fn zhu_audit(c: &Covering) -> Result<ZhuAuditRecord> {
    zhu_audit_with_guard(c, DEFAULT_BLOCK_GUARD)
}

pub fn zhu_audit_with_guard(c: &Covering, max_blocks: usize) -> Result<ZhuAuditRecord> {
    let idempotent = sh_idempotent(c);
    let outcome = |reading| -> Result<ReadingOutcome> {
        let witness = zhu_condition(c, reading, max_blocks)?;
        let condition = witness.is_none();
        Ok(ReadingOutcome {
            reading,
            condition,
            witness: witness.map(|w| w.describe(c)),
            classification: Classification::of(condition, idempotent),
        })
    };
    Ok(ZhuAuditRecord {
        covering: c.to_string(),
        sh_idempotent: idempotent,
        readings: [outcome(Reading::R1)?, outcome(Reading::R2)?],
    })
}
