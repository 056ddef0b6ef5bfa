//! Second-type covering approximations and per-element structures.
//!
//! `SL(X)` is the union of the blocks inside `X`; `SH(X)` is the union of the
//! blocks meeting `X`. The per-element structures are the minimal description
//! `Md(x)`, the neighborhood `N(x)` (intersection of blocks containing `x`)
//! and the indiscernible neighborhood `I(x)` (their union).

use std::fmt;

use serde::Serialize;

use crate::covering::{Covering, SetFamily};
use crate::error::{Error, Result};
use crate::universe::Subset;

pub fn lower_approx(c: &Covering, x: Subset) -> Result<Subset> {
    let x = c.universe().check(x)?;
    Ok(lower_unchecked(c, x))
}

pub fn upper_approx(c: &Covering, x: Subset) -> Result<Subset> {
    let x = c.universe().check(x)?;
    Ok(upper_unchecked(c, x))
}

fn lower_unchecked(c: &Covering, x: Subset) -> Subset {
    c.blocks()
        .iter()
        .filter(|b| b.is_subset_of(x))
        .fold(Subset::EMPTY, |acc, &b| acc | b)
}

fn upper_unchecked(c: &Covering, x: Subset) -> Subset {
    c.blocks()
        .iter()
        .filter(|b| b.meets(x))
        .fold(Subset::EMPTY, |acc, &b| acc | b)
}

/// `SL` for every subset, indexed by mask.
pub fn lower_table(c: &Covering) -> Vec<Subset> {
    let u = c.universe();
    let mut table = vec![Subset::EMPTY; u.subset_count()];
    for &b in c.blocks() {
        table[b.index()] = b;
    }
    // subset-union transform: table[X] = OR of blocks below X
    for bit in 0..u.len() {
        let step = 1usize << bit;
        for mask in 0..table.len() {
            if mask & step != 0 {
                table[mask] = table[mask] | table[mask ^ step];
            }
        }
    }
    table
}

/// `SH` for every subset, indexed by mask.
pub fn upper_table(c: &Covering) -> Vec<Subset> {
    let u = c.universe();
    let singles: Vec<Subset> = (0..u.len())
        .map(|e| indiscernible_unchecked(c, e))
        .collect();
    let mut table = vec![Subset::EMPTY; u.subset_count()];
    for mask in 1..table.len() {
        let low = mask.trailing_zeros() as usize;
        table[mask] = table[mask & (mask - 1)] | singles[low];
    }
    table
}

fn check_element(c: &Covering, e: usize) -> Result<usize> {
    if e < c.universe().len() {
        Ok(e)
    } else {
        Err(Error::UnknownElement(e))
    }
}

/// The inclusion-minimal blocks containing `e`. Incomparable minima are all kept.
pub fn minimal_description(c: &Covering, e: usize) -> Result<SetFamily> {
    let e = check_element(c, e)?;
    Ok(SetFamily::from_sorted(c.universe(), md_unchecked(c, e)))
}

fn md_unchecked(c: &Covering, e: usize) -> Vec<Subset> {
    let containing: Vec<Subset> = c.blocks_containing(e).collect();
    containing
        .iter()
        .copied()
        .filter(|&k| !containing.iter().any(|&j| j != k && j.is_subset_of(k)))
        .collect()
}

/// True iff every element has exactly one minimal block.
pub fn is_unary(c: &Covering) -> bool {
    (0..c.universe().len()).all(|e| md_unchecked(c, e).len() == 1)
}

pub fn neighborhood(c: &Covering, e: usize) -> Result<Subset> {
    let e = check_element(c, e)?;
    Ok(neighborhood_unchecked(c, e))
}

fn neighborhood_unchecked(c: &Covering, e: usize) -> Subset {
    c.blocks_containing(e)
        .fold(c.universe().full(), |acc, b| acc & b)
}

pub fn indiscernible_neighborhood(c: &Covering, e: usize) -> Result<Subset> {
    let e = check_element(c, e)?;
    Ok(indiscernible_unchecked(c, e))
}

fn indiscernible_unchecked(c: &Covering, e: usize) -> Subset {
    c.blocks_containing(e).fold(Subset::EMPTY, |acc, b| acc | b)
}

/// `{N(x) : x ∈ U}` with duplicates collapsed.
pub fn neighborhood_family(c: &Covering) -> SetFamily {
    let u = c.universe();
    SetFamily::new(u, (0..u.len()).map(|e| neighborhood_unchecked(c, e)))
        .expect("neighborhoods lie inside the universe")
}

/// `{I(x) : x ∈ U}` with duplicates collapsed.
pub fn indiscernible_family(c: &Covering) -> SetFamily {
    let u = c.universe();
    SetFamily::new(u, (0..u.len()).map(|e| indiscernible_unchecked(c, e)))
        .expect("indiscernible neighborhoods lie inside the universe")
}

/// The eleven laws of the second-type operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ApproxProperty {
    #[serde(rename = "1L")]
    UnitLower,
    #[serde(rename = "1H")]
    UnitUpper,
    #[serde(rename = "2L")]
    EmptyLower,
    #[serde(rename = "2H")]
    EmptyUpper,
    #[serde(rename = "3L")]
    Contracting,
    #[serde(rename = "3H")]
    Extending,
    #[serde(rename = "4H")]
    UpperAdditive,
    #[serde(rename = "5L")]
    LowerIdempotent,
    #[serde(rename = "6L")]
    LowerMonotone,
    #[serde(rename = "6H")]
    UpperMonotone,
    #[serde(rename = "7LH")]
    LowerBelowUpper,
}

impl ApproxProperty {
    pub const ALL: [ApproxProperty; 11] = [
        Self::UnitLower,
        Self::UnitUpper,
        Self::EmptyLower,
        Self::EmptyUpper,
        Self::Contracting,
        Self::Extending,
        Self::UpperAdditive,
        Self::LowerIdempotent,
        Self::LowerMonotone,
        Self::UpperMonotone,
        Self::LowerBelowUpper,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Self::UnitLower => "1L",
            Self::UnitUpper => "1H",
            Self::EmptyLower => "2L",
            Self::EmptyUpper => "2H",
            Self::Contracting => "3L",
            Self::Extending => "3H",
            Self::UpperAdditive => "4H",
            Self::LowerIdempotent => "5L",
            Self::LowerMonotone => "6L",
            Self::UpperMonotone => "6H",
            Self::LowerBelowUpper => "7LH",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Self::UnitLower => "SL(U) = U",
            Self::UnitUpper => "SH(U) = U",
            Self::EmptyLower => "SL({}) = {}",
            Self::EmptyUpper => "SH({}) = {}",
            Self::Contracting => "SL(X) ⊆ X",
            Self::Extending => "X ⊆ SH(X)",
            Self::UpperAdditive => "SH(X ∪ Y) = SH(X) ∪ SH(Y)",
            Self::LowerIdempotent => "SL(SL(X)) = SL(X)",
            Self::LowerMonotone => "X ⊆ Y ⇒ SL(X) ⊆ SL(Y)",
            Self::UpperMonotone => "X ⊆ Y ⇒ SH(X) ⊆ SH(Y)",
            Self::LowerBelowUpper => "SL(X) ⊆ SH(X)",
        }
    }

    /// Whether the law quantifies over pairs `(X, Y)`.
    pub fn is_binary(self) -> bool {
        matches!(
            self,
            Self::UpperAdditive | Self::LowerMonotone | Self::UpperMonotone
        )
    }
}

impl fmt::Display for ApproxProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// A point where a law fails. `lhs`/`rhs` are the two sides that should have
/// been equal or ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PropertyWitness {
    pub x: Subset,
    pub y: Option<Subset>,
    pub lhs: Subset,
    pub rhs: Subset,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyStatus {
    pub property: ApproxProperty,
    pub witness: Option<PropertyWitness>,
}

impl PropertyStatus {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxPropertyReport {
    pub entries: Vec<PropertyStatus>,
}

impl ApproxPropertyReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(PropertyStatus::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyStatus> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn get(&self, property: ApproxProperty) -> &PropertyStatus {
        self.entries
            .iter()
            .find(|e| e.property == property)
            .expect("report has every property")
    }
}

/// Evaluates one law at one point. Unary laws ignore `y`; the constant laws
/// ignore both arguments.
///
/// Returns the witness when the law fails there.
pub fn evaluate_property(
    c: &Covering,
    property: ApproxProperty,
    x: Subset,
    y: Subset,
) -> Result<Option<PropertyWitness>> {
    let u = c.universe();
    let (x, y) = (u.check(x)?, u.check(y)?);
    let sl = |s| lower_unchecked(c, s);
    let sh = |s| upper_unchecked(c, s);
    Ok(check_at(property, u.full(), x, y, &sl, &sh))
}

fn check_at(
    property: ApproxProperty,
    full: Subset,
    x: Subset,
    y: Subset,
    sl: &dyn Fn(Subset) -> Subset,
    sh: &dyn Fn(Subset) -> Subset,
) -> Option<PropertyWitness> {
    use ApproxProperty::*;
    let unary = |x, lhs, rhs, ok: bool| {
        (!ok).then_some(PropertyWitness {
            x,
            y: None,
            lhs,
            rhs,
        })
    };
    let binary = |lhs, rhs, ok: bool| {
        (!ok).then_some(PropertyWitness {
            x,
            y: Some(y),
            lhs,
            rhs,
        })
    };
    match property {
        UnitLower => unary(full, sl(full), full, sl(full) == full),
        UnitUpper => unary(full, sh(full), full, sh(full) == full),
        EmptyLower => unary(
            Subset::EMPTY,
            sl(Subset::EMPTY),
            Subset::EMPTY,
            sl(Subset::EMPTY).is_empty(),
        ),
        EmptyUpper => unary(
            Subset::EMPTY,
            sh(Subset::EMPTY),
            Subset::EMPTY,
            sh(Subset::EMPTY).is_empty(),
        ),
        Contracting => unary(x, sl(x), x, sl(x).is_subset_of(x)),
        Extending => unary(x, x, sh(x), x.is_subset_of(sh(x))),
        UpperAdditive => {
            let (lhs, rhs) = (sh(x | y), sh(x) | sh(y));
            binary(lhs, rhs, lhs == rhs)
        }
        LowerIdempotent => unary(x, sl(sl(x)), sl(x), sl(sl(x)) == sl(x)),
        LowerMonotone => binary(
            sl(x),
            sl(y),
            !x.is_subset_of(y) || sl(x).is_subset_of(sl(y)),
        ),
        UpperMonotone => binary(
            sh(x),
            sh(y),
            !x.is_subset_of(y) || sh(x).is_subset_of(sh(y)),
        ),
        LowerBelowUpper => unary(x, sl(x), sh(x), sl(x).is_subset_of(sh(x))),
    }
}

/// Checks every law over every subset, or every pair of subsets for the
/// binary laws (monotonicity scans only the pairs with `X ⊆ Y`).
pub fn property_report(c: &Covering) -> ApproxPropertyReport {
    let u = c.universe();
    let full = u.full();
    let lower = lower_table(c);
    let upper = upper_table(c);
    let sl = |s: Subset| lower[s.index()];
    let sh = |s: Subset| upper[s.index()];
    let entries = ApproxProperty::ALL
        .iter()
        .map(|&property| {
            let witness = match property {
                ApproxProperty::UpperAdditive => u.subsets().find_map(|x| {
                    u.subsets()
                        .find_map(|y| check_at(property, full, x, y, &sl, &sh))
                }),
                ApproxProperty::LowerMonotone | ApproxProperty::UpperMonotone => {
                    u.subsets().find_map(|x| {
                        (full - x)
                            .subsets()
                            .find_map(|extra| check_at(property, full, x, x | extra, &sl, &sh))
                    })
                }
                _ => u
                    .subsets()
                    .find_map(|x| check_at(property, full, x, x, &sl, &sh)),
            };
            PropertyStatus { property, witness }
        })
        .collect();
    ApproxPropertyReport { entries }
}
