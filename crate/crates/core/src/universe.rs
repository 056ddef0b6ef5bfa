//! Finite ground sets and their subsets.
//!
//! A [`Universe`] is an ordered list of distinct labels. Subsets are bit masks
//! over element positions, so the subsets of a universe of size `n` are exactly
//! the integers `0..2^n` and numeric mask order is the canonical subset order.

use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default largest universe size. Closure tables hold `2^n` entries.
pub const DEFAULT_CAP: usize = 16;

/// Absolute ceiling for any configured cap.
pub const MAX_CAP: usize = 30;

/// Environment variable that overrides [`DEFAULT_CAP`] in [`configured_cap`].
pub const CAP_ENV: &str = "RM_UNIVERSE_CAP";

/// The cap from `RM_UNIVERSE_CAP`, or [`DEFAULT_CAP`] when unset or unparsable.
/// Values above [`MAX_CAP`] are clamped.
pub fn configured_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|cap| cap.min(MAX_CAP))
        .unwrap_or(DEFAULT_CAP)
}

/// A subset of some universe, stored as a membership mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_mask(mask: u64) -> Self {
        Subset(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    /// Mask value as a table index.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn singleton(element: usize) -> Self {
        Subset(1 << element)
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, element: usize) -> bool {
        self.0 >> element & 1 == 1
    }

    pub const fn with(self, element: usize) -> Self {
        Subset(self.0 | 1 << element)
    }

    pub const fn without(self, element: usize) -> Self {
        Subset(self.0 & !(1 << element))
    }

    pub const fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub const fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub const fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn meets(self, other: Subset) -> bool {
        !self.is_disjoint(other)
    }

    /// Element positions in increasing order.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self` in increasing mask order.
    pub fn subsets(self) -> SubmaskIter {
        SubmaskIter {
            set: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset({:#b})", self.0)
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        self.union(rhs)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        self.intersection(rhs)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        self.difference(rhs)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Subset::EMPTY, Subset::with)
    }
}

#[derive(Clone, Debug)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let low = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(low)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Submasks of a fixed mask in increasing numeric order.
#[derive(Clone, Debug)]
pub struct SubmaskIter {
    set: u64,
    next: Option<u64>,
}

impl Iterator for SubmaskIter {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let current = self.next?;
        self.next = if current == self.set {
            None
        } else {
            Some(current.wrapping_sub(self.set) & self.set)
        };
        Some(Subset(current))
    }
}

#[derive(Debug)]
struct Inner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered finite ground set of distinct labels.
///
/// Cloning is cheap; clones compare equal to the original.
#[derive(Clone)]
pub struct Universe(Arc<Inner>);

impl Universe {
    /// Builds a universe under [`DEFAULT_CAP`].
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_cap(labels, DEFAULT_CAP)
    }

    pub fn with_cap<I, S>(labels: I, cap: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let cap = cap.min(MAX_CAP);
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if labels.len() > cap {
            return Err(Error::OverCap {
                size: labels.len(),
                cap,
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Universe(Arc::new(Inner { labels, index })))
    }

    /// A universe of `n` generated labels: `a`, `b`, ... and `e26`, `e27`, ...
    /// past the alphabet.
    pub fn alphabetic(n: usize) -> Result<Self> {
        let labels = (0..n).map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("e{i}")
            }
        });
        Self::with_cap(labels, n.max(1))
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, element: usize) -> &str {
        &self.0.labels[element]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.0.index.get(label).copied()
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        self.position(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// The whole universe as a subset.
    pub fn full(&self) -> Subset {
        Subset(if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        })
    }

    /// Number of subsets, `2^n`.
    pub fn subset_count(&self) -> usize {
        1usize << self.len()
    }

    pub fn contains(&self, subset: Subset) -> bool {
        subset.is_subset_of(self.full())
    }

    pub fn check(&self, subset: Subset) -> Result<Subset> {
        if self.contains(subset) {
            Ok(subset)
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels
            .into_iter()
            .map(|l| self.element(l.as_ref()))
            .collect()
    }

    /// Every subset exactly once, in increasing mask order.
    pub fn subsets(&self) -> SubmaskIter {
        self.full().subsets()
    }

    pub fn subset_labels(&self, subset: Subset) -> Vec<String> {
        subset
            .elements()
            .map(|e| self.label(e).to_owned())
            .collect()
    }

    /// `{a,b}` with labels in universe order; `{}` for the empty set.
    pub fn format(&self, subset: Subset) -> String {
        let labels: Vec<&str> = subset.elements().map(|e| self.label(e)).collect();
        format!("{{{}}}", labels.join(","))
    }

    pub fn format_family<'a, I>(&self, members: I) -> String
    where
        I: IntoIterator<Item = &'a Subset>,
    {
        let parts: Vec<String> = members.into_iter().map(|s| self.format(*s)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Universe").field(&self.0.labels).finish()
    }
}

/// Every subset of `u` exactly once, in increasing mask order.
pub fn enumerate_subsets(u: &Universe) -> SubmaskIter {
    u.subsets()
}
