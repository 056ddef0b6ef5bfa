//! Coverings, set families, and enumerators over them.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::universe::{Subset, Universe};

/// Largest universe for which [`enumerate_coverings`] runs.
pub const EXHAUSTIVE_GUARD: usize = 4;

/// A family of pairwise distinct subsets, kept sorted by mask.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    universe: Universe,
    members: Vec<Subset>,
}

impl SetFamily {
    pub fn new<I>(universe: &Universe, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut members: Vec<Subset> = members
            .into_iter()
            .map(|s| universe.check(s))
            .collect::<Result<_>>()?;
        members.sort_unstable();
        members.dedup();
        Ok(SetFamily {
            universe: universe.clone(),
            members,
        })
    }

    /// Members must already be sorted, deduplicated and inside the universe.
    pub(crate) fn from_sorted(universe: &Universe, members: Vec<Subset>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SetFamily {
            universe: universe.clone(),
            members,
        }
    }

    pub fn from_labels<S: AsRef<str>>(universe: &Universe, members: &[Vec<S>]) -> Result<Self> {
        let subsets = members
            .iter()
            .map(|m| universe.subset(m.iter().map(AsRef::as_ref)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, subsets)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, subset: Subset) -> bool {
        self.members.binary_search(&subset).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied()
    }

    pub fn union(&self) -> Subset {
        self.iter().fold(Subset::EMPTY, Subset::union)
    }

    pub fn to_labels(&self) -> Vec<Vec<String>> {
        self.iter()
            .map(|s| self.universe.subset_labels(s))
            .collect()
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.universe.format_family(&self.members))
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily{self}")
    }
}

/// True iff the members are nonempty, pairwise disjoint, and cover the universe.
pub fn is_partition(family: &SetFamily) -> bool {
    let mut seen = Subset::EMPTY;
    for member in family.iter() {
        if member.is_empty() || member.meets(seen) {
            return false;
        }
        seen = seen | member;
    }
    seen == family.universe().full()
}

/// A family of distinct nonempty blocks whose union is the universe.
///
/// Blocks are stored sorted by mask, so two coverings with the same blocks
/// compare equal regardless of input order.
#[derive(Clone, PartialEq, Eq)]
pub struct Covering {
    universe: Universe,
    blocks: Vec<Subset>,
}

impl Covering {
    /// Validates and deduplicates `blocks`.
    pub fn new<I>(universe: &Universe, blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = Subset>,
    {
        let family = SetFamily::new(universe, blocks)?;
        if family.members.first().is_some_and(|b| b.is_empty()) {
            return Err(Error::EmptyBlock);
        }
        let uncovered = universe.full() - family.union();
        if !uncovered.is_empty() {
            return Err(Error::NotCovered(universe.format(uncovered)));
        }
        Ok(Covering {
            universe: family.universe,
            blocks: family.members,
        })
    }

    pub fn from_labels<S: AsRef<str>>(universe: &Universe, blocks: &[Vec<S>]) -> Result<Self> {
        let subsets = blocks
            .iter()
            .map(|b| universe.subset(b.iter().map(AsRef::as_ref)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, subsets)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_block(&self, subset: Subset) -> bool {
        self.blocks.binary_search(&subset).is_ok()
    }

    pub fn blocks_containing(&self, element: usize) -> impl Iterator<Item = Subset> + '_ {
        self.blocks
            .iter()
            .copied()
            .filter(move |b| b.contains(element))
    }

    pub fn as_family(&self) -> SetFamily {
        SetFamily::from_sorted(&self.universe, self.blocks.clone())
    }

    pub fn to_labels(&self) -> Vec<Vec<String>> {
        self.blocks
            .iter()
            .map(|&b| self.universe.subset_labels(b))
            .collect()
    }
}

impl fmt::Display for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.universe.format_family(&self.blocks))
    }
}

impl fmt::Debug for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Covering{self}")
    }
}

/// Checks label lists against `u` and builds the covering.
pub fn make_covering<S: AsRef<str>>(u: &Universe, blocks: &[Vec<S>]) -> Result<Covering> {
    Covering::from_labels(u, blocks)
}

/// Every covering of `u` exactly once.
///
/// Coverings come out in lexicographic order of their sorted block-mask
/// lists. Requires `u.len() <= EXHAUSTIVE_GUARD`.
pub fn enumerate_coverings(u: &Universe) -> Result<Coverings> {
    if u.len() > EXHAUSTIVE_GUARD {
        return Err(Error::OverGuard {
            what: "exhaustive covering enumeration",
            limit: EXHAUSTIVE_GUARD,
            got: u.len(),
        });
    }
    Ok(Coverings {
        universe: u.clone(),
        top: u.full().mask(),
        chosen: Vec::new(),
        started: false,
    })
}

/// Preorder walk over strictly increasing sequences of nonempty masks.
pub struct Coverings {
    universe: Universe,
    top: u64,
    chosen: Vec<u64>,
    started: bool,
}

impl Coverings {
    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.chosen.push(1);
            return true;
        }
        match self.chosen.last().copied() {
            None => false,
            Some(last) if last < self.top => {
                self.chosen.push(last + 1);
                true
            }
            Some(_) => {
                self.chosen.pop();
                match self.chosen.last_mut() {
                    Some(prev) => {
                        *prev += 1;
                        true
                    }
                    None => false,
                }
            }
        }
    }
}

impl Iterator for Coverings {
    type Item = Covering;

    fn next(&mut self) -> Option<Covering> {
        while self.advance() {
            let union = self.chosen.iter().fold(0, |acc, m| acc | m);
            if union == self.top {
                return Some(Covering {
                    universe: self.universe.clone(),
                    blocks: self.chosen.iter().map(|&m| Subset::from_mask(m)).collect(),
                });
            }
        }
        None
    }
}

/// Seed-deterministic random covering.
///
/// Each nonempty subset is taken independently with probability 1/2, in mask
/// order, from a ChaCha8 stream seeded with `seed`. Elements left uncovered
/// then receive singleton blocks.
pub fn random_covering(u: &Universe, seed: u64) -> Covering {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blocks: Vec<Subset> = (1..=u.full().mask())
        .filter(|_| rng.gen_bool(0.5))
        .map(Subset::from_mask)
        .collect();
    let covered = blocks.iter().fold(Subset::EMPTY, |acc, &b| acc | b);
    blocks.extend((u.full() - covered).elements().map(Subset::singleton));
    Covering::new(u, blocks).expect("random covering is valid by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Universe {
        Universe::new(["a", "b", "c"]).unwrap()
    }

    #[test]
    fn covering_from_example() {
        let c = make_covering(&abc(), &[vec!["a", "b"], vec!["a", "c"]]).unwrap();
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn rejects_uncovered() {
        let u = Universe::new(["a", "b"]).unwrap();
        match make_covering(&u, &[vec!["a"]]) {
            Err(Error::NotCovered(s)) => assert_eq!(s, "{b}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_empty_block_and_unknown_label() {
        let u = Universe::new(["a", "b"]).unwrap();
        let empty: Vec<&str> = vec![];
        assert!(matches!(
            make_covering(&u, &[vec!["a", "b"], empty]),
            Err(Error::EmptyBlock)
        ));
        assert!(matches!(
            make_covering(&u, &[vec!["a", "q"]]),
            Err(Error::UnknownLabel(l)) if l == "q"
        ));
    }

    #[test]
    fn deduplicates_blocks() {
        let u = Universe::new(["a", "b"]).unwrap();
        let c = make_covering(&u, &[vec!["a", "b"], vec!["b", "a"]]).unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn partition_checks() {
        let u = abc();
        let yes = SetFamily::from_labels(&u, &[vec!["a", "b"], vec!["c"]]).unwrap();
        let overlap = SetFamily::from_labels(&u, &[vec!["a", "b"], vec!["a", "c"]]).unwrap();
        assert!(is_partition(&yes));
        assert!(!is_partition(&overlap));
        let u2 = Universe::new(["a", "b"]).unwrap();
        let nested = SetFamily::from_labels(&u2, &[vec!["a"], vec!["a", "b"]]).unwrap();
        assert!(!is_partition(&nested));
        let with_empty = SetFamily::new(&u2, [Subset::EMPTY, u2.full()]).unwrap();
        assert!(!is_partition(&with_empty));
        let short = SetFamily::from_labels(&u, &[vec!["a"]]).unwrap();
        assert!(!is_partition(&short));
    }

    #[test]
    fn enumeration_guard() {
        let u = Universe::alphabetic(5).unwrap();
        assert!(matches!(
            enumerate_coverings(&u),
            Err(Error::OverGuard {
                limit: 4,
                got: 5,
                ..
            })
        ));
    }

    #[test]
    fn small_enumerations() {
        let u1 = Universe::new(["a"]).unwrap();
        let all: Vec<Covering> = enumerate_coverings(&u1).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].blocks(), &[u1.full()]);
        let u2 = Universe::alphabetic(2).unwrap();
        let all: Vec<String> = enumerate_coverings(&u2)
            .unwrap()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(
            all,
            [
                "{{a},{b}}",
                "{{a},{b},{a,b}}",
                "{{a},{a,b}}",
                "{{b},{a,b}}",
                "{{a,b}}"
            ]
        );
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let u = abc();
        let all: Vec<Vec<Subset>> = enumerate_coverings(&u)
            .unwrap()
            .map(|c| c.blocks().to_vec())
            .collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn random_is_deterministic_and_valid() {
        let u = Universe::alphabetic(5).unwrap();
        let a = random_covering(&u, 7);
        assert_eq!(a, random_covering(&u, 7));
        assert_eq!(
            a.blocks().iter().fold(Subset::EMPTY, |x, &b| x | b),
            u.full()
        );
        assert!(a.blocks().iter().all(|b| !b.is_empty()));
    }
}
