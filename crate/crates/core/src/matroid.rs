//! Matroids given by their independent sets, and the passage from a closure
//! operator satisfying CL1–CL4 to its matroid.

use std::fmt;

use serde::Serialize;

use crate::closure::{check_closure_axioms, ClosureTable, Provenance};
use crate::covering::SetFamily;
use crate::error::{Error, Result};
use crate::universe::{Subset, Universe};

/// A failed independence axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom")]
pub enum IndependenceWitness {
    /// The empty set is missing.
    I1,
    /// `subset ⊆ member` with `member` independent but `subset` not.
    I2 { member: Subset, subset: Subset },
    /// `|smaller| < |larger|` but no element of `larger − smaller` extends `smaller`.
    I3 { smaller: Subset, larger: Subset },
}

impl IndependenceWitness {
    pub fn describe(&self, u: &Universe) -> String {
        match *self {
            IndependenceWitness::I1 => "I1: {} is not independent".to_owned(),
            IndependenceWitness::I2 { member, subset } => format!(
                "I2: {} is independent but its subset {} is not",
                u.format(member),
                u.format(subset)
            ),
            IndependenceWitness::I3 { smaller, larger } => format!(
                "I3: no element of {} extends I1={} (I2={})",
                u.format(larger - smaller),
                u.format(smaller),
                u.format(larger)
            ),
        }
    }
}

/// Scans I1, then I2 over every member and each of its subsets, then I3 over
/// every ordered pair of members. Returns the first violation.
pub fn check_matroid_axioms(f: &SetFamily) -> Option<IndependenceWitness> {
    if !f.contains(Subset::EMPTY) {
        return Some(IndependenceWitness::I1);
    }
    for member in f.iter() {
        if let Some(subset) = member.subsets().find(|&s| !f.contains(s)) {
            return Some(IndependenceWitness::I2 { member, subset });
        }
    }
    for smaller in f.iter() {
        for larger in f.iter() {
            if smaller.len() < larger.len()
                && !(larger - smaller)
                    .elements()
                    .any(|u| f.contains(smaller.with(u)))
            {
                return Some(IndependenceWitness::I3 { smaller, larger });
            }
        }
    }
    None
}

/// Largest member of `f` inside `x`, by exhaustive scan. Needs no axioms.
pub fn rank_exhaustive(f: &SetFamily, x: Subset) -> usize {
    f.iter()
        .filter(|m| m.is_subset_of(x))
        .map(Subset::len)
        .max()
        .unwrap_or(0)
}

/// A matroid on a finite universe, stored as its full independent family.
#[derive(Clone, PartialEq, Eq)]
pub struct Matroid {
    independents: SetFamily,
    lookup: Vec<bool>,
}

impl Matroid {
    /// Validates I1–I3.
    pub fn new(independents: SetFamily) -> Result<Self> {
        if let Some(w) = check_matroid_axioms(&independents) {
            return Err(Error::NotAMatroid(w.describe(independents.universe())));
        }
        let mut lookup = vec![false; independents.universe().subset_count()];
        for m in independents.iter() {
            lookup[m.index()] = true;
        }
        Ok(Matroid {
            independents,
            lookup,
        })
    }

    /// Every subset is independent.
    pub fn free(universe: &Universe) -> Self {
        let family = SetFamily::from_sorted(universe, universe.subsets().collect());
        Self::new(family).expect("the free matroid satisfies I1-I3")
    }

    pub fn universe(&self) -> &Universe {
        self.independents.universe()
    }

    pub fn independents(&self) -> &SetFamily {
        &self.independents
    }

    pub fn is_independent(&self, x: Subset) -> bool {
        self.lookup.get(x.index()).copied().unwrap_or(false)
    }

    /// Greedy growth; exact because I1–I3 were checked on construction.
    pub fn rank(&self, x: Subset) -> usize {
        x.elements()
            .fold(Subset::EMPTY, |basis, e| {
                let grown = basis.with(e);
                if self.is_independent(grown) {
                    grown
                } else {
                    basis
                }
            })
            .len()
    }

    /// `{e : rank(X ∪ {e}) = rank(X)}`.
    pub fn closure(&self, x: Subset) -> Subset {
        let r = self.rank(x);
        (0..self.universe().len())
            .filter(|&e| self.rank(x.with(e)) == r)
            .collect()
    }

    pub fn closure_table(&self) -> ClosureTable {
        let mut t = ClosureTable::from_fn(self.universe(), |x| self.closure(x))
            .expect("matroid closure stays in the universe");
        t.set_provenance(Provenance::MatroidClosure);
        t
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid{}", self.independents)
    }
}

pub fn matroid_rank(m: &Matroid, x: Subset) -> usize {
    m.rank(x)
}

pub fn matroid_closure(m: &Matroid, x: Subset) -> Subset {
    m.closure(x)
}

/// The matroid whose closure is `t`: `X` is independent iff no `e ∈ X` lies in
/// `t(X − {e})`. Fails with the axiom report when `t` is not a matroid closure.
pub fn matroid_from_closure(t: &ClosureTable) -> Result<Matroid> {
    let report = check_closure_axioms(t);
    if !report.all_pass() {
        return Err(Error::AxiomsNotSatisfied(Box::new(report)));
    }
    let members = t
        .universe()
        .subsets()
        .filter(|&x| x.elements().all(|e| !t.get(x.without(e)).contains(e)))
        .collect();
    Matroid::new(SetFamily::from_sorted(t.universe(), members))
}
