//! Closure systems, the fixed-point family of `SL`, materialized closure
//! operators, and the matroid closure axioms CL1–CL4.

use std::fmt;

use serde::Serialize;

use crate::approx::{is_unary, lower_table, upper_table};
use crate::covering::{Covering, SetFamily};
use crate::error::{Error, Result};
use crate::universe::{Subset, Universe};

/// `{X ⊆ U : SL(X) = X}`, the unions of blocks together with the empty set.
pub fn fixed_point_family(c: &Covering) -> SetFamily {
    let lower = lower_table(c);
    let members = c
        .universe()
        .subsets()
        .filter(|x| lower[x.index()] == *x)
        .collect();
    SetFamily::from_sorted(c.universe(), members)
}

/// `U ∈ f` and `f` is closed under pairwise intersection.
pub fn is_closure_system(f: &SetFamily) -> bool {
    let members = f.members();
    f.contains(f.universe().full())
        && members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| f.contains(a & b)))
}

/// Intersection of the members of `f` containing `x`.
pub fn closure_from_system(f: &SetFamily, x: Subset) -> Result<Subset> {
    let x = f.universe().check(x)?;
    if !is_closure_system(f) {
        return Err(Error::NotClosureSystem);
    }
    Ok(f.iter()
        .filter(|m| x.is_subset_of(*m))
        .fold(f.universe().full(), |acc, m| acc & m))
}

/// Where a closure table came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Intersection of fixed points of `SL` above each set.
    InducedFromFixedPoints,
    /// The upper approximation `SH`.
    UpperApprox,
    /// The closure of a matroid.
    MatroidClosure,
    Explicit,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::InducedFromFixedPoints => "induced",
            Provenance::UpperApprox => "SH",
            Provenance::MatroidClosure => "matroid closure",
            Provenance::Explicit => "explicit",
        })
    }
}

/// An operator on `2^U` stored as its full image table, indexed by mask.
#[derive(Clone, PartialEq, Eq)]
pub struct ClosureTable {
    universe: Universe,
    image: Vec<Subset>,
    provenance: Provenance,
    non_unary: bool,
}

impl ClosureTable {
    /// `image[mask]` is the image of the subset with that mask.
    pub fn from_images(universe: &Universe, image: Vec<Subset>) -> Result<Self> {
        if image.len() != universe.subset_count() {
            return Err(Error::UniverseMismatch);
        }
        for &s in &image {
            universe.check(s)?;
        }
        Ok(Self::build(universe, image, Provenance::Explicit))
    }

    pub fn from_fn(universe: &Universe, f: impl Fn(Subset) -> Subset) -> Result<Self> {
        Self::from_images(universe, universe.subsets().map(f).collect())
    }

    fn build(universe: &Universe, image: Vec<Subset>, provenance: Provenance) -> Self {
        ClosureTable {
            universe: universe.clone(),
            image,
            provenance,
            non_unary: false,
        }
    }

    pub(crate) fn set_provenance(&mut self, provenance: Provenance) {
        self.provenance = provenance;
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Set on induced tables built from a non-unary covering, whose fixed
    /// points are not a closure system.
    pub fn covering_not_unary(&self) -> bool {
        self.non_unary
    }

    pub fn get(&self, x: Subset) -> Subset {
        self.image[x.index()]
    }

    pub fn images(&self) -> &[Subset] {
        &self.image
    }

    /// Same images as `other`, ignoring provenance and flags.
    pub fn same_operator(&self, other: &ClosureTable) -> bool {
        self.universe == other.universe && self.image == other.image
    }
}

impl fmt::Debug for ClosureTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for x in self.universe.subsets() {
            map.entry(&self.universe.format(x), &self.universe.format(self.get(x)));
        }
        map.finish()
    }
}

/// `X ↦ ∩{S ∈ 𝐒 : X ⊆ S}` for every `X`.
///
/// Total for every covering since `U` is a fixed point; flagged with
/// [`ClosureTable::covering_not_unary`] when the covering is not unary.
pub fn induced_closure(c: &Covering) -> ClosureTable {
    let u = c.universe();
    let full = u.full();
    let lower = lower_table(c);
    let mut image: Vec<Subset> = u
        .subsets()
        .map(|x| if lower[x.index()] == x { x } else { full })
        .collect();
    // superset-intersection transform
    for bit in 0..u.len() {
        let step = 1usize << bit;
        for mask in 0..image.len() {
            if mask & step == 0 {
                image[mask] = image[mask] & image[mask | step];
            }
        }
    }
    let mut table = ClosureTable::build(u, image, Provenance::InducedFromFixedPoints);
    table.non_unary = !is_unary(c);
    table
}

pub fn sh_as_closure_table(c: &Covering) -> ClosureTable {
    ClosureTable::build(c.universe(), upper_table(c), Provenance::UpperApprox)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ClosureAxiom {
    CL1,
    CL2,
    CL3,
    CL4,
}

impl ClosureAxiom {
    pub const ALL: [ClosureAxiom; 4] = [Self::CL1, Self::CL2, Self::CL3, Self::CL4];

    pub fn statement(self) -> &'static str {
        match self {
            Self::CL1 => "X ⊆ cl(X)",
            Self::CL2 => "X ⊆ Y ⇒ cl(X) ⊆ cl(Y)",
            Self::CL3 => "cl(cl(X)) = cl(X)",
            Self::CL4 => "y ∈ cl(X ∪ {x}) − cl(X) ⇒ x ∈ cl(X ∪ {y})",
        }
    }
}

impl fmt::Display for ClosureAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The first point (in mask order) where an axiom fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom")]
pub enum AxiomWitness {
    CL1 {
        x: Subset,
    },
    CL2 {
        x: Subset,
        y: Subset,
    },
    CL3 {
        x: Subset,
    },
    /// `gained ∈ cl(x ∪ {added}) − cl(x)` but `added ∉ cl(x ∪ {gained})`.
    CL4 {
        x: Subset,
        added: usize,
        gained: usize,
    },
}

impl AxiomWitness {
    pub fn axiom(&self) -> ClosureAxiom {
        match self {
            AxiomWitness::CL1 { .. } => ClosureAxiom::CL1,
            AxiomWitness::CL2 { .. } => ClosureAxiom::CL2,
            AxiomWitness::CL3 { .. } => ClosureAxiom::CL3,
            AxiomWitness::CL4 { .. } => ClosureAxiom::CL4,
        }
    }

    /// Re-evaluates the witness against `t`.
    pub fn is_violation(&self, t: &ClosureTable) -> bool {
        let cl = |s| t.get(s);
        match *self {
            AxiomWitness::CL1 { x } => !x.is_subset_of(cl(x)),
            AxiomWitness::CL2 { x, y } => x.is_subset_of(y) && !cl(x).is_subset_of(cl(y)),
            AxiomWitness::CL3 { x } => cl(cl(x)) != cl(x),
            AxiomWitness::CL4 { x, added, gained } => {
                (cl(x.with(added)) - cl(x)).contains(gained) && !cl(x.with(gained)).contains(added)
            }
        }
    }

    pub fn describe(&self, t: &ClosureTable) -> String {
        let u = t.universe();
        let f = |s| u.format(s);
        let cl = |s| t.get(s);
        match *self {
            AxiomWitness::CL1 { x } => format!("X={} but cl(X)={}", f(x), f(cl(x))),
            AxiomWitness::CL2 { x, y } => format!(
                "X={} ⊆ Y={} but cl(X)={} ⊄ cl(Y)={}",
                f(x),
                f(y),
                f(cl(x)),
                f(cl(y))
            ),
            AxiomWitness::CL3 { x } => format!(
                "X={}: cl(X)={} but cl(cl(X))={}",
                f(x),
                f(cl(x)),
                f(cl(cl(x)))
            ),
            AxiomWitness::CL4 { x, added, gained } => format!(
                "X={}, x={}, y={}: y ∈ cl(X∪{{x}})={} − cl(X)={} but x ∉ cl(X∪{{y}})={}",
                f(x),
                u.label(added),
                u.label(gained),
                f(cl(x.with(added))),
                f(cl(x)),
                f(cl(x.with(gained)))
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomStatus {
    pub axiom: ClosureAxiom,
    pub witness: Option<AxiomWitness>,
}

impl AxiomStatus {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub entries: [AxiomStatus; 4],
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(AxiomStatus::passed)
    }

    pub fn get(&self, axiom: ClosureAxiom) -> &AxiomStatus {
        &self.entries[axiom as usize]
    }

    pub fn first_failure(&self) -> Option<AxiomWitness> {
        self.entries.iter().find_map(|e| e.witness)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed: Vec<String> = self
            .entries
            .iter()
            .filter(|e| !e.passed())
            .map(|e| e.axiom.to_string())
            .collect();
        if failed.is_empty() {
            f.write_str("all axioms hold")
        } else {
            write!(f, "failed: {}", failed.join(", "))
        }
    }
}

/// Exhaustive CL1–CL4 check. CL2 scans every pair `X ⊆ Y`; CL4 scans every
/// `X` and every element pair.
pub fn check_closure_axioms(t: &ClosureTable) -> AxiomReport {
    let u = t.universe();
    let full = u.full();
    let cl = |s: Subset| t.get(s);

    let cl1 = u
        .subsets()
        .find(|&x| !x.is_subset_of(cl(x)))
        .map(|x| AxiomWitness::CL1 { x });
    let cl2 = u.subsets().find_map(|x| {
        (full - x)
            .subsets()
            .map(|extra| x | extra)
            .find(|&y| !cl(x).is_subset_of(cl(y)))
            .map(|y| AxiomWitness::CL2 { x, y })
    });
    let cl3 = u
        .subsets()
        .find(|&x| cl(cl(x)) != cl(x))
        .map(|x| AxiomWitness::CL3 { x });
    let cl4 = u.subsets().find_map(|x| {
        (0..u.len()).find_map(|added| {
            let gained_set = cl(x.with(added)) - cl(x);
            gained_set
                .elements()
                .find(|&gained| !cl(x.with(gained)).contains(added))
                .map(|gained| AxiomWitness::CL4 { x, added, gained })
        })
    });

    AxiomReport {
        entries: [
            AxiomStatus {
                axiom: ClosureAxiom::CL1,
                witness: cl1,
            },
            AxiomStatus {
                axiom: ClosureAxiom::CL2,
                witness: cl2,
            },
            AxiomStatus {
                axiom: ClosureAxiom::CL3,
                witness: cl3,
            },
            AxiomStatus {
                axiom: ClosureAxiom::CL4,
                witness: cl4,
            },
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::make_covering;

    fn abc() -> Universe {
        Universe::new(["a", "b", "c"]).unwrap()
    }

    fn e1() -> Covering {
        make_covering(&abc(), &[vec!["a", "b"], vec!["a", "c"]]).unwrap()
    }

    fn e2() -> Covering {
        make_covering(&abc(), &[vec!["a", "b"], vec!["c"]]).unwrap()
    }

    fn e3() -> Covering {
        let u = Universe::new(["a", "b"]).unwrap();
        make_covering(&u, &[vec!["a"], vec!["a", "b"]]).unwrap()
    }

    fn s(u: &Universe, labels: &[&str]) -> Subset {
        u.subset(labels).unwrap()
    }

    #[test]
    fn fixed_points() {
        assert_eq!(
            fixed_point_family(&e1()).to_string(),
            "{{},{a,b},{a,c},{a,b,c}}"
        );
        assert_eq!(
            fixed_point_family(&e2()).to_string(),
            "{{},{a,b},{c},{a,b,c}}"
        );
        assert_eq!(fixed_point_family(&e3()).to_string(), "{{},{a},{a,b}}");
    }

    #[test]
    fn closure_systems() {
        assert!(is_closure_system(&fixed_point_family(&e2())));
        assert!(!is_closure_system(&fixed_point_family(&e1())));
        let u = abc();
        let only_full = SetFamily::new(&u, [u.full()]).unwrap();
        assert!(is_closure_system(&only_full));
        assert!(!is_closure_system(&SetFamily::new(&u, []).unwrap()));
    }

    #[test]
    fn closure_from_systems() {
        let u = abc();
        let only_full = SetFamily::new(&u, [u.full()]).unwrap();
        for x in u.subsets() {
            assert_eq!(closure_from_system(&only_full, x).unwrap(), u.full());
        }
        let f = fixed_point_family(&e2());
        assert_eq!(
            closure_from_system(&f, s(&u, &["a"])).unwrap(),
            s(&u, &["a", "b"])
        );
        assert_eq!(closure_from_system(&f, u.full()).unwrap(), u.full());
        assert!(matches!(
            closure_from_system(&fixed_point_family(&e1()), Subset::EMPTY),
            Err(Error::NotClosureSystem)
        ));
    }

    #[test]
    fn induced_tables() {
        let t = induced_closure(&e2());
        let u = abc();
        assert_eq!(t.get(s(&u, &["a"])), s(&u, &["a", "b"]));
        assert_eq!(t.get(Subset::EMPTY), Subset::EMPTY);
        assert!(!t.covering_not_unary());

        let c3 = e3();
        let t = induced_closure(&c3);
        assert_eq!(t.get(s(c3.universe(), &["b"])), c3.universe().full());

        let t = induced_closure(&e1());
        assert!(t.covering_not_unary());
        assert_eq!(t.get(s(&u, &["b"])), s(&u, &["a", "b"]));
        assert_eq!(t.get(Subset::EMPTY), Subset::EMPTY);
    }

    #[test]
    fn induced_matches_naive_intersection() {
        for c in [e1(), e2(), e3()] {
            let f = fixed_point_family(&c);
            let t = induced_closure(&c);
            for x in c.universe().subsets() {
                let naive = f
                    .iter()
                    .filter(|m| x.is_subset_of(*m))
                    .fold(c.universe().full(), |a, m| a & m);
                assert_eq!(t.get(x), naive);
            }
        }
    }

    #[test]
    fn sh_tables() {
        let u = abc();
        assert_eq!(
            sh_as_closure_table(&e1()).get(s(&u, &["b"])),
            s(&u, &["a", "b"])
        );
        assert_eq!(
            sh_as_closure_table(&e2()).get(s(&u, &["a"])),
            s(&u, &["a", "b"])
        );
        assert_eq!(sh_as_closure_table(&e1()).get(Subset::EMPTY), Subset::EMPTY);
    }

    #[test]
    fn axiom_examples() {
        assert!(check_closure_axioms(&induced_closure(&e2())).all_pass());

        let c3 = e3();
        let t = induced_closure(&c3);
        let report = check_closure_axioms(&t);
        let w = report.get(ClosureAxiom::CL4).witness.unwrap();
        assert_eq!(
            w,
            AxiomWitness::CL4 {
                x: Subset::EMPTY,
                added: 1,
                gained: 0
            }
        );
        assert!(w.is_violation(&t));
        assert!(report.get(ClosureAxiom::CL1).passed());
        assert!(report.get(ClosureAxiom::CL3).passed());

        let t = sh_as_closure_table(&e1());
        let report = check_closure_axioms(&t);
        let w = report.get(ClosureAxiom::CL3).witness.unwrap();
        assert_eq!(
            w,
            AxiomWitness::CL3 {
                x: s(&abc(), &["b"])
            }
        );
        assert!(w.is_violation(&t));
        assert!(report.get(ClosureAxiom::CL4).passed());
    }

    #[test]
    fn broken_tables_are_caught() {
        let u = abc();
        let constant_empty = ClosureTable::from_fn(&u, |_| Subset::EMPTY).unwrap();
        let r = check_closure_axioms(&constant_empty);
        let w = r.get(ClosureAxiom::CL1).witness.unwrap();
        assert_eq!(w, AxiomWitness::CL1 { x: s(&u, &["a"]) });
        assert!(w.is_violation(&constant_empty));

        // complement-ish: not monotone
        let flip = ClosureTable::from_fn(&u, |x| if x.len() == 1 { u.full() } else { x }).unwrap();
        let r = check_closure_axioms(&flip);
        let w = r.get(ClosureAxiom::CL2).witness.unwrap();
        assert!(w.is_violation(&flip));
        assert!(!w.describe(&flip).is_empty());
    }

    #[test]
    fn from_images_validates() {
        let u = abc();
        assert!(ClosureTable::from_images(&u, vec![Subset::EMPTY; 3]).is_err());
        assert!(ClosureTable::from_images(&u, vec![Subset::from_mask(0b1000); 8]).is_err());
    }
}
