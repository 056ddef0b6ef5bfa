//! Per-covering evaluation of both sides of each characterization theorem.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::approx::{
    indiscernible_family, is_unary, lower_table, minimal_description, neighborhood_family,
    upper_table,
};
use crate::closure::{
    check_closure_axioms, fixed_point_family, induced_closure, is_closure_system,
    sh_as_closure_table, AxiomReport, ClosureAxiom, ClosureTable,
};
use crate::covering::{is_partition, Covering, SetFamily};
use crate::error::Error;
use crate::matroid::matroid_from_closure;
use crate::reduct::compute_reduct;
use crate::universe::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "SL-MULT-IFF-UNARY")]
    SlMultIffUnary,
    #[serde(rename = "S-CLOSURE-IFF-UNARY")]
    SClosureIffUnary,
    #[serde(rename = "CL4-IFF-N-PARTITION")]
    Cl4IffNPartition,
    #[serde(rename = "REDUCT-PARTITION-EQUIV")]
    ReductPartitionEquiv,
    #[serde(rename = "MATROID-EXISTS-IFF-REDUCT-PARTITION")]
    MatroidExistsIffReductPartition,
    #[serde(rename = "SH-IDEM-IFF-SHX-PARTITION")]
    ShIdemIffShxPartition,
    #[serde(rename = "SHX-PARTITION-IFF-I-PARTITION")]
    ShxPartitionIffIPartition,
    #[serde(rename = "SH-MATROID-IFF-I-PARTITION")]
    ShMatroidIffIPartition,
    #[serde(rename = "REDUCT-OF-UNARY-FORMULA")]
    ReductOfUnaryFormula,
    #[serde(rename = "SH-SUFFICIENCY-LEMMA")]
    ShSufficiencyLemma,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        Self::SlMultIffUnary,
        Self::SClosureIffUnary,
        Self::Cl4IffNPartition,
        Self::ReductPartitionEquiv,
        Self::MatroidExistsIffReductPartition,
        Self::ShIdemIffShxPartition,
        Self::ShxPartitionIffIPartition,
        Self::ShMatroidIffIPartition,
        Self::ReductOfUnaryFormula,
        Self::ShSufficiencyLemma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::SlMultIffUnary => "SL-MULT-IFF-UNARY",
            Self::SClosureIffUnary => "S-CLOSURE-IFF-UNARY",
            Self::Cl4IffNPartition => "CL4-IFF-N-PARTITION",
            Self::ReductPartitionEquiv => "REDUCT-PARTITION-EQUIV",
            Self::MatroidExistsIffReductPartition => "MATROID-EXISTS-IFF-REDUCT-PARTITION",
            Self::ShIdemIffShxPartition => "SH-IDEM-IFF-SHX-PARTITION",
            Self::ShxPartitionIffIPartition => "SHX-PARTITION-IFF-I-PARTITION",
            Self::ShMatroidIffIPartition => "SH-MATROID-IFF-I-PARTITION",
            Self::ReductOfUnaryFormula => "REDUCT-OF-UNARY-FORMULA",
            Self::ShSufficiencyLemma => "SH-SUFFICIENCY-LEMMA",
        }
    }

    /// `left ⟺ right`, or `left ⇒ right` style for the one-way lemmas.
    pub fn statement(self) -> &'static str {
        match self {
            Self::SlMultIffUnary => "SL(X∩Y)=SL(X)∩SL(Y) for all X,Y  ⟺  C unary",
            Self::SClosureIffUnary => "fixed points of SL form a closure system  ⟺  C unary",
            Self::Cl4IffNPartition => {
                "[C unary] induced closure satisfies CL4  ⟺  {N(x)} is a partition"
            }
            Self::ReductPartitionEquiv => {
                "C unary and {N(x)} a partition  ⟺  reduct(C) is a partition"
            }
            Self::MatroidExistsIffReductPartition => {
                "C unary and its induced closure is a matroid closure  ⟺  reduct(C) is a partition"
            }
            Self::ShIdemIffShxPartition => "SH(SH(X))=SH(X) for all X  ⟺  {SH({x})} is a partition",
            Self::ShxPartitionIffIPartition => "{SH({x})} is a partition  ⟺  {I(x)} is a partition",
            Self::ShMatroidIffIPartition => "SH satisfies CL1-CL4  ⟺  {I(x)} is a partition",
            Self::ReductOfUnaryFormula => "[C unary] reduct(C) = {K ∈ Md(x) : x ∈ U}",
            Self::ShSufficiencyLemma => "{SH({x})} is a partition  ⇒  SH(SH(X))=SH(X) for all X",
        }
    }

    /// Only asserted for unary coverings.
    pub fn needs_unary(self) -> bool {
        matches!(self, Self::Cl4IffNPartition | Self::ReductOfUnaryFormula)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_owned()))
    }
}

/// Both sides of one theorem on one covering.
///
/// For [`TheoremId::ShSufficiencyLemma`] `left` is idempotence and `right` is
/// the partition condition, and agreement means `right ⇒ left`. For
/// [`TheoremId::ReductOfUnaryFormula`] `left` is the unary hypothesis and
/// `right` whether the formula holds. Not-applicable verdicts agree vacuously.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub id: TheoremId,
    pub applicable: bool,
    pub left: bool,
    pub right: bool,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Everything the theorem verifiers need about one covering, computed once.
pub struct CoveringAnalysis {
    pub covering: Covering,
    pub unary: bool,
    lower: Vec<Subset>,
    upper: Vec<Subset>,
    pub fixed_points: SetFamily,
    pub neighborhoods: SetFamily,
    pub indiscernibles: SetFamily,
    pub sh_singletons: SetFamily,
    pub reduct: Covering,
    pub induced: ClosureTable,
    pub induced_axioms: AxiomReport,
    pub induced_round_trip: bool,
    pub sh_table: ClosureTable,
    pub sh_axioms: AxiomReport,
}

impl CoveringAnalysis {
    pub fn new(c: &Covering) -> Self {
        let u = c.universe();
        let lower = lower_table(c);
        let upper = upper_table(c);
        let induced = induced_closure(c);
        let induced_axioms = check_closure_axioms(&induced);
        let induced_round_trip = induced_axioms.all_pass()
            && matroid_from_closure(&induced)
                .map(|m| m.closure_table().same_operator(&induced))
                .unwrap_or(false);
        let sh_table = sh_as_closure_table(c);
        let sh_axioms = check_closure_axioms(&sh_table);
        let sh_singletons =
            SetFamily::new(u, (0..u.len()).map(|e| upper[Subset::singleton(e).index()]))
                .expect("images lie in the universe");
        CoveringAnalysis {
            covering: c.clone(),
            unary: is_unary(c),
            fixed_points: fixed_point_family(c),
            neighborhoods: neighborhood_family(c),
            indiscernibles: indiscernible_family(c),
            sh_singletons,
            reduct: compute_reduct(c),
            induced,
            induced_axioms,
            induced_round_trip,
            sh_table,
            sh_axioms,
            lower,
            upper,
        }
    }

    /// First `(X, Y)` in mask order with `SL(X∩Y) ≠ SL(X)∩SL(Y)`.
    pub fn sl_multiplicative_failure(&self) -> Option<(Subset, Subset)> {
        let u = self.covering.universe();
        let sl = |s: Subset| self.lower[s.index()];
        u.subsets().find_map(|x| {
            u.subsets()
                .find(|&y| sl(x & y) != sl(x) & sl(y))
                .map(|y| (x, y))
        })
    }

    /// First `X` in mask order with `SH(SH(X)) ≠ SH(X)`.
    pub fn sh_idempotence_failure(&self) -> Option<Subset> {
        let sh = |s: Subset| self.upper[s.index()];
        self.covering
            .universe()
            .subsets()
            .find(|&x| sh(sh(x)) != sh(x))
    }

    /// `{K ∈ Md(x) : x ∈ U}` as a sorted block list.
    pub fn minimal_description_blocks(&self) -> Vec<Subset> {
        let n = self.covering.universe().len();
        let all: BTreeSet<Subset> = (0..n)
            .flat_map(|e| {
                minimal_description(&self.covering, e)
                    .expect("element in range")
                    .members()
                    .to_vec()
            })
            .collect();
        all.into_iter().collect()
    }

    /// The induced operator satisfies CL1–CL4 and round-trips through its
    /// matroid, ignoring whether the covering is unary.
    pub fn induced_is_matroid_closure(&self) -> bool {
        self.induced_round_trip
    }

    pub fn verdict(&self, id: TheoremId) -> TheoremVerdict {
        let u = self.covering.universe();
        let fmt = |s: Subset| u.format(s);
        let n_partition = is_partition(&self.neighborhoods);
        let i_partition = is_partition(&self.indiscernibles);
        let shx_partition = is_partition(&self.sh_singletons);
        let reduct_partition = is_partition(&self.reduct.as_family());
        let not_unary_note = || {
            format!(
                "not unary: Md has {} blocks at some element",
                (0..u.len())
                    .map(|e| minimal_description(&self.covering, e)
                        .map(|m| m.len())
                        .unwrap_or(0))
                    .max()
                    .unwrap_or(0)
            )
        };

        if id.needs_unary() && !self.unary {
            return TheoremVerdict {
                id,
                applicable: false,
                left: false,
                right: false,
                agree: true,
                witness: None,
            };
        }

        let (left, right, detail): (bool, bool, Vec<String>) = match id {
            TheoremId::SlMultIffUnary => {
                let failure = self.sl_multiplicative_failure();
                let mut detail = vec![];
                if let Some((x, y)) = failure {
                    let sl = |s: Subset| self.lower[s.index()];
                    detail.push(format!(
                        "SL(X∩Y)={} but SL(X)∩SL(Y)={} at X={}, Y={}",
                        fmt(sl(x & y)),
                        fmt(sl(x) & sl(y)),
                        fmt(x),
                        fmt(y)
                    ));
                }
                if !self.unary {
                    detail.push(not_unary_note());
                }
                (failure.is_none(), self.unary, detail)
            }
            TheoremId::SClosureIffUnary => {
                let closed = is_closure_system(&self.fixed_points);
                let mut detail = vec![format!("fixed points {}", self.fixed_points)];
                if !self.unary {
                    detail.push(not_unary_note());
                }
                (closed, self.unary, detail)
            }
            TheoremId::Cl4IffNPartition => {
                let cl4 = self.induced_axioms.get(ClosureAxiom::CL4);
                let mut detail = vec![format!("N family {}", self.neighborhoods)];
                if let Some(w) = cl4.witness {
                    detail.push(w.describe(&self.induced));
                }
                (cl4.passed(), n_partition, detail)
            }
            TheoremId::ReductPartitionEquiv => (
                self.unary && n_partition,
                reduct_partition,
                vec![
                    format!("unary={}", self.unary),
                    format!("N family {}", self.neighborhoods),
                    format!("reduct {}", self.reduct),
                ],
            ),
            TheoremId::MatroidExistsIffReductPartition => {
                let mut detail = vec![
                    format!("unary={}", self.unary),
                    format!("induced axioms: {}", self.induced_axioms),
                    format!("round trip={}", self.induced_round_trip),
                    format!("reduct {}", self.reduct),
                ];
                if let Some(w) = self.induced_axioms.first_failure() {
                    detail.push(w.describe(&self.induced));
                }
                (
                    self.unary && self.induced_round_trip,
                    reduct_partition,
                    detail,
                )
            }
            TheoremId::ShIdemIffShxPartition => {
                let failure = self.sh_idempotence_failure();
                let mut detail = vec![format!("SH singletons {}", self.sh_singletons)];
                if let Some(x) = failure {
                    let sh = |s: Subset| self.upper[s.index()];
                    detail.push(format!(
                        "SH(X)={} but SH(SH(X))={} at X={}",
                        fmt(sh(x)),
                        fmt(sh(sh(x))),
                        fmt(x)
                    ));
                }
                (failure.is_none(), shx_partition, detail)
            }
            TheoremId::ShxPartitionIffIPartition => (
                shx_partition,
                i_partition,
                vec![
                    format!("SH singletons {}", self.sh_singletons),
                    format!("I family {}", self.indiscernibles),
                ],
            ),
            TheoremId::ShMatroidIffIPartition => {
                let mut detail = vec![
                    format!("SH axioms: {}", self.sh_axioms),
                    format!("I family {}", self.indiscernibles),
                ];
                if let Some(w) = self.sh_axioms.first_failure() {
                    detail.push(w.describe(&self.sh_table));
                }
                (self.sh_axioms.all_pass(), i_partition, detail)
            }
            TheoremId::ReductOfUnaryFormula => {
                let md = self.minimal_description_blocks();
                let holds = md == self.reduct.blocks();
                (
                    true,
                    holds,
                    vec![
                        format!("reduct {}", self.reduct),
                        format!("Md blocks {}", u.format_family(&md)),
                    ],
                )
            }
            TheoremId::ShSufficiencyLemma => {
                let idempotent = self.sh_idempotence_failure().is_none();
                (
                    idempotent,
                    shx_partition,
                    vec![format!("SH singletons {}", self.sh_singletons)],
                )
            }
        };

        let agree = match id {
            TheoremId::ShSufficiencyLemma => !right || left,
            TheoremId::ReductOfUnaryFormula => right,
            _ => left == right,
        };
        let witness = (!agree).then(|| {
            format!(
                "covering {}: left={left}, right={right}; {}",
                self.covering,
                detail.join("; ")
            )
        });
        TheoremVerdict {
            id,
            applicable: true,
            left,
            right,
            agree,
            witness,
        }
    }

    pub fn verdicts(&self) -> Vec<TheoremVerdict> {
        TheoremId::ALL.iter().map(|&id| self.verdict(id)).collect()
    }
}

/// Evaluates one theorem on one covering.
pub fn verify_theorem(c: &Covering, id: TheoremId) -> TheoremVerdict {
    CoveringAnalysis::new(c).verdict(id)
}
