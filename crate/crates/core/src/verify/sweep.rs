//! Runs every theorem verifier and the subfamily-condition audit over a
//! stream of coverings and aggregates the results.

use std::fmt::Write as _;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::covering::{enumerate_coverings, random_covering, Covering, EXHAUSTIVE_GUARD};
use crate::error::{Error, Result};
use crate::universe::{Universe, DEFAULT_CAP};

use super::theorems::{CoveringAnalysis, TheoremId, TheoremVerdict};
use super::zhu::{zhu_audit_with_guard, Classification, Reading, ZhuAuditRecord};

/// Witnesses kept per theorem and per tally.
const WITNESS_LIMIT: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SweepMode {
    Exhaustive,
    Random { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremTally {
    pub id: TheoremId,
    pub statement: &'static str,
    pub evaluated: usize,
    pub not_applicable: usize,
    pub both_true: usize,
    pub both_false: usize,
    pub disagreements: usize,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReadingTally {
    pub reading: Reading,
    pub meaning: &'static str,
    pub condition_and_idempotent: usize,
    pub condition_not_idempotent: usize,
    pub no_condition_idempotent: usize,
    pub no_condition_not_idempotent: usize,
    pub supports_sufficiency: usize,
    pub refutes_sufficiency: usize,
    pub vacuous: usize,
    /// Coverings with `SH` idempotent whose condition fails.
    pub necessity_counterexamples: Vec<String>,
    pub sufficiency_counterexamples: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZhuTally {
    pub readings: [ReadingTally; 2],
    /// Coverings where the two readings give different answers.
    pub readings_differ: usize,
}

/// The two-block covering `{{a,b},{a,c}}` that is usually offered as a
/// sufficiency counterexample, with the audit's finding for it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReferenceExample {
    pub record: ZhuAuditRecord,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedOutsideUnary {
    /// Non-unary coverings whose induced operator nonetheless satisfies
    /// CL1–CL4 and round-trips through a matroid.
    pub count: usize,
    pub examples: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub universe_size: usize,
    pub mode: SweepMode,
    pub coverings_examined: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_coverings: Option<u64>,
    pub total_disagreements: usize,
    pub theorems: Vec<TheoremTally>,
    pub non_unary_matroid_closures: InducedOutsideUnary,
    pub zhu: ZhuTally,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference_example: Option<ReferenceExample>,
}

/// Number of coverings of an `n`-element set, by inclusion–exclusion:
/// `Σ_k (−1)^k C(n,k) 2^(2^(n−k) − 1)`.
pub fn covering_count(n: usize) -> u64 {
    assert!(n <= 5, "count overflows u64 past n = 5");
    let mut total: i128 = 0;
    let mut binom: i128 = 1;
    for k in 0..=n {
        let term = binom * (1i128 << ((1u32 << (n - k)) - 1));
        total += if k % 2 == 0 { term } else { -term };
        binom = binom * (n - k) as i128 / (k + 1) as i128;
    }
    total as u64
}

struct CoveringOutcome {
    verdicts: Vec<TheoremVerdict>,
    non_unary_matroid: bool,
    zhu: ZhuAuditRecord,
}

fn analyse(c: &Covering) -> CoveringOutcome {
    let analysis = CoveringAnalysis::new(c);
    // Non-partitions are rejected at a single-block subfamily, so the walk
    // never reaches the large subfamilies; partitions have at most n blocks.
    let zhu = zhu_audit_with_guard(c, usize::MAX).expect("unbounded guard");
    CoveringOutcome {
        verdicts: analysis.verdicts(),
        non_unary_matroid: !analysis.unary && analysis.induced_is_matroid_closure(),
        zhu,
    }
}

fn push_limited(list: &mut Vec<String>, item: impl FnOnce() -> String) {
    if list.len() < WITNESS_LIMIT {
        list.push(item());
    }
}

pub fn sweep(n: usize, mode: SweepMode) -> Result<SweepReport> {
    sweep_with_cap(n, mode, DEFAULT_CAP)
}

/// Output depends only on `(n, mode)`; per-covering work runs in parallel
/// and is folded back in stream order.
pub fn sweep_with_cap(n: usize, mode: SweepMode, cap: usize) -> Result<SweepReport> {
    let (coverings, expected) = match mode {
        SweepMode::Exhaustive => {
            if n > EXHAUSTIVE_GUARD {
                return Err(Error::OverGuard {
                    what: "exhaustive sweep universe size",
                    limit: EXHAUSTIVE_GUARD,
                    got: n,
                });
            }
            let u = Universe::alphabetic(n)?;
            let all: Vec<Covering> = enumerate_coverings(&u)?.collect();
            (all, Some(covering_count(n)))
        }
        SweepMode::Random { samples, seed } => {
            if n > cap {
                return Err(Error::OverCap { size: n, cap });
            }
            let u = Universe::alphabetic(n)?;
            let mut master = ChaCha8Rng::seed_from_u64(seed);
            let seeds: Vec<u64> = (0..samples).map(|_| master.next_u64()).collect();
            let all = seeds
                .into_par_iter()
                .map(|s| random_covering(&u, s))
                .collect();
            (all, None)
        }
    };

    let outcomes: Vec<CoveringOutcome> = coverings.par_iter().map(analyse).collect();

    let mut theorems: Vec<TheoremTally> = TheoremId::ALL
        .iter()
        .map(|&id| TheoremTally {
            id,
            statement: id.statement(),
            evaluated: 0,
            not_applicable: 0,
            both_true: 0,
            both_false: 0,
            disagreements: 0,
            witnesses: Vec::new(),
        })
        .collect();
    let mut readings = Reading::BOTH.map(|reading| ReadingTally {
        reading,
        meaning: reading.describe(),
        condition_and_idempotent: 0,
        condition_not_idempotent: 0,
        no_condition_idempotent: 0,
        no_condition_not_idempotent: 0,
        supports_sufficiency: 0,
        refutes_sufficiency: 0,
        vacuous: 0,
        necessity_counterexamples: Vec::new(),
        sufficiency_counterexamples: Vec::new(),
    });
    let mut readings_differ = 0;
    let mut outside = InducedOutsideUnary {
        count: 0,
        examples: Vec::new(),
    };
    let mut reference_example = None;

    for (c, outcome) in coverings.iter().zip(&outcomes) {
        for (tally, v) in theorems.iter_mut().zip(&outcome.verdicts) {
            if !v.applicable {
                tally.not_applicable += 1;
                continue;
            }
            tally.evaluated += 1;
            match (v.left, v.right) {
                (true, true) => tally.both_true += 1,
                (false, false) => tally.both_false += 1,
                _ => {}
            }
            if !v.agree {
                tally.disagreements += 1;
                let w = v.witness.clone().unwrap_or_default();
                push_limited(&mut tally.witnesses, || w);
            }
        }
        if outcome.non_unary_matroid {
            outside.count += 1;
            push_limited(&mut outside.examples, || c.to_string());
        }
        let record = &outcome.zhu;
        let idem = record.sh_idempotent;
        for tally in readings.iter_mut() {
            let r = record.reading(tally.reading);
            match (r.condition, idem) {
                (true, true) => tally.condition_and_idempotent += 1,
                (true, false) => {
                    tally.condition_not_idempotent += 1;
                    push_limited(&mut tally.sufficiency_counterexamples, || c.to_string());
                }
                (false, true) => {
                    tally.no_condition_idempotent += 1;
                    push_limited(&mut tally.necessity_counterexamples, || c.to_string());
                }
                (false, false) => tally.no_condition_not_idempotent += 1,
            }
            match r.classification {
                Classification::SupportsSufficiency => tally.supports_sufficiency += 1,
                Classification::RefutesSufficiency => tally.refutes_sufficiency += 1,
                Classification::Vacuous => tally.vacuous += 1,
            }
        }
        if record.reading(Reading::R1).condition != record.reading(Reading::R2).condition {
            readings_differ += 1;
        }
        if is_reference_covering(c) {
            reference_example = Some(ReferenceExample {
                note: reference_note(record),
                record: record.clone(),
            });
        }
    }

    let total_disagreements = theorems.iter().map(|t| t.disagreements).sum();
    Ok(SweepReport {
        universe_size: n,
        mode,
        coverings_examined: coverings.len(),
        expected_coverings: expected,
        total_disagreements,
        theorems,
        non_unary_matroid_closures: outside,
        zhu: ZhuTally {
            readings,
            readings_differ,
        },
        reference_example,
    })
}

fn is_reference_covering(c: &Covering) -> bool {
    c.universe().labels() == ["a", "b", "c"] && c.to_string() == "{{a,b},{a,c}}"
}

fn reference_note(record: &ZhuAuditRecord) -> String {
    let r1 = record.reading(Reading::R1);
    let r2 = record.reading(Reading::R2);
    if !r1.condition && !r2.condition {
        format!(
            "SH is {} here, but the condition is violated under both readings \
             (R1: {}; R2: {}), so the condition is not vacuously true on this \
             covering and it does not witness a failure of sufficiency",
            if record.sh_idempotent {
                "idempotent"
            } else {
                "not idempotent"
            },
            r1.witness.as_deref().unwrap_or("-"),
            r2.witness.as_deref().unwrap_or("-"),
        )
    } else {
        format!(
            "SH idempotent={}, condition R1={}, R2={}",
            record.sh_idempotent, r1.condition, r2.condition
        )
    }
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text table for terminals.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let mode = match self.mode {
            SweepMode::Exhaustive => "exhaustive".to_owned(),
            SweepMode::Random { samples, seed } => format!("random samples={samples} seed={seed}"),
        };
        let _ = writeln!(out, "sweep n={} mode={}", self.universe_size, mode);
        let _ = write!(out, "coverings examined: {}", self.coverings_examined);
        if let Some(expected) = self.expected_coverings {
            let _ = write!(out, " (expected {expected})");
        }
        out.push('\n');
        let _ = writeln!(
            out,
            "\n{:<38} {:>9} {:>6} {:>9} {:>10} {:>8}",
            "theorem", "evaluated", "n/a", "both-true", "both-false", "disagree"
        );
        for t in &self.theorems {
            let _ = writeln!(
                out,
                "{:<38} {:>9} {:>6} {:>9} {:>10} {:>8}",
                t.id.name(),
                t.evaluated,
                t.not_applicable,
                t.both_true,
                t.both_false,
                t.disagreements
            );
            for w in &t.witnesses {
                let _ = writeln!(out, "    witness: {w}");
            }
        }
        let _ = writeln!(out, "total disagreements: {}", self.total_disagreements);
        let _ = writeln!(
            out,
            "non-unary coverings whose induced operator is a matroid closure: {}",
            self.non_unary_matroid_closures.count
        );
        for e in &self.non_unary_matroid_closures.examples {
            let _ = writeln!(out, "    e.g. {e}");
        }

        let _ = writeln!(out, "\nsubfamily condition vs SH idempotence");
        let _ = writeln!(
            out,
            "{:<8} {:>10} {:>10} {:>10} {:>10}   (cond/idem)",
            "reading", "yes/yes", "yes/no", "no/yes", "no/no"
        );
        for r in &self.zhu.readings {
            let _ = writeln!(
                out,
                "{:<8} {:>10} {:>10} {:>10} {:>10}",
                r.reading.to_string(),
                r.condition_and_idempotent,
                r.condition_not_idempotent,
                r.no_condition_idempotent,
                r.no_condition_not_idempotent
            );
        }
        for r in &self.zhu.readings {
            let _ = writeln!(
                out,
                "{}: supports={} refutes={} vacuous={}",
                r.reading, r.supports_sufficiency, r.refutes_sufficiency, r.vacuous
            );
            for e in &r.necessity_counterexamples {
                let _ = writeln!(out, "    idempotent without the condition: {e}");
            }
            for e in &r.sufficiency_counterexamples {
                let _ = writeln!(out, "    condition without idempotence: {e}");
            }
        }
        let _ = writeln!(
            out,
            "readings differ on {} coverings",
            self.zhu.readings_differ
        );
        if let Some(reference) = &self.reference_example {
            let _ = writeln!(out, "\nreference covering {}", reference.record.covering);
            let _ = writeln!(out, "    {}", reference.note);
        }
        out
    }
}
