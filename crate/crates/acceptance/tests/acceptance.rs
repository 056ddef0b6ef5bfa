//! One line per acceptance criterion. Exits nonzero if any criterion fails.
//!
//!     cargo test --release -p rough-matroid-acceptance

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rough_matroid::cli::{run, CmdOutput};
use rough_matroid::covering::enumerate_coverings;
use rough_matroid::reduct::reducts_over_all_orders;
use rough_matroid::verify::{sweep, Reading, SweepMode};
use rough_matroid::{
    check_closure_axioms, check_matroid_axioms, compute_reduct, fixed_point_family,
    indiscernible_family, induced_closure, is_partition, is_unary, make_covering,
    matroid_from_closure, property_report, reduct_is_partition, sh_as_closure_table, upper_approx,
    Covering, SetFamily, Subset, Universe,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn coverings(n: usize) -> Vec<Covering> {
    enumerate_coverings(&Universe::alphabetic(n).unwrap())
        .unwrap()
        .collect()
}

fn coverings_up_to(n: usize) -> impl Iterator<Item = Covering> {
    (1..=n).flat_map(coverings)
}

/// Families of nonempty subsets of an n-set whose union is everything.
fn brute_force_count(n: usize) -> usize {
    let full = (1u64 << n) - 1;
    let m = full as usize;
    (0u64..1 << m)
        .filter(|pick| {
            (0..m)
                .filter(|i| pick >> i & 1 == 1)
                .fold(0, |a, i| a | (i as u64 + 1))
                == full
        })
        .count()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn rm(args: &[&str]) -> CmdOutput {
    run(std::iter::once("rough-matroid").chain(args.iter().copied()))
}

fn within(limit: Duration, start: Instant, result: Outcome) -> Outcome {
    let took = start.elapsed();
    if took > limit {
        outcome(
            false,
            format!("{} (took {took:.2?}, limit {limit:?})", result.detail),
        )
    } else {
        outcome(result.pass, format!("{} ({took:.2?})", result.detail))
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let u = Universe::new(["a", "b", "c"]).unwrap();
    let c = make_covering(&u, &[vec!["a", "b"], vec!["a", "c"]]).unwrap();
    let b = u.subset(["b"]).unwrap();
    let once = upper_approx(&c, b).unwrap();
    let twice = upper_approx(&c, once).unwrap();
    let check = rm(&["check", &data("e1.json")]);
    let sh_section = check
        .stdout
        .split("SH closure axioms:")
        .nth(1)
        .and_then(|s| s.split("induced closure axioms").next())
        .unwrap_or("");
    let cl3_flagged = sh_section
        .lines()
        .any(|l| l.trim_start().starts_with("CL3  FAIL"));
    let pass = once == u.subset(["a", "b"]).unwrap() && twice == u.full() && cl3_flagged;
    within(
        Duration::from_secs(1),
        start,
        outcome(
            pass,
            format!(
                "SH({{b}})={} SH(SH({{b}}))={} check flags SH CL3: {cl3_flagged}",
                u.format(once),
                u.format(twice)
            ),
        ),
    )
}

fn exhaustive(n: usize, limit: Duration) -> Outcome {
    let start = Instant::now();
    let report = sweep(n, SweepMode::Exhaustive).unwrap();
    let elapsed = start.elapsed();
    let oracle = brute_force_count(n);
    let ids: BTreeSet<_> = report.theorems.iter().map(|t| t.id).collect();
    let per_theorem: usize = report.theorems.iter().map(|t| t.disagreements).sum();
    let pass = report.coverings_examined == oracle
        && ids.len() == 10
        && report.total_disagreements == 0
        && per_theorem == 0;
    let result = outcome(
        pass,
        format!(
            "{} coverings (brute force {oracle}), {} theorem ids, {} disagreements, sweep {elapsed:.2?}",
            report.coverings_examined,
            ids.len(),
            report.total_disagreements
        ),
    );
    within(limit, start, result)
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    let mut law_failures = Vec::new();
    let mut fixed_mismatch = Vec::new();
    for c in coverings_up_to(3) {
        checked += 1;
        let report = property_report(&c);
        for entry in &report.entries {
            if !entry.passed() {
                law_failures.push(format!("{c} ({})", entry.property));
            }
        }
        let blocks = c.blocks();
        let unions: BTreeSet<u64> = (0u64..1 << blocks.len())
            .map(|pick| {
                (0..blocks.len())
                    .filter(|i| pick >> i & 1 == 1)
                    .fold(0, |a, i| a | blocks[i].mask())
            })
            .collect();
        let fixed: BTreeSet<u64> = fixed_point_family(&c).iter().map(Subset::mask).collect();
        if fixed != unions {
            fixed_mismatch.push(c.to_string());
        }
    }
    outcome(
        law_failures.is_empty() && fixed_mismatch.is_empty(),
        format!(
            "{checked} coverings, {} law violations, {} fixed-point mismatches{}",
            law_failures.len(),
            fixed_mismatch.len(),
            first(&law_failures, &fixed_mismatch)
        ),
    )
}

fn first(a: &[String], b: &[String]) -> String {
    a.iter()
        .chain(b)
        .next()
        .map(|e| format!(", first: {e}"))
        .unwrap_or_default()
}

fn criterion_5() -> Outcome {
    let mut partition_cases = 0;
    let mut round_trip_failures = Vec::new();
    let mut other_cases = 0;
    let mut axioms_hold_anyway = Vec::new();
    for c in coverings_up_to(3) {
        let t = induced_closure(&c);
        if reduct_is_partition(&c) {
            partition_cases += 1;
            let ok = matroid_from_closure(&t).is_ok_and(|m| {
                check_matroid_axioms(m.independents()).is_none()
                    && c.universe().subsets().all(|x| m.closure(x) == t.get(x))
            });
            if !ok {
                round_trip_failures.push(c.to_string());
            }
        } else {
            other_cases += 1;
            if check_closure_axioms(&t).all_pass() {
                axioms_hold_anyway.push(c.to_string());
            }
        }
    }
    outcome(
        round_trip_failures.is_empty() && axioms_hold_anyway.is_empty(),
        format!(
            "round trip {}/{partition_cases} reduct-partition coverings; \
             {}/{other_cases} other coverings still satisfy CL1-CL4{}",
            partition_cases - round_trip_failures.len(),
            axioms_hold_anyway.len(),
            first(&round_trip_failures, &axioms_hold_anyway)
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    let mut exceptions = Vec::new();
    for c in coverings_up_to(4) {
        checked += 1;
        let u = c.universe();
        let axioms = check_closure_axioms(&sh_as_closure_table(&c)).all_pass();
        let i_partition = is_partition(&indiscernible_family(&c));
        let singletons = SetFamily::new(
            u,
            (0..u.len()).map(|e| upper_approx(&c, Subset::singleton(e)).unwrap()),
        )
        .unwrap();
        let sh_partition = is_partition(&singletons);
        if !(axioms == i_partition && i_partition == sh_partition) {
            exceptions.push(c.to_string());
        }
    }
    outcome(
        exceptions.is_empty(),
        format!(
            "{checked} coverings, {} exceptions{}",
            exceptions.len(),
            first(&exceptions, &[])
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    let mut unary = 0;
    let mut order_dependent = Vec::new();
    let mut formula_failures = Vec::new();
    for c in coverings_up_to(3) {
        checked += 1;
        let reduct = compute_reduct(&c);
        let all = reducts_over_all_orders(&c);
        if all.len() != 1 || all.iter().next() != Some(&reduct.blocks().to_vec()) {
            order_dependent.push(c.to_string());
        }
        if is_unary(&c) {
            unary += 1;
            let blocks = c.blocks();
            let md_union: BTreeSet<Subset> = (0..c.universe().len())
                .flat_map(|e| {
                    let containing: Vec<Subset> =
                        blocks.iter().copied().filter(|k| k.contains(e)).collect();
                    containing
                        .iter()
                        .copied()
                        .filter(|&k| !containing.iter().any(|&j| j != k && j.is_subset_of(k)))
                        .collect::<Vec<_>>()
                })
                .collect();
            let got: BTreeSet<Subset> = reduct.blocks().iter().copied().collect();
            if got != md_union {
                formula_failures.push(c.to_string());
            }
        }
    }
    outcome(
        order_dependent.is_empty() && formula_failures.is_empty(),
        format!(
            "{checked} coverings ({unary} unary), {} order-dependent, {} formula failures{}",
            order_dependent.len(),
            formula_failures.len(),
            first(&order_dependent, &formula_failures)
        ),
    )
}

fn criterion_8() -> Outcome {
    let a = rm(&["sweep", "--n", "3", "--exhaustive"]);
    let b = rm(&["sweep", "--n", "3", "--exhaustive"]);
    let identical = a.stdout == b.stdout && a.stderr == b.stderr && a.code == b.code;
    let tallies = ["R1", "R2"].iter().all(|r| {
        a.stdout
            .lines()
            .any(|l| l.starts_with(r) && l.split_whitespace().count() == 5)
    });
    let report = sweep(3, SweepMode::Exhaustive).unwrap();
    let reference = report.reference_example.as_ref();
    let e1_fails_both = reference.is_some_and(|r| {
        r.record.covering == "{{a,b},{a,c}}"
            && Reading::BOTH
                .iter()
                .all(|&rd| !r.record.reading(rd).condition)
    });
    let documented = reference.is_some_and(|r| a.stdout.contains(&r.note));
    outcome(
        identical && tallies && e1_fails_both && documented,
        format!(
            "identical reruns: {identical}, per-reading tallies: {tallies}, \
             E1 condition false under R1 and R2: {e1_fails_both}, discrepancy noted: {documented}"
        ),
    )
}

fn criterion_9() -> Outcome {
    let dir = std::env::temp_dir().join(format!("rm-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let e1 = data("e1.json");
    let e2 = data("e2.json");
    let commands: Vec<Vec<String>> = [
        vec!["info", &e1],
        vec!["approx", &e1, "--set", "b", "--op", "sh"],
        vec!["closure", &e1, "--set", "b", "--operator", "induced"],
        vec!["closure", &e2, "--set", "a", "--operator", "sh"],
        vec!["reduct", &e1, "--json"],
        vec!["matroid", &e1],
        vec!["matroid", &e2],
        vec!["check", &e1],
        vec!["sweep", "--n", "3", "--exhaustive", "--json", "JSON"],
        vec![
            "sweep", "--n", "5", "--random", "1000", "--seed", "42", "--json", "JSON",
        ],
    ]
    .iter()
    .map(|v| v.iter().map(|s| s.to_string()).collect())
    .collect();
    let mut differing = Vec::new();
    for args in &commands {
        let mut runs = Vec::new();
        for i in 0..2 {
            let json = dir.join(format!("out{i}.json"));
            let args: Vec<String> = args
                .iter()
                .map(|a| {
                    if a == "JSON" {
                        json.to_string_lossy().into_owned()
                    } else {
                        a.clone()
                    }
                })
                .collect();
            let out = run(std::iter::once("rough-matroid".to_owned()).chain(args));
            let file = std::fs::read(&json).unwrap_or_default();
            let _ = std::fs::remove_file(&json);
            runs.push((out.stdout, out.stderr, out.code, file));
        }
        if runs[0] != runs[1] {
            differing.push(args.join(" "));
        }
    }
    outcome(
        differing.is_empty(),
        format!(
            "{} commands run twice, {} differ{}",
            commands.len(),
            differing.len(),
            first(&differing, &[])
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("worked example", criterion_1),
        ("exhaustive n=3", || exhaustive(3, Duration::from_secs(10))),
        ("exhaustive n=4", || exhaustive(4, Duration::from_secs(600))),
        ("operator laws", criterion_4),
        ("matroid round trip", criterion_5),
        ("SH matroid equivalence", criterion_6),
        ("reduct robustness", criterion_7),
        ("subfamily audit", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = check();
        if !result.pass {
            failed += 1;
        }
        println!(
            "criterion {} {:<24} {}  {}",
            i + 1,
            name,
            if result.pass { "PASS" } else { "FAIL" },
            result.detail
        );
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
