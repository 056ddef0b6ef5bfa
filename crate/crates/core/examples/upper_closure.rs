// SH as a closure operator: it is a matroid closure exactly when the
// indiscernible neighborhoods partition the universe.

use rough_matroid::{
    check_closure_axioms, indiscernible_family, is_partition, make_covering, matroid_from_closure,
    sh_as_closure_table, ClosureAxiom, Universe,
};

pub fn run_example() -> rough_matroid::Result<()> {
    let u = Universe::new(["a", "b", "c"])?;

    let overlapping = make_covering(&u, &[vec!["a", "b"], vec!["a", "c"]])?;
    let table = sh_as_closure_table(&overlapping);
    let report = check_closure_axioms(&table);
    let family = indiscernible_family(&overlapping);
    println!(
        "{overlapping}: I-family {family} partition={}",
        is_partition(&family)
    );
    let w = report.get(ClosureAxiom::CL3).witness.expect("CL3 fails");
    println!("  {}", w.describe(&table));

    let grouped = make_covering(&u, &[vec!["a"], vec!["a", "b"], vec!["c"]])?;
    let table = sh_as_closure_table(&grouped);
    let family = indiscernible_family(&grouped);
    println!(
        "{grouped}: I-family {family} partition={}",
        is_partition(&family)
    );
    let m = matroid_from_closure(&table)?;
    println!(
        "  SH is the closure of the matroid with independents {}",
        m.independents()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("upper closure example");
}
