// From a covering to a matroid: fixed points of SL, the closure system they
// form when the covering is unary, the induced closure, and the matroid whose
// closure it is.

use rough_matroid::closure::closure_from_system;
use rough_matroid::{
    check_closure_axioms, fixed_point_family, induced_closure, is_closure_system, is_unary,
    make_covering, matroid_from_closure, Error, Universe,
};

pub fn run_example() -> rough_matroid::Result<()> {
    let u = Universe::new(["a", "b", "c"])?;
    let c = make_covering(&u, &[vec!["a", "b"], vec!["c"]])?;
    let fixed = fixed_point_family(&c);
    println!("covering {c}: unary={}", is_unary(&c));
    println!(
        "fixed points {fixed}, closure system: {}",
        is_closure_system(&fixed)
    );

    let a = u.subset(["a"])?;
    println!(
        "cl_F({{a}}) = {}",
        u.format(closure_from_system(&fixed, a)?)
    );

    let table = induced_closure(&c);
    println!("induced closure axioms: {}", check_closure_axioms(&table));

    let m = matroid_from_closure(&table)?;
    println!("independent sets {}", m.independents());
    println!("rank(U) = {}", m.rank(u.full()));
    for x in u.subsets() {
        assert_eq!(m.closure(x), table.get(x));
    }
    println!("matroid closure agrees with the induced closure on all subsets");

    // overlapping neighborhoods break the exchange axiom
    let v = Universe::new(["a", "b"])?;
    let nested = make_covering(&v, &[vec!["a"], vec!["a", "b"]])?;
    match matroid_from_closure(&induced_closure(&nested)) {
        Err(Error::AxiomsNotSatisfied(report)) => {
            let w = report.first_failure().expect("a failing axiom");
            println!(
                "{nested}: no matroid, {}",
                w.describe(&induced_closure(&nested))
            );
        }
        other => panic!("expected an axiom failure, got {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("induced matroid example");
}
