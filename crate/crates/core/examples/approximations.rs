// Lower and upper approximations, minimal descriptions and neighborhoods on
// the covering {{a,b},{a,c}}, followed by the full law report.

use rough_matroid::approx::{
    indiscernible_neighborhood, minimal_description, neighborhood, property_report,
};
use rough_matroid::{lower_approx, make_covering, upper_approx, Universe};

pub fn run_example() -> rough_matroid::Result<()> {
    let u = Universe::new(["a", "b", "c"])?;
    let c = make_covering(&u, &[vec!["a", "b"], vec!["a", "c"]])?;
    println!("covering {c}");

    for x in u.subsets() {
        println!(
            "  X={:<8} SL={:<8} SH={}",
            u.format(x),
            u.format(lower_approx(&c, x)?),
            u.format(upper_approx(&c, x)?)
        );
    }

    let b = u.subset(["b"])?;
    let sh_b = upper_approx(&c, b)?;
    println!("SH({{b}}) = {}", u.format(sh_b));
    println!("SH(SH({{b}})) = {}", u.format(upper_approx(&c, sh_b)?));

    for e in 0..u.len() {
        println!(
            "  {}: Md={} N={} I={}",
            u.label(e),
            minimal_description(&c, e)?,
            u.format(neighborhood(&c, e)?),
            u.format(indiscernible_neighborhood(&c, e)?)
        );
    }

    let report = property_report(&c);
    for entry in &report.entries {
        println!(
            "  ({}) {:<28} {}",
            entry.property,
            entry.property.statement(),
            if entry.passed() { "holds" } else { "FAILS" }
        );
    }
    assert!(report.all_pass());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("approximation example");
}
