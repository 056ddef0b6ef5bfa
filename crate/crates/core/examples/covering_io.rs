// Reading and writing covering documents, and enumerating or sampling
// coverings.

use rough_matroid::covering::{enumerate_coverings, random_covering};
use rough_matroid::io::{parse_covering, print_covering};
use rough_matroid::Universe;

pub fn run_example() -> rough_matroid::Result<()> {
    let c = parse_covering(
        r#"{"universe": ["a","b","c"], "blocks": [["c","a"],["b","a"],["a","b"]]}"#,
    )?;
    println!("parsed {c} ({} blocks after deduplication)", c.len());
    println!("canonical {}", print_covering(&c));

    for n in 1..=4 {
        let u = Universe::alphabetic(n)?;
        println!("n={n}: {} coverings", enumerate_coverings(&u)?.count());
    }

    let u = Universe::alphabetic(5)?;
    let sample = random_covering(&u, 42);
    println!(
        "random covering of 5 elements (seed 42) has {} blocks",
        sample.len()
    );
    assert_eq!(sample, random_covering(&u, 42));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("covering io example");
}
