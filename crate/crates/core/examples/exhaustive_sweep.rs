// Checks every theorem on every covering of an n-element universe (n ≤ 4).
//
//     cargo run --release --example exhaustive_sweep -- 4

use rough_matroid::verify::{covering_count, sweep, SweepMode};

pub fn run_example_with(n: usize) -> rough_matroid::Result<()> {
    let report = sweep(n, SweepMode::Exhaustive)?;
    print!("{}", report.summary());
    assert_eq!(report.coverings_examined as u64, covering_count(n));
    Ok(())
}

pub fn run_example() -> rough_matroid::Result<()> {
    run_example_with(3)
}

#[allow(dead_code)]
fn main() {
    let n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    run_example_with(n).expect("n within the exhaustive guard");
}
