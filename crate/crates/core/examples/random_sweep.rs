// Samples coverings of a larger universe and runs the same checks. The
// report is a pure function of (n, samples, seed).
//
//     cargo run --release --example random_sweep -- 5 1000 42

use rough_matroid::verify::{sweep, SweepMode};

pub fn run_example_with(n: usize, samples: usize, seed: u64) -> rough_matroid::Result<()> {
    let report = sweep(n, SweepMode::Random { samples, seed })?;
    print!("{}", report.summary());
    Ok(())
}

pub fn run_example() -> rough_matroid::Result<()> {
    run_example_with(5, 50, 42)
}

#[allow(dead_code)]
fn main() {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|a| a.parse().ok()).unwrap_or(5);
    let samples = args.next().and_then(|a| a.parse().ok()).unwrap_or(1000);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(42);
    run_example_with(n, samples, seed).expect("sweep");
}
