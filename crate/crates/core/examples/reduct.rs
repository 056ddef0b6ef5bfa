// Removing reducible blocks: a block that is a union of other blocks.

use rough_matroid::reduct::reducts_over_all_orders;
use rough_matroid::{compute_reduct, is_reducible, make_covering, reduct_is_partition, Universe};

pub fn run_example() -> rough_matroid::Result<()> {
    let u = Universe::new(["a", "b", "c"])?;
    let c = make_covering(
        &u,
        &[
            vec!["a"],
            vec!["b"],
            vec!["c"],
            vec!["b", "c"],
            vec!["a", "b", "c"],
        ],
    )?;
    println!("covering {c}");
    for &k in c.blocks() {
        println!("  {} reducible: {}", u.format(k), is_reducible(&c, k)?);
    }

    let reduct = compute_reduct(&c);
    println!("reduct {reduct} (partition: {})", reduct_is_partition(&c));

    let orders = reducts_over_all_orders(&c);
    println!(
        "distinct reducts over every deletion order: {}",
        orders.len()
    );
    assert_eq!(orders.len(), 1);

    let overlapping = make_covering(&u, &[vec!["a", "b"], vec!["a", "c"]])?;
    println!(
        "reduct of {overlapping} is {} (partition: {})",
        compute_reduct(&overlapping),
        reduct_is_partition(&overlapping)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("reduct example");
}
