//! Reducible blocks and the reduct of a covering.
//!
//! A block is reducible when it is a union of other blocks. Any such union
//! can only use blocks strictly inside it, so the test reduces to checking
//! whether the proper sub-blocks of `k` cover `k`. The subfamily never
//! includes `k` itself.

use std::collections::{BTreeSet, HashMap};

use crate::covering::{is_partition, Covering};
use crate::error::{Error, Result};
use crate::universe::Subset;

pub fn is_reducible(c: &Covering, k: Subset) -> Result<bool> {
    if !c.is_block(k) {
        return Err(Error::NotABlock(c.universe().format(k)));
    }
    Ok(reducible_among(c.blocks(), k))
}

fn reducible_among(blocks: &[Subset], k: Subset) -> bool {
    let below = blocks
        .iter()
        .filter(|&&b| b != k && b.is_subset_of(k))
        .fold(Subset::EMPTY, |acc, &b| acc | b);
    below == k
}

/// Deletes the first reducible block in mask order and restarts, until no
/// block is reducible.
pub fn compute_reduct(c: &Covering) -> Covering {
    let mut blocks = c.blocks().to_vec();
    while let Some(pos) = blocks.iter().position(|&k| reducible_among(&blocks, k)) {
        blocks.remove(pos);
    }
    Covering::new(c.universe(), blocks).expect("deleting reducible blocks preserves coverage")
}

pub fn reduct_is_partition(c: &Covering) -> bool {
    is_partition(&compute_reduct(c).as_family())
}

/// Every terminal block list reachable by deleting reducible blocks one at a
/// time in any order.
///
/// Explores all orders, so it is only meant for small coverings.
pub fn reducts_over_all_orders(c: &Covering) -> BTreeSet<Vec<Subset>> {
    let mut memo = HashMap::new();
    explore(c.blocks().to_vec(), &mut memo)
}

fn explore(
    blocks: Vec<Subset>,
    memo: &mut HashMap<Vec<Subset>, BTreeSet<Vec<Subset>>>,
) -> BTreeSet<Vec<Subset>> {
    if let Some(done) = memo.get(&blocks) {
        return done.clone();
    }
    let reducible: Vec<usize> = (0..blocks.len())
        .filter(|&i| reducible_among(&blocks, blocks[i]))
        .collect();
    let result = if reducible.is_empty() {
        BTreeSet::from([blocks.clone()])
    } else {
        let mut all = BTreeSet::new();
        for i in reducible {
            let mut next = blocks.clone();
            next.remove(i);
            all.extend(explore(next, memo));
        }
        all
    };
    memo.insert(blocks, result.clone());
    result
}
