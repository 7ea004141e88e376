//! Brute-force check of the mistake-bound chains on every tree with up to
//! eight nodes.

use treequery::gen;
use treequery::oracle::{verify_chain, ChainReport};

fn main() -> treequery::Result<()> {
    let mut total = ChainReport::default();
    for n in 3..=8 {
        for tree in gen::all_trees(n) {
            for budget in 2..=n {
                total.merge(verify_chain(&tree, budget, 3)?);
            }
        }
    }
    println!(
        "{} inequalities over {} competitors, {} violations",
        total.checks,
        total.competitors,
        total.violations.len()
    );
    for v in total.violations.iter().take(5) {
        println!("  {v}");
    }
    Ok(())
}
