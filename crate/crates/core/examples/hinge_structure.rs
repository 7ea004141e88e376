//! Forks, closures, hinge trees and the quantities built on them.

use treequery::components::upsilon;
use treequery::psi::{psi_star_bounds, psi_star_exact};
use treequery::structure::{fork_nodes, hinge_decompose, zero_fork_closure};
use treequery::{gen, NodeSet};

fn main() -> treequery::Result<()> {
    let tree = gen::spider(3, 2);
    let leaves = NodeSet::new(tree.n(), [2, 4, 6])?;
    println!("forks of the three leaves: {:?}", fork_nodes(&tree, &leaves).as_slice());

    let closure = zero_fork_closure(&tree, &leaves);
    println!("closure: {:?}", closure.as_slice());

    for h in &hinge_decompose(&tree, &closure)?.trees {
        println!("  {:?} tree {:?} hangs on {:?}", h.kind, h.nodes, h.connections);
    }

    let center = NodeSet::new(tree.n(), [0])?;
    for k in 0..=4 {
        println!("upsilon(center, {k}) = {}", upsilon(&tree, &center, k));
    }
    let (lo, hi) = psi_star_bounds(&tree, &center)?;
    println!("psi*(center) = {} within [{lo}, {hi}]", psi_star_exact(&tree, &center)?);
    Ok(())
}
