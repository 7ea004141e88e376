//! Effective resistance of the cut edges.

use treequery::gen;
use treequery::graphs::{effective_resistance, resistance_cutsize};
use treequery::{cutsize, Label, Labeling};

fn main() -> treequery::Result<()> {
    for n in [3, 4, 8, 16] {
        let r = effective_resistance(&gen::cycle_graph(n), 0, 1)?;
        println!("cycle {n:>2}: r(0,1) = {r:.9} (expected {:.9})", (n - 1) as f64 / n as f64);
    }

    let tree = gen::spider(3, 3);
    let y = Labeling::total((0..tree.n()).map(|v| Label::from_bit(v % 3 == 0)).collect());
    println!(
        "on a tree the resistance cutsize {} equals the cutsize {}",
        resistance_cutsize(&gen::tree_graph(&tree), &y)?,
        cutsize(&tree, &y)?
    );

    let g = gen::clique_chain(3, 5, 1);
    let y = Labeling::total((0..g.n()).map(|v| Label::from_bit(v < 5)).collect());
    println!("clique chain: cutsize {} vs resistance cutsize {:.6}", g.cutsize(&y)?, resistance_cutsize(&g, &y)?);
    Ok(())
}
