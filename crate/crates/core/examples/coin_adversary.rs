//! The coin construction forces half of the K largest hinge trees to be
//! mispredicted on average, whatever the predictor does.

use treequery::adversary::{theorem1_labeling, CoinConstruction};
use treequery::components::upsilon;
use treequery::oracle::{game_value, oracle_lb};
use treequery::predict::{mistakes, pred};
use treequery::select::sel;
use treequery::{cutsize, gen, Tree};

fn main() -> treequery::Result<()> {
    let tree = gen::spider(4, 3);
    let l = sel(&tree, 2)?.query_set.closure().clone();
    let k = 3;
    let c = CoinConstruction::new(&tree, &l, k)?;
    let pred_mistakes = |y: &treequery::Labeling| {
        let guess = pred(&tree, &l, &y.restrict(&l)).unwrap();
        mistakes(&guess, y, &l).unwrap()
    };
    println!("query closure {:?}, {} coin trees covering {} nodes", l.as_slice(), c.selected(), c.coin_mass());
    println!("exact mean mistakes {}", c.exact_mean(pred_mistakes));
    println!("half of upsilon     {}", oracle_lb(&tree, &l, k)?);
    println!("upsilon             {}", upsilon(&tree, &l, k));

    let seeds = 2000;
    let total: usize = (0..seeds).map(|s| pred_mistakes(&theorem1_labeling(&tree, &l, k, s).unwrap())).sum();
    println!("monte carlo mean    {:.3}", total as f64 / seeds as f64);

    let small = Tree::path(9);
    let l = treequery::NodeSet::new(9, [2, 6])?;
    println!(
        "path 9 with {{2,6}}: best deterministic predictor {} vs bound {}",
        game_value(&small, &l, 2)?,
        oracle_lb(&small, &l, 2)?
    );
    let y = theorem1_labeling(&tree, &sel(&tree, 2)?.query_set.closure().clone(), k, 1)?;
    println!("sample cutsize {} <= {k}", cutsize(&tree, &y)?);
    Ok(())
}
