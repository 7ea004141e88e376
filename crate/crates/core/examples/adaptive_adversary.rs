//! An adversary that answers +1 to every query and only commits the
//! hidden labels after the learner stops.

use treequery::adversary::AdaptiveAdversary;
use treequery::predict::{mistakes, pred};
use treequery::select::Selector;
use treequery::structure::zero_fork_closure;
use treequery::{cutsize, NodeSet, Tree};

fn main() -> treequery::Result<()> {
    let tree = Tree::path(33);
    let k = 4;
    let seeds = 1000;
    let mut total = 0;
    for seed in 0..seeds {
        let mut adversary = AdaptiveAdversary::new(&tree, k);
        let mut learner = Selector::new(&tree, 3);
        let mut asked = Vec::new();
        while learner.closure_len() < 3 {
            let step = learner.step().expect("nodes left");
            adversary.respond(step.node)?;
            asked.push(step.node);
        }
        let y = adversary.finish(seed);
        assert!(cutsize(&tree, &y)? <= k);
        let l = zero_fork_closure(&tree, &NodeSet::new(tree.n(), asked)?);
        let guess = pred(&tree, &l, &y.restrict(&l))?;
        total += mistakes(&guess, &y, &l)?;
    }
    println!("mean mistakes over {seeds} games: {:.3}", total as f64 / seeds as f64);
    Ok(())
}
