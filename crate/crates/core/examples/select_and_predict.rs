//! Pick queries on a random tree, reveal their labels and predict the rest.
//!
//! ```bash
//! cargo run --example select_and_predict
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use treequery::adversary::random_labeling;
use treequery::predict::{mistakes, pred};
use treequery::select::sel;
use treequery::{cutsize, gen};

fn main() -> treequery::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let tree = gen::random_tree(200, &mut rng);
    let truth = random_labeling(&tree, 6, 11)?;

    for budget in [4, 8, 16, 32, 64] {
        let run = sel(&tree, budget)?;
        let l_plus = run.query_set.closure();
        let guess = pred(&tree, l_plus, &truth.restrict(l_plus))?;
        println!(
            "budget {budget:>2}: {} picks, {} forks, {} mistakes on {} hidden nodes",
            run.query_set.picks().len(),
            run.query_set.forks().len(),
            mistakes(&guess, &truth, l_plus)?,
            tree.n() - l_plus.len(),
        );
    }
    println!("cutsize of the hidden labeling: {}", cutsize(&tree, &truth)?);
    Ok(())
}
