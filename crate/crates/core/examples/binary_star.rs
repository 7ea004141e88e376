//! Two stars joined at their centers: two queries are enough.

use treequery::oracle::{optimal_query_set, Objective};
use treequery::predict::{mistakes, pred};
use treequery::psi::psi_star_exact;
use treequery::select::sel;
use treequery::{gen, Label, Labeling};

fn main() -> treequery::Result<()> {
    let tree = gen::binary_star(6, 3);
    let picked = sel(&tree, 2)?;
    let l = picked.query_set.closure();
    println!("queries: {:?}", picked.query_set.picks());

    let truth = Labeling::total((0..tree.n()).map(|v| if v < 7 { Label::Pos } else { Label::Neg }).collect());
    let guess = pred(&tree, l, &truth.restrict(l))?;
    println!("mistakes on the two-block labeling: {}", mistakes(&guess, &truth, l)?);
    println!("psi* at the centers: {}", psi_star_exact(&tree, l)?);

    let (best, value) = optimal_query_set(&tree, 2, Objective::PsiStar)?;
    println!("best pair by enumeration: {:?} with {value}", best.as_slice());
    Ok(())
}
