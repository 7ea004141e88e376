//! Reading and writing the plain-text formats used by the command line.

use treequery::{io, select::sel, Label, Labeling};

fn main() -> treequery::Result<()> {
    let text = "# a small caterpillar\nn=7\n0 1\n1 2\n2 3\n1 4\n2 5\n2 6\n";
    let tree = io::parse_tree(text)?;
    print!("{}", io::write_edge_list(tree.n(), tree.edges()));

    let run = sel(&tree, 2)?;
    let file = io::write_query_set(&run.query_set);
    print!("{file}");
    let (picks, forks) = io::parse_query_set(&file, tree.n())?;
    println!("parsed back: picks {picks:?}, forks {forks:?}");

    let y = Labeling::total((0..tree.n()).map(|v| if v == 3 { Label::Neg } else { Label::Pos }).collect());
    print!("{}", io::write_labels(&y.restrict(run.query_set.closure())));

    match io::parse_tree("0 1\n1 2\n2 0\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
