//! A small experiment grid written as CSV, the same rows the `sweep`
//! command prints.

use treequery::harness::{sweep, to_csv, Adversary, Input, LabelSource, Method, SweepConfig};
use treequery::graphs::Spanning;
use treequery::Tree;

fn main() -> treequery::Result<()> {
    let cfg = SweepConfig {
        id: "line128".into(),
        methods: vec![Method::Sel, Method::RandomQ, Method::DegreeQ],
        budgets: vec![4, 8, 16],
        k: 4,
        labels: LabelSource::Adversary(Adversary::Theorem1),
        seed: 1,
        seeds: 2,
        spanning: Spanning::Bfs,
    };
    let rows = sweep(&Input::Tree(Tree::path(128)), &cfg)?;
    print!("{}", to_csv(&rows));
    Ok(())
}
