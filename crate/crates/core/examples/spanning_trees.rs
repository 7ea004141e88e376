//! Reducing a graph to a tree: breadth-first versus uniform spanning trees.

use std::collections::HashMap;

use treequery::gen;
use treequery::graphs::{bfs_spanning_tree, graph_pipeline, random_spanning_tree, Spanning};
use treequery::{Label, Labeling};

fn main() -> treequery::Result<()> {
    let k4 = gen::complete_graph(4);
    let mut counts: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
    let samples = 20_000;
    for seed in 0..samples {
        let t = random_spanning_tree(&k4, seed);
        let mut e: Vec<_> = t.edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        e.sort_unstable();
        *counts.entry(e).or_default() += 1;
    }
    let (lo, hi) = (counts.values().min().unwrap(), counts.values().max().unwrap());
    println!("K4: {} distinct spanning trees, counts between {lo} and {hi}", counts.len());

    // four cliques of six, each clique one class
    let g = gen::clique_chain(4, 6, 1);
    println!("bfs tree of the clique chain: {:?}", bfs_spanning_tree(&g, 0)?.edges());
    let y = Labeling::total((0..g.n()).map(|v| Label::from_bit((v / 6) % 2 == 0)).collect());
    for spanning in [Spanning::Bfs, Spanning::Random] {
        let mistakes: Vec<usize> = (0..10)
            .map(|seed| graph_pipeline(&g, spanning, 4, &y, seed).map(|r| r.mistakes))
            .collect::<treequery::Result<_>>()?;
        println!("{spanning:>6}: mistakes over 10 seeds {mistakes:?}");
    }
    Ok(())
}
