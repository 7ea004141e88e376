#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use treequery::structure::zero_fork_closure;
use treequery::{gen, Label, Labeling, NodeSet, Tree};

pub fn set(n: usize, nodes: &[usize]) -> NodeSet {
    NodeSet::new(n, nodes.iter().copied()).unwrap()
}

/// Uniform subset of `0..n` with `size` members.
pub fn random_subset(rng: &mut ChaCha8Rng, n: usize, size: usize) -> NodeSet {
    let picks = rand::seq::index::sample(rng, n, size.min(n)).into_vec();
    NodeSet::new(n, picks).unwrap()
}

/// Closure of a random non-empty subset with at most `max` members.
pub fn random_closure(rng: &mut ChaCha8Rng, t: &Tree, max: usize) -> NodeSet {
    let size = rng.gen_range(1..=max.clamp(1, t.n()));
    zero_fork_closure(t, &random_subset(rng, t.n(), size))
}

pub fn random_labels(rng: &mut ChaCha8Rng, n: usize) -> Labeling {
    Labeling::total((0..n).map(|_| Label::from_bit(rng.gen())).collect())
}

/// Paths, stars and every caterpillar on `1..=max` nodes.
pub fn structured_trees(max: usize) -> Vec<Tree> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.push(Tree::path(n));
        out.push(Tree::star(n));
        out.extend(gen::caterpillars(n));
    }
    out
}

/// Every unlabeled tree on `1..=max` nodes.
pub fn all_trees_up_to(max: usize) -> Vec<Tree> {
    (1..=max).flat_map(gen::all_trees).collect()
}

/// Edge set with each edge as `(min, max)`, sorted.
pub fn edge_set(t: &Tree) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = t.edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    e.sort_unstable();
    e
}
