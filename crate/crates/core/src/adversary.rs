//! Label generators for the lower-bound constructions and for workloads.
//!
//! [`theorem1_labeling`] hands every one of the `K` largest hinge trees an
//! independent fair coin as its label, while the labels on `L+` are fixed so
//! that a 2-hinge tree with a coin sees disagreeing connections. Whatever a
//! predictor does on a coin tree it is wrong half the time, so any predictor
//! pays `Υ(L+, K) / 2` mistakes in expectation with cutsize at most `K`.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::structure::{hinge_decompose, require_zero_forked, zero_fork_closure, HingeKind};
use crate::{Label, Labeling, NodeSet, Rational, Tree};

/// The deterministic part of the construction: labels on `L+` and on
/// unselected hinge trees, plus the node groups of the selected trees.
#[derive(Debug, Clone)]
pub struct CoinConstruction {
    /// Labels with the root label `+1`; `None` on selected hinge trees.
    base: Vec<Option<Label>>,
    /// Node sets of the selected hinge trees, larger first.
    selected: Vec<Vec<usize>>,
}

impl CoinConstruction {
    pub fn new(t: &Tree, l_plus: &NodeSet, k: usize) -> Result<Self> {
        require_zero_forked(t, l_plus)?;
        let n = t.n();
        if l_plus.is_empty() {
            let selected = if k > 0 { vec![(0..n).collect()] } else { Vec::new() };
            let base = vec![if k > 0 { None } else { Some(Label::Pos) }; n];
            return Ok(CoinConstruction { base, selected });
        }
        let forest = hinge_decompose(t, l_plus)?;
        let chosen = forest.largest(k);
        let mut is_chosen = vec![false; forest.trees.len()];
        for &i in &chosen {
            is_chosen[i] = true;
        }

        // L+ nodes linked by direct edges and through 2-hinge trees; the
        // label flips across a chosen 2-hinge tree.
        let mut links: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
        for &(u, v) in t.edges() {
            if l_plus.contains(u) && l_plus.contains(v) {
                links[u].push((v, false));
                links[v].push((u, false));
            }
        }
        for (i, h) in forest.trees.iter().enumerate() {
            if h.kind == HingeKind::TwoHinge {
                let (a, b) = (h.connections[0], h.connections[1]);
                links[a].push((b, is_chosen[i]));
                links[b].push((a, is_chosen[i]));
            }
        }
        let start = first_reached(t, l_plus);
        let mut base = vec![None; n];
        base[start] = Some(Label::Pos);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            let lx = base[x].expect("visited");
            for &(y, flip) in &links[x] {
                if base[y].is_none() {
                    base[y] = Some(if flip { lx.flip() } else { lx });
                    stack.push(y);
                }
            }
        }
        for (i, h) in forest.trees.iter().enumerate() {
            if !is_chosen[i] {
                let label = base[h.connections[0]];
                for &v in &h.nodes {
                    base[v] = label;
                }
            }
        }
        let selected = chosen.iter().map(|&i| forest.trees[i].nodes.clone()).collect();
        Ok(CoinConstruction { base, selected })
    }

    /// Number of coin-labeled hinge trees.
    pub fn selected(&self) -> usize {
        self.selected.len()
    }

    /// Total size of the coin-labeled trees, `Υ(L+, K)`.
    pub fn coin_mass(&self) -> usize {
        self.selected.iter().map(Vec::len).sum()
    }

    /// The labeling for root label `root` and one sign per selected tree.
    /// Flipping `root` flips every label outside the selected trees.
    pub fn labeling(&self, root: Label, signs: &[Label]) -> Labeling {
        assert_eq!(signs.len(), self.selected.len(), "one sign per selected tree");
        let mut y: Vec<Label> = self
            .base
            .iter()
            .map(|l| match (l, root) {
                (Some(l), Label::Pos) => *l,
                (Some(l), Label::Neg) => l.flip(),
                (None, _) => Label::Pos,
            })
            .collect();
        for (nodes, &s) in self.selected.iter().zip(signs) {
            for &v in nodes {
                y[v] = s;
            }
        }
        Labeling::total(y)
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Labeling {
        let signs: Vec<Label> = (0..self.selected.len()).map(|_| Label::from_bit(rng.gen())).collect();
        self.labeling(Label::Pos, &signs)
    }

    /// Exact mean of `f` over all `2^selected` sign patterns.
    pub fn exact_mean(&self, mut f: impl FnMut(&Labeling) -> usize) -> Rational {
        let s = self.selected.len();
        assert!(s < 32, "too many sign patterns");
        let mut total = 0u64;
        for bits in 0u64..1 << s {
            let signs: Vec<Label> = (0..s).map(|i| Label::from_bit(bits >> i & 1 == 1)).collect();
            total += f(&self.labeling(Label::Pos, &signs)) as u64;
        }
        Rational::new(total, 1 << s)
    }
}

/// First node of `l` met by a depth-first visit from node 0.
fn first_reached(t: &Tree, l: &NodeSet) -> usize {
    let mut stack = vec![(0, usize::MAX)];
    while let Some((x, from)) = stack.pop() {
        if l.contains(x) {
            return x;
        }
        for &y in t.neighbors(x).iter().rev() {
            if y != from {
                stack.push((y, x));
            }
        }
    }
    unreachable!("l is non-empty")
}

/// Samples the lower-bound labeling for a 0-forked `l_plus` and budget `k`.
/// The cutsize is at most `k`.
pub fn theorem1_labeling(t: &Tree, l_plus: &NodeSet, k: usize, seed: u64) -> Result<Labeling> {
    let c = CoinConstruction::new(t, l_plus, k)?;
    Ok(c.sample(&mut ChaCha8Rng::seed_from_u64(seed)))
}

/// Answers every query with `+1` and commits the hidden labels only once
/// the learner stops asking.
#[derive(Debug, Clone)]
pub struct AdaptiveAdversary<'a> {
    tree: &'a Tree,
    k: usize,
    queried: Vec<bool>,
}

impl<'a> AdaptiveAdversary<'a> {
    pub fn new(tree: &'a Tree, k: usize) -> Self {
        AdaptiveAdversary {
            tree,
            k,
            queried: vec![false; tree.n()],
        }
    }

    pub fn respond(&mut self, node: usize) -> Result<Label> {
        if node >= self.tree.n() {
            return Err(Error::BadNodeId { node, n: self.tree.n() });
        }
        self.queried[node] = true;
        Ok(Label::Pos)
    }

    /// Final labeling: `+1` everywhere except on the `k / 2` largest hinge
    /// trees of the closure of the queried set, which get coin labels. Each
    /// such tree has at most two φ-edges, so the cutsize is at most `k`.
    pub fn finish(self, seed: u64) -> Labeling {
        let n = self.tree.n();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let queried = NodeSet::from_mask(self.queried);
        let closure = zero_fork_closure(self.tree, &queried);
        let mut y = vec![Label::Pos; n];
        let half = self.k / 2;
        if closure.is_empty() {
            if half > 0 {
                y = vec![Label::from_bit(rng.gen()); n];
            }
            return Labeling::total(y);
        }
        let forest = hinge_decompose(self.tree, &closure).expect("closure is 0-forked");
        for i in forest.largest(half) {
            let s = Label::from_bit(rng.gen());
            for &v in &forest.trees[i].nodes {
                y[v] = s;
            }
        }
        Labeling::total(y)
    }
}

/// A labeling with exactly `k` φ-edges chosen uniformly, colored from a
/// random label at node 0.
pub fn random_labeling(t: &Tree, k: usize, seed: u64) -> Result<Labeling> {
    let n = t.n();
    if k > n - 1 {
        return Err(Error::BudgetOutOfRange { budget: k, max: n - 1 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cut = vec![false; n - 1];
    for e in sample(&mut rng, n - 1, k) {
        cut[e] = true;
    }
    let cut_edges: std::collections::HashSet<(usize, usize)> = t
        .edges()
        .iter()
        .zip(&cut)
        .filter(|(_, &c)| c)
        .map(|(&(u, v), _)| (u.min(v), u.max(v)))
        .collect();
    let mut y: Vec<Option<Label>> = vec![None; n];
    y[0] = Some(Label::from_bit(rng.gen()));
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        let lx = y[x].expect("visited");
        for &z in t.neighbors(x) {
            if y[z].is_none() {
                let flip = cut_edges.contains(&(x.min(z), x.max(z)));
                y[z] = Some(if flip { lx.flip() } else { lx });
                stack.push(z);
            }
        }
    }
    Ok(Labeling::from_options(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{cutsize, gen, predict};

    fn set(n: usize, v: &[usize]) -> NodeSet {
        NodeSet::new(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn coin_labels_k0_is_constant_per_component() {
        let t = gen::spider(3, 2);
        let y = theorem1_labeling(&t, &set(7, &[0]), 0, 5).unwrap();
        assert_eq!(cutsize(&t, &y).unwrap(), 0);
    }

    #[test]
    fn coin_labels_path_example() {
        let t = Tree::path(5);
        let l = set(5, &[0, 4]);
        for seed in 0..20 {
            let y = theorem1_labeling(&t, &l, 1, seed).unwrap();
            assert_eq!(y.at(0), Label::Pos);
            assert_eq!(y.at(4), Label::Neg);
            assert_eq!(y.at(1), y.at(2));
            assert_eq!(y.at(2), y.at(3));
            assert_eq!(cutsize(&t, &y).unwrap(), 1);
        }
    }

    #[test]
    fn coin_labels_rejects_forked() {
        let t = gen::spider(3, 2);
        assert!(matches!(
            theorem1_labeling(&t, &set(7, &[2, 4, 6]), 1, 0),
            Err(Error::NotZeroForked { fork: 0 })
        ));
    }

    #[test]
    fn coin_labels_exact_mean_is_half_upsilon() {
        let t = Tree::path(9);
        let l = set(9, &[4]);
        let c = CoinConstruction::new(&t, &l, 2).unwrap();
        let mean = c.exact_mean(|y| {
            let p = predict::pred(&t, &l, &y.restrict(&l)).unwrap();
            predict::mistakes(&p, y, &l).unwrap()
        });
        assert_eq!(mean, Rational::from_integer(4));
    }

    #[test]
    fn adaptive_answers_plus() {
        let t = Tree::path(9);
        let mut adv = AdaptiveAdversary::new(&t, 2);
        for v in [8, 4, 0] {
            assert_eq!(adv.respond(v).unwrap(), Label::Pos);
        }
        assert!(adv.respond(9).is_err());
        let y = AdaptiveAdversary::new(&t, 0).finish(1);
        assert_eq!(y, Labeling::constant(9, Label::Pos));
    }

    #[test]
    fn adaptive_cutsize_bound() {
        let t = Tree::path(9);
        for seed in 0..50 {
            let mut adv = AdaptiveAdversary::new(&t, 2);
            adv.respond(4).unwrap();
            let y = adv.finish(seed);
            assert!(cutsize(&t, &y).unwrap() <= 2);
            assert_eq!(y.at(4), Label::Pos);
        }
    }

    #[test]
    fn random_labeling_cutsize() {
        let t = Tree::path(6);
        let y = random_labeling(&t, 5, 3).unwrap();
        for v in 1..6 {
            assert_ne!(y.at(v), y.at(v - 1));
        }
        assert_eq!(cutsize(&t, &random_labeling(&t, 0, 3).unwrap()).unwrap(), 0);
        assert!(matches!(random_labeling(&t, 6, 0), Err(Error::BudgetOutOfRange { .. })));
        let s = gen::spider(4, 3);
        for k in 0..s.n() {
            assert_eq!(cutsize(&s, &random_labeling(&s, k, k as u64).unwrap()).unwrap(), k);
        }
    }
}
