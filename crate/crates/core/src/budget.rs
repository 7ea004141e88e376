//! Choosing the number of queries from a cutsize budget.
//!
//! For a budget `K`, the selector runs to completion and every prefix is
//! scored by `t + Υ(L+_t, K)`: the queries spent plus the mistakes an
//! adversary with `K` label flips can force. The smallest minimizing `t`
//! wins.

use std::collections::BTreeMap;

use crate::select::{QuerySet, Selector};
use crate::Tree;

#[derive(Debug, Clone)]
pub struct BudgetResult {
    /// Chosen number of picks.
    pub t_star: usize,
    /// `t_star + Υ(L+_{t_star}, K)`.
    pub objective: usize,
    /// `curve[t - 1] = t + Υ(L+_t, K)` for `t = 1..=n`.
    pub curve: Vec<usize>,
    pub query_set: QuerySet,
}

/// Sizes of the components of `T \ S` as nodes are removed one at a time.
struct ComponentSizes<'a> {
    tree: &'a Tree,
    removed: Vec<bool>,
    owner: Vec<usize>,
    sizes: Vec<usize>,
    multiset: BTreeMap<usize, usize>,
    stack: Vec<usize>,
}

impl<'a> ComponentSizes<'a> {
    fn new(tree: &'a Tree) -> Self {
        let n = tree.n();
        let mut multiset = BTreeMap::new();
        multiset.insert(n, 1);
        ComponentSizes {
            tree,
            removed: vec![false; n],
            owner: vec![0; n],
            sizes: vec![n],
            multiset,
            stack: Vec::new(),
        }
    }

    fn drop_size(&mut self, s: usize) {
        if let Some(c) = self.multiset.get_mut(&s) {
            *c -= 1;
            if *c == 0 {
                self.multiset.remove(&s);
            }
        }
    }

    fn remove(&mut self, x: usize) {
        if self.removed[x] {
            return;
        }
        self.removed[x] = true;
        let old = self.owner[x];
        self.drop_size(self.sizes[old]);
        for &y in self.tree.neighbors(x) {
            if self.removed[y] || self.owner[y] != old {
                continue;
            }
            let id = self.sizes.len();
            let mut size = 0;
            self.owner[y] = id;
            self.stack.push(y);
            while let Some(u) = self.stack.pop() {
                size += 1;
                for &w in self.tree.neighbors(u) {
                    if !self.removed[w] && self.owner[w] == old {
                        self.owner[w] = id;
                        self.stack.push(w);
                    }
                }
            }
            self.sizes.push(size);
            *self.multiset.entry(size).or_insert(0) += 1;
        }
    }

    fn top_k_sum(&self, k: usize) -> usize {
        let mut left = k;
        let mut sum = 0;
        for (&size, &count) in self.multiset.iter().rev() {
            if left == 0 {
                break;
            }
            let take = count.min(left);
            sum += take * size;
            left -= take;
        }
        sum
    }
}

/// Runs the selector over all `n` steps and returns the prefix minimizing
/// `t + Υ(L+_t, k)`.
pub fn sel_star(t: &Tree, k: usize) -> BudgetResult {
    let n = t.n();
    let mut selector = Selector::new(t, n);
    let mut comps = ComponentSizes::new(t);
    let mut curve = Vec::with_capacity(n);
    let mut forks = Vec::new();
    let mut fork_count = Vec::with_capacity(n);
    while let Some(step) = selector.step() {
        comps.remove(step.node);
        if let Some(j) = step.fork {
            comps.remove(j);
            forks.push(j);
        }
        fork_count.push(forks.len());
        curve.push(step.t + comps.top_k_sum(k));
    }
    let (best, &objective) = curve
        .iter()
        .enumerate()
        .min_by_key(|&(i, &v)| (v, i))
        .expect("a tree has at least one node");
    let t_star = best + 1;
    let picks = selector.picks()[..t_star].to_vec();
    BudgetResult {
        t_star,
        objective,
        curve,
        query_set: QuerySet::new(n, picks, &forks[..fork_count[best]]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::components::upsilon;
    use crate::gen;
    use crate::structure::zero_fork_closure;

    #[test]
    fn star_picks_center() {
        for k in 1..6 {
            let r = sel_star(&Tree::star(5), k);
            assert_eq!(r.t_star, 1);
            assert_eq!(r.query_set.picks(), &[0]);
        }
    }

    #[test]
    fn binary_star_picks_both_centers() {
        let t = gen::binary_star(6, 3);
        for k in 1..=8 {
            let r = sel_star(&t, k);
            assert_eq!(r.t_star, 2, "k={k}");
            assert_eq!(r.query_set.picks(), &[0, 7]);
        }
    }

    #[test]
    fn curve_matches_from_scratch() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(1..40);
            let t = gen::random_tree(n, &mut rng);
            let k = rng.gen_range(0..5);
            let r = sel_star(&t, k);
            assert_eq!(r.curve.len(), n);
            let mut full = Selector::new(&t, n);
            while full.step().is_some() {}
            assert_eq!(full.picks().len(), n);
            for (i, &c) in r.curve.iter().enumerate() {
                let prefix = crate::NodeSet::new(n, full.picks()[..=i].iter().copied()).unwrap();
                let l_plus = zero_fork_closure(&t, &prefix);
                assert_eq!(c, i + 1 + upsilon(&t, &l_plus, k));
            }
            assert_eq!(r.objective, *r.curve.iter().min().unwrap());
            assert_eq!(r.curve[r.t_star - 1], r.objective);
            assert!(r.curve[..r.t_star - 1].iter().all(|&c| c > r.objective));
        }
    }
}
