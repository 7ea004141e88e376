//! Connected components of `T \ L`, the σ split size and the component
//! function Υ.

use crate::error::{Error, Result};
use crate::{NodeSet, Tree};

const NONE: usize = usize::MAX;

/// Components of the forest left after deleting a node set.
///
/// Components are numbered in order of their smallest node id.
#[derive(Debug, Clone)]
pub struct Components {
    owner: Vec<usize>,
    sizes: Vec<usize>,
}

impl Components {
    pub fn of(t: &Tree, removed: &NodeSet) -> Self {
        let n = t.n();
        let mut owner = vec![NONE; n];
        let mut sizes = Vec::new();
        let mut stack = Vec::new();
        for seed in 0..n {
            if removed.contains(seed) || owner[seed] != NONE {
                continue;
            }
            let id = sizes.len();
            owner[seed] = id;
            stack.push(seed);
            let mut size = 0;
            while let Some(x) = stack.pop() {
                size += 1;
                for &y in t.neighbors(x) {
                    if !removed.contains(y) && owner[y] == NONE {
                        owner[y] = id;
                        stack.push(y);
                    }
                }
            }
            sizes.push(size);
        }
        Components { owner, sizes }
    }

    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Component of `v`, or `None` if `v` was removed.
    pub fn owner(&self, v: usize) -> Option<usize> {
        match self.owner[v] {
            NONE => None,
            c => Some(c),
        }
    }

    /// Node lists per component, each ascending.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.sizes.len()];
        for (v, &c) in self.owner.iter().enumerate() {
            if c != NONE {
                out[c].push(v);
            }
        }
        out
    }

    /// Sum of the `k` largest component sizes.
    pub fn top_k_sum(&self, k: usize) -> usize {
        let mut sorted = self.sizes.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        sorted.iter().take(k).sum()
    }
}

/// Υ(L, K): total size of the `k` largest components of `T \ l`, or
/// `|V \ l|` when there are fewer than `k` components.
pub fn upsilon(t: &Tree, l: &NodeSet, k: usize) -> usize {
    Components::of(t, l).top_k_sum(k)
}

/// σ(T', v): size of the largest component of the subtree induced by
/// `restrict` once `v` is deleted.
pub fn sigma(t: &Tree, restrict: &NodeSet, v: usize) -> Result<usize> {
    if !restrict.contains(v) {
        return Err(Error::NodeOutsideComponent { node: v });
    }
    let outside = restrict.complement();
    if Components::of(t, &outside).count() != 1 {
        return Err(Error::DisconnectedRestriction);
    }
    let mut removed = outside;
    removed.insert(v);
    Ok(Components::of(t, &removed).sizes().iter().copied().max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[usize]) -> NodeSet {
        NodeSet::new(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn sigma_examples() {
        let p5 = Tree::path(5);
        let all = NodeSet::full(5);
        assert_eq!(sigma(&p5, &all, 2).unwrap(), 2);
        assert_eq!(sigma(&p5, &all, 0).unwrap(), 4);
        assert_eq!(sigma(&Tree::star(5), &all, 0).unwrap(), 1);
        assert_eq!(sigma(&p5, &set(5, &[3]), 3).unwrap(), 0);
    }

    #[test]
    fn sigma_errors() {
        let p5 = Tree::path(5);
        assert!(matches!(
            sigma(&p5, &set(5, &[0, 1]), 3),
            Err(Error::NodeOutsideComponent { node: 3 })
        ));
        assert!(matches!(
            sigma(&p5, &set(5, &[0, 2]), 0),
            Err(Error::DisconnectedRestriction)
        ));
    }

    #[test]
    fn upsilon_examples() {
        let p5 = Tree::path(5);
        let l = set(5, &[2]);
        assert_eq!(upsilon(&p5, &l, 1), 2);
        assert_eq!(upsilon(&p5, &l, 2), 4);
        assert_eq!(upsilon(&p5, &l, 5), 4);
        assert_eq!(upsilon(&p5, &l, 0), 0);
        assert_eq!(upsilon(&p5, &NodeSet::full(5), 3), 0);
    }

    #[test]
    fn components_ordered_by_smallest_id() {
        let t = Tree::path(7);
        let c = Components::of(&t, &set(7, &[1, 4]));
        assert_eq!(c.sizes(), &[1, 2, 2]);
        assert_eq!(c.members(), vec![vec![0], vec![2, 3], vec![5, 6]]);
        assert_eq!(c.owner(4), None);
    }
}
