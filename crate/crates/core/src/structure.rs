//! Fork nodes, the 0-fork closure `L+` and the hinge-tree decomposition of
//! `T \ L+`.

use std::collections::VecDeque;

use crate::components::Components;
use crate::error::{Error, Result};
use crate::{NodeSet, Tree};

/// Nodes outside `l` that have three edge-disjoint paths to distinct members
/// of `l`.
///
/// On a tree these are exactly the non-members of degree at least three in
/// the Steiner subtree spanning `l`, which is what we compute: leaves not in
/// `l` are peeled off until none remain.
pub fn fork_nodes(t: &Tree, l: &NodeSet) -> NodeSet {
    let n = t.n();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut pruned = vec![false; n];
    let mut queue: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1 && !l.contains(v)).collect();
    while let Some(x) = queue.pop() {
        pruned[x] = true;
        for &y in t.neighbors(x) {
            if !pruned[y] {
                degree[y] -= 1;
                if degree[y] == 1 && !l.contains(y) {
                    queue.push(y);
                }
            }
        }
    }
    NodeSet::from_mask(
        (0..n)
            .map(|v| !pruned[v] && !l.contains(v) && degree[v] >= 3)
            .collect(),
    )
}

/// `L+ = L ∪ FORK(L)`.
pub fn zero_fork_closure(t: &Tree, l: &NodeSet) -> NodeSet {
    l.union(&fork_nodes(t, l))
}

pub fn is_zero_forked(t: &Tree, l: &NodeSet) -> bool {
    fork_nodes(t, l).is_empty()
}

pub(crate) fn require_zero_forked(t: &Tree, l: &NodeSet) -> Result<()> {
    match fork_nodes(t, l).as_slice().first() {
        Some(&fork) => Err(Error::NotZeroForked { fork }),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HingeKind {
    OneHinge,
    TwoHinge,
}

/// A connected component of `T \ L+` together with the query nodes it
/// touches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HingeTree {
    pub kind: HingeKind,
    /// Member nodes, ascending.
    pub nodes: Vec<usize>,
    /// One or two connection nodes, ascending.
    pub connections: Vec<usize>,
    /// `distances[c][i]` is the hop distance from `connections[c]` to
    /// `nodes[i]`.
    pub distances: Vec<Vec<usize>>,
}

impl HingeTree {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    /// Smallest member id, used to break ties between equally sized trees.
    pub fn min_node(&self) -> usize {
        self.nodes[0]
    }
}

#[derive(Debug, Clone)]
pub struct HingeForest {
    pub trees: Vec<HingeTree>,
    node_index: Vec<Option<usize>>,
}

impl HingeForest {
    /// Hinge tree containing `v`; `None` for query nodes.
    pub fn owner(&self, v: usize) -> Option<usize> {
        self.node_index[v]
    }

    /// Indices of the `k` largest hinge trees, larger first, ties toward the
    /// smaller contained node id.
    pub fn largest(&self, k: usize) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.trees.len()).collect();
        idx.sort_by_key(|&i| (std::cmp::Reverse(self.trees[i].size()), self.trees[i].min_node()));
        idx.truncate(k);
        idx
    }
}

/// Splits `V \ l_plus` into hinge trees. `l_plus` must be non-empty and
/// 0-forked.
pub fn hinge_decompose(t: &Tree, l_plus: &NodeSet) -> Result<HingeForest> {
    if l_plus.is_empty() {
        return Err(Error::EmptyQuerySet);
    }
    require_zero_forked(t, l_plus)?;
    let comps = Components::of(t, l_plus);
    let members = comps.members();
    let mut local = vec![usize::MAX; t.n()];
    let mut trees = Vec::with_capacity(members.len());
    let mut queue = VecDeque::new();
    for (id, nodes) in members.into_iter().enumerate() {
        for (i, &v) in nodes.iter().enumerate() {
            local[v] = i;
        }
        let mut connections: Vec<usize> = nodes
            .iter()
            .flat_map(|&v| t.neighbors(v).iter().copied())
            .filter(|&u| l_plus.contains(u))
            .collect();
        connections.sort_unstable();
        connections.dedup();
        let kind = match connections.len() {
            1 => HingeKind::OneHinge,
            2 => HingeKind::TwoHinge,
            c => unreachable!("hinge tree with {c} connections in a 0-forked set"),
        };
        let mut distances = Vec::with_capacity(connections.len());
        for &c in &connections {
            let mut dist = vec![usize::MAX; nodes.len()];
            for &u in t.neighbors(c) {
                if comps.owner(u) == Some(id) {
                    dist[local[u]] = 1;
                    queue.push_back(u);
                }
            }
            while let Some(x) = queue.pop_front() {
                let d = dist[local[x]];
                for &y in t.neighbors(x) {
                    if comps.owner(y) == Some(id) && dist[local[y]] == usize::MAX {
                        dist[local[y]] = d + 1;
                        queue.push_back(y);
                    }
                }
            }
            distances.push(dist);
        }
        trees.push(HingeTree {
            kind,
            nodes,
            connections,
            distances,
        });
    }
    let node_index = (0..t.n()).map(|v| comps.owner(v)).collect();
    Ok(HingeForest { trees, node_index })
}
