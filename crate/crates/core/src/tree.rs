use std::collections::HashSet;

use crate::error::{Defect, Error, Result};

const NO_PARENT: usize = usize::MAX;

/// An immutable, validated tree over nodes `0..n`.
///
/// Neighbor lists are sorted ascending. The tree also keeps a parent array
/// (rooted at node 0) so that edge membership is answered in constant time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    parent: Vec<usize>,
}

/// Validates an edge list and builds a [`Tree`].
pub fn build_tree(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
    Tree::new(n, edges.iter().copied())
}

impl Tree {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let bad = |defect, edge| Error::NotATree { defect, edge };
        if n == 0 {
            return Err(bad(Defect::Empty, None));
        }
        let mut uf = UnionFind::new(n);
        let mut seen = HashSet::new();
        let mut list = Vec::with_capacity(n - 1);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(bad(Defect::BadNodeId, Some((u, v))));
            }
            if u == v {
                return Err(bad(Defect::SelfLoop, Some((u, v))));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(bad(Defect::DuplicateEdge, Some((u, v))));
            }
            if !uf.union(u, v) {
                return Err(bad(Defect::Cycle, Some((u, v))));
            }
            list.push((u, v));
        }
        if list.len() != n - 1 {
            return Err(bad(Defect::Disconnected, None));
        }
        Ok(Self::from_valid_edges(n, list))
    }

    pub(crate) fn from_valid_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0usize; 2 * edges.len()];
        for &(u, v) in &edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..n {
            targets[offsets[v]..offsets[v + 1]].sort_unstable();
        }

        let mut parent = vec![NO_PARENT; n];
        let mut stack = vec![0usize];
        let mut visited = vec![false; n];
        visited[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &targets[offsets[x]..offsets[x + 1]] {
                if !visited[y] {
                    visited[y] = true;
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        Tree {
            edges,
            offsets,
            targets,
            parent,
        }
    }

    /// Number of nodes.
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// Edges in input order, as given.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Parent of `v` when the tree is rooted at node 0.
    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent[v] {
            NO_PARENT => None,
            p => Some(p),
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && (self.parent[u] == v || self.parent[v] == u)
    }

    /// Simple path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_valid_edges(n.max(1), (1..n).map(|v| (v - 1, v)).collect())
    }

    /// Star with center 0 and leaves `1..n`.
    pub fn star(n: usize) -> Self {
        Self::from_valid_edges(n.max(1), (1..n).map(|v| (0, v)).collect())
    }

    /// Approximate heap footprint in bytes.
    pub fn heap_bytes(&self) -> usize {
        let w = std::mem::size_of::<usize>();
        self.edges.capacity() * 2 * w
            + (self.offsets.capacity() + self.targets.capacity() + self.parent.capacity()) * w
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}
