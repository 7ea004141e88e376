//! Tree and graph families used by tests, examples and the harness.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashSet};

use rand::Rng;

use crate::graphs::Graph;
use crate::Tree;

pub fn path(n: usize) -> Tree {
    Tree::path(n)
}

pub fn star(n: usize) -> Tree {
    Tree::star(n)
}

/// Center 0 with `legs` paths of `len` nodes each; leg `i` holds nodes
/// `1 + i*len ..= (i+1)*len`, listed outward.
pub fn spider(legs: usize, len: usize) -> Tree {
    let mut edges = Vec::new();
    for leg in 0..legs {
        let base = 1 + leg * len;
        for k in 0..len {
            let prev = if k == 0 { 0 } else { base + k - 1 };
            edges.push((prev, base + k));
        }
    }
    Tree::new(1 + legs * len, edges).expect("spider is a tree")
}

/// Two stars whose centers share an edge. Node 0 is the center of the star
/// with `big` leaves (`1..=big`), node `big + 1` the center of the one with
/// `small` leaves.
pub fn binary_star(big: usize, small: usize) -> Tree {
    let c2 = big + 1;
    let mut edges: Vec<(usize, usize)> = (1..=big).map(|v| (0, v)).collect();
    edges.push((0, c2));
    edges.extend((1..=small).map(|k| (c2, c2 + k)));
    Tree::new(big + small + 2, edges).expect("binary star is a tree")
}

/// Caterpillar with a spine `0..spine` and `leaves[i]` pendant leaves on
/// spine node `i`.
pub fn caterpillar(leaves: &[usize]) -> Tree {
    let spine = leaves.len();
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|v| (v - 1, v)).collect();
    let mut next = spine;
    for (s, &k) in leaves.iter().enumerate() {
        for _ in 0..k {
            edges.push((s, next));
            next += 1;
        }
    }
    Tree::new(next, edges).expect("caterpillar is a tree")
}

/// Every caterpillar on `n` nodes, one per (spine length, leaf
/// distribution); isomorphic copies are not removed.
pub fn caterpillars(n: usize) -> Vec<Tree> {
    fn compositions(total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in 0..=total {
            cur.push(first);
            compositions(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for spine in 1..=n {
        let mut dists = Vec::new();
        compositions(n - spine, spine, &mut Vec::new(), &mut dists);
        out.extend(dists.iter().map(|d| caterpillar(d)));
    }
    out
}

/// Uniform random labeled tree on `n` nodes (Prüfer decoding).
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    if n <= 2 {
        return Tree::path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let Reverse(leaf) = leaves.pop().expect("Prüfer decoding always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Tree::new(n, edges).expect("Prüfer sequence decodes to a tree")
}

/// Rooted canonical string of the subtree at `v` (parent `p`).
fn rooted_code(t: &Tree, v: usize, p: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&u| u != p)
        .map(|&u| rooted_code(t, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism-invariant code of a free tree (rooted at its center).
pub fn canonical_code(t: &Tree) -> String {
    let n = t.n();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &x in &layer {
            for &y in t.neighbors(x) {
                if degree[y] > 1 {
                    degree[y] -= 1;
                    if degree[y] == 1 {
                        next.push(y);
                    }
                }
            }
            degree[x] = 0;
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_code(t, c, usize::MAX))
        .min()
        .unwrap()
}

/// All free trees on `n` nodes up to isomorphism.
///
/// Rooted trees are generated as level sequences (Beyer–Hedetniemi) and
/// deduplicated by [`canonical_code`].
pub fn all_trees(n: usize) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<usize> = (0..n).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    loop {
        let mut last_at = vec![0usize; n];
        let mut edges = Vec::with_capacity(n - 1);
        for i in 1..n {
            edges.push((last_at[level[i] - 1], i));
            last_at[level[i]] = i;
        }
        let t = Tree::new(n, edges).expect("level sequence is a tree");
        if seen.insert(canonical_code(&t)) {
            out.push(t);
        }
        let Some(p) = (1..n).rev().find(|&i| level[i] > 1) else {
            break;
        };
        let q = (0..p).rev().find(|&i| level[i] == level[p] - 1).unwrap();
        for i in p..n {
            level[i] = level[i - (p - q)];
        }
    }
    out
}

pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("complete graph is valid")
}

pub fn cycle_graph(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is valid")
}

/// Tree reinterpreted as a graph.
pub fn tree_graph(t: &Tree) -> Graph {
    Graph::new(t.n(), t.edges().iter().copied()).expect("a tree is a connected graph")
}

/// `m` cliques of `size` nodes. Clique `i` owns nodes `i*size..(i+1)*size`
/// and is bridged to cliques `i+1, ..., i+reach` (mod `m`), so each clique
/// touches up to `2*reach` others. Bridges leave from distinct members.
pub fn clique_chain(m: usize, size: usize, reach: usize) -> Graph {
    let mut edges = BTreeSet::new();
    for c in 0..m {
        let base = c * size;
        for a in 0..size {
            for b in a + 1..size {
                edges.insert((base + a, base + b));
            }
        }
    }
    for c in 0..m {
        for d in 1..=reach {
            let other = (c + d) % m;
            if other == c {
                continue;
            }
            let u = c * size + (d % size);
            let v = other * size + ((size - d % size) % size);
            edges.insert((u.min(v), u.max(v)));
        }
    }
    Graph::new(m * size, edges).expect("clique chain is connected")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn tree_counts_match_known_sequence() {
        // number of unlabeled free trees, n = 1..=12
        let known = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (i, &k) in known.iter().enumerate() {
            assert_eq!(all_trees(i + 1).len(), k, "n = {}", i + 1);
        }
    }

    #[test]
    fn caterpillar_count() {
        assert_eq!(caterpillars(6).len(), 32);
        assert!(caterpillars(6).iter().all(|t| t.n() == 6));
    }

    #[test]
    fn shapes() {
        let s = spider(3, 2);
        assert_eq!(s.neighbors(0), &[1, 3, 5]);
        assert!(s.has_edge(1, 2) && s.has_edge(5, 6));
        let b = binary_star(6, 3);
        assert_eq!(b.n(), 11);
        assert_eq!(b.degree(0), 7);
        assert_eq!(b.degree(7), 4);
    }

    #[test]
    fn random_tree_is_valid() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for n in 1..50 {
            assert_eq!(random_tree(n, &mut rng).n(), n);
        }
    }

    #[test]
    fn clique_chain_degree() {
        let g = clique_chain(6, 4, 1);
        assert_eq!(g.n(), 24);
        assert_eq!(g.edges().len(), 6 * 6 + 6);
    }
}
