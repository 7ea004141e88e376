//! General graphs: spanning-tree reduction and effective-resistance cutsize.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Defect, Error, Result};
use crate::harness::{ExperimentRecord, Method};
use crate::tree::UnionFind;
use crate::{components, predict, psi, select, Labeling, Tree};

/// Largest graph handled by the dense resistance solver.
pub const RESISTANCE_CAP: usize = 2000;

/// A connected simple undirected graph over nodes `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let bad = |defect, edge| Error::NotAGraph { defect, edge };
        if n == 0 {
            return Err(bad(Defect::Empty, None));
        }
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        let mut uf = UnionFind::new(n);
        let mut parts = n;
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
            if uf.union(u, v) {
                parts -= 1;
            }
            list.push((u, v));
        }
        if parts != 1 {
            return Err(bad(Defect::Disconnected, None));
        }
        let mut degree = vec![0usize; n];
        for &(u, v) in &list {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = vec![0; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + degree[v];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; 2 * list.len()];
        for &(u, v) in &list {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..n {
            targets[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Ok(Graph {
            edges: list,
            offsets,
            targets,
        })
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Number of edges whose endpoints carry different labels.
    pub fn cutsize(&self, y: &Labeling) -> Result<usize> {
        y.require_total()?;
        Ok(self.edges.iter().filter(|&&(u, v)| y.get(u) != y.get(v)).count())
    }
}

/// How a spanning tree is extracted from a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spanning {
    Bfs,
    Random,
}

impl FromStr for Spanning {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "bfs" => Ok(Spanning::Bfs),
            "random" => Ok(Spanning::Random),
            _ => Err(format!("unknown spanning method `{s}` (expected bfs or random)")),
        }
    }
}

impl fmt::Display for Spanning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Spanning::Bfs => "bfs",
            Spanning::Random => "random",
        })
    }
}

/// Breadth-first spanning tree from `root`, visiting neighbors in ascending
/// order.
pub fn bfs_spanning_tree(g: &Graph, root: usize) -> Result<Tree> {
    let n = g.n();
    if root >= n {
        return Err(Error::BadRoot(root));
    }
    let mut seen = vec![false; n];
    let mut edges = Vec::with_capacity(n - 1);
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                edges.push((x, y));
                queue.push_back(y);
            }
        }
    }
    Tree::new(n, edges)
}

/// Uniform spanning tree by loop-erased random walks (Wilson's algorithm).
pub fn random_spanning_tree(g: &Graph, seed: u64) -> Tree {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut in_tree = vec![false; n];
    let mut next = vec![usize::MAX; n];
    in_tree[0] = true;
    for start in 1..n {
        let mut u = start;
        while !in_tree[u] {
            let nb = g.neighbors(u);
            next[u] = nb[rng.gen_range(0..nb.len())];
            u = next[u];
        }
        let mut u = start;
        while !in_tree[u] {
            in_tree[u] = true;
            u = next[u];
        }
    }
    Tree::new(n, (1..n).map(|v| (v, next[v]))).expect("loop-erased walks form a spanning tree")
}

/// Edges whose removal disconnects the graph, as `(min, max)` pairs.
pub fn bridges(g: &Graph) -> HashSet<(usize, usize)> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = HashSet::new();
    let mut timer = 0;
    // (node, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = 0;
    low[0] = 0;
    timer += 1;
    while let Some(&mut (x, p, ref mut i)) = stack.last_mut() {
        let nb = g.neighbors(x);
        if *i < nb.len() {
            let y = nb[*i];
            *i += 1;
            if y == p {
                continue;
            }
            if disc[y] == usize::MAX {
                disc[y] = timer;
                low[y] = timer;
                timer += 1;
                stack.push((y, x, 0));
            } else {
                low[x] = low[x].min(disc[y]);
            }
        } else {
            stack.pop();
            if p != usize::MAX {
                low[p] = low[p].min(low[x]);
                if low[x] > disc[p] {
                    out.insert((p.min(x), p.max(x)));
                }
            }
        }
    }
    out
}

/// Dense effective-resistance solver: a Cholesky factor of `L + J/n`,
/// whose inverse agrees with the Laplacian pseudoinverse on differences.
pub struct ResistanceSolver {
    chol: nalgebra::Cholesky<f64, nalgebra::Dyn>,
    n: usize,
}

impl ResistanceSolver {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n > RESISTANCE_CAP {
            return Err(Error::TooLarge { n, cap: RESISTANCE_CAP });
        }
        let mut m = DMatrix::from_element(n, n, 1.0 / n as f64);
        for &(u, v) in g.edges() {
            m[(u, u)] += 1.0;
            m[(v, v)] += 1.0;
            m[(u, v)] -= 1.0;
            m[(v, u)] -= 1.0;
        }
        let chol = m.cholesky().expect("L + J/n is positive definite for a connected graph");
        Ok(ResistanceSolver { chol, n })
    }

    pub fn resistance(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 0.0;
        }
        let mut b = DVector::zeros(self.n);
        b[i] = 1.0;
        b[j] = -1.0;
        let x = self.chol.solve(&b);
        x[i] - x[j]
    }
}

/// Effective resistance between `i` and `j`.
pub fn effective_resistance(g: &Graph, i: usize, j: usize) -> Result<f64> {
    Ok(ResistanceSolver::new(g)?.resistance(i, j))
}

/// Sum of effective resistances over the φ-edges of `y`. Bridges count
/// exactly 1; the dense solver (capped at [`RESISTANCE_CAP`] nodes) is only
/// set up when some φ-edge lies on a cycle.
pub fn resistance_cutsize(g: &Graph, y: &Labeling) -> Result<f64> {
    y.require_total()?;
    let phi: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| y.get(u) != y.get(v))
        .collect();
    let br = bridges(g);
    let mut total = 0.0;
    let mut solver = None;
    for (u, v) in phi {
        if br.contains(&(u.min(v), u.max(v))) {
            total += 1.0;
        } else {
            if solver.is_none() {
                solver = Some(ResistanceSolver::new(g)?);
            }
            total += solver.as_ref().expect("just built").resistance(u, v);
        }
    }
    Ok(total)
}

/// Spanning tree, selection, prediction and scoring against `y` in one run.
pub fn graph_pipeline(
    g: &Graph,
    spanning: Spanning,
    budget: usize,
    y: &Labeling,
    seed: u64,
) -> Result<ExperimentRecord> {
    y.require_total()?;
    let tree = match spanning {
        Spanning::Bfs => bfs_spanning_tree(g, 0)?,
        Spanning::Random => random_spanning_tree(g, seed),
    };
    let start = Instant::now();
    let picked = select::sel(&tree, budget)?;
    let l_plus = picked.query_set.closure();
    let guess = predict::pred(&tree, l_plus, &y.restrict(l_plus))?;
    let micros = start.elapsed().as_micros();
    let mistakes = predict::mistakes(&guess, y, l_plus)?;
    let tree_cut = crate::cutsize(&tree, y)?;
    let resistance = match resistance_cutsize(g, y) {
        Ok(r) => Some(r),
        Err(Error::TooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    let bounds = psi::psi_star_bounds(&tree, l_plus).ok();
    Ok(ExperimentRecord {
        id: String::new(),
        n: g.n(),
        method: Method::Sel,
        spanning: Some(spanning),
        budget,
        realized: l_plus.len(),
        k: tree_cut,
        cutsize: tree_cut,
        graph_cutsize: Some(g.cutsize(y)?),
        resistance_cutsize: resistance,
        mistakes,
        upsilon: components::upsilon(&tree, l_plus, tree_cut),
        psi_lower: bounds.map(|b| b.0),
        psi_upper: bounds.map(|b| b.1),
        seed,
        micros,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{gen, Label};
    use std::collections::HashMap;

    fn edge_set(t: &Tree) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = t.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e
    }

    #[test]
    fn validation() {
        assert!(matches!(
            Graph::new(3, [(0, 1), (1, 1)]),
            Err(Error::NotAGraph { defect: Defect::SelfLoop, edge: Some((1, 1)) })
        ));
        assert!(matches!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::NotAGraph { defect: Defect::DuplicateEdge, .. })
        ));
        assert!(matches!(
            Graph::new(4, [(0, 1), (2, 3)]),
            Err(Error::NotAGraph { defect: Defect::Disconnected, .. })
        ));
        assert!(Graph::new(1, []).is_ok());
    }

    #[test]
    fn bfs_examples() {
        let k5 = gen::complete_graph(5);
        assert_eq!(edge_set(&bfs_spanning_tree(&k5, 0).unwrap()), edge_set(&Tree::star(5)));
        let t = gen::spider(3, 2);
        assert_eq!(edge_set(&bfs_spanning_tree(&gen::tree_graph(&t), 4).unwrap()), edge_set(&t));
        assert!(matches!(bfs_spanning_tree(&k5, 5), Err(Error::BadRoot(5))));
        // two K4s bridged by (3, 4)
        let mut edges = Vec::new();
        for base in [0, 4] {
            for a in 0..4 {
                for b in a + 1..4 {
                    edges.push((base + a, base + b));
                }
            }
        }
        edges.push((3, 4));
        let g = Graph::new(8, edges).unwrap();
        let t = bfs_spanning_tree(&g, 0).unwrap();
        assert_eq!(t.neighbors(0), &[1, 2, 3]);
        assert_eq!(t.neighbors(4), &[3, 5, 6, 7]);
    }

    #[test]
    fn random_tree_of_tree_is_itself() {
        let t = gen::binary_star(4, 2);
        let g = gen::tree_graph(&t);
        for seed in 0..10 {
            assert_eq!(edge_set(&random_spanning_tree(&g, seed)), edge_set(&t));
        }
    }

    #[test]
    fn triangle_uniform() {
        let g = gen::cycle_graph(3);
        let mut counts = HashMap::new();
        for seed in 0..3000 {
            *counts.entry(edge_set(&random_spanning_tree(&g, seed))).or_insert(0) += 1;
        }
        assert_eq!(counts.len(), 3);
        for &c in counts.values() {
            assert!((c as f64 / 3000.0 - 1.0 / 3.0).abs() < 0.05);
        }
    }

    #[test]
    fn resistance_closed_forms() {
        for n in 3..9 {
            let g = gen::cycle_graph(n);
            let mut y = Labeling::constant(n, Label::Pos);
            y.set(0, Label::Neg);
            // node 0 cuts edges (0,1) and (n-1,0)
            let r = resistance_cutsize(&g, &y).unwrap();
            let want = 2.0 * (n as f64 - 1.0) / n as f64;
            assert!((r - want).abs() < 1e-9 * want);
        }
        let tri = gen::cycle_graph(3);
        assert!((effective_resistance(&tri, 0, 1).unwrap() - 2.0 / 3.0).abs() < 1e-9);
        let t = gen::spider(3, 3);
        let y = crate::adversary::random_labeling(&t, 4, 9).unwrap();
        assert_eq!(resistance_cutsize(&gen::tree_graph(&t), &y).unwrap(), 4.0);
    }

    #[test]
    fn bridges_found() {
        let mut edges = vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)];
        edges.push((5, 6));
        let g = Graph::new(7, edges).unwrap();
        let b = bridges(&g);
        assert_eq!(b, HashSet::from([(2, 3), (5, 6)]));
    }

    #[test]
    fn pipeline_binary_star() {
        let t = gen::binary_star(6, 3);
        let g = gen::tree_graph(&t);
        let y = Labeling::total((0..11).map(|v| if v < 7 { Label::Pos } else { Label::Neg }).collect());
        let rec = graph_pipeline(&g, Spanning::Bfs, 2, &y, 0).unwrap();
        assert_eq!(rec.mistakes, 0);
        assert_eq!(rec.realized, 2);
        assert_eq!(rec.resistance_cutsize, Some(1.0));
        let rec = graph_pipeline(&gen::complete_graph(6), Spanning::Random, 6, &Labeling::from_signs(&[1, -1, 1, -1, 1, -1]), 3).unwrap();
        assert_eq!(rec.mistakes, 0);
    }
}
