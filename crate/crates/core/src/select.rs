//! Greedy query selection.
//!
//! At step `t` the selector takes the largest component of `T \ L_{t-1}` and
//! queries the node whose removal leaves the smallest largest piece. The
//! implementation keeps
//!
//! * a pair of directed edges per tree edge, each labelled with the size of
//!   the subtree on its head side, refreshed by one depth-first pass over
//!   the component being split;
//! * a bounded [`PriorityDeque`] of `(component size, representative)` for
//!   the at most `Q` components that can still become largest;
//! * edge directions toward the first pick, so that each new pick walks to
//!   the already-marked Steiner tree and finds the single node that may have
//!   just become a fork.
//!
//! Selecting `Q` queries costs *O*(|V| log Q) time and *O*(|V|) memory.

use std::cmp::Ordering;

use crate::deque::PriorityDeque;
use crate::error::{Error, Result};
use crate::{NodeSet, Tree};

const NIL: u32 = u32::MAX;

/// One selection step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelectionStep {
    /// 1-based step number.
    pub t: usize,
    pub node: usize,
    /// Size of the component the node was picked from.
    pub component_size: usize,
    /// Fork node detected at this step, if any.
    pub fork: Option<usize>,
}

/// Picks in selection order plus the forks they generate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuerySet {
    ordered: Vec<usize>,
    forks: Vec<usize>,
    picks: NodeSet,
    closure: NodeSet,
}

impl QuerySet {
    pub(crate) fn new(n: usize, ordered: Vec<usize>, stored_forks: &[usize]) -> Self {
        let picks = NodeSet::new(n, ordered.iter().copied()).expect("picks are node ids");
        let forks: Vec<usize> = stored_forks
            .iter()
            .copied()
            .filter(|&f| !picks.contains(f))
            .collect();
        let closure = picks.union(&NodeSet::new(n, forks.iter().copied()).expect("forks are node ids"));
        QuerySet {
            ordered,
            forks,
            picks,
            closure,
        }
    }

    /// Picked nodes in selection order.
    pub fn picks(&self) -> &[usize] {
        &self.ordered
    }

    /// Fork nodes that were not picked themselves, in detection order.
    pub fn forks(&self) -> &[usize] {
        &self.forks
    }

    pub fn picks_set(&self) -> &NodeSet {
        &self.picks
    }

    /// `L+`: picks together with their forks.
    pub fn closure(&self) -> &NodeSet {
        &self.closure
    }
}

#[derive(Debug, Clone)]
pub struct SelectionResult {
    pub query_set: QuerySet,
    pub trace: Vec<SelectionStep>,
    /// Node visits spent in depth-first passes and fork walks.
    pub work: usize,
}

/// Deque item. Larger components rank higher; among equal sizes the smaller
/// representative (by original id) ranks higher, so eviction drops the
/// larger id.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Entry {
    size: u32,
    key: u32,
    rep: u32,
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| other.key.cmp(&self.key))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Tree edges as twin directed edges `2e` (u→v) and `2e+1` (v→u), with
/// per-node doubly linked outgoing lists so deleting a node is linear in its
/// degree.
struct SplitForest {
    head: Vec<u32>,
    next: Vec<u32>,
    prev: Vec<u32>,
    first: Vec<u32>,
    /// Nodes on the head side of each directed edge, as of the last pass.
    size: Vec<u32>,
}

impl SplitForest {
    fn new(t: &Tree) -> Self {
        let m = 2 * t.edges().len();
        let mut f = SplitForest {
            head: vec![NIL; m],
            next: vec![NIL; m],
            prev: vec![NIL; m],
            first: vec![NIL; t.n()],
            size: vec![0; m],
        };
        for (e, &(u, v)) in t.edges().iter().enumerate() {
            let d = 2 * e as u32;
            f.head[d as usize] = v as u32;
            f.head[d as usize + 1] = u as u32;
            f.link(u as u32, d);
            f.link(v as u32, d + 1);
        }
        f
    }

    fn link(&mut self, tail: u32, d: u32) {
        let old = self.first[tail as usize];
        self.next[d as usize] = old;
        self.prev[d as usize] = NIL;
        if old != NIL {
            self.prev[old as usize] = d;
        }
        self.first[tail as usize] = d;
    }

    fn unlink(&mut self, tail: u32, d: u32) {
        let (p, nx) = (self.prev[d as usize], self.next[d as usize]);
        if p == NIL {
            self.first[tail as usize] = nx;
        } else {
            self.next[p as usize] = nx;
        }
        if nx != NIL {
            self.prev[nx as usize] = p;
        }
    }

    fn remove_node(&mut self, x: u32) {
        let mut d = self.first[x as usize];
        while d != NIL {
            let y = self.head[d as usize];
            self.unlink(y, d ^ 1);
            d = self.next[d as usize];
        }
        self.first[x as usize] = NIL;
    }

    fn heap_bytes(&self) -> usize {
        (self.head.capacity()
            + self.next.capacity()
            + self.prev.capacity()
            + self.first.capacity()
            + self.size.capacity())
            * std::mem::size_of::<u32>()
    }
}

/// Marks the Steiner tree of the picks (rooted at the first pick) and
/// reports the attachment node of each new pick when it is a new fork.
struct ForkTracker {
    toward: Vec<u32>,
    marked: Vec<bool>,
    in_closure: Vec<bool>,
    started: bool,
}

impl ForkTracker {
    fn new(n: usize) -> Self {
        ForkTracker {
            toward: vec![NIL; n],
            marked: vec![false; n],
            in_closure: vec![false; n],
            started: false,
        }
    }

    fn add(&mut self, t: &Tree, i: usize, work: &mut usize) -> Option<usize> {
        if !self.started {
            self.started = true;
            let mut stack = vec![i];
            self.toward[i] = i as u32;
            while let Some(x) = stack.pop() {
                *work += 1;
                for &y in t.neighbors(x) {
                    if self.toward[y] == NIL {
                        self.toward[y] = x as u32;
                        stack.push(y);
                    }
                }
            }
            self.marked[i] = true;
            self.in_closure[i] = true;
            return None;
        }
        let mut x = i;
        while !self.marked[x] {
            self.marked[x] = true;
            x = self.toward[x] as usize;
            *work += 1;
        }
        self.in_closure[i] = true;
        if x != i && !self.in_closure[x] {
            self.in_closure[x] = true;
            Some(x)
        } else {
            None
        }
    }

    fn heap_bytes(&self) -> usize {
        self.toward.capacity() * 4 + self.marked.capacity() + self.in_closure.capacity()
    }
}

/// Incremental selection state. Each [`Selector::step`] performs one round
/// of the greedy rule; [`sel`] drives it up to a budget.
pub struct Selector<'a> {
    tree: &'a Tree,
    /// The tree relabeled in depth-first preorder from node 0, so that
    /// components occupy nearby memory. Ties are still broken by original
    /// ids.
    inner: Tree,
    to_inner: Vec<u32>,
    to_orig: Vec<u32>,
    forest: SplitForest,
    deque: PriorityDeque<Entry>,
    capacity: usize,
    forks: ForkTracker,
    order: Vec<u32>,
    stack: Vec<u32>,
    parent_edge: Vec<u32>,
    sub: Vec<u32>,
    neighbors: Vec<(u32, u32)>,
    picks: Vec<usize>,
    stored_forks: Vec<usize>,
    closure_len: usize,
    trace: Vec<SelectionStep>,
    work: usize,
}

impl<'a> Selector<'a> {
    /// `capacity` is the query budget `Q` sizing the deque; it must cover
    /// every step that will be taken.
    pub fn new(tree: &'a Tree, capacity: usize) -> Self {
        let n = tree.n();
        assert!(n < NIL as usize, "tree too large for 32-bit node ids");
        let mut to_inner = vec![NIL; n];
        let mut to_orig = Vec::with_capacity(n);
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        let mut stack = vec![(0usize, NIL)];
        to_inner[0] = 0;
        while let Some((x, parent)) = stack.pop() {
            let id = to_orig.len();
            to_orig.push(x as u32);
            to_inner[x] = id as u32;
            if parent != NIL {
                edges.push((parent as usize, id));
            }
            for &y in tree.neighbors(x).iter().rev() {
                if to_inner[y] == NIL {
                    to_inner[y] = 0;
                    stack.push((y, id as u32));
                }
            }
        }
        let inner = Tree::from_valid_edges(n, edges);
        Selector {
            tree,
            forest: SplitForest::new(&inner),
            inner,
            to_inner,
            to_orig,
            deque: PriorityDeque::with_capacity(capacity),
            capacity,
            forks: ForkTracker::new(n),
            order: Vec::new(),
            stack: Vec::new(),
            parent_edge: vec![NIL; n],
            sub: vec![0; n],
            neighbors: Vec::new(),
            picks: Vec::new(),
            stored_forks: Vec::new(),
            closure_len: 0,
            trace: Vec::new(),
            work: 0,
        }
    }

    /// Size of `L+_t` after the steps taken so far.
    pub fn closure_len(&self) -> usize {
        self.closure_len
    }

    pub fn picks(&self) -> &[usize] {
        &self.picks
    }

    pub fn steps(&self) -> usize {
        self.picks.len()
    }

    pub fn work(&self) -> usize {
        self.work
    }

    /// Depth-first pass over the component of `r`, refreshing the directed
    /// edge sizes. Leaves the component in `self.order` (preorder) and
    /// returns its size.
    fn explore(&mut self, r: u32) -> u32 {
        let f = &mut self.forest;
        self.order.clear();
        self.stack.push(r);
        self.parent_edge[r as usize] = NIL;
        while let Some(x) = self.stack.pop() {
            self.order.push(x);
            self.sub[x as usize] = 1;
            let pe = self.parent_edge[x as usize];
            let mut d = f.first[x as usize];
            while d != NIL {
                if d ^ 1 != pe {
                    let y = f.head[d as usize];
                    self.parent_edge[y as usize] = d;
                    self.stack.push(y);
                }
                d = f.next[d as usize];
            }
        }
        let total = self.order.len() as u32;
        for &x in self.order.iter().rev() {
            let pe = self.parent_edge[x as usize];
            if pe != NIL {
                let s = self.sub[x as usize];
                f.size[pe as usize] = s;
                f.size[(pe ^ 1) as usize] = total - s;
                let p = f.head[(pe ^ 1) as usize];
                self.sub[p as usize] += s;
            }
        }
        self.work += total as usize;
        total
    }

    /// σ(component, x) from the sizes left by [`Self::explore`].
    fn sigma(&self, x: u32) -> u32 {
        let f = &self.forest;
        let mut best = 0;
        let mut d = f.first[x as usize];
        while d != NIL {
            best = best.max(f.size[d as usize]);
            d = f.next[d as usize];
        }
        best
    }

    /// Handles one new component created by the current pick.
    fn offer(&mut self, e: Entry) {
        let t = self.picks.len() + 1;
        let len = self.deque.len();
        let bottom = self.deque.peek_min().map_or(u32::MAX, |b| b.size);
        if e.size <= bottom {
            if len < self.capacity.saturating_sub(t) {
                let _ = self.deque.push(e);
            }
            // otherwise the component can never become largest again
        } else if len < self.capacity {
            let _ = self.deque.push(e);
        } else {
            self.deque.pop_min();
            let _ = self.deque.push(e);
        }
    }

    /// One greedy round; `None` once every node has been picked.
    pub fn step(&mut self) -> Option<SelectionStep> {
        let r = if self.picks.is_empty() {
            0
        } else {
            self.deque.pop_max()?.rep
        };
        if self.picks.len() == self.tree.n() {
            return None;
        }
        let component = self.explore(r);
        let mut best = (u32::MAX, u32::MAX);
        for idx in 0..self.order.len() {
            let x = self.order[idx];
            let cand = (self.sigma(x), self.to_orig[x as usize]);
            if cand < best {
                best = cand;
            }
        }
        self.work += self.order.len();
        let i = self.to_inner[best.1 as usize];

        self.neighbors.clear();
        let mut d = self.forest.first[i as usize];
        while d != NIL {
            self.neighbors
                .push((self.forest.head[d as usize], self.forest.size[d as usize]));
            d = self.forest.next[d as usize];
        }
        for k in 0..self.neighbors.len() {
            let (rep, size) = self.neighbors[k];
            let key = self.to_orig[rep as usize];
            self.offer(Entry { size, key, rep });
        }
        Some(self.commit(i, component))
    }

    /// Picks `i` regardless of the greedy rule. Used by [`replay`]; does
    /// not maintain the deque, so do not mix with [`Self::step`].
    fn step_forced(&mut self, i: usize) -> SelectionStep {
        let i = self.to_inner[i];
        let component = self.explore(i);
        self.commit(i, component)
    }

    fn commit(&mut self, i: u32, component: u32) -> SelectionStep {
        self.forest.remove_node(i);
        let was_in = self.forks.in_closure[i as usize];
        let fork = self
            .forks
            .add(&self.inner, i as usize, &mut self.work)
            .map(|j| self.to_orig[j] as usize);
        self.closure_len += usize::from(!was_in) + usize::from(fork.is_some());
        if let Some(j) = fork {
            self.stored_forks.push(j);
        }
        let node = self.to_orig[i as usize] as usize;
        self.picks.push(node);
        let step = SelectionStep {
            t: self.picks.len(),
            node,
            component_size: component as usize,
            fork,
        };
        self.trace.push(step);
        step
    }

    /// Query set after the steps taken so far.
    pub fn query_set(&self) -> QuerySet {
        QuerySet::new(self.tree.n(), self.picks.clone(), &self.stored_forks)
    }

    pub fn finish(self) -> SelectionResult {
        SelectionResult {
            query_set: QuerySet::new(self.tree.n(), self.picks, &self.stored_forks),
            trace: self.trace,
            work: self.work,
        }
    }

    /// Approximate heap footprint of the selection state in bytes.
    pub fn heap_bytes(&self) -> usize {
        self.forest.heap_bytes()
            + self.inner.heap_bytes()
            + (self.to_inner.capacity() + self.to_orig.capacity()) * 4
            + self.deque.heap_bytes()
            + self.forks.heap_bytes()
            + (self.order.capacity() + self.stack.capacity() + self.parent_edge.capacity() + self.sub.capacity()) * 4
            + self.neighbors.capacity() * 8
            + (self.picks.capacity() + self.stored_forks.capacity()) * std::mem::size_of::<usize>()
            + self.trace.capacity() * std::mem::size_of::<SelectionStep>()
    }
}

/// Selects queries until `|L+|` reaches `budget`.
///
/// Since a step can add a pick and a fork together, the returned closure has
/// `budget` or `budget + 1` nodes. Budgets above `n` select every node.
pub fn sel(t: &Tree, budget: usize) -> Result<SelectionResult> {
    Ok(run_sel(t, budget)?.finish())
}

/// Like [`sel`] but hands back the selector, for callers that want to
/// inspect its memory footprint.
pub fn run_sel(t: &Tree, budget: usize) -> Result<Selector<'_>> {
    if budget == 0 {
        return Err(Error::BudgetOutOfRange {
            budget,
            max: t.n(),
        });
    }
    let q = budget.min(t.n());
    let mut s = Selector::new(t, q);
    while s.closure_len() < q && s.step().is_some() {}
    Ok(s)
}

/// Runs the fork bookkeeping of [`sel`] on a caller-chosen pick order.
pub fn replay(t: &Tree, forced_order: &[usize]) -> Result<SelectionResult> {
    let mut seen = vec![false; t.n()];
    for &v in forced_order {
        if v >= t.n() {
            return Err(Error::BadNodeId { node: v, n: t.n() });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::DuplicateNode(v));
        }
    }
    let mut s = Selector::new(t, 0);
    for &v in forced_order {
        s.step_forced(v);
    }
    Ok(s.finish())
}
