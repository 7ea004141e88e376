//! Mincut prediction over hinge trees.
//!
//! Every node of a hinge tree receives one of its connection labels: the
//! only one for 1-hinge trees, the shared one when both connections agree,
//! and otherwise the label of the nearer connection (equal distances go to
//! the connection with the smaller id). This completion has minimum cutsize
//! among all completions of the seen labels.

use crate::error::{Error, Result};
use crate::structure::require_zero_forked;
use crate::{Label, Labeling, NodeSet, Tree};

const NIL: u32 = u32::MAX;

/// Distance tags from the first phase: up to two `(connection, hops)`
/// pairs per non-query node.
#[derive(Debug, Clone)]
pub struct HingeTags {
    l_plus: NodeSet,
    tags: Vec<[(u32, u32); 2]>,
    /// Node visits spent tagging.
    pub visits: usize,
}

impl HingeTags {
    /// First phase: a depth-first visit of each hinge tree from each of its
    /// connection nodes. `l_plus` must be non-empty and 0-forked.
    pub fn new(t: &Tree, l_plus: &NodeSet) -> Result<Self> {
        if l_plus.is_empty() {
            return Err(Error::EmptyQuerySet);
        }
        require_zero_forked(t, l_plus)?;
        let mut tags = vec![[(NIL, NIL); 2]; t.n()];
        let mut visits = 0;
        let mut stack: Vec<(usize, usize, u32)> = Vec::new();
        for c in l_plus.iter() {
            for &u in t.neighbors(c) {
                if l_plus.contains(u) {
                    continue;
                }
                stack.push((u, c, 1));
                while let Some((x, from, d)) = stack.pop() {
                    visits += 1;
                    let slot = if tags[x][0].0 == NIL { 0 } else { 1 };
                    debug_assert_eq!(tags[x][slot].0, NIL, "three connections at node {x}");
                    tags[x][slot] = (c as u32, d);
                    for &y in t.neighbors(x) {
                        if y != from && !l_plus.contains(y) {
                            stack.push((y, x, d + 1));
                        }
                    }
                }
            }
        }
        Ok(HingeTags {
            l_plus: l_plus.clone(),
            tags,
            visits,
        })
    }

    pub fn l_plus(&self) -> &NodeSet {
        &self.l_plus
    }

    /// Connection whose label node `v` inherits.
    pub fn source(&self, v: usize, seen: &Labeling) -> usize {
        let [(c0, d0), (c1, d1)] = self.tags[v];
        if c1 == NIL {
            return c0 as usize;
        }
        let (a, b) = (c0 as usize, c1 as usize);
        if seen.get(a) == seen.get(b) {
            return a.min(b);
        }
        match d0.cmp(&d1) {
            std::cmp::Ordering::Less => a,
            std::cmp::Ordering::Greater => b,
            std::cmp::Ordering::Equal => a.min(b),
        }
    }

    /// Second phase: one pass over all nodes. Returns the completed labeling
    /// and the node visits of this pass.
    pub fn predict(&self, seen: &Labeling) -> Result<(Labeling, usize)> {
        check_domain(&self.l_plus, seen)?;
        let n = seen.len();
        let mut out = Vec::with_capacity(n);
        for v in 0..n {
            let label = match seen.get(v) {
                Some(l) => l,
                None => seen.at(self.source(v, seen)),
            };
            out.push(label);
        }
        Ok((Labeling::total(out), n))
    }

    /// Fills `out` with predictions without allocating. `seen` must be
    /// defined on `l_plus` (unchecked).
    pub fn predict_into(&self, seen: &[Label], out: &mut [Label]) {
        for v in 0..out.len() {
            out[v] = if self.l_plus.contains(v) {
                seen[v]
            } else {
                let [(c0, d0), (c1, d1)] = self.tags[v];
                let (a, b) = (c0 as usize, c1 as usize);
                if c1 == NIL || seen[a] == seen[b] || d0 < d1 || (d0 == d1 && a < b) {
                    seen[a]
                } else {
                    seen[b]
                }
            };
        }
    }
}

fn check_domain(l_plus: &NodeSet, seen: &Labeling) -> Result<()> {
    if seen.len() != l_plus.universe() {
        return Err(Error::LabelSetMismatch { node: seen.len().min(l_plus.universe()) });
    }
    for v in 0..seen.len() {
        if seen.get(v).is_some() != l_plus.contains(v) {
            return Err(Error::LabelSetMismatch { node: v });
        }
    }
    Ok(())
}

/// Predicts all labels from the labels of a 0-forked query set.
///
/// `seen` must be defined exactly on `l_plus`.
pub fn pred(t: &Tree, l_plus: &NodeSet, seen: &Labeling) -> Result<Labeling> {
    pred_with_visits(t, l_plus, seen).map(|(y, _)| y)
}

/// [`pred`] plus the number of node visits across both phases.
pub fn pred_with_visits(t: &Tree, l_plus: &NodeSet, seen: &Labeling) -> Result<(Labeling, usize)> {
    check_domain(l_plus, seen)?;
    if l_plus.len() == t.n() {
        return Ok((seen.clone(), 0));
    }
    let tags = HingeTags::new(t, l_plus)?;
    let (y, second) = tags.predict(seen)?;
    Ok((y, tags.visits + second))
}

/// Mistakes of `predicted` against `truth` outside `exclude`.
pub fn mistakes(predicted: &Labeling, truth: &Labeling, exclude: &NodeSet) -> Result<usize> {
    predicted.require_total()?;
    truth.require_total()?;
    Ok((0..truth.len())
        .filter(|&v| !exclude.contains(v) && predicted.get(v) != truth.get(v))
        .count())
}
