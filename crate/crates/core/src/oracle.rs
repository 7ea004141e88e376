//! Brute-force references for small trees.
//!
//! Everything here enumerates labelings or query sets outright and is meant
//! for checking the fast routines and the mistake bounds on desk-scale
//! instances.

use std::fmt;

use crate::adversary::CoinConstruction;
use crate::components::{upsilon, Components};
use crate::error::{Error, Result};
use crate::predict::HingeTags;
use crate::psi::{psi_star_exact, PsiStar};
use crate::structure::{require_zero_forked, zero_fork_closure};
use crate::{budget, select, Label, Labeling, NodeSet, Rational, Tree};

/// Cap for enumerating completions of a labeling.
pub const LABELING_CAP: usize = 22;
/// Cap for enumerating query sets.
pub const QUERY_SET_CAP: usize = 14;
/// Cap for the exhaustive predictor game.
pub const GAME_CAP: usize = 10;
/// Cap for [`verify_chain`].
pub const CHAIN_CAP: usize = 12;

fn cap(t: &Tree, cap: usize) -> Result<()> {
    if t.n() > cap {
        Err(Error::TooLarge { n: t.n(), cap })
    } else {
        Ok(())
    }
}

/// Calls `f` on every subset of `0..n` with at most `max` elements, by size
/// and then lexicographically.
pub fn for_each_subset(n: usize, max: usize, mut f: impl FnMut(&[usize])) {
    for size in 0..=max.min(n) {
        for_each_subset_of_size(n, size, &mut f);
    }
}

#[derive(Debug, Clone)]
pub struct Mincut {
    pub cutsize: usize,
    /// Every completion reaching `cutsize`.
    pub minimizers: Vec<Labeling>,
}

/// Minimum-cutsize completions of `seen`, which must be defined exactly on
/// `l`.
pub fn brute_mincut(t: &Tree, l: &NodeSet, seen: &Labeling) -> Result<Mincut> {
    cap(t, LABELING_CAP)?;
    for v in 0..t.n() {
        if seen.get(v).is_some() != l.contains(v) {
            return Err(Error::LabelSetMismatch { node: v });
        }
    }
    let free: Vec<usize> = l.complement().iter().collect();
    let mut y: Vec<Label> = (0..t.n()).map(|v| seen.get(v).unwrap_or(Label::Pos)).collect();
    let mut best = usize::MAX;
    let mut minimizers = Vec::new();
    for bits in 0u64..1 << free.len() {
        for (i, &v) in free.iter().enumerate() {
            y[v] = Label::from_bit(bits >> i & 1 == 1);
        }
        let cut = t.edges().iter().filter(|&&(u, v)| y[u] != y[v]).count();
        if cut < best {
            best = cut;
            minimizers.clear();
        }
        if cut == best {
            minimizers.push(Labeling::total(y.clone()));
        }
    }
    Ok(Mincut {
        cutsize: best,
        minimizers,
    })
}

/// The lower-bound value `Υ(l+, k) / 2` of the coin construction on the
/// closure of `l`.
pub fn oracle_lb(t: &Tree, l: &NodeSet, k: usize) -> Result<Rational> {
    cap(t, QUERY_SET_CAP)?;
    let closure = zero_fork_closure(t, l);
    Ok(Rational::new(upsilon(t, &closure, k) as u64, 2))
}

/// Expected mistakes on `V \ l` of the best deterministic predictor that
/// sees the labels of `l`, when labels follow the coin construction on the
/// closure of `l`.
pub fn game_value(t: &Tree, l: &NodeSet, k: usize) -> Result<Rational> {
    cap(t, GAME_CAP)?;
    let closure = zero_fork_closure(t, l);
    let c = CoinConstruction::new(t, &closure, k)?;
    let s = c.selected();
    let n = t.n();
    // per observation: per node count of +1 labels, and number of outcomes
    let mut groups: std::collections::HashMap<Vec<Label>, (Vec<u64>, u64)> = Default::default();
    for bits in 0u64..1 << s {
        let signs: Vec<Label> = (0..s).map(|i| Label::from_bit(bits >> i & 1 == 1)).collect();
        let y = c.labeling(Label::Pos, &signs);
        let obs: Vec<Label> = l.iter().map(|v| y.at(v)).collect();
        let entry = groups.entry(obs).or_insert_with(|| (vec![0; n], 0));
        for v in 0..n {
            if y.at(v) == Label::Pos {
                entry.0[v] += 1;
            }
        }
        entry.1 += 1;
    }
    let mut total = 0u64;
    for (pos, count) in groups.values() {
        for v in 0..n {
            if !l.contains(v) {
                total += pos[v].min(count - pos[v]);
            }
        }
    }
    Ok(Rational::new(total, 1 << s))
}

/// Enumerates labelings by their φ-edge sets and predicts each with PRED.
struct Enumerator<'a> {
    tree: &'a Tree,
    tags: Option<HingeTags>,
    l_plus: &'a NodeSet,
    /// Visit order from node 0 with the parent-edge index of each node.
    order: Vec<(usize, usize, usize)>,
    y: Vec<Label>,
    out: Vec<Label>,
    cut: Vec<bool>,
}

impl<'a> Enumerator<'a> {
    fn new(t: &'a Tree, l_plus: &'a NodeSet) -> Result<Self> {
        let n = t.n();
        let tags = if l_plus.len() == n { None } else { Some(HingeTags::new(t, l_plus)?) };
        let mut index = std::collections::HashMap::new();
        for (e, &(u, v)) in t.edges().iter().enumerate() {
            index.insert((u.min(v), u.max(v)), e);
        }
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &z in t.neighbors(x) {
                if !seen[z] {
                    seen[z] = true;
                    order.push((z, x, index[&(x.min(z), x.max(z))]));
                    stack.push(z);
                }
            }
        }
        Ok(Enumerator {
            tree: t,
            tags,
            l_plus,
            order,
            y: vec![Label::Pos; n],
            out: vec![Label::Pos; n],
            cut: vec![false; n.saturating_sub(1)],
        })
    }

    /// Mistakes of PRED on the labeling with φ-edges `edges` and label
    /// `root` at node 0.
    fn mistakes(&mut self, edges: &[usize], root: Label) -> usize {
        let Some(tags) = &self.tags else { return 0 };
        for &e in edges {
            self.cut[e] = true;
        }
        self.y[0] = root;
        for &(z, p, e) in &self.order {
            self.y[z] = if self.cut[e] { self.y[p].flip() } else { self.y[p] };
        }
        for &e in edges {
            self.cut[e] = false;
        }
        tags.predict_into(&self.y, &mut self.out);
        (0..self.y.len())
            .filter(|&v| !self.l_plus.contains(v) && self.y[v] != self.out[v])
            .count()
    }

    fn worst(&mut self, phi: impl Iterator<Item = usize>) -> usize {
        let m = self.tree.n().saturating_sub(1);
        let mut worst = 0;
        for size in phi {
            if size > m {
                break;
            }
            let mut pick = |edges: &[usize]| {
                if edges.len() == size {
                    for root in [Label::Pos, Label::Neg] {
                        worst = worst.max(self.mistakes(edges, root));
                    }
                }
            };
            for_each_subset_of_size(m, size, &mut pick);
        }
        worst
    }
}

fn for_each_subset_of_size(n: usize, size: usize, f: &mut impl FnMut(&[usize])) {
    let mut comb: Vec<usize> = (0..size).collect();
    loop {
        f(&comb);
        let Some(i) = (0..size).rev().find(|&i| comb[i] < n - size + i) else { return };
        comb[i] += 1;
        for j in i + 1..size {
            comb[j] = comb[j - 1] + 1;
        }
    }
}

/// Largest number of PRED mistakes on `V \ l_plus` over all labelings with
/// cutsize at most `k`.
pub fn worst_case_mistakes(t: &Tree, l_plus: &NodeSet, k: usize) -> Result<usize> {
    if l_plus.is_empty() {
        return Err(Error::EmptyQuerySet);
    }
    Ok(Enumerator::new(t, l_plus)?.worst(0..=k))
}

/// Like [`worst_case_mistakes`] over labelings with cutsize exactly `phi`.
pub fn worst_case_mistakes_at(t: &Tree, l_plus: &NodeSet, phi: usize) -> Result<usize> {
    if l_plus.is_empty() {
        return Err(Error::EmptyQuerySet);
    }
    Ok(Enumerator::new(t, l_plus)?.worst(phi..=phi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// Υ(L, k).
    Upsilon(usize),
    /// Ψ*(L); sets covering every node are skipped.
    PsiStar,
}

/// Best objective value found by [`optimal_query_set`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Value {
    Count(usize),
    Psi(PsiStar),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Count(c) => write!(f, "{c}"),
            Value::Psi(p) => write!(f, "{p}"),
        }
    }
}

/// Minimizes `objective` over all query sets of at most `q` nodes. Ties go
/// to the first set by size, then lexicographically.
pub fn optimal_query_set(t: &Tree, q: usize, objective: Objective) -> Result<(NodeSet, Value)> {
    cap(t, QUERY_SET_CAP)?;
    let n = t.n();
    let mut best: Option<(NodeSet, Value)> = None;
    let mut failure = None;
    for_each_subset(n, q, |s| {
        if failure.is_some() {
            return;
        }
        let l = NodeSet::new(n, s.iter().copied()).expect("subset of 0..n");
        let value = match objective {
            Objective::Upsilon(k) => Value::Count(upsilon(t, &l, k)),
            Objective::PsiStar => {
                if l.len() == n {
                    return;
                }
                match psi_star_exact(t, &l) {
                    Ok(p) => Value::Psi(p),
                    Err(e) => {
                        failure = Some(e);
                        return;
                    }
                }
            }
        };
        if best.as_ref().is_none_or(|(_, b)| value < *b) {
            best = Some((l, value));
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(best.expect("the empty set is always a candidate"))
}

/// Ψ* by enumerating every non-empty subset of `V \ l`, together with a
/// smallest maximizer.
pub fn psi_star_exhaustive(t: &Tree, l: &NodeSet) -> Result<(PsiStar, NodeSet)> {
    cap(t, QUERY_SET_CAP + 2)?;
    let n = t.n();
    let free: Vec<usize> = l.complement().iter().collect();
    if free.is_empty() {
        return Err(Error::EmptyComplement);
    }
    let mut best: Option<(PsiStar, usize, u64)> = None;
    let mut inside = vec![false; n];
    for bits in 1u64..1 << free.len() {
        for (i, &v) in free.iter().enumerate() {
            inside[v] = bits >> i & 1 == 1;
        }
        let size = bits.count_ones() as usize;
        let boundary = t.edges().iter().filter(|&&(u, v)| inside[u] != inside[v]).count();
        let value = if boundary == 0 {
            PsiStar::Unbounded
        } else {
            PsiStar::Finite(Rational::new(size as u64, boundary as u64))
        };
        let better = match best {
            None => true,
            Some((b, bs, _)) => value > b || (value == b && size < bs),
        };
        if better {
            best = Some((value, size, bits));
        }
    }
    let (value, _, bits) = best.expect("free is non-empty");
    let set = NodeSet::new(n, free.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &v)| v))?;
    Ok((value, set))
}

/// One failed inequality with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub inequality: &'static str,
    pub competitor: Vec<usize>,
    pub k: usize,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} > {} (k={}, competitor {:?})",
            self.inequality, self.lhs, self.rhs, self.k, self.competitor
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct ChainReport {
    /// Inequalities evaluated.
    pub checks: usize,
    /// Competitor sets examined per chain.
    pub competitors: usize,
    pub violations: Vec<Violation>,
}

impl ChainReport {
    fn check<L: PartialOrd + fmt::Display, R: fmt::Display>(
        &mut self,
        inequality: &'static str,
        competitor: &NodeSet,
        k: usize,
        lhs: L,
        rhs: R,
        ok: bool,
    ) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                inequality,
                competitor: competitor.as_slice().to_vec(),
                k,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: ChainReport) {
        self.checks += other.checks;
        self.competitors += other.competitors;
        self.violations.extend(other.violations);
    }
}

fn psi_or_zero(t: &Tree, l: &NodeSet) -> Result<PsiStar> {
    if l.len() == t.n() {
        Ok(PsiStar::Finite(Rational::from_integer(0)))
    } else {
        psi_star_exact(t, l)
    }
}

fn le_psi(a: PsiStar, b: PsiStar) -> bool {
    a <= b
}

/// Evaluates the mistake-bound chain of the selector with budget `budget`
/// for every `k` in `0..=max_k`, and the Ψ* chain, against every admissible
/// competitor:
///
/// * `m(L+_SEL, k) ≤ Υ(L+_SEL, k) ≤ Υ(L_SEL, k) ≤ 5 Υ(L+, k) ≤ 10 LB(L, k)`
///   for `|L| ≤ |L+_SEL| / 8`;
/// * `m(L+_SEL, y) ≤ 4 Ψ*(L) Φ(y)` at every cutsize up to `max_k`, same
///   competitors;
/// * `Ψ*(L_SEL) ≤ Υ(L_SEL, 1) ≤ Υ(L+, 1) ≤ 2 Ψ*(L+) ≤ 2 Ψ*(L)` for
///   `4 |L| ≤ |L_SEL|`.
pub fn verify_chain(t: &Tree, budget: usize, max_k: usize) -> Result<ChainReport> {
    cap(t, CHAIN_CAP)?;
    let n = t.n();
    let picked = select::sel(t, budget)?;
    let l_sel = picked.query_set.picks_set().clone();
    let l_plus_sel = picked.query_set.closure().clone();
    let mut r = ChainReport::default();
    let none = NodeSet::empty(n);

    let worst: Vec<usize> = (0..=max_k)
        .map(|k| worst_case_mistakes(t, &l_plus_sel, k))
        .collect::<Result<_>>()?;
    let worst_at: Vec<usize> = (0..=max_k)
        .map(|phi| worst_case_mistakes_at(t, &l_plus_sel, phi))
        .collect::<Result<_>>()?;
    for k in 0..=max_k {
        let m = worst[k];
        let u_plus = upsilon(t, &l_plus_sel, k);
        let u_sel = upsilon(t, &l_sel, k);
        r.check("m(L+_SEL,K) <= Y(L+_SEL,K)", &none, k, m, u_plus, m <= u_plus);
        r.check("Y(L+_SEL,K) <= Y(L_SEL,K)", &none, k, u_plus, u_sel, u_plus <= u_sel);
    }

    for_each_subset(n, l_plus_sel.len() / 8, |s| {
        let l = NodeSet::new(n, s.iter().copied()).expect("subset of 0..n");
        let cl = zero_fork_closure(t, &l);
        r.competitors += 1;
        for k in 0..=max_k {
            let u_sel = upsilon(t, &l_sel, k);
            let u_cl = upsilon(t, &cl, k);
            let lb_cl = Rational::new(u_cl as u64, 2);
            let lb = oracle_lb(t, &l, k).expect("size checked");
            r.check("Y(L_SEL,K) <= 5 Y(L+,K)", &l, k, u_sel, 5 * u_cl, u_sel <= 5 * u_cl);
            r.check("5 Y(L+,K) <= 10 LB(L+,K)", &l, k, 5 * u_cl, lb_cl * 10, Rational::from_integer(5 * u_cl as u64) <= lb_cl * 10);
            r.check("LB(L+,K) <= LB(L,K)", &l, k, lb_cl, lb, lb_cl <= lb);
            let m = Rational::from_integer(worst[k] as u64);
            r.check("m(L+_SEL,K) <= 10 LB(L,K)", &l, k, m, lb * 10, m <= lb * 10);
        }
    });

    let mut failure = None;
    for_each_subset(n, l_plus_sel.len() / 8, |s| {
        if failure.is_some() {
            return;
        }
        let l = NodeSet::new(n, s.iter().copied()).expect("subset of 0..n");
        let psi = match psi_or_zero(t, &l) {
            Ok(p) => p,
            Err(e) => {
                failure = Some(e);
                return;
            }
        };
        for (phi, &m) in worst_at.iter().enumerate() {
            let bound = psi.scaled(4 * phi as u64);
            let ok = match psi {
                PsiStar::Unbounded => phi > 0 || m == 0,
                PsiStar::Finite(_) => PsiStar::from_count(m) <= bound,
            };
            r.check("m(L+_SEL,y) <= 4 Psi*(L) Phi(y)", &l, phi, m, bound, ok);
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }

    let psi_sel = psi_or_zero(t, &l_sel)?;
    let y_sel = upsilon(t, &l_sel, 1);
    r.check("Psi*(L_SEL) <= Y(L_SEL,1)", &none, 1, psi_sel, y_sel, le_psi(psi_sel, PsiStar::from_count(y_sel)));
    let mut failure = None;
    for_each_subset(n, l_sel.len() / 4, |s| {
        if failure.is_some() {
            return;
        }
        let l = NodeSet::new(n, s.iter().copied()).expect("subset of 0..n");
        let cl = zero_fork_closure(t, &l);
        let (psi_cl, psi_l) = match (psi_or_zero(t, &cl), psi_or_zero(t, &l)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                failure = Some(e);
                return;
            }
        };
        r.competitors += 1;
        let y_cl = upsilon(t, &cl, 1);
        r.check("Y(L_SEL,1) <= Y(L+,1)", &l, 1, y_sel, y_cl, y_sel <= y_cl);
        let two_psi_cl = psi_cl.scaled(2);
        r.check("Y(L+,1) <= 2 Psi*(L+)", &l, 1, y_cl, two_psi_cl, le_psi(PsiStar::from_count(y_cl), two_psi_cl));
        let two_psi_l = psi_l.scaled(2);
        r.check("2 Psi*(L+) <= 2 Psi*(L)", &l, 1, two_psi_cl, two_psi_l, le_psi(two_psi_cl, two_psi_l));
        r.check("Psi*(L_SEL) <= 2 Psi*(L)", &l, 1, psi_sel, two_psi_l, le_psi(psi_sel, two_psi_l));
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(r)
}

/// Checks `m(L+, k) ≤ 2 LB(L+, k)` for a non-empty 0-forked `l_plus` and
/// every `k` in `0..=max_k`. Returns the violating `k` values.
pub fn twice_lb_violations(t: &Tree, l_plus: &NodeSet, max_k: usize) -> Result<Vec<usize>> {
    require_zero_forked(t, l_plus)?;
    let mut bad = Vec::new();
    for k in 0..=max_k {
        let m = worst_case_mistakes(t, l_plus, k)?;
        let lb = oracle_lb(t, l_plus, k)?;
        if Rational::from_integer(m as u64) > lb * 2 {
            bad.push(k);
        }
    }
    Ok(bad)
}

/// Ratio of SEL*'s queries plus worst-case mistakes to the best possible
/// `|L| + LB(L, k)` over all query sets. `None` when the optimum is 0.
pub fn sel_star_ratio(t: &Tree, k: usize) -> Result<Option<Rational>> {
    cap(t, CHAIN_CAP)?;
    let n = t.n();
    let r = budget::sel_star(t, k);
    let l_plus = r.query_set.closure();
    let m = worst_case_mistakes(t, l_plus, k)?;
    let ours = Rational::from_integer((r.t_star + m) as u64);
    let mut best = Rational::from_integer(n as u64 + 1);
    for bits in 0u64..1 << n {
        let l = NodeSet::from_bits(n, bits);
        let cl = zero_fork_closure(t, &l);
        let v = Rational::from_integer(l.len() as u64) + Rational::new(upsilon(t, &cl, k) as u64, 2);
        if v < best {
            best = v;
        }
    }
    Ok(if best == Rational::from_integer(0) { None } else { Some(ours / best) })
}

/// Whether every node of `set` lies in the same component of `T \ l`.
pub fn within_one_component(t: &Tree, l: &NodeSet, set: &NodeSet) -> bool {
    let comps = Components::of(t, l);
    let mut owners = set.iter().map(|v| comps.owner(v));
    match owners.next() {
        None => true,
        Some(first) => first.is_some() && owners.all(|o| o == first),
    }
}
