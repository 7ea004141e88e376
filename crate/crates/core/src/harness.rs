//! Experiment records, CSV output, sweeps and the command implementations
//! behind the `treequery` binary.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::adversary::{random_labeling, theorem1_labeling, AdaptiveAdversary};
use crate::budget::sel_star;
use crate::components::upsilon;
use crate::error::{Error, Result};
use crate::graphs::{bfs_spanning_tree, random_spanning_tree, resistance_cutsize, Graph, Spanning};
use crate::select::{sel, QuerySet};
use crate::structure::zero_fork_closure;
use crate::{cutsize, io, oracle, predict, psi, Labeling, NodeSet, Rational, Tree};

/// Query selection strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Sel,
    SelStar,
    /// `Q` nodes drawn uniformly, then closed under forks.
    RandomQ,
    /// The `Q` highest-degree nodes, ties to smaller ids, then closed.
    DegreeQ,
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "sel" => Ok(Method::Sel),
            "sel_star" => Ok(Method::SelStar),
            "random_q" => Ok(Method::RandomQ),
            "degree_q" => Ok(Method::DegreeQ),
            _ => Err(format!("unknown method `{s}` (expected sel, sel_star, random_q or degree_q)")),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Sel => "sel",
            Method::SelStar => "sel_star",
            Method::RandomQ => "random_q",
            Method::DegreeQ => "degree_q",
        })
    }
}

/// Source of the true labels in a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adversary {
    /// Coin labels on the `K` largest hinge trees of the realized `L+`.
    Theorem1,
    /// `+1` on every query, coins on the `K/2` largest hinge trees.
    Adaptive,
    /// Exactly `K` uniformly placed φ-edges.
    Random,
}

impl FromStr for Adversary {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "theorem1" => Ok(Adversary::Theorem1),
            "adaptive" => Ok(Adversary::Adaptive),
            "random" => Ok(Adversary::Random),
            _ => Err(format!("unknown adversary `{s}` (expected theorem1, adaptive or random)")),
        }
    }
}

impl fmt::Display for Adversary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Adversary::Theorem1 => "theorem1",
            Adversary::Adaptive => "adaptive",
            Adversary::Random => "random",
        })
    }
}

/// One row of harness output.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRecord {
    pub id: String,
    pub n: usize,
    pub method: Method,
    pub spanning: Option<Spanning>,
    /// Requested budget `Q`; for `sel_star`, the chosen number of picks.
    pub budget: usize,
    /// `|L+|`.
    pub realized: usize,
    pub k: usize,
    /// Φ on the tree the learner ran on.
    pub cutsize: usize,
    /// Φ on the input graph, for graph runs.
    pub graph_cutsize: Option<usize>,
    pub resistance_cutsize: Option<f64>,
    pub mistakes: usize,
    /// `Υ(L+, K)`.
    pub upsilon: usize,
    pub psi_lower: Option<Rational>,
    pub psi_upper: Option<usize>,
    pub seed: u64,
    pub micros: u128,
}

pub const CSV_HEADER: &str = "id,n,method,spanning,budget,realized,k,cutsize,graph_cutsize,resistance_cutsize,mistakes,upsilon,psi_lower,psi_upper,seed,micros";

/// Formats a float with 9 significant digits.
pub fn fmt_float(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0.00000000".into();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let prec = (8 - exp).max(0) as usize;
        let s = format!("{x:.prec$}");
        // rounding may carry into a new leading digit
        let digits = s.chars().filter(|c| c.is_ascii_digit()).collect::<String>();
        if digits.trim_start_matches('0').len() > 9 && prec > 0 {
            let prec = prec - 1;
            return format!("{x:.prec$}");
        }
        s
    } else {
        format!("{x:.8e}")
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(String::new, T::to_string)
}

impl ExperimentRecord {
    pub fn csv_row(&self) -> String {
        [
            self.id.clone(),
            self.n.to_string(),
            self.method.to_string(),
            opt(&self.spanning),
            self.budget.to_string(),
            self.realized.to_string(),
            self.k.to_string(),
            self.cutsize.to_string(),
            opt(&self.graph_cutsize),
            self.resistance_cutsize.map_or_else(String::new, fmt_float),
            self.mistakes.to_string(),
            self.upsilon.to_string(),
            self.psi_lower
                .map_or_else(String::new, |r| fmt_float(*r.numer() as f64 / *r.denom() as f64)),
            opt(&self.psi_upper),
            self.seed.to_string(),
            self.micros.to_string(),
        ]
        .join(",")
    }
}

pub fn to_csv(records: &[ExperimentRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

/// Parses a budget grid: comma-separated items, each `a`, `a-b` or
/// `a..=b` (inclusive), or `all` for `1..=n`.
pub fn parse_grid(grid: &str, n: usize) -> Result<Vec<usize>> {
    let bad = |msg: String| Error::Parse { line: 0, msg };
    let mut out = Vec::new();
    for item in grid.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item == "all" {
            out.extend(1..=n);
            continue;
        }
        let range = item.split_once("..=").or_else(|| item.split_once('-'));
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad(format!("bad budget `{s}`")));
        match range {
            Some((a, b)) => out.extend(num(a)?..=num(b)?),
            None => out.push(num(item)?),
        }
    }
    if out.is_empty() {
        return Err(bad(format!("empty budget grid `{grid}`")));
    }
    Ok(out)
}

/// Query set of a baseline or of the selector for budget `q`.
pub fn choose_queries(t: &Tree, method: Method, q: usize, k: usize, seed: u64) -> Result<QuerySet> {
    let n = t.n();
    if q == 0 && method != Method::SelStar {
        return Err(Error::BudgetOutOfRange { budget: q, max: n });
    }
    let picks: Vec<usize> = match method {
        Method::Sel => return Ok(sel(t, q)?.query_set),
        Method::SelStar => return Ok(sel_star(t, k).query_set),
        Method::RandomQ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            sample(&mut rng, n, q.min(n)).into_vec()
        }
        Method::DegreeQ => {
            let mut by_degree: Vec<usize> = (0..n).collect();
            by_degree.sort_by_key(|&v| (std::cmp::Reverse(t.degree(v)), v));
            by_degree.truncate(q.min(n));
            by_degree
        }
    };
    let set = NodeSet::new(n, picks.iter().copied())?;
    let closure = zero_fork_closure(t, &set);
    let forks: Vec<usize> = closure.iter().filter(|&v| !set.contains(v)).collect();
    Ok(QuerySet::new(n, picks, &forks))
}

/// True labels for one run.
pub fn adversary_labels(t: &Tree, adversary: Adversary, q: &QuerySet, k: usize, seed: u64) -> Result<Labeling> {
    match adversary {
        Adversary::Theorem1 => theorem1_labeling(t, q.closure(), k, seed),
        Adversary::Adaptive => {
            let mut adv = AdaptiveAdversary::new(t, k);
            for &v in q.picks() {
                adv.respond(v)?;
            }
            Ok(adv.finish(seed))
        }
        Adversary::Random => random_labeling(t, k.min(t.n() - 1), seed),
    }
}

/// Where the labels of a sweep come from.
#[derive(Debug, Clone)]
pub enum LabelSource {
    Adversary(Adversary),
    Fixed(Labeling),
}

/// Inputs of a sweep.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub id: String,
    pub methods: Vec<Method>,
    pub budgets: Vec<usize>,
    pub k: usize,
    pub labels: LabelSource,
    pub seed: u64,
    /// Number of seeds per grid point: `seed, seed + 1, ...`.
    pub seeds: usize,
    pub spanning: Spanning,
}

/// The learner's input: a tree, or a graph reduced to spanning trees.
#[derive(Debug, Clone)]
pub enum Input {
    Tree(Tree),
    Graph(Graph),
}

impl Input {
    pub fn n(&self) -> usize {
        match self {
            Input::Tree(t) => t.n(),
            Input::Graph(g) => g.n(),
        }
    }
}

/// Runs one grid point.
pub fn run_point(
    input: &Input,
    cfg: &SweepConfig,
    method: Method,
    budget: usize,
    seed: u64,
) -> Result<ExperimentRecord> {
    let (tree, graph) = match input {
        Input::Tree(t) => (t.clone(), None),
        Input::Graph(g) => {
            let t = match cfg.spanning {
                Spanning::Bfs => bfs_spanning_tree(g, 0)?,
                Spanning::Random => random_spanning_tree(g, seed),
            };
            (t, Some(g))
        }
    };
    let start = Instant::now();
    let q = choose_queries(&tree, method, budget, cfg.k, seed)?;
    let l_plus = q.closure();
    let truth = match &cfg.labels {
        LabelSource::Adversary(a) => adversary_labels(&tree, *a, &q, cfg.k, seed)?,
        LabelSource::Fixed(y) => y.clone(),
    };
    let mistakes = if l_plus.is_empty() {
        0
    } else {
        let guess = predict::pred(&tree, l_plus, &truth.restrict(l_plus))?;
        predict::mistakes(&guess, &truth, l_plus)?
    };
    let micros = start.elapsed().as_micros();
    let bounds = psi::psi_star_bounds(&tree, l_plus).ok();
    let (graph_cutsize, resistance) = match graph {
        Some(g) => (
            Some(g.cutsize(&truth)?),
            match resistance_cutsize(g, &truth) {
                Ok(r) => Some(r),
                Err(Error::TooLarge { .. }) => None,
                Err(e) => return Err(e),
            },
        ),
        None => (None, None),
    };
    Ok(ExperimentRecord {
        id: cfg.id.clone(),
        n: tree.n(),
        method,
        spanning: graph.map(|_| cfg.spanning),
        budget: if method == Method::SelStar { q.picks().len() } else { budget },
        realized: l_plus.len(),
        k: cfg.k,
        cutsize: cutsize(&tree, &truth)?,
        graph_cutsize,
        resistance_cutsize: resistance,
        mistakes,
        upsilon: upsilon(&tree, l_plus, cfg.k),
        psi_lower: bounds.map(|b| b.0),
        psi_upper: bounds.map(|b| b.1),
        seed,
        micros,
    })
}

/// Runs the full grid in parallel; rows come back in grid order (method,
/// then budget, then seed). `sel_star` ignores the budget grid and runs
/// once per seed.
pub fn sweep(input: &Input, cfg: &SweepConfig) -> Result<Vec<ExperimentRecord>> {
    let mut grid = Vec::new();
    for &m in &cfg.methods {
        let budgets: &[usize] = if m == Method::SelStar { &[0] } else { &cfg.budgets };
        for &b in budgets {
            for s in 0..cfg.seeds.max(1) {
                grid.push((m, b, cfg.seed.wrapping_add(s as u64)));
            }
        }
    }
    grid.par_iter()
        .map(|&(m, b, s)| run_point(input, cfg, m, b, s))
        .collect()
}

/// `t,objective` lines for the SEL* curve.
pub fn curve_csv(t: &Tree, k: usize) -> (usize, String) {
    let r = sel_star(t, k);
    let mut out = String::from("t,objective\n");
    for (i, c) in r.curve.iter().enumerate() {
        out.push_str(&format!("{},{}\n", i + 1, c));
    }
    (r.t_star, out)
}

/// `select`: query-set file for the given budget.
pub fn cmd_select(t: &Tree, budget: usize) -> Result<String> {
    Ok(io::write_query_set(&sel(t, budget)?.query_set))
}

/// `predict`: completed labeling, plus mistakes when a truth is given.
pub fn cmd_predict(
    t: &Tree,
    l_plus: &NodeSet,
    seen: &Labeling,
    truth: Option<&Labeling>,
) -> Result<(String, Option<usize>)> {
    let guess = predict::pred(t, l_plus, seen)?;
    let m = match truth {
        Some(y) => Some(predict::mistakes(&guess, y, l_plus)?),
        None => None,
    };
    Ok((io::write_labels(&guess), m))
}

/// `spanning`: edge list of a spanning tree.
pub fn cmd_spanning(g: &Graph, method: Spanning, seed: u64) -> Result<String> {
    let t = match method {
        Spanning::Bfs => bfs_spanning_tree(g, 0)?,
        Spanning::Random => random_spanning_tree(g, seed),
    };
    Ok(io::write_edge_list(t.n(), t.edges()))
}

/// `verify` on one tree over a list of budgets.
pub fn cmd_verify(t: &Tree, budgets: &[usize], max_k: usize) -> Result<oracle::ChainReport> {
    let reports: Vec<oracle::ChainReport> = budgets
        .par_iter()
        .map(|&b| oracle::verify_chain(t, b, max_k))
        .collect::<Result<_>>()?;
    let mut total = oracle::ChainReport::default();
    for r in reports {
        total.merge(r);
    }
    Ok(total)
}

/// `verify` without a tree: paths P3..P12 and stars S4..S12, budgets 2 and
/// 4, every `k` up to `max_k`.
pub fn verify_suite(max_k: usize) -> Result<oracle::ChainReport> {
    let mut trees: Vec<Tree> = (3..=12).map(Tree::path).collect();
    trees.extend((4..=12).map(Tree::star));
    let reports: Vec<oracle::ChainReport> = trees
        .par_iter()
        .map(|t| cmd_verify(t, &[2, 4], max_k))
        .collect::<Result<_>>()?;
    let mut total = oracle::ChainReport::default();
    for r in reports {
        total.merge(r);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn floats_have_nine_significant_digits() {
        assert_eq!(fmt_float(2.0 / 3.0), "0.666666667");
        assert_eq!(fmt_float(1.0), "1.00000000");
        assert_eq!(fmt_float(123.456), "123.456000");
        assert_eq!(fmt_float(0.0), "0.00000000");
        assert_eq!(fmt_float(9.999999999), "10.0000000");
        assert_eq!(fmt_float(1.5e-7), "1.50000000e-7");
    }

    #[test]
    fn grids() {
        assert_eq!(parse_grid("1-3,7", 9).unwrap(), vec![1, 2, 3, 7]);
        assert_eq!(parse_grid("2..=4", 9).unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_grid("all", 4).unwrap(), vec![1, 2, 3, 4]);
        assert!(parse_grid("x", 4).is_err());
    }

    #[test]
    fn sweep_rows_in_grid_order() {
        let t = Tree::path(9);
        let cfg = SweepConfig {
            id: "p9".into(),
            methods: vec![Method::Sel],
            budgets: (1..=9).collect(),
            k: 2,
            labels: LabelSource::Adversary(Adversary::Random),
            seed: 5,
            seeds: 1,
            spanning: Spanning::Bfs,
        };
        let rows = sweep(&Input::Tree(t), &cfg).unwrap();
        assert_eq!(rows.len(), 9);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.budget, i + 1);
            assert!(r.realized <= r.budget + 1);
            assert!(r.mistakes <= r.n - r.realized);
            assert_eq!(r.cutsize, 2);
        }
        let again = sweep(&Input::Tree(Tree::path(9)), &cfg).unwrap();
        let strip = |v: &[ExperimentRecord]| v.iter().map(|r| ExperimentRecord { micros: 0, ..r.clone() }).collect::<Vec<_>>();
        assert_eq!(strip(&rows), strip(&again));
    }

    #[test]
    fn baselines_are_closed() {
        let t = gen::spider(4, 2);
        for m in [Method::RandomQ, Method::DegreeQ] {
            let q = choose_queries(&t, m, 3, 1, 7).unwrap();
            assert_eq!(q.picks().len(), 3);
            assert!(crate::structure::is_zero_forked(&t, q.closure()));
        }
        let q = choose_queries(&t, Method::DegreeQ, 1, 1, 0).unwrap();
        assert_eq!(q.picks(), &[0]);
    }

    #[test]
    fn csv_shape() {
        let t = gen::binary_star(6, 3);
        let cfg = SweepConfig {
            id: "bs".into(),
            methods: vec![Method::Sel, Method::SelStar],
            budgets: vec![2],
            k: 2,
            labels: LabelSource::Adversary(Adversary::Theorem1),
            seed: 0,
            seeds: 2,
            spanning: Spanning::Bfs,
        };
        let rows = sweep(&Input::Tree(t), &cfg).unwrap();
        let csv = to_csv(&rows);
        let cols = CSV_HEADER.split(',').count();
        for line in csv.lines() {
            assert_eq!(line.split(',').count(), cols);
        }
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[2].method, Method::SelStar);
        assert_eq!(rows[2].budget, 2);
    }
}
