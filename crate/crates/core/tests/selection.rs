mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treequery::components::{sigma, upsilon, Components};
use treequery::oracle::for_each_subset;
use treequery::select::{replay, sel, Selector};
use treequery::structure::zero_fork_closure;
use treequery::{gen, Error, NodeSet, Tree};

#[test]
fn path_median() {
    let p5 = Tree::path(5);
    let all = NodeSet::full(5);
    let by_sigma = (0..5).min_by_key(|&v| (sigma(&p5, &all, v).unwrap(), v)).unwrap();
    assert_eq!(sel(&p5, 1).unwrap().query_set.picks(), &[by_sigma]);
    assert_eq!(by_sigma, 2);
}

#[test]
fn binary_star_centers() {
    let r = sel(&gen::binary_star(6, 3), 2).unwrap();
    assert_eq!(r.query_set.picks(), &[0, 7]);
    assert_eq!(r.query_set.closure().as_slice(), &[0, 7]);
}

#[test]
fn line_graph_equal_spacing() {
    // with Q = 2^j - 1 every pick halves a segment, so neighbor distances agree up to 1
    for (n, q) in [(50, 3), (100, 7), (257, 15), (1000, 31), (4096, 63)] {
        let r = sel(&Tree::path(n), q).unwrap();
        let mut picks = r.query_set.picks().to_vec();
        picks.sort_unstable();
        let d: Vec<usize> = picks.windows(2).map(|w| w[1] - w[0]).collect();
        assert!(d.iter().max().unwrap() - d.iter().min().unwrap() <= 1, "n={n} q={q} {d:?}");
    }
    let r = sel(&Tree::path(127), 15).unwrap();
    let mut picks = r.query_set.picks().to_vec();
    picks.sort_unstable();
    assert!(picks.windows(2).all(|w| w[1] - w[0] == 8));
    // other budgets still keep every segment within a factor two of the others
    for (n, q) in [(50, 4), (100, 9), (300, 20)] {
        let r = sel(&Tree::path(n), q).unwrap();
        let mut picks = r.query_set.picks().to_vec();
        picks.sort_unstable();
        let d: Vec<usize> = picks.windows(2).map(|w| w[1] - w[0]).collect();
        assert!(d.iter().max().unwrap() <= &(2 * d.iter().min().unwrap() + 1), "n={n} q={q} {d:?}");
    }
}

#[test]
fn budget_rules() {
    assert!(matches!(sel(&Tree::path(5), 0), Err(Error::BudgetOutOfRange { budget: 0, .. })));
    let r = sel(&Tree::star(6), 99).unwrap();
    assert_eq!(r.query_set.closure().len(), 6);
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    for _ in 0..200 {
        let n = rng.gen_range(1..80);
        let t = gen::random_tree(n, &mut rng);
        let q = rng.gen_range(1..=n);
        let r = sel(&t, q).unwrap();
        let c = r.query_set.closure().len();
        assert!(c == q || c == q + 1, "closure {c} for budget {q}");
        assert_eq!(r.trace.len(), r.query_set.picks().len());
        assert!(r.trace.windows(2).all(|w| w[0].component_size >= w[1].component_size));
    }
}

#[test]
fn replay_examples() {
    let r = replay(&Tree::path(5), &[0, 4]).unwrap();
    assert_eq!(r.query_set.closure().as_slice(), &[0, 4]);
    let spider = gen::spider(3, 2);
    let r = replay(&spider, &[2, 4, 6]).unwrap();
    assert_eq!(r.query_set.closure().as_slice(), &[0, 2, 4, 6]);
    assert_eq!(r.trace[2].fork, Some(0));
    assert_eq!(r.query_set.closure(), &zero_fork_closure(&spider, &set(7, &[2, 4, 6])));
    let r = replay(&Tree::star(5), &[1, 2]).unwrap();
    assert_eq!(r.query_set.closure().as_slice(), &[1, 2]);
    let r = replay(&Tree::path(5), &[0, 4, 2]).unwrap();
    assert!(r.trace.iter().all(|s| s.fork.is_none()));
    assert!(matches!(replay(&Tree::path(5), &[1, 1]), Err(Error::DuplicateNode(1))));
    assert!(matches!(replay(&Tree::path(5), &[7]), Err(Error::BadNodeId { node: 7, n: 5 })));
}

/// Replays a trace from scratch: the picked node must come from a largest
/// remaining component and minimize σ there with the smallest id.
#[test]
fn each_step_is_greedy_and_closure_matches() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..120 {
        let n = rng.gen_range(1..=200);
        let t = gen::random_tree(n, &mut rng);
        let r = sel(&t, rng.gen_range(1..=n)).unwrap();
        let mut picked = NodeSet::empty(n);
        let mut forks = NodeSet::empty(n);
        for s in &r.trace {
            let comps = Components::of(&t, &picked);
            let largest = *comps.sizes().iter().max().unwrap();
            let c = comps.owner(s.node).unwrap();
            assert_eq!(comps.sizes()[c], largest);
            assert_eq!(s.component_size, largest);
            let members = comps.members()[c].clone();
            let comp_set = NodeSet::new(n, members.iter().copied()).unwrap();
            let best = members
                .iter()
                .map(|&v| (sigma(&t, &comp_set, v).unwrap(), v))
                .min()
                .unwrap();
            assert_eq!(best.1, s.node);
            picked.insert(s.node);
            if let Some(f) = s.fork {
                forks.insert(f);
            }
            assert_eq!(picked.union(&forks), zero_fork_closure(&t, &picked));
        }
    }
}

#[test]
fn largest_component_shrinks_harmonically() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..300 {
        let n = rng.gen_range(1..300);
        let t = gen::random_tree(n, &mut rng);
        let r = sel(&t, n).unwrap();
        for s in &r.trace {
            assert!(s.t * s.component_size <= 2 * n);
        }
    }
}

#[test]
fn selected_sets_beat_small_competitors() {
    // Υ(L_SEL, k) ≤ 5 Υ(L, k) for |L| ≤ |L_SEL|/2, and Υ(L_SEL, 1) ≤ Υ(L+, 1)
    // for |L+| ≤ |L_SEL|/2.
    for t in all_trees_up_to(10) {
        let n = t.n();
        for q in 1..=n {
            let l_sel = sel(&t, q).unwrap().query_set.picks_set().clone();
            let sel_u: Vec<usize> = (0..=n).map(|k| upsilon(&t, &l_sel, k)).collect();
            for_each_subset(n, l_sel.len() / 2, |s| {
                let l = NodeSet::new(n, s.iter().copied()).unwrap();
                for k in 0..=n {
                    assert!(sel_u[k] <= 5 * upsilon(&t, &l, k), "k={k} L={s:?}");
                }
                let cl = zero_fork_closure(&t, &l);
                if 2 * cl.len() <= l_sel.len() {
                    assert!(sel_u[1] <= upsilon(&t, &cl, 1), "L={s:?}");
                }
            });
        }
    }
}

#[test]
fn work_is_near_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for q in [8usize, 16, 64] {
        let mut prev = None;
        for n in [4000usize, 8000, 16000] {
            let t = gen::random_tree(n, &mut rng);
            let r = sel(&t, q).unwrap();
            let c = r.work as f64 / (n as f64 * (q as f64).ln());
            assert!(c <= 10.0, "work constant {c} at n={n} q={q}");
            if let Some(p) = prev {
                assert!(r.work as f64 <= 2.5 * p as f64);
            }
            prev = Some(r.work);
        }
    }
}

#[test]
fn selector_steps_match_sel() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..50 {
        let n = rng.gen_range(1..100);
        let t = gen::random_tree(n, &mut rng);
        let mut full = Selector::new(&t, n);
        while full.step().is_some() {}
        assert_eq!(NodeSet::new(n, full.picks().iter().copied()).unwrap(), NodeSet::full(n));
        let q = rng.gen_range(1..=n);
        let r = sel(&t, q).unwrap();
        let mut s = Selector::new(&t, q);
        while s.closure_len() < q {
            s.step().unwrap();
        }
        assert_eq!(r.query_set.picks(), s.picks());
    }
}
