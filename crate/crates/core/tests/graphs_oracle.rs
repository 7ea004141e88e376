mod common;

use std::collections::HashMap;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treequery::adversary::random_labeling;
use treequery::graphs::{
    bfs_spanning_tree, effective_resistance, graph_pipeline, random_spanning_tree, resistance_cutsize, Graph,
    Spanning,
};
use treequery::oracle::{
    brute_mincut, game_value, optimal_query_set, oracle_lb, verify_chain, Objective, Value,
};
use treequery::psi::PsiStar;
use treequery::{cutsize, gen, Error, Label, Labeling, NodeSet, Rational, Tree};

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * b.abs().max(1.0)
}

#[test]
fn bfs_examples() {
    assert_eq!(edge_set(&bfs_spanning_tree(&gen::complete_graph(5), 0).unwrap()), edge_set(&Tree::star(5)));
    let t = gen::spider(3, 2);
    assert_eq!(edge_set(&bfs_spanning_tree(&gen::tree_graph(&t), 3).unwrap()), edge_set(&t));
    // two 4-cliques joined by the bridge 3-4
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
    let expect = Tree::new(8, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6), (4, 7)]).unwrap();
    assert_eq!(edge_set(&t), edge_set(&expect));
    assert!(matches!(bfs_spanning_tree(&g, 8), Err(Error::BadRoot { .. })));
}

#[test]
fn graph_validation() {
    assert!(matches!(Graph::new(3, [(0, 0)]), Err(Error::NotAGraph { .. })));
    assert!(matches!(Graph::new(3, [(0, 1), (1, 0), (1, 2)]), Err(Error::NotAGraph { .. })));
    assert!(matches!(Graph::new(4, [(0, 1), (2, 3)]), Err(Error::NotAGraph { .. })));
}

#[test]
fn random_spanning_tree_of_tree_is_itself() {
    let mut rng = ChaCha8Rng::seed_from_u64(60);
    for _ in 0..50 {
        let n = rng.gen_range(1..40);
        let t = gen::random_tree(n, &mut rng);
        assert_eq!(edge_set(&random_spanning_tree(&gen::tree_graph(&t), rng.gen())), edge_set(&t));
    }
}

#[test]
fn triangle_spanning_trees_uniform() {
    let g = gen::cycle_graph(3);
    let mut counts: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
    for seed in 0..10_000 {
        let t = random_spanning_tree(&g, seed);
        *counts.entry(edge_set(&t)).or_default() += 1;
    }
    assert_eq!(counts.len(), 3);
    for &c in counts.values() {
        assert!((c as f64 / 10_000.0 - 1.0 / 3.0).abs() <= 0.05);
    }
}

#[test]
fn random_spanning_trees_are_trees_of_the_graph() {
    let g = gen::clique_chain(4, 5, 2);
    for seed in 0..200 {
        let t = random_spanning_tree(&g, seed);
        assert_eq!(t.n(), g.n());
        for &(u, v) in t.edges() {
            assert!(g.neighbors(u).contains(&v));
        }
        assert!(Tree::new(t.n(), t.edges().iter().copied()).is_ok());
    }
}

#[test]
fn resistance_examples() {
    let t = gen::spider(3, 3);
    let y = random_labeling(&t, 4, 9).unwrap();
    assert!(close(resistance_cutsize(&gen::tree_graph(&t), &y).unwrap(), 4.0));
    for n in [3usize, 5, 9, 20] {
        let mut y = Labeling::constant(n, Label::Pos);
        y.set(0, Label::Neg);
        // node 0 alone is cut by two edges
        let r = resistance_cutsize(&gen::cycle_graph(n), &y).unwrap();
        assert!(close(r, 2.0 * (n - 1) as f64 / n as f64), "n={n} r={r}");
        assert!(close(effective_resistance(&gen::cycle_graph(n), 0, 1).unwrap(), (n - 1) as f64 / n as f64));
    }
    assert!(close(effective_resistance(&gen::cycle_graph(3), 0, 1).unwrap(), 2.0 / 3.0));
    assert!(close(effective_resistance(&gen::complete_graph(6), 2, 4).unwrap(), 2.0 / 6.0));
    let mut partial = Labeling::constant(3, Label::Pos);
    partial.clear(1);
    assert!(matches!(resistance_cutsize(&gen::cycle_graph(3), &partial), Err(Error::PartialLabeling { .. })));
}

#[test]
fn resistance_on_spanning_subgraph_equals_cutsize() {
    let g = gen::clique_chain(3, 6, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for seed in 0..30 {
        let t = random_spanning_tree(&g, seed);
        let y = random_labels(&mut rng, t.n());
        let r = resistance_cutsize(&gen::tree_graph(&t), &y).unwrap();
        assert_eq!(r, cutsize(&t, &y).unwrap() as f64);
    }
}

#[test]
fn pipeline_examples() {
    let t = gen::binary_star(6, 3);
    let g = gen::tree_graph(&t);
    let mut y = Labeling::constant(t.n(), Label::Pos);
    for v in 7..t.n() {
        y.set(v, Label::Neg);
    }
    let rec = graph_pipeline(&g, Spanning::Bfs, 2, &y, 0).unwrap();
    assert_eq!(rec.mistakes, 0);
    assert_eq!(rec.realized, 2);
    let g = gen::clique_chain(3, 5, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(62);
    let y = random_labels(&mut rng, g.n());
    for spanning in [Spanning::Bfs, Spanning::Random] {
        let rec = graph_pipeline(&g, spanning, g.n(), &y, 5).unwrap();
        assert_eq!(rec.mistakes, 0);
        assert_eq!(rec.graph_cutsize, Some(g.cutsize(&y).unwrap()));
    }
}

#[test]
fn mincut_oracle_examples() {
    let p5 = Tree::path(5);
    let l = set(5, &[0, 4]);
    let mut seen = Labeling::unknown(5);
    seen.set(0, Label::Pos);
    seen.set(4, Label::Pos);
    let m = brute_mincut(&p5, &l, &seen).unwrap();
    assert_eq!((m.cutsize, m.minimizers.len()), (0, 1));
    seen.set(4, Label::Neg);
    let m = brute_mincut(&p5, &l, &seen).unwrap();
    assert_eq!((m.cutsize, m.minimizers.len()), (1, 4));
    let full = Labeling::from_signs(&[1, -1, -1, 1, 1]);
    let m = brute_mincut(&p5, &NodeSet::full(5), &full).unwrap();
    assert_eq!(m.minimizers, vec![full]);
    assert!(matches!(brute_mincut(&Tree::path(30), &set(30, &[0]), &Labeling::unknown(30)), Err(Error::TooLarge { .. })));
}

#[test]
fn lower_bound_examples() {
    let p5 = Tree::path(5);
    assert_eq!(oracle_lb(&p5, &set(5, &[2]), 1).unwrap(), Rational::from_integer(1));
    assert_eq!(oracle_lb(&p5, &set(5, &[1, 3]), 0).unwrap(), Rational::from_integer(0));
    assert_eq!(oracle_lb(&p5, &set(5, &[0, 4]), 1).unwrap(), Rational::new(3, 2));
}

#[test]
fn game_value_matches_lower_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(63);
    for _ in 0..60 {
        let n = rng.gen_range(2..=10);
        let t = gen::random_tree(n, &mut rng);
        let l = random_closure(&mut rng, &t, n / 2);
        let k = rng.gen_range(0..4);
        assert_eq!(game_value(&t, &l, k).unwrap(), oracle_lb(&t, &l, k).unwrap());
    }
}

#[test]
fn optimal_query_set_examples() {
    let (l, v) = optimal_query_set(&Tree::path(5), 1, Objective::PsiStar).unwrap();
    assert_eq!(l.as_slice(), &[2]);
    assert_eq!(v, Value::Psi(PsiStar::from_count(2)));
    let (l, v) = optimal_query_set(&gen::binary_star(6, 3), 2, Objective::PsiStar).unwrap();
    assert_eq!(l.as_slice(), &[0, 7]);
    assert_eq!(v, Value::Psi(PsiStar::from_count(1)));
    let (l, v) = optimal_query_set(&Tree::path(5), 0, Objective::PsiStar).unwrap();
    assert!(l.is_empty());
    assert_eq!(v, Value::Psi(PsiStar::Unbounded));
    let (l, v) = optimal_query_set(&Tree::path(5), 0, Objective::Upsilon(2)).unwrap();
    assert!(l.is_empty());
    assert_eq!(v, Value::Count(5));
}

#[test]
fn chains_hold_on_paths_and_stars() {
    for n in 3..=12 {
        for budget in [2, 4] {
            let r = verify_chain(&Tree::path(n), budget, 3).unwrap();
            assert!(r.is_clean(), "path {n}: {:?}", r.violations);
        }
    }
    for n in 4..=12 {
        for budget in [2, 4] {
            let r = verify_chain(&Tree::star(n), budget, 3).unwrap();
            assert!(r.is_clean(), "star {n}: {:?}", r.violations);
        }
    }
}

#[test]
fn chains_hold_on_random_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(64);
    for _ in 0..200 {
        let t = gen::random_tree(12, &mut rng);
        for budget in [2, 4] {
            let r = verify_chain(&t, budget, 3).unwrap();
            assert!(r.is_clean(), "{:?}: {:?}", t.edges(), r.violations);
        }
    }
}

#[test]
fn chains_hold_with_nonempty_competitors() {
    let mut rng = ChaCha8Rng::seed_from_u64(65);
    let mut competitors = 0;
    for _ in 0..60 {
        let t = gen::random_tree(12, &mut rng);
        for budget in [8, 12] {
            let r = verify_chain(&t, budget, 4).unwrap();
            competitors += r.competitors;
            assert!(r.is_clean(), "{:?}: {:?}", t.edges(), r.violations);
        }
    }
    assert!(competitors > 120);
}
