//! Letting the cutsize budget decide how many queries to ask.

use treequery::budget::sel_star;
use treequery::Tree;

fn main() {
    for n in [64, 256, 1024] {
        for k in [1, 4, 16] {
            let r = sel_star(&Tree::path(n), k);
            let root = ((n * k) as f64).sqrt();
            println!(
                "line n={n:<5} K={k:<3} t*={:<4} |L+|={:<4} sqrt(nK)={root:>6.1} objective={}",
                r.t_star,
                r.query_set.closure().len(),
                r.objective
            );
        }
    }

    // the curve is not unimodal in general, so the whole of it is kept
    let r = sel_star(&Tree::path(40), 3);
    let shape: Vec<String> = r.curve.iter().take(12).map(|c| c.to_string()).collect();
    println!("first values of t + upsilon on a 40-node line: {}", shape.join(" "));
}
