//! Active learning on labeled trees and, through spanning trees, on general
//! graphs.
//!
//! The crate picks query sets with the greedy splitting rule ([`select::sel`]),
//! predicts the remaining labels with a mincut rule over hinge trees
//! ([`predict::pred`]), trades queries against mistakes when a cutsize budget
//! is known ([`budget::sel_star`]), and ships brute-force reference routines
//! ([`oracle`]) that check the mistake bounds on small instances.
//!
//! ```
//! use treequery::{gen, predict, select, Label, Labeling};
//!
//! let tree = gen::binary_star(6, 3);
//! let picked = select::sel(&tree, 2).unwrap();
//! assert_eq!(picked.query_set.picks(), &[0, 7]);
//!
//! // Two-block labeling: the big star is +1, the small one is -1.
//! let truth = Labeling::total((0..tree.n()).map(|v| if v < 7 { Label::Pos } else { Label::Neg }).collect());
//! let seen = truth.restrict(picked.query_set.closure());
//! let guess = predict::pred(&tree, picked.query_set.closure(), &seen).unwrap();
//! assert_eq!(predict::mistakes(&guess, &truth, picked.query_set.closure()).unwrap(), 0);
//! ```

pub mod adversary;
pub mod budget;
pub mod components;
pub mod deque;
mod error;
pub mod gen;
pub mod graphs;
pub mod harness;
pub mod io;
mod labeling;
mod nodeset;
pub mod oracle;
pub mod predict;
pub mod psi;
pub mod select;
pub mod structure;
mod tree;

pub use error::{Defect, Error, Result};
pub use labeling::{cutsize, phi_edges, Label, Labeling};
pub use nodeset::NodeSet;
pub use psi::{PsiStar, Rational};
pub use tree::{build_tree, Tree};
