use std::fmt;

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::tree::Tree;

/// A binary node label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Neg,
    Pos,
}

impl Label {
    pub fn flip(self) -> Label {
        match self {
            Label::Neg => Label::Pos,
            Label::Pos => Label::Neg,
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Label::Neg => -1,
            Label::Pos => 1,
        }
    }

    pub fn from_sign(s: i64) -> Option<Label> {
        match s {
            1 => Some(Label::Pos),
            -1 => Some(Label::Neg),
            _ => None,
        }
    }

    pub fn from_bit(b: bool) -> Label {
        if b {
            Label::Neg
        } else {
            Label::Pos
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Neg => "-1",
            Label::Pos => "+1",
        })
    }
}

/// Total or partial assignment of labels to nodes `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling(Vec<Option<Label>>);

impl Labeling {
    pub fn total(labels: Vec<Label>) -> Self {
        Labeling(labels.into_iter().map(Some).collect())
    }

    pub fn constant(n: usize, label: Label) -> Self {
        Labeling(vec![Some(label); n])
    }

    /// All nodes unknown.
    pub fn unknown(n: usize) -> Self {
        Labeling(vec![None; n])
    }

    pub fn from_options(labels: Vec<Option<Label>>) -> Self {
        Labeling(labels)
    }

    /// Labels from `±1` signs.
    pub fn from_signs(signs: &[i8]) -> Self {
        Labeling(signs.iter().map(|&s| Label::from_sign(s as i64)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<Label> {
        self.0[v]
    }

    /// Label of `v`; panics when unknown.
    pub fn at(&self, v: usize) -> Label {
        self.0[v].unwrap_or_else(|| panic!("node {v} has no label"))
    }

    pub fn set(&mut self, v: usize, label: Label) {
        self.0[v] = Some(label);
    }

    pub fn clear(&mut self, v: usize) {
        self.0[v] = None;
    }

    pub fn is_total(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }

    pub fn require_total(&self) -> Result<()> {
        match self.0.iter().position(Option::is_none) {
            Some(node) => Err(Error::PartialLabeling { node }),
            None => Ok(()),
        }
    }

    /// Nodes carrying a label.
    pub fn domain(&self) -> NodeSet {
        NodeSet::from_mask(self.0.iter().map(Option::is_some).collect())
    }

    /// Copy keeping only the labels of `keep`.
    pub fn restrict(&self, keep: &NodeSet) -> Labeling {
        Labeling(
            self.0
                .iter()
                .enumerate()
                .map(|(v, &l)| if keep.contains(v) { l } else { None })
                .collect(),
        )
    }

    pub fn as_slice(&self) -> &[Option<Label>] {
        &self.0
    }
}

/// Edges whose endpoints carry different labels.
pub fn phi_edges(t: &Tree, y: &Labeling) -> Result<Vec<(usize, usize)>> {
    y.require_total()?;
    Ok(t
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| y.get(u) != y.get(v))
        .collect())
}

/// Number of φ-edges of a total labeling.
pub fn cutsize(t: &Tree, y: &Labeling) -> Result<usize> {
    y.require_total()?;
    Ok(t.edges().iter().filter(|&&(u, v)| y.get(u) != y.get(v)).count())
}
