use crate::error::{Error, Result};

/// A set of node ids drawn from `0..universe`, kept both as a membership
/// mask and as a sorted member list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodeSet {
    mask: Vec<bool>,
    members: Vec<usize>,
}

impl NodeSet {
    pub fn new(universe: usize, nodes: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = vec![false; universe];
        for v in nodes {
            if v >= universe {
                return Err(Error::BadNodeId { node: v, n: universe });
            }
            mask[v] = true;
        }
        Ok(Self::from_mask(mask))
    }

    pub fn empty(universe: usize) -> Self {
        NodeSet {
            mask: vec![false; universe],
            members: Vec::new(),
        }
    }

    pub fn full(universe: usize) -> Self {
        NodeSet {
            mask: vec![true; universe],
            members: (0..universe).collect(),
        }
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(v, &m)| m.then_some(v))
            .collect();
        NodeSet { mask, members }
    }

    /// Set whose members are the bits of `bits` (bit `v` = node `v`).
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        Self::from_mask((0..universe).map(|v| bits >> v & 1 == 1).collect())
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// Members in ascending order.
    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn insert(&mut self, v: usize) {
        if !self.mask[v] {
            self.mask[v] = true;
            let at = self.members.partition_point(|&m| m < v);
            self.members.insert(at, v);
        }
    }

    pub fn union(&self, other: &NodeSet) -> NodeSet {
        Self::from_mask(
            self.mask
                .iter()
                .zip(&other.mask)
                .map(|(&a, &b)| a || b)
                .collect(),
        )
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Complement within the universe.
    pub fn complement(&self) -> NodeSet {
        Self::from_mask(self.mask.iter().map(|&m| !m).collect())
    }
}
