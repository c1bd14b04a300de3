use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("edge {edge} is out of range for a graph with {universe} edges")]
pub struct EdgeOutOfRange {
    pub edge: usize,
    pub universe: usize,
}

/// A set of edge ids of one fixed host graph.
///
/// Primal and dual share edge ids, so the same `EdgeSet` names both `X` and
/// its dual image `X*`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    mask: Vec<bool>,
}

impl EdgeSet {
    pub fn empty(universe: usize) -> Self {
        EdgeSet { mask: vec![false; universe] }
    }

    pub fn new<I>(universe: usize, ids: I) -> Result<Self, EdgeOutOfRange>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = EdgeSet::empty(universe);
        for edge in ids {
            if edge >= universe {
                return Err(EdgeOutOfRange { edge, universe });
            }
            set.mask[edge] = true;
        }
        Ok(set)
    }

    pub fn from_predicate(universe: usize, pred: impl Fn(usize) -> bool) -> Self {
        EdgeSet { mask: (0..universe).map(pred).collect() }
    }

    /// Decodes the low `universe` bits of `bits` (bit `i` is edge `i`).
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        debug_assert!(universe <= 64);
        Self::from_predicate(universe, |e| bits >> e & 1 == 1)
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.mask.get(edge).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, edge: usize) {
        self.mask[edge] = true;
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter().enumerate().filter(|(_, &b)| b).map(|(e, _)| e)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        EdgeSet { mask: self.mask.iter().map(|&b| !b).collect() }
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(EdgeSet::new(3, [0, 3]), Err(EdgeOutOfRange { edge: 3, universe: 3 }));
    }

    #[test]
    fn bits_and_iteration() {
        let s = EdgeSet::from_bits(5, 0b10110);
        assert_eq!(s.to_vec(), vec![1, 2, 4]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.complement().to_vec(), vec![0, 3]);
        assert!(!s.contains(9));
    }
}
