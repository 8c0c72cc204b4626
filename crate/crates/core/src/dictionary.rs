//! The set of solutions discovered so far.
//!
//! Keys are canonical sorted member lists shared with the work queue through
//! reference counting, so each solution is stored once.

use std::collections::BTreeSet;
use std::rc::Rc;
use std::str::FromStr;

use rustc_hash::FxHashSet;

use crate::error::Error;
use crate::graph::VertexId;

pub type SolutionKey = Rc<[VertexId]>;

pub trait Dictionary: Default {
    fn contains(&self, key: &[VertexId]) -> bool;
    /// Inserts `key`; returns `false` if it was already present.
    fn insert(&mut self, key: SolutionKey) -> bool;
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Hash-set dictionary; expected O(k) per lookup.
#[derive(Debug, Default)]
pub struct HashDictionary(FxHashSet<SolutionKey>);

impl Dictionary for HashDictionary {
    fn contains(&self, key: &[VertexId]) -> bool {
        self.0.contains(key)
    }

    fn insert(&mut self, key: SolutionKey) -> bool {
        self.0.insert(key)
    }

    fn len(&self) -> usize {
        self.0.len()
    }
}

/// Ordered dictionary; O(k log |𝒦|) per lookup, matching the comparison-based
/// analysis of the delay bound.
#[derive(Debug, Default)]
pub struct OrderedDictionary(BTreeSet<SolutionKey>);

impl Dictionary for OrderedDictionary {
    fn contains(&self, key: &[VertexId]) -> bool {
        self.0.contains(key)
    }

    fn insert(&mut self, key: SolutionKey) -> bool {
        self.0.insert(key)
    }

    fn len(&self) -> usize {
        self.0.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DictionaryKind {
    #[default]
    Hash,
    Ordered,
}

impl DictionaryKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DictionaryKind::Hash => "hash",
            DictionaryKind::Ordered => "ordered",
        }
    }
}

impl FromStr for DictionaryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "hash" => Ok(DictionaryKind::Hash),
            "ordered" => Ok(DictionaryKind::Ordered),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown dictionary kind '{other}'"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exercise<D: Dictionary>() {
        let mut d = D::default();
        assert!(d.is_empty());
        assert!(d.insert(Rc::from(vec![1, 2, 3])));
        assert!(!d.insert(Rc::from(vec![1, 2, 3])));
        assert!(d.contains(&[1, 2, 3]));
        assert!(!d.contains(&[1, 2, 4]));
        assert_eq!(d.len(), 1);
    }

    #[test]
    fn both_dictionaries_behave_as_sets() {
        exercise::<HashDictionary>();
        exercise::<OrderedDictionary>();
    }
}
