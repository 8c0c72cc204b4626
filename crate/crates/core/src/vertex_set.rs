use std::fmt;

use crate::graph::VertexId;

/// A canonical set of vertices: members are strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    /// Builds a set from arbitrary ids, sorting and removing duplicates.
    pub fn new(mut members: Vec<VertexId>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    /// Wraps an already canonical member list.
    ///
    /// Panics in debug builds if `members` is not strictly ascending.
    pub fn from_sorted(members: Vec<VertexId>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    /// The set with `v` removed (unchanged if `v` is absent).
    pub fn without(&self, v: VertexId) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&u| u != v).collect())
    }

    /// The set with `w` inserted in order.
    pub fn with(&self, w: VertexId) -> VertexSet {
        let mut members = self.0.clone();
        if let Err(pos) = members.binary_search(&w) {
            members.insert(pos, w);
        }
        VertexSet(members)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        )
    }
}

impl From<&[VertexId]> for VertexSet {
    fn from(members: &[VertexId]) -> Self {
        VertexSet::new(members.to_vec())
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl AsRef<[VertexId]> for VertexSet {
    fn as_ref(&self) -> &[VertexId] {
        &self.0
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Inserts `w` into the sorted slice `base`, writing the result into `out`.
pub(crate) fn insert_sorted_into(base: &[VertexId], w: VertexId, out: &mut Vec<VertexId>) {
    out.clear();
    let pos = base.partition_point(|&u| u < w);
    out.extend_from_slice(&base[..pos]);
    out.push(w);
    out.extend_from_slice(&base[pos..]);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_canonicalizes() {
        let s = VertexSet::new(vec![3, 1, 2, 3]);
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert_eq!(s.to_string(), "{1,2,3}");
    }

    #[test]
    fn exchange_keeps_order() {
        let s = VertexSet::new(vec![1, 4, 6]);
        assert_eq!(s.without(4).with(5).as_slice(), &[1, 5, 6]);
        assert_eq!(s.with(0).as_slice(), &[0, 1, 4, 6]);
        assert_eq!(s.with(4), s);

        let mut out = Vec::new();
        insert_sorted_into(&[1, 6], 9, &mut out);
        assert_eq!(out, vec![1, 6, 9]);
        insert_sorted_into(&[], 2, &mut out);
        assert_eq!(out, vec![2]);
    }
}
