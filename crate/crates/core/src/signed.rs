//! Signed edge subsets: the common currency of signed cycles and cocycles.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};
use crate::graph::EdgeId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// An edge subset split into a positive and a negative part.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedEdgeSet {
    positive: BTreeSet<EdgeId>,
    negative: BTreeSet<EdgeId>,
}

impl SignedEdgeSet {
    pub fn new(positive: BTreeSet<EdgeId>, negative: BTreeSet<EdgeId>) -> Result<Self> {
        if let Some(e) = positive.intersection(&negative).next() {
            return Err(Error::Precondition(format!(
                "edge {e} is both positive and negative"
            )));
        }
        Ok(SignedEdgeSet { positive, negative })
    }

    /// Shorthand for tests and examples; panics on overlapping parts.
    pub fn from_ids(positive: &[u32], negative: &[u32]) -> Self {
        Self::new(
            positive.iter().copied().map(EdgeId).collect(),
            negative.iter().copied().map(EdgeId).collect(),
        )
        .expect("positive and negative parts overlap")
    }

    pub(crate) fn from_parts_unchecked(positive: BTreeSet<EdgeId>, negative: BTreeSet<EdgeId>) -> Self {
        debug_assert!(positive.is_disjoint(&negative));
        SignedEdgeSet { positive, negative }
    }

    pub fn positive(&self) -> &BTreeSet<EdgeId> {
        &self.positive
    }

    pub fn negative(&self) -> &BTreeSet<EdgeId> {
        &self.negative
    }

    pub fn support(&self) -> BTreeSet<EdgeId> {
        self.positive.union(&self.negative).copied().collect()
    }

    pub fn len(&self) -> usize {
        self.positive.len() + self.negative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty() && self.negative.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.sign(e).is_some()
    }

    pub fn sign(&self, e: EdgeId) -> Option<Sign> {
        if self.positive.contains(&e) {
            Some(Sign::Positive)
        } else if self.negative.contains(&e) {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    /// Smallest element of the support.
    pub fn smallest(&self) -> Option<EdgeId> {
        match (self.positive.first(), self.negative.first()) {
            (Some(&a), Some(&b)) => Some(a.min(b)),
            (a, b) => a.or(b).copied(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.negative.is_empty()
    }

    /// The same set with every sign flipped.
    pub fn negated(&self) -> Self {
        SignedEdgeSet {
            positive: self.negative.clone(),
            negative: self.positive.clone(),
        }
    }

    /// Normalises the sign so that `e` is positive. Returns `None` if `e` is
    /// not in the support.
    pub fn oriented_by(&self, e: EdgeId) -> Option<Self> {
        match self.sign(e)? {
            Sign::Positive => Some(self.clone()),
            Sign::Negative => Some(self.negated()),
        }
    }

    /// Composition: union of supports, signs of `self` take precedence.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &e in &other.positive {
            if !self.contains(e) {
                out.positive.insert(e);
            }
        }
        for &e in &other.negative {
            if !self.contains(e) {
                out.negative.insert(e);
            }
        }
        out
    }

    /// Removes the given elements from the support.
    pub fn without(&self, removed: &BTreeSet<EdgeId>) -> Self {
        SignedEdgeSet {
            positive: self.positive.difference(removed).copied().collect(),
            negative: self.negative.difference(removed).copied().collect(),
        }
    }

    /// Keeps only the given elements.
    pub fn restricted_to(&self, kept: &BTreeSet<EdgeId>) -> Self {
        SignedEdgeSet {
            positive: self.positive.intersection(kept).copied().collect(),
            negative: self.negative.intersection(kept).copied().collect(),
        }
    }
}

/// Composition of a sequence, left to right.
pub fn compose_all<'a>(sets: impl IntoIterator<Item = &'a SignedEdgeSet>) -> SignedEdgeSet {
    sets.into_iter()
        .fold(SignedEdgeSet::default(), |acc, s| acc.compose(s))
}

/// Orthogonality: the supports are disjoint, or they share both an element
/// of equal sign and an element of opposite sign.
pub fn check_orthogonality(c: &SignedEdgeSet, d: &SignedEdgeSet) -> bool {
    let mut same = false;
    let mut opposite = false;
    let mut meet = false;
    for e in c.positive.iter().chain(&c.negative) {
        if let (Some(x), Some(y)) = (c.sign(*e), d.sign(*e)) {
            meet = true;
            if x == y {
                same = true;
            } else {
                opposite = true;
            }
        }
    }
    !meet || (same && opposite)
}

fn write_part(f: &mut fmt::Formatter<'_>, sign: char, part: &BTreeSet<EdgeId>) -> fmt::Result {
    let body: Vec<String> = part.iter().map(|e| e.to_string()).collect();
    write!(f, "{sign}{{{}}}", body.join(","))
}

impl fmt::Display for SignedEdgeSet {
    /// `+{1,3}/-{2}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_part(f, '+', &self.positive)?;
        f.write_str("/")?;
        write_part(f, '-', &self.negative)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(p: &[u32], n: &[u32]) -> SignedEdgeSet {
        SignedEdgeSet::from_ids(p, n)
    }

    #[test]
    fn rejects_overlap() {
        assert!(SignedEdgeSet::new(crate::graph::ids([1]), crate::graph::ids([1])).is_err());
    }

    #[test]
    fn compose_examples() {
        let x = s(&[1, 4], &[2]);
        assert_eq!(x.compose(&x), x);
        assert_eq!(s(&[1], &[2]).compose(&s(&[2, 3], &[])), s(&[1, 3], &[2]));
    }

    #[test]
    fn orthogonality_examples() {
        assert!(check_orthogonality(&s(&[1, 2], &[]), &s(&[3], &[])));
        assert!(!check_orthogonality(&s(&[1, 2], &[]), &s(&[1], &[3])));
        assert!(check_orthogonality(&s(&[1, 2], &[]), &s(&[1], &[2])));
    }

    #[test]
    fn display() {
        assert_eq!(s(&[4, 6], &[3]).to_string(), "+{4,6}/-{3}");
        assert_eq!(s(&[1, 2, 3], &[]).to_string(), "+{1,2,3}/-{}");
    }

    #[test]
    fn min_and_orientation() {
        let x = s(&[4, 6], &[3]);
        assert_eq!(x.smallest(), Some(EdgeId(3)));
        assert_eq!(x.oriented_by(EdgeId(3)).unwrap(), s(&[3], &[4, 6]));
        assert!(x.oriented_by(EdgeId(9)).is_none());
    }

    fn arb_signed() -> impl Strategy<Value = SignedEdgeSet> {
        proptest::collection::btree_map(1u32..12, any::<bool>(), 0..8).prop_map(|m| {
            let pos = m.iter().filter(|(_, &b)| b).map(|(&k, _)| k).collect::<Vec<_>>();
            let neg = m.iter().filter(|(_, &b)| !b).map(|(&k, _)| k).collect::<Vec<_>>();
            SignedEdgeSet::from_ids(&pos, &neg)
        })
    }

    proptest! {
        #[test]
        fn composition_is_associative(a in arb_signed(), b in arb_signed(), c in arb_signed()) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }

        #[test]
        fn composition_keeps_left_signs(a in arb_signed(), b in arb_signed()) {
            let c = a.compose(&b);
            prop_assert_eq!(c.support(), a.support().union(&b.support()).copied().collect());
            for e in a.support() {
                prop_assert_eq!(c.sign(e), a.sign(e));
            }
        }

        #[test]
        fn orthogonality_is_symmetric_and_negation_invariant(a in arb_signed(), b in arb_signed()) {
            prop_assert_eq!(check_orthogonality(&a, &b), check_orthogonality(&b, &a));
            prop_assert_eq!(check_orthogonality(&a, &b), check_orthogonality(&a.negated(), &b));
        }
    }
}
