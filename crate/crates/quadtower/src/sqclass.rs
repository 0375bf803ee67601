//! F2 linear algebra over labeled square-class generators.
//!
//! A square class is encoded by its support: the set of generator labels that
//! appear with odd multiplicity. Addition is symmetric difference, the empty
//! support is the class of 1. Labels are opaque canonical strings produced by
//! the owning module; this module never interprets them.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

/// A square class as an F2 vector over opaque generator labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SquareClassVector {
    support: BTreeSet<String>,
}

impl SquareClassVector {
    /// The class of 1 (empty support).
    pub fn identity() -> Self {
        SquareClassVector {
            support: BTreeSet::new(),
        }
    }

    pub fn from_labels<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        // duplicate labels cancel in pairs
        let mut support = BTreeSet::new();
        for l in labels {
            let l = l.into();
            if !support.remove(&l) {
                support.insert(l);
            }
        }
        SquareClassVector { support }
    }

    pub fn single(label: impl Into<String>) -> Self {
        SquareClassVector::from_labels([label.into()])
    }

    pub fn is_identity(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &str> {
        self.support.iter().map(|s| s.as_str())
    }

    pub fn contains(&self, label: &str) -> bool {
        self.support.contains(label)
    }

    /// F2 sum: symmetric difference of supports.
    pub fn add(&self, other: &SquareClassVector) -> SquareClassVector {
        let support = self
            .support
            .symmetric_difference(&other.support)
            .cloned()
            .collect();
        SquareClassVector { support }
    }

    /// Pivot label: the lexicographically smallest label in the support.
    fn pivot(&self) -> Option<&String> {
        self.support.iter().next()
    }
}

impl fmt::Display for SquareClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "[1]");
        }
        let labels: Vec<&str> = self.support.iter().map(|s| s.as_str()).collect();
        write!(f, "[{}]", labels.join("*"))
    }
}

/// Result of inserting a vector into a span.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Independence {
    Independent,
    Dependent,
}

/// Outcome of an intersection test between two spans.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Intersection {
    Trivial,
    /// A nonzero class lying in both spans.
    Witness(SquareClassVector),
}

/// An F2 subspace in reduced echelon form: each basis vector owns a pivot
/// label appearing in no other basis vector, and the basis is sorted by pivot.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SquareClassSpace {
    basis: Vec<SquareClassVector>,
}

impl SquareClassSpace {
    pub fn new() -> Self {
        SquareClassSpace::default()
    }

    pub fn from_vectors<I>(vectors: I) -> Self
    where
        I: IntoIterator<Item = SquareClassVector>,
    {
        let mut space = SquareClassSpace::new();
        for v in vectors {
            let (next, _) = space.insert_and_test_independent(&v);
            space = next;
        }
        space
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SquareClassVector] {
        &self.basis
    }

    /// Enlarge the span by `v`, reporting whether `v` was new.
    pub fn insert_and_test_independent(
        &self,
        v: &SquareClassVector,
    ) -> (SquareClassSpace, Independence) {
        let r = self.full_reduce(v);
        if r.is_identity() {
            return (self.clone(), Independence::Dependent);
        }
        let pivot = r.pivot().cloned().expect("nonzero residual has a pivot");
        // back-reduce existing basis vectors containing the new pivot
        let mut basis: Vec<SquareClassVector> = self
            .basis
            .iter()
            .map(|b| if b.contains(&pivot) { b.add(&r) } else { b.clone() })
            .collect();
        basis.push(r);
        basis.sort_by(|a, b| a.pivot().cmp(&b.pivot()));
        (SquareClassSpace { basis }, Independence::Independent)
    }

    /// Fully reduce `v` by every basis vector whose pivot occurs in it.
    fn full_reduce(&self, v: &SquareClassVector) -> SquareClassVector {
        let mut r = v.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for b in &self.basis {
                if let Some(p) = b.pivot() {
                    if r.contains(p) {
                        r = r.add(b);
                        changed = true;
                    }
                }
            }
        }
        r
    }

    pub fn membership(&self, v: &SquareClassVector) -> bool {
        self.full_reduce(v).is_identity()
    }

    /// Residual of `v` after reduction: identity iff `v` is in the span,
    /// otherwise the part of `v` the span cannot account for.
    pub fn residual(&self, v: &SquareClassVector) -> SquareClassVector {
        self.full_reduce(v)
    }

    pub fn elements(&self) -> impl Iterator<Item = SquareClassVector> + '_ {
        (0..1usize << self.basis.len()).map(move |mask| {
            let mut v = SquareClassVector::identity();
            for (i, b) in self.basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v = v.add(b);
                }
            }
            v
        })
    }

    /// Test whether two spans intersect only in the zero class.
    ///
    /// Inserts both bases into a joint span while tracking which combination
    /// of this space's basis vectors each reduction used; a dependency among
    /// the stacked bases yields a nonzero class in both spans.
    pub fn intersection_trivial(&self, other: &SquareClassSpace) -> Intersection {
        // tracked vector: (current residual, combination over self's basis)
        let mut stacked: Vec<(SquareClassVector, SquareClassVector)> = Vec::new();
        for b in &self.basis {
            Self::tracked_insert(&mut stacked, b.clone(), b.clone());
        }
        for b in &other.basis {
            if let Some(witness) =
                Self::tracked_insert(&mut stacked, b.clone(), SquareClassVector::identity())
            {
                return Intersection::Witness(witness);
            }
        }
        Intersection::Trivial
    }

    /// Insert `(v, combo)` into a tracked echelon list. Returns the tracked
    /// combination if `v` reduced to zero (a dependency).
    fn tracked_insert(
        stacked: &mut Vec<(SquareClassVector, SquareClassVector)>,
        v: SquareClassVector,
        combo: SquareClassVector,
    ) -> Option<SquareClassVector> {
        let mut r = v;
        let mut c = combo;
        let mut changed = true;
        while changed {
            changed = false;
            for (b, bc) in stacked.iter() {
                if let Some(p) = b.pivot() {
                    if r.contains(p) {
                        r = r.add(b);
                        c = c.add(bc);
                        changed = true;
                    }
                }
            }
        }
        if r.is_identity() {
            // dependency: combination of self-basis vectors equals a
            // combination of other-basis vectors; c is that common class
            Some(c)
        } else {
            stacked.push((r, c));
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(labels: &[&str]) -> SquareClassVector {
        SquareClassVector::from_labels(labels.iter().copied())
    }

    #[test]
    fn insert_dependent_product() {
        let space = SquareClassSpace::from_vectors([v(&["2"]), v(&["3"])]);
        let (_, flag) = space.insert_and_test_independent(&v(&["2", "3"]));
        assert_eq!(flag, Independence::Dependent);
    }

    #[test]
    fn insert_independent_new_pivot() {
        let space = SquareClassSpace::from_vectors([v(&["2"]), v(&["3"])]);
        let (next, flag) = space.insert_and_test_independent(&v(&["5"]));
        assert_eq!(flag, Independence::Independent);
        assert_eq!(next.dim(), 3);
    }

    #[test]
    fn identity_is_dependent_in_empty_space() {
        let space = SquareClassSpace::new();
        let (next, flag) = space.insert_and_test_independent(&SquareClassVector::identity());
        assert_eq!(flag, Independence::Dependent);
        assert_eq!(next.dim(), 0);
    }

    #[test]
    fn membership_sum_of_basis() {
        let space = SquareClassSpace::from_vectors([v(&["t-i"]), v(&["t+2i"])]);
        assert!(space.membership(&v(&["t-i", "t+2i"])));
        assert!(!space.membership(&v(&["t+i"])));
        assert!(SquareClassSpace::new().membership(&SquareClassVector::identity()));
    }

    #[test]
    fn intersection_disjoint_pivots() {
        let w = SquareClassSpace::from_vectors([v(&["t-i"]), v(&["t+2i"])]);
        let vv = SquareClassSpace::from_vectors([v(&["t+1"]), v(&["t-2"])]);
        assert_eq!(w.intersection_trivial(&vv), Intersection::Trivial);
    }

    #[test]
    fn intersection_witness() {
        let w = SquareClassSpace::from_vectors([v(&["2"]), v(&["3"])]);
        let vv = SquareClassSpace::from_vectors([v(&["2", "3"]), v(&["5"])]);
        match w.intersection_trivial(&vv) {
            Intersection::Witness(wit) => {
                assert_eq!(wit, v(&["2", "3"]));
                // cross-check by enumerating all elements of W
                assert!(w.elements().any(|e| e == wit));
                assert!(vv.membership(&wit));
            }
            Intersection::Trivial => panic!("expected witness"),
        }
    }

    #[test]
    fn intersection_with_zero_space() {
        let w = SquareClassSpace::new();
        let vv = SquareClassSpace::from_vectors([v(&["2"]), v(&["3"])]);
        assert_eq!(w.intersection_trivial(&vv), Intersection::Trivial);
    }

    #[test]
    fn insert_idempotent() {
        let space = SquareClassSpace::new();
        let (s1, f1) = space.insert_and_test_independent(&v(&["7", "11"]));
        assert_eq!(f1, Independence::Independent);
        let (s2, f2) = s1.insert_and_test_independent(&v(&["7", "11"]));
        assert_eq!(f2, Independence::Dependent);
        assert_eq!(s1, s2);
        assert!(s2.membership(&v(&["7", "11"])));
    }

    #[test]
    fn echelon_pivots_unique() {
        let space = SquareClassSpace::from_vectors([
            v(&["a", "b"]),
            v(&["b", "c"]),
            v(&["a", "c", "d"]),
        ]);
        // every pivot label appears in exactly one basis vector
        for b in space.basis() {
            let p = b.support().next().unwrap().to_owned();
            let count = space.basis().iter().filter(|x| x.contains(&p)).count();
            assert_eq!(count, 1, "pivot {p} shared");
        }
    }
}
