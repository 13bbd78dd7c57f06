use crate::resilience::PairSet;
use crate::scalar::Scalar;

/// Value domain of the flooding evaluators: Boolean verdicts, real
/// robustness, or resilience pair sets.
///
/// `meet` combines values along a route (conjunction, `min`, `minre`),
/// `join` combines alternative routes (disjunction, `max`, `maxre`).
pub trait Lattice: Clone + PartialEq {
    fn bottom() -> Self;
    fn top() -> Self;
    fn meet(&self, other: &Self) -> Self;
    fn join(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl Lattice for bool {
    fn bottom() -> Self {
        false
    }
    fn top() -> Self {
        true
    }
    fn meet(&self, other: &Self) -> Self {
        *self && *other
    }
    fn join(&self, other: &Self) -> Self {
        *self || *other
    }
    fn negate(&self) -> Self {
        !*self
    }
}

impl<T: Scalar> Lattice for T {
    fn bottom() -> Self {
        T::neg_infinity()
    }
    fn top() -> Self {
        T::infinity()
    }
    fn meet(&self, other: &Self) -> Self {
        self.min(*other)
    }
    fn join(&self, other: &Self) -> Self {
        self.max(*other)
    }
    fn negate(&self) -> Self {
        -*self
    }
}

impl<T: Scalar> Lattice for PairSet<T> {
    fn bottom() -> Self {
        PairSet::bottom()
    }
    fn top() -> Self {
        PairSet::top()
    }
    fn meet(&self, other: &Self) -> Self {
        self.min_union(other)
    }
    fn join(&self, other: &Self) -> Self {
        self.max_union(other)
    }
    fn negate(&self) -> Self {
        PairSet::negate(self)
    }
}
