//! Recoverability/persistency pairs, resiliency dominance and the
//! `maxre`/`minre` non-dominated set operators.
//!
//! Dominance compares the sign-sums `sign(rec) + sign(per)` first; only pairs
//! in the same sign-sum class are compared by Pareto dominance. Every
//! reduced set is therefore contained in a single sign-sum class.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{sign, Scalar};

/// An `(x_r, x_p)` margin pair. Components may be infinite but never NaN.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResiliencePair<T> {
    /// Recoverability margin: bound minus recovery distance.
    pub rec: T,
    /// Persistency margin: persistence distance minus bound.
    pub per: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Dominates,
    Dominated,
    NonDominated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReduceMode {
    /// Keep pairs not dominated by any other.
    Max,
    /// Keep pairs not dominating any other.
    Min,
}

impl<T: Scalar> ResiliencePair<T> {
    pub fn new(rec: T, per: T) -> Self {
        debug_assert!(!rec.is_nan() && !per.is_nan(), "NaN resilience pair");
        ResiliencePair { rec, per }
    }

    /// `(-inf, -inf)`: no recovery and no persistence.
    pub fn bottom() -> Self {
        Self::new(T::neg_infinity(), T::neg_infinity())
    }

    pub fn top() -> Self {
        Self::new(T::infinity(), T::infinity())
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn sign_sum(&self) -> i8 {
        sign(self.rec) + sign(self.per)
    }

    /// Weak componentwise dominance with `self != other`.
    pub fn pareto_dominates(&self, other: &Self) -> bool {
        self.rec >= other.rec && self.per >= other.per && self != other
    }

    pub fn negated(&self) -> Self {
        Self::new(-self.rec, -self.per)
    }

    /// Both margins non-negative: the verdict rule for a satisfied S-atom.
    pub fn is_satisfying(&self) -> bool {
        self.rec >= T::zero() && self.per >= T::zero()
    }
}

/// Resiliency dominance of `x` over `y`.
pub fn compare_re<T: Scalar>(x: &ResiliencePair<T>, y: &ResiliencePair<T>) -> Dominance {
    let (sx, sy) = (x.sign_sum(), y.sign_sum());
    if sx > sy || (sx == sy && x.pareto_dominates(y)) {
        Dominance::Dominates
    } else if sy > sx || (sx == sy && y.pareto_dominates(x)) {
        Dominance::Dominated
    } else {
        Dominance::NonDominated
    }
}

impl<T: Scalar> fmt::Display for ResiliencePair<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.rec, self.per)
    }
}

/// A non-empty, mutually non-dominated set of pairs in canonical order
/// (descending `rec`, then descending `per`).
#[derive(Debug, Clone, PartialEq)]
pub struct PairSet<T> {
    pairs: Vec<ResiliencePair<T>>,
}

impl<T: Scalar> PairSet<T> {
    pub fn singleton(pair: ResiliencePair<T>) -> Self {
        PairSet { pairs: vec![pair] }
    }

    /// `{(-inf, -inf)}`, the value when no witness exists.
    pub fn bottom() -> Self {
        Self::singleton(ResiliencePair::bottom())
    }

    /// `{(+inf, +inf)}`, the negation of bottom.
    pub fn top() -> Self {
        Self::singleton(ResiliencePair::top())
    }

    /// `maxre` or `minre` of the given pairs.
    pub fn reduce(pairs: impl IntoIterator<Item = ResiliencePair<T>>, mode: ReduceMode) -> Result<Self> {
        let mut all: Vec<_> = pairs.into_iter().collect();
        if all.is_empty() {
            return Err(Error::EmptyInput);
        }
        canonical_sort(&mut all);
        all.dedup();
        let kept: Vec<_> = all
            .iter()
            .filter(|x| {
                !all.iter().any(|y| match mode {
                    ReduceMode::Max => compare_re(y, x) == Dominance::Dominates,
                    ReduceMode::Min => compare_re(*x, y) == Dominance::Dominates,
                })
            })
            .copied()
            .collect();
        Ok(PairSet { pairs: kept })
    }

    pub fn maxre(pairs: impl IntoIterator<Item = ResiliencePair<T>>) -> Result<Self> {
        Self::reduce(pairs, ReduceMode::Max)
    }

    pub fn minre(pairs: impl IntoIterator<Item = ResiliencePair<T>>) -> Result<Self> {
        Self::reduce(pairs, ReduceMode::Min)
    }

    /// `maxre(self ∪ other)`
    pub fn max_union(&self, other: &Self) -> Self {
        Self::maxre(self.iter().chain(other.iter()).copied()).expect("non-empty")
    }

    /// `minre(self ∪ other)`
    pub fn min_union(&self, other: &Self) -> Self {
        Self::minre(self.iter().chain(other.iter()).copied()).expect("non-empty")
    }

    /// Componentwise negation of every pair.
    pub fn negate(&self) -> Self {
        // negation preserves mutual non-domination; the reduction only restores order
        Self::maxre(self.iter().map(ResiliencePair::negated)).expect("non-empty")
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ResiliencePair<T>> {
        self.pairs.iter()
    }

    pub fn pairs(&self) -> &[ResiliencePair<T>] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_bottom(&self) -> bool {
        self.pairs == [ResiliencePair::bottom()]
    }

    /// Some pair has both margins non-negative.
    pub fn is_satisfying(&self) -> bool {
        self.pairs.iter().any(ResiliencePair::is_satisfying)
    }

    /// The shared sign-sum class of the members.
    pub fn sign_sum(&self) -> i8 {
        self.pairs[0].sign_sum()
    }
}

fn canonical_sort<T: Scalar>(pairs: &mut [ResiliencePair<T>]) {
    pairs.sort_by(|x, y| {
        y.rec
            .partial_cmp(&x.rec)
            .unwrap()
            .then_with(|| y.per.partial_cmp(&x.per).unwrap())
    });
}

impl<'a, T> IntoIterator for &'a PairSet<T> {
    type Item = &'a ResiliencePair<T>;
    type IntoIter = std::slice::Iter<'a, ResiliencePair<T>>;

    fn into_iter(self) -> Self::IntoIter {
        self.pairs.iter()
    }
}

impl<T: Scalar> fmt::Display for PairSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r: f64, q: f64) -> ResiliencePair<f64> {
        ResiliencePair::new(r, q)
    }

    #[test]
    fn sign_sum_beats_pareto() {
        assert_eq!(compare_re(&p(1.0, 1.0), &p(-3.0, 2.0)), Dominance::Dominates);
        assert_eq!(compare_re(&p(-3.0, 2.0), &p(1.0, 1.0)), Dominance::Dominated);
    }

    #[test]
    fn incomparable_pairs() {
        assert_eq!(compare_re(&p(1.0, 15.0), &p(2.0, 5.0)), Dominance::NonDominated);
        assert_eq!(compare_re(&p(0.0, 5.0), &p(3.0, 0.0)), Dominance::NonDominated);
        assert_eq!(compare_re(&p(2.0, 2.0), &p(2.0, 2.0)), Dominance::NonDominated);
    }

    #[test]
    fn maxre_drops_lower_sign_class() {
        let s = PairSet::maxre([p(1.0, 15.0), p(2.0, 5.0), p(-349.47, 6555.6)]).unwrap();
        assert_eq!(s.pairs(), &[p(2.0, 5.0), p(1.0, 15.0)]);
    }

    #[test]
    fn minre_collapses_to_worst_recovery() {
        let s = PairSet::minre([p(2.0, 5.0), p(1.0, 15.0), p(9.0, -12.0), p(3.0, 15.0), p(3.0, 5.0)]).unwrap();
        assert_eq!(s.pairs(), &[p(9.0, -12.0)]);
    }

    #[test]
    fn singleton_and_empty() {
        assert_eq!(PairSet::maxre([p(4.0, -1.0)]).unwrap().pairs(), &[p(4.0, -1.0)]);
        assert_eq!(PairSet::<f64>::maxre([]), Err(Error::EmptyInput));
    }

    #[test]
    fn negation() {
        let s = PairSet::maxre([p(1.0, 15.0), p(2.0, 5.0)]).unwrap();
        assert_eq!(s.negate().pairs(), &[p(-1.0, -15.0), p(-2.0, -5.0)]);
        assert_eq!(s.negate().negate(), s);
        assert_eq!(PairSet::<f64>::bottom().negate(), PairSet::top());
    }

    #[test]
    fn bottom_loses_to_any_finite_pair() {
        let s = PairSet::bottom().max_union(&PairSet::singleton(p(-5.0, -7.0)));
        assert_eq!(s.pairs(), &[p(-5.0, -7.0)]);
    }
}
