use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Distance function applied to edge weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Metric {
    /// The edge weight itself.
    #[default]
    Weight,
    /// Every edge counts as one hop.
    Hops,
}

impl Metric {
    pub fn length<T: Scalar>(self, weight: T) -> T {
        match self {
            Metric::Weight => weight,
            Metric::Hops => T::one(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::Weight => "weight",
            Metric::Hops => "hops",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "weight" => Ok(Metric::Weight),
            "hops" => Ok(Metric::Hops),
            other => Err(format!("unknown metric '{other}' (expected weight or hops)")),
        }
    }
}

/// Closed distance interval `[lo, hi]`, `hi` possibly `+inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistInterval<T> {
    lo: T,
    hi: T,
}

impl<T: Scalar> DistInterval<T> {
    pub fn new(lo: T, hi: T) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo < T::zero() || !lo.is_finite() || lo > hi {
            return Err(Error::InvalidInterval(format!(
                "[{lo}, {hi}] needs 0 <= lo <= hi and finite lo"
            )));
        }
        Ok(DistInterval { lo, hi })
    }

    /// `[0, hi]`
    pub fn up_to(hi: T) -> Result<Self> {
        Self::new(T::zero(), hi)
    }

    pub fn lo(&self) -> T {
        self.lo
    }

    pub fn hi(&self) -> T {
        self.hi
    }

    pub fn is_bounded(&self) -> bool {
        self.hi.is_finite()
    }

    /// Closed-interval membership with [`Scalar::interval_tolerance`] slack on
    /// both ends.
    pub fn contains(&self, d: T) -> bool {
        let tol = T::interval_tolerance();
        d >= self.lo - tol && d <= self.hi + tol
    }

    /// Whether the interval includes distance zero.
    pub fn starts_at_zero(&self) -> bool {
        self.contains(T::zero())
    }
}

impl<T: Scalar> fmt::Display for DistInterval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.hi.is_infinite() {
            write!(f, "[{},inf]", self.lo)
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}
