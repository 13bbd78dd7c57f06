//! Resiliency values of resiliency specifications.
//!
//! S-atoms are evaluated by combining shortest recovery routes with longest
//! persistency trails. Reach and escape are evaluated by flooding over
//! edge-simple routes by default; [`FloodMode::Walk`] floods walks instead,
//! which is cheaper but can both invent values from routes that reuse an edge
//! and lose values when alternatives are merged early.

mod satom;
mod spatial;

use std::str::FromStr;

use crate::error::Result;
use crate::flood::DEFAULT_STATE_BUDGET;
use crate::graph::{DistInterval, Metric, SpatialModel, DEFAULT_EDGE_BUDGET};
#[cfg(test)]
use crate::graph::LocationId;
#[cfg(test)]
use crate::lattice::Lattice;
use crate::logic::{SparsFormula, SrelFormula};
use crate::map::LocationMap;
use crate::resilience::PairSet;
use crate::scalar::Scalar;

pub use satom::{satom_witnesses, SatomWitness};

/// Per-location resiliency value sets.
pub type SparvMap<T> = LocationMap<PairSet<T>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FloodMode {
    /// Track used edges so only edge-simple routes contribute.
    #[default]
    Exact,
    /// Flood walks and merge values at equal location and distance.
    Walk,
}

impl FromStr for FloodMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exact" => Ok(FloodMode::Exact),
            "walk" => Ok(FloodMode::Walk),
            other => Err(format!("unknown flood mode '{other}' (expected exact or walk)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Somewhere,
    Everywhere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Evaluator {
    /// Largest satisfying component searched exhaustively for persistency.
    pub edge_budget: usize,
    pub flood: FloodMode,
    /// Cap on flooding states per spatial operator.
    pub state_budget: usize,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator {
            edge_budget: DEFAULT_EDGE_BUDGET,
            flood: FloodMode::Exact,
            state_budget: DEFAULT_STATE_BUDGET,
        }
    }
}

impl Evaluator {
    pub fn evaluate<T: Scalar>(
        &self,
        model: &SpatialModel<T>,
        formula: &SparsFormula<T>,
    ) -> Result<SparvMap<T>> {
        match formula {
            SparsFormula::SAtom {
                d1,
                d2,
                metric,
                body,
            } => self.eval_satom(model, *d1, *d2, body, *metric),
            SparsFormula::Not(c) => Ok(self.evaluate(model, c)?.map(PairSet::negate)),
            SparsFormula::And(l, r) => {
                let (a, b) = (self.evaluate(model, l)?, self.evaluate(model, r)?);
                Ok(zip_with(&a, &b, PairSet::min_union))
            }
            SparsFormula::Or(l, r) => {
                let (a, b) = (self.evaluate(model, l)?, self.evaluate(model, r)?);
                Ok(zip_with(&a, &b, PairSet::max_union))
            }
            SparsFormula::Reach {
                left,
                interval,
                metric,
                right,
            } => {
                let s1 = self.evaluate(model, left)?;
                let s2 = self.evaluate(model, right)?;
                self.eval_reach(model, *metric, interval, &s1, &s2)
            }
            SparsFormula::Escape {
                interval,
                metric,
                child,
            } => {
                let s1 = self.evaluate(model, child)?;
                self.eval_escape(model, *metric, interval, &s1)
            }
            SparsFormula::Somewhere {
                interval,
                metric,
                child,
            } => {
                let s1 = self.evaluate(model, child)?;
                self.eval_sweep(model, *metric, interval, &s1, SweepMode::Somewhere)
            }
            SparsFormula::Everywhere {
                interval,
                metric,
                child,
            } => {
                let s1 = self.evaluate(model, child)?;
                self.eval_sweep(model, *metric, interval, &s1, SweepMode::Everywhere)
            }
        }
    }
}

fn zip_with<T: Scalar>(
    a: &SparvMap<T>,
    b: &SparvMap<T>,
    f: fn(&PairSet<T>, &PairSet<T>) -> PairSet<T>,
) -> SparvMap<T> {
    LocationMap::from_vec(a.values().iter().zip(b.values()).map(|(x, y)| f(x, y)).collect())
}

/// Resiliency values of `formula` at every location, with default settings.
pub fn evaluate<T: Scalar>(model: &SpatialModel<T>, formula: &SparsFormula<T>) -> Result<SparvMap<T>> {
    Evaluator::default().evaluate(model, formula)
}

/// [`Evaluator::eval_satom`] with default settings.
pub fn eval_satom<T: Scalar>(
    model: &SpatialModel<T>,
    d1: T,
    d2: T,
    phi: &SrelFormula<T>,
    metric: Metric,
) -> Result<SparvMap<T>> {
    Evaluator::default().eval_satom(model, d1, d2, phi, metric)
}

/// [`Evaluator::eval_reach`] with default settings.
pub fn eval_reach<T: Scalar>(
    model: &SpatialModel<T>,
    metric: Metric,
    interval: &DistInterval<T>,
    s1: &SparvMap<T>,
    s2: &SparvMap<T>,
) -> Result<SparvMap<T>> {
    Evaluator::default().eval_reach(model, metric, interval, s1, s2)
}

/// [`Evaluator::eval_escape`] with default settings.
pub fn eval_escape<T: Scalar>(
    model: &SpatialModel<T>,
    metric: Metric,
    interval: &DistInterval<T>,
    s1: &SparvMap<T>,
) -> Result<SparvMap<T>> {
    Evaluator::default().eval_escape(model, metric, interval, s1)
}

/// [`Evaluator::eval_sweep`] with default settings.
pub fn eval_sweep<T: Scalar>(
    model: &SpatialModel<T>,
    metric: Metric,
    interval: &DistInterval<T>,
    s1: &SparvMap<T>,
    mode: SweepMode,
) -> Result<SparvMap<T>> {
    Evaluator::default().eval_sweep(model, metric, interval, s1, mode)
}
