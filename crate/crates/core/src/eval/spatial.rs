use crate::error::{Error, Result};
use crate::flood::{trail_flood, walk_escape, walk_reach, FloodOps};
use crate::graph::{distance_matrix, DistInterval, Metric, SpatialModel};
use crate::lattice::Lattice;
use crate::map::LocationMap;
use crate::resilience::PairSet;
use crate::scalar::Scalar;

use super::{Evaluator, FloodMode, SparvMap, SweepMode};

fn bounded<T: Scalar>(op: &str, interval: &DistInterval<T>) -> Result<()> {
    if interval.is_bounded() {
        Ok(())
    } else {
        Err(Error::UnboundedInterval(format!("{op} {interval}")))
    }
}

impl Evaluator {
    /// Resiliency values of `psi1 R[interval] psi2` from the values `s1` of
    /// `psi1` and `s2` of `psi2`.
    pub fn eval_reach<T: Scalar>(
        &self,
        model: &SpatialModel<T>,
        metric: Metric,
        interval: &DistInterval<T>,
        s1: &SparvMap<T>,
        s2: &SparvMap<T>,
    ) -> Result<SparvMap<T>> {
        bounded("R", interval)?;
        let out = match self.flood {
            FloodMode::Walk => walk_reach(
                model,
                metric,
                interval,
                s1.values(),
                s2.values(),
                &FloodOps::reach(),
                self.state_budget,
            )?,
            FloodMode::Exact => {
                let mut out = vec![PairSet::bottom(); model.len()];
                trail_flood(
                    model,
                    metric,
                    Some(interval.hi()),
                    |t| s2[t].clone(),
                    |v: &PairSet<T>, p| v.min_union(&s1[p]),
                    |trail| {
                        if interval.contains(trail.length) {
                            let slot = &mut out[trail.start.0];
                            *slot = slot.max_union(trail.value);
                        }
                    },
                    self.state_budget,
                )?;
                out
            }
        };
        Ok(LocationMap::from_vec(out))
    }

    /// Resiliency values of `E[interval] psi1` from the values `s1` of `psi1`.
    ///
    /// The interval constrains the shortest distance between the start and the
    /// end of the route, not the route's own length.
    pub fn eval_escape<T: Scalar>(
        &self,
        model: &SpatialModel<T>,
        metric: Metric,
        interval: &DistInterval<T>,
        s1: &SparvMap<T>,
    ) -> Result<SparvMap<T>> {
        bounded("E", interval)?;
        let out = match self.flood {
            FloodMode::Walk => walk_escape(model, metric, interval, s1.values())?,
            FloodMode::Exact => {
                let dist = distance_matrix(model, metric);
                let mut out = vec![PairSet::bottom(); model.len()];
                trail_flood(
                    model,
                    metric,
                    None,
                    |t| s1[t].clone(),
                    |v: &PairSet<T>, p| v.min_union(&s1[p]),
                    |trail| {
                        if interval.contains(dist[trail.start.0][trail.target.0]) {
                            let slot = &mut out[trail.start.0];
                            *slot = slot.max_union(trail.value);
                        }
                    },
                    self.state_budget,
                )?;
                out
            }
        };
        Ok(LocationMap::from_vec(out))
    }

    /// Resiliency values of `somewhere[interval] psi1` or
    /// `everywhere[interval] psi1`: the best or worst value of `psi1` over
    /// the locations some route reaches at a distance inside the interval.
    ///
    /// Everywhere over an empty set of locations is the top value.
    pub fn eval_sweep<T: Scalar>(
        &self,
        model: &SpatialModel<T>,
        metric: Metric,
        interval: &DistInterval<T>,
        s1: &SparvMap<T>,
        mode: SweepMode,
    ) -> Result<SparvMap<T>> {
        let op = match mode {
            SweepMode::Somewhere => "somewhere",
            SweepMode::Everywhere => "everywhere",
        };
        bounded(op, interval)?;
        let ops: FloodOps<PairSet<T>> = match mode {
            SweepMode::Somewhere => FloodOps {
                along: PairSet::join,
                result: PairSet::join,
                empty: PairSet::bottom(),
            },
            SweepMode::Everywhere => FloodOps {
                along: PairSet::meet,
                result: PairSet::meet,
                empty: PairSet::top(),
            },
        };
        let walk_is_exact = interval.lo() == T::zero();
        let out = if walk_is_exact || self.flood == FloodMode::Walk {
            walk_reach(
                model,
                metric,
                interval,
                s1.values(),
                s1.values(),
                &ops,
                self.state_budget,
            )?
        } else {
            let mut out = vec![ops.empty.clone(); model.len()];
            trail_flood(
                model,
                metric,
                Some(interval.hi()),
                |_| (),
                |_, _| (),
                |trail| {
                    if interval.contains(trail.length) {
                        let slot = &mut out[trail.start.0];
                        *slot = (ops.result)(slot, &s1[trail.target]);
                    }
                },
                self.state_budget,
            )?;
            out
        };
        Ok(LocationMap::from_vec(out))
    }
}
