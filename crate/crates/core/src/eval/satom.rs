use crate::error::{Error, Result};
use crate::graph::{
    longest_trail_dfs, longest_trail_from, shortest_distances, shortest_path_tree, LocationId,
    Metric, Route, SpatialModel,
};
use crate::logic::SrelFormula;
use crate::map::LocationMap;
use crate::monitor::Monitor;
use crate::resilience::{PairSet, ResiliencePair};
use crate::scalar::Scalar;

use super::{Evaluator, SparvMap};

fn check_bounds<T: Scalar>(d1: T, d2: T) -> Result<()> {
    if d1 >= T::zero() && d1 <= d2 && d2.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInterval(format!(
            "S-atom needs 0 <= d1 <= d2 < inf, got [{d1}, {d2}]"
        )))
    }
}

impl Evaluator {
    /// Resiliency values of `S[d1,d2](phi)` at every location.
    ///
    /// Every location `v` satisfying `phi` is tried as the recovery point:
    /// the recovery distance from each violating start is a shortest route
    /// through violating locations only, and the persistency is the longest
    /// edge-simple route from `v` inside the satisfying component of `v`.
    pub fn eval_satom<T: Scalar>(
        &self,
        model: &SpatialModel<T>,
        d1: T,
        d2: T,
        phi: &SrelFormula<T>,
        metric: Metric,
    ) -> Result<SparvMap<T>> {
        check_bounds(d1, d2)?;
        let truth = self.monitor().check(model, phi)?;
        let mut candidates: Vec<Vec<ResiliencePair<T>>> = vec![Vec::new(); model.len()];
        for v in truth.true_set() {
            let rec = shortest_distances(model, v, metric, |u| u == v || !truth[u])?;
            let per = longest_trail_from(model, v, |u| truth[u], metric, self.edge_budget)?;
            candidates[v.0].push(ResiliencePair::new(d1, per - d2));
            for s in model.locations().filter(|s| !truth[*s] && rec[s.0].is_finite()) {
                candidates[s.0].push(ResiliencePair::new(d1 - rec[s.0], per - d2));
            }
        }
        candidates
            .into_iter()
            .map(|c| PairSet::maxre(std::iter::once(ResiliencePair::bottom()).chain(c)))
            .collect::<Result<Vec<_>>>()
            .map(LocationMap::from_vec)
    }

    fn monitor(&self) -> Monitor {
        Monitor {
            state_budget: self.state_budget,
        }
    }
}

/// A resiliency pair of an S-atom together with a route that realises it.
#[derive(Debug, Clone, PartialEq)]
pub struct SatomWitness<T> {
    pub pair: ResiliencePair<T>,
    /// First location of the route that satisfies the body.
    pub recovery: LocationId,
    pub route: Route,
}

/// Witness routes for every pair in the value of `S[d1,d2](phi)` at `at`,
/// in the value set's order.
///
/// Each route is a shortest violating prefix to the recovery location
/// followed by a longest satisfying trail from it, checked to be edge-simple.
/// The trail search is exhaustive, so components larger than `edge_budget`
/// edges are refused with `BudgetExceeded`.
pub fn satom_witnesses<T: Scalar>(
    model: &SpatialModel<T>,
    d1: T,
    d2: T,
    phi: &SrelFormula<T>,
    metric: Metric,
    at: LocationId,
    edge_budget: usize,
) -> Result<Vec<SatomWitness<T>>> {
    check_bounds(d1, d2)?;
    if !model.contains(at) {
        return Err(Error::UnknownLocation(at.to_string()));
    }
    let truth = Monitor::default().check(model, phi)?;
    let recovery_points: Vec<LocationId> = if truth[at] {
        vec![at]
    } else {
        truth.true_set()
    };
    let mut found = Vec::new();
    for v in recovery_points {
        let tree = shortest_path_tree(model, v, metric, |u| u == v || !truth[u])?;
        let Some(mut prefix) = tree.path_to(at) else {
            continue;
        };
        prefix.reverse();
        let (per, trail) = longest_trail_dfs(model, v, |u| truth[u], metric, edge_budget)?;
        let mut nodes = prefix;
        nodes.extend_from_slice(&trail.nodes()[1..]);
        let route = Route::from_nodes(model, &nodes)?;
        found.push(SatomWitness {
            pair: ResiliencePair::new(d1 - tree.dist[at.0], per - d2),
            recovery: v,
            route,
        });
    }
    if found.is_empty() {
        return Ok(found);
    }
    let best = PairSet::maxre(found.iter().map(|w| w.pair))?;
    Ok(best
        .iter()
        .filter_map(|p| found.iter().find(|w| w.pair == *p).cloned())
        .collect())
}
