//! Reference semantics by exhaustive enumeration of edge-simple routes.
//!
//! Every quantifier over routes and indices is evaluated literally. This is
//! exponential and meant for small models, for cross-checking the monitors
//! and the evaluator.

use crate::error::{Error, Result};
use crate::eval::SparvMap;
use crate::graph::{enumerate_routes, shortest_distances, LocationId, Metric, Route, SpatialModel};
use crate::logic::{eval_atom_at, SparsFormula, SrelFormula};
use crate::map::LocationMap;
use crate::monitor::BoolMap;
use crate::resilience::{PairSet, ResiliencePair};
use crate::scalar::Scalar;

/// Limits on route enumeration; exceeding either aborts with `BudgetExceeded`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_edges_per_route: usize,
    pub max_routes: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_edges_per_route: 12,
            max_routes: 1_000_000,
        }
    }
}

impl OracleBudget {
    pub fn new(max_edges_per_route: usize, max_routes: usize) -> Result<Self> {
        if max_edges_per_route == 0 || max_routes == 0 {
            return Err(Error::InvalidBudget(
                "route length and route count limits must be positive".into(),
            ));
        }
        Ok(OracleBudget {
            max_edges_per_route,
            max_routes,
        })
    }
}

/// Truth of `formula` at `at` by route enumeration.
pub fn oracle_check<T: Scalar>(
    model: &SpatialModel<T>,
    formula: &SrelFormula<T>,
    at: LocationId,
    budget: OracleBudget,
) -> Result<bool> {
    if !model.contains(at) {
        return Err(Error::UnknownLocation(at.to_string()));
    }
    Ok(oracle_check_all(model, formula, budget)?[at])
}

/// [`oracle_check`] at every location.
pub fn oracle_check_all<T: Scalar>(
    model: &SpatialModel<T>,
    formula: &SrelFormula<T>,
    budget: OracleBudget,
) -> Result<BoolMap> {
    let mut ctx = Context::new(model, budget)?;
    ctx.check(formula).map(LocationMap::from_vec)
}

/// Resiliency value of `spec` at `at` by route enumeration.
pub fn oracle_sparv<T: Scalar>(
    model: &SpatialModel<T>,
    spec: &SparsFormula<T>,
    at: LocationId,
    budget: OracleBudget,
) -> Result<PairSet<T>> {
    if !model.contains(at) {
        return Err(Error::UnknownLocation(at.to_string()));
    }
    Ok(oracle_sparv_all(model, spec, budget)?[at].clone())
}

/// [`oracle_sparv`] at every location.
pub fn oracle_sparv_all<T: Scalar>(
    model: &SpatialModel<T>,
    spec: &SparsFormula<T>,
    budget: OracleBudget,
) -> Result<SparvMap<T>> {
    let mut ctx = Context::new(model, budget)?;
    ctx.sparv(spec).map(LocationMap::from_vec)
}

enum Step {
    Extend,
    Prune,
    Stop,
}

struct Context<'a, T> {
    model: &'a SpatialModel<T>,
    budget: OracleBudget,
    routes_seen: usize,
}

impl<'a, T: Scalar> Context<'a, T> {
    fn new(model: &'a SpatialModel<T>, budget: OracleBudget) -> Result<Self> {
        OracleBudget::new(budget.max_edges_per_route, budget.max_routes)?;
        Ok(Context {
            model,
            budget,
            routes_seen: 0,
        })
    }

    /// Calls `visit` with every route from `start` and its prefix lengths
    /// (`lengths[i]` is the length up to position `i`).
    fn routes(
        &mut self,
        start: LocationId,
        metric: Metric,
        mut visit: impl FnMut(&Route, &[T]) -> Step,
    ) -> Result<()> {
        let mut it = enumerate_routes(self.model, start, self.budget.max_edges_per_route);
        while let Some(route) = it.next() {
            self.routes_seen += 1;
            if self.routes_seen > self.budget.max_routes {
                return Err(Error::BudgetExceeded {
                    what: "oracle route count",
                    limit: self.budget.max_routes,
                });
            }
            let mut lengths = Vec::with_capacity(route.nodes().len());
            let mut acc = T::zero();
            lengths.push(acc);
            for e in route.edges() {
                acc = acc + metric.length(self.model.edge(*e).weight);
                lengths.push(acc);
            }
            match visit(&route, &lengths) {
                Step::Stop => return Ok(()),
                Step::Prune => it.skip_extensions(),
                Step::Extend => {
                    if it.truncated_here() {
                        return Err(Error::BudgetExceeded {
                            what: "oracle route length",
                            limit: self.budget.max_edges_per_route,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn check(&mut self, f: &SrelFormula<T>) -> Result<Vec<bool>> {
        let model = self.model;
        let n = model.len();
        Ok(match f {
            SrelFormula::True => vec![true; n],
            SrelFormula::False => vec![false; n],
            SrelFormula::Atom(p) => model
                .locations()
                .map(|l| eval_atom_at(model, p, l).map(|(t, _)| t))
                .collect::<Result<_>>()?,
            SrelFormula::Not(c) => self.check(c)?.into_iter().map(|b| !b).collect(),
            SrelFormula::And(l, r) => {
                let (a, b) = (self.check(l)?, self.check(r)?);
                a.iter().zip(&b).map(|(x, y)| *x && *y).collect()
            }
            SrelFormula::Or(l, r) => {
                let (a, b) = (self.check(l)?, self.check(r)?);
                a.iter().zip(&b).map(|(x, y)| *x || *y).collect()
            }
            SrelFormula::Reach {
                left,
                interval,
                metric,
                right,
            } => {
                let guard = self.check(left)?;
                let goal = self.check(right)?;
                self.reach_truth(*metric, interval, &guard, &goal)?
            }
            SrelFormula::Somewhere {
                interval,
                metric,
                child,
            } => {
                let goal = self.check(child)?;
                self.reach_truth(*metric, interval, &vec![true; n], &goal)?
            }
            SrelFormula::Everywhere {
                interval,
                metric,
                child,
            } => {
                let goal: Vec<bool> = self.check(child)?.into_iter().map(|b| !b).collect();
                self.reach_truth(*metric, interval, &vec![true; n], &goal)?
                    .into_iter()
                    .map(|b| !b)
                    .collect()
            }
            SrelFormula::Escape {
                interval,
                metric,
                child,
            } => {
                let sat = self.check(child)?;
                let mut out = vec![false; n];
                for l in model.locations() {
                    let dist = shortest_distances(model, l, *metric, |_| true)?;
                    let mut found = false;
                    self.routes(l, *metric, |route, _| {
                        let nodes = route.nodes();
                        for i in 0..nodes.len() {
                            if interval.contains(dist[nodes[i].0])
                                && (0..=i).all(|j| sat[nodes[j].0])
                            {
                                found = true;
                                return Step::Stop;
                            }
                        }
                        if sat[route.end().0] {
                            Step::Extend
                        } else {
                            Step::Prune
                        }
                    })?;
                    out[l.0] = found;
                }
                out
            }
        })
    }

    fn reach_truth(
        &mut self,
        metric: Metric,
        interval: &crate::graph::DistInterval<T>,
        guard: &[bool],
        goal: &[bool],
    ) -> Result<Vec<bool>> {
        let mut out = vec![false; self.model.len()];
        for l in self.model.locations() {
            let mut found = false;
            self.routes(l, metric, |route, lengths| {
                let nodes = route.nodes();
                for i in 0..nodes.len() {
                    if interval.contains(lengths[i])
                        && goal[nodes[i].0]
                        && (0..i).all(|j| guard[nodes[j].0])
                    {
                        found = true;
                        return Step::Stop;
                    }
                }
                if *lengths.last().unwrap() > interval.hi() || !guard[route.end().0] {
                    Step::Prune
                } else {
                    Step::Extend
                }
            })?;
            out[l.0] = found;
        }
        Ok(out)
    }

    fn sparv(&mut self, spec: &SparsFormula<T>) -> Result<Vec<PairSet<T>>> {
        let model = self.model;
        let n = model.len();
        Ok(match spec {
            SparsFormula::SAtom {
                d1,
                d2,
                metric,
                body,
            } => {
                if !(*d1 >= T::zero() && d1 <= d2 && d2.is_finite()) {
                    return Err(Error::InvalidInterval(format!(
                        "S-atom needs 0 <= d1 <= d2 < inf, got [{d1}, {d2}]"
                    )));
                }
                let sat = self.check(body)?;
                let mut out = Vec::with_capacity(n);
                for l in model.locations() {
                    let mut pairs = vec![ResiliencePair::bottom()];
                    self.routes(l, *metric, |route, lengths| {
                        let nodes = route.nodes();
                        let split = (0..nodes.len()).find(|&i| {
                            (0..i).all(|j| !sat[nodes[j].0])
                                && (i..nodes.len()).all(|k| sat[nodes[k].0])
                        });
                        if let Some(i) = split {
                            let total = *lengths.last().unwrap();
                            pairs.push(ResiliencePair::new(
                                *d1 - lengths[i],
                                (total - lengths[i]) - *d2,
                            ));
                        }
                        let recovered = nodes.iter().any(|u| sat[u.0]);
                        if recovered && !sat[route.end().0] {
                            Step::Prune
                        } else {
                            Step::Extend
                        }
                    })?;
                    out.push(PairSet::maxre(pairs)?);
                }
                out
            }
            SparsFormula::Not(c) => self
                .sparv(c)?
                .into_iter()
                .map(|s| {
                    PairSet::maxre(s.iter().map(ResiliencePair::negated))
                        .expect("negating a non-empty set")
                })
                .collect(),
            SparsFormula::And(l, r) => {
                let (a, b) = (self.sparv(l)?, self.sparv(r)?);
                a.iter()
                    .zip(&b)
                    .map(|(x, y)| PairSet::minre(x.iter().chain(y.iter()).copied()))
                    .collect::<Result<_>>()?
            }
            SparsFormula::Or(l, r) => {
                let (a, b) = (self.sparv(l)?, self.sparv(r)?);
                a.iter()
                    .zip(&b)
                    .map(|(x, y)| PairSet::maxre(x.iter().chain(y.iter()).copied()))
                    .collect::<Result<_>>()?
            }
            SparsFormula::Reach {
                left,
                interval,
                metric,
                right,
            } => {
                let s1 = self.sparv(left)?;
                let s2 = self.sparv(right)?;
                let mut out = Vec::with_capacity(n);
                for l in model.locations() {
                    let mut pairs = Vec::new();
                    self.routes(l, *metric, |route, lengths| {
                        let nodes = route.nodes();
                        for i in 0..nodes.len() {
                            if !interval.contains(lengths[i]) {
                                continue;
                            }
                            let inner = s2[nodes[i].0]
                                .iter()
                                .chain((0..i).flat_map(|j| s1[nodes[j].0].iter()))
                                .copied();
                            pairs.extend(PairSet::minre(inner).expect("non-empty").iter());
                        }
                        if *lengths.last().unwrap() > interval.hi() {
                            Step::Prune
                        } else {
                            Step::Extend
                        }
                    })?;
                    out.push(max_or_bottom(pairs));
                }
                out
            }
            SparsFormula::Escape {
                interval,
                metric,
                child,
            } => {
                let s = self.sparv(child)?;
                let mut out = Vec::with_capacity(n);
                for l in model.locations() {
                    let dist = shortest_distances(model, l, *metric, |_| true)?;
                    let mut pairs = Vec::new();
                    self.routes(l, *metric, |route, _| {
                        let nodes = route.nodes();
                        for i in 0..nodes.len() {
                            if interval.contains(dist[nodes[i].0]) {
                                let inner = (0..=i).flat_map(|j| s[nodes[j].0].iter()).copied();
                                pairs.extend(PairSet::minre(inner).expect("non-empty").iter());
                            }
                        }
                        Step::Extend
                    })?;
                    out.push(max_or_bottom(pairs));
                }
                out
            }
            SparsFormula::Somewhere {
                interval,
                metric,
                child,
            }
            | SparsFormula::Everywhere {
                interval,
                metric,
                child,
            } => {
                let everywhere = matches!(spec, SparsFormula::Everywhere { .. });
                let s = self.sparv(child)?;
                let mut out = Vec::with_capacity(n);
                for l in model.locations() {
                    let mut pairs = Vec::new();
                    self.routes(l, *metric, |route, lengths| {
                        let nodes = route.nodes();
                        for i in 0..nodes.len() {
                            if interval.contains(lengths[i]) {
                                pairs.extend(s[nodes[i].0].iter().copied());
                            }
                        }
                        if *lengths.last().unwrap() > interval.hi() {
                            Step::Prune
                        } else {
                            Step::Extend
                        }
                    })?;
                    out.push(match (pairs.is_empty(), everywhere) {
                        (true, false) => PairSet::bottom(),
                        (true, true) => PairSet::top(),
                        (false, false) => PairSet::maxre(pairs)?,
                        (false, true) => PairSet::minre(pairs)?,
                    });
                }
                out
            }
        })
    }
}

fn max_or_bottom<T: Scalar>(pairs: Vec<ResiliencePair<T>>) -> PairSet<T> {
    if pairs.is_empty() {
        PairSet::bottom()
    } else {
        PairSet::maxre(pairs).expect("non-empty")
    }
}
