//! Walk-based flooding shared by the monitors and the walk evaluation mode.
//!
//! Values travel backwards from targets along edges. The walk floods merge
//! everything that meets at a location and distance; the trail flood keeps
//! the set of used edges in its state and so explores edge-simple routes only.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{distance_matrix, DistInterval, EdgeId, LocationId, Metric, SpatialModel};
use crate::lattice::Lattice;
use crate::scalar::Scalar;

/// How a reach-style flood combines values.
pub(crate) struct FloodOps<V> {
    /// Folds the value of a newly prepended location into a walk value.
    pub along: fn(&V, &V) -> V,
    /// Combines walks that reach the same location.
    pub result: fn(&V, &V) -> V,
    /// Value of a location that no qualifying walk starts from.
    pub empty: V,
}

impl<V: Lattice> FloodOps<V> {
    /// Reach: conjunction along the walk, disjunction across walks.
    pub fn reach() -> Self {
        FloodOps {
            along: V::meet,
            result: V::join,
            empty: V::bottom(),
        }
    }
}

/// Maximum number of queued `(location, distance)` states processed by one flood.
pub(crate) const DEFAULT_STATE_BUDGET: usize = 2_000_000;

/// Flooding from every location with seed `seed[l]`, walking backwards and
/// folding `guard[l']` into the value at each prepended location `l'`.
///
/// A location whose accumulated walk distance lands in `interval` records
/// the walk value. Entries that meet at the same location and distance are
/// merged with `ops.result`.
pub(crate) fn walk_reach<T: Scalar, V: Clone + PartialEq>(
    model: &SpatialModel<T>,
    metric: Metric,
    interval: &DistInterval<T>,
    guard: &[V],
    seed: &[V],
    ops: &FloodOps<V>,
    state_budget: usize,
) -> Result<Vec<V>> {
    let hi = interval.hi();
    if !interval.is_bounded() {
        return Err(Error::UnboundedInterval(format!("reach {interval}")));
    }
    let mut out: Vec<V> = if interval.starts_at_zero() {
        seed.to_vec()
    } else {
        vec![ops.empty.clone(); model.len()]
    };
    let mut queue: Vec<(LocationId, T, V)> = model
        .locations()
        .map(|l| (l, T::zero(), seed[l.0].clone()))
        .collect();
    let mut processed = 0usize;
    while !queue.is_empty() {
        let mut next: Vec<(LocationId, T, V)> = Vec::new();
        let mut slots: HashMap<(usize, u64), usize> = HashMap::new();
        for (l, d, v) in &queue {
            processed += 1;
            if processed > state_budget {
                return Err(Error::BudgetExceeded {
                    what: "flooding states",
                    limit: state_budget,
                });
            }
            for &(prev, e) in model.neighbors(*l) {
                let v2 = (ops.along)(v, &guard[prev.0]);
                let d2 = *d + metric.length(model.edge(e).weight);
                if interval.contains(d2) {
                    out[prev.0] = (ops.result)(&out[prev.0], &v2);
                }
                if d2 < hi {
                    match slots.entry((prev.0, d2.as_f64().to_bits())) {
                        std::collections::hash_map::Entry::Occupied(slot) => {
                            let entry = &mut next[*slot.get()].2;
                            *entry = (ops.result)(entry, &v2);
                        }
                        std::collections::hash_map::Entry::Vacant(slot) => {
                            slot.insert(next.len());
                            next.push((prev, d2, v2));
                        }
                    }
                }
            }
        }
        queue = next;
    }
    Ok(out)
}

/// Escape flooding: `e[a][b]` is the best value of a walk from `a` to `b`
/// through locations whose values are folded with `meet`, and the result at
/// `a` joins `e[a][b]` over every `b` whose shortest distance from `a` lies in
/// `interval`.
pub(crate) fn walk_escape<T: Scalar, V: Lattice>(
    model: &SpatialModel<T>,
    metric: Metric,
    interval: &DistInterval<T>,
    values: &[V],
) -> Result<Vec<V>> {
    if !interval.is_bounded() {
        return Err(Error::UnboundedInterval(format!("escape {interval}")));
    }
    let n = model.len();
    let dist = distance_matrix(model, metric);
    let mut e: Vec<Vec<V>> = vec![vec![V::bottom(); n]; n];
    let mut frontier: Vec<(usize, usize)> = Vec::with_capacity(n);
    for l in 0..n {
        e[l][l] = values[l].clone();
        frontier.push((l, l));
    }
    let cap = (4 * n * n).max(64);
    let mut rounds = 0;
    while !frontier.is_empty() {
        rounds += 1;
        if rounds > cap {
            return Err(Error::IterationCap(cap));
        }
        let mut changed = vec![false; n * n];
        let mut next = Vec::new();
        for &(a, b) in &frontier {
            for &(prev, _) in model.neighbors(LocationId(a)) {
                let p = prev.0;
                let candidate = values[p].meet(&e[a][b]);
                let updated = e[p][b].join(&candidate);
                if updated != e[p][b] {
                    e[p][b] = updated;
                    if !changed[p * n + b] {
                        changed[p * n + b] = true;
                        next.push((p, b));
                    }
                }
            }
        }
        frontier = next;
    }
    Ok((0..n)
        .map(|a| {
            (0..n)
                .filter(|&b| interval.contains(dist[a][b]))
                .fold(V::bottom(), |acc, b| acc.join(&e[a][b]))
        })
        .collect())
}

/// Set of used edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct EdgeMask(Vec<u64>);

impl EdgeMask {
    fn empty(edges: usize) -> Self {
        EdgeMask(vec![0; edges.div_ceil(64)])
    }

    fn has(&self, e: EdgeId) -> bool {
        self.0[e.0 / 64] & (1 << (e.0 % 64)) != 0
    }

    fn with(&self, e: EdgeId) -> Self {
        let mut next = self.clone();
        next.0[e.0 / 64] |= 1 << (e.0 % 64);
        next
    }
}

/// One edge-simple route `current .. target`, discovered backwards.
pub(crate) struct Trail<'a, T, V> {
    pub start: LocationId,
    pub target: LocationId,
    pub length: T,
    pub value: &'a V,
}

/// Enumerates edge-simple routes backwards from every target, up to one
/// state per `(start, target, used edges)`.
///
/// Each target starts with `seed(target)` at length zero, and prepending a
/// location `p` turns the value `v` into `extend(v, p)`. Every discovered
/// route, including the trivial ones, is passed to `record`. Routes longer
/// than `limit` are neither recorded nor extended.
///
/// `extend` must make the value a function of the route's location
/// occurrences; then routes sharing a state key carry equal values and
/// dropping duplicates loses nothing.
pub(crate) fn trail_flood<T: Scalar, V: Clone>(
    model: &SpatialModel<T>,
    metric: Metric,
    limit: Option<T>,
    seed: impl Fn(LocationId) -> V,
    extend: impl Fn(&V, LocationId) -> V,
    mut record: impl FnMut(Trail<'_, T, V>),
    state_budget: usize,
) -> Result<()> {
    let tol = T::interval_tolerance();
    let mut layer: Vec<(LocationId, LocationId, EdgeMask, T, V)> = Vec::new();
    for t in model.locations() {
        let v = seed(t);
        record(Trail {
            start: t,
            target: t,
            length: T::zero(),
            value: &v,
        });
        layer.push((t, t, EdgeMask::empty(model.edge_count()), T::zero(), v));
    }
    let mut states = layer.len();
    while !layer.is_empty() {
        let mut next = Vec::new();
        let mut seen: HashSet<(LocationId, LocationId, EdgeMask)> = HashSet::new();
        for (cur, target, mask, dist, value) in &layer {
            for &(prev, e) in model.neighbors(*cur) {
                if mask.has(e) {
                    continue;
                }
                let length = *dist + metric.length(model.edge(e).weight);
                if limit.is_some_and(|hi| length > hi + tol) {
                    continue;
                }
                let mask2 = mask.with(e);
                if !seen.insert((prev, *target, mask2.clone())) {
                    continue;
                }
                let v = extend(value, prev);
                record(Trail {
                    start: prev,
                    target: *target,
                    length,
                    value: &v,
                });
                if limit.is_none_or(|hi| length < hi) {
                    states += 1;
                    if states > state_budget {
                        return Err(Error::BudgetExceeded {
                            what: "trail flooding states",
                            limit: state_budget,
                        });
                    }
                    next.push((prev, *target, mask2, length, v));
                }
            }
        }
        layer = next;
    }
    Ok(())
}
