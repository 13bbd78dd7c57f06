use std::cmp::Reverse;
use std::collections::BinaryHeap;

use ordered_float::OrderedFloat;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{LocationId, Metric, SpatialModel};

/// Single-source shortest route lengths restricted to locations satisfying
/// `allowed`. Entries for unreachable or disallowed locations are `+inf`.
pub fn shortest_distances<T: Scalar>(
    model: &SpatialModel<T>,
    source: LocationId,
    metric: Metric,
    allowed: impl Fn(LocationId) -> bool,
) -> Result<Vec<T>> {
    shortest_path_tree(model, source, metric, allowed).map(|tree| tree.dist)
}

/// Shortest-route tree from one source, as computed by Dijkstra's algorithm.
#[derive(Debug, Clone)]
pub struct ShortestPaths<T> {
    pub source: LocationId,
    pub dist: Vec<T>,
    pred: Vec<Option<LocationId>>,
}

impl<T: Scalar> ShortestPaths<T> {
    /// Locations of a shortest route from the source to `target`, or `None`
    /// when `target` is unreachable.
    pub fn path_to(&self, target: LocationId) -> Option<Vec<LocationId>> {
        if !self.dist.get(target.0)?.is_finite() {
            return None;
        }
        let mut nodes = vec![target];
        let mut cur = target;
        while let Some(p) = self.pred[cur.0] {
            nodes.push(p);
            cur = p;
        }
        nodes.reverse();
        Some(nodes)
    }
}

/// [`shortest_distances`] together with predecessor links.
pub fn shortest_path_tree<T: Scalar>(
    model: &SpatialModel<T>,
    source: LocationId,
    metric: Metric,
    allowed: impl Fn(LocationId) -> bool,
) -> Result<ShortestPaths<T>> {
    if !model.contains(source) {
        return Err(Error::UnknownLocation(source.to_string()));
    }
    let mut dist = vec![T::infinity(); model.len()];
    let mut pred = vec![None; model.len()];
    if allowed(source) {
        dist[source.0] = T::zero();
        let mut queue = BinaryHeap::new();
        queue.push(Reverse((OrderedFloat(0.0), source)));
        while let Some(Reverse((OrderedFloat(key), u))) = queue.pop() {
            let d = dist[u.0];
            if key != d.as_f64() {
                continue;
            }
            for &(v, e) in model.neighbors(u) {
                if !allowed(v) {
                    continue;
                }
                let candidate = d + metric.length(model.edge(e).weight);
                if candidate < dist[v.0] {
                    dist[v.0] = candidate;
                    pred[v.0] = Some(u);
                    queue.push(Reverse((OrderedFloat(candidate.as_f64()), v)));
                }
            }
        }
    }
    Ok(ShortestPaths { source, dist, pred })
}

/// All-pairs shortest distances over the full model, `matrix[a][b]`.
pub fn distance_matrix<T: Scalar>(model: &SpatialModel<T>, metric: Metric) -> Vec<Vec<T>> {
    model
        .locations()
        .map(|l| shortest_distances(model, l, metric, |_| true).expect("location from model"))
        .collect()
}

/// Connected components of the subgraph induced by the kept locations, each
/// block in ascending location order, blocks ordered by their smallest member.
pub fn components<T>(model: &SpatialModel<T>, keep: impl Fn(LocationId) -> bool) -> Vec<Vec<LocationId>> {
    let mut block_of = vec![usize::MAX; model.len()];
    let mut blocks = Vec::new();
    for root in model.locations() {
        if block_of[root.0] != usize::MAX || !keep(root) {
            continue;
        }
        let id = blocks.len();
        let mut members = vec![root];
        block_of[root.0] = id;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &(v, _) in model.neighbors(u) {
                if block_of[v.0] == usize::MAX && keep(v) {
                    block_of[v.0] = id;
                    members.push(v);
                    stack.push(v);
                }
            }
        }
        members.sort();
        blocks.push(members);
    }
    blocks
}
