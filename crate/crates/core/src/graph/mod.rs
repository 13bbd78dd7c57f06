//! Weighted undirected spatial models, routes and the graph algorithms the
//! evaluators are built on.

mod metric;
mod paths;
mod route;
mod trail;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use metric::{DistInterval, Metric};
pub use paths::{
    components, distance_matrix, shortest_distances, shortest_path_tree, ShortestPaths,
};
pub use route::{enumerate_routes, route_length, Route, Routes};
pub use trail::{longest_trail_dfs, longest_trail_from, DEFAULT_EDGE_BUDGET};

/// Index of a location inside a [`SpatialModel`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocationId(pub usize);

/// Index of an undirected edge inside a [`SpatialModel`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

impl fmt::Display for LocationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Named signal values carried by one location.
pub type Signal<T> = BTreeMap<String, T>;

#[derive(Debug, Clone, PartialEq)]
pub struct Edge<T> {
    pub a: LocationId,
    pub b: LocationId,
    pub weight: T,
}

impl<T> Edge<T> {
    /// The endpoint opposite to `from`.
    pub fn other(&self, from: LocationId) -> LocationId {
        if self.a == from {
            self.b
        } else {
            self.a
        }
    }
}

/// Raw location record handed to [`SpatialModel::build`].
#[derive(Debug, Clone, PartialEq)]
pub struct LocationSpec<T> {
    pub id: String,
    pub signal: Signal<T>,
}

/// Raw edge record handed to [`SpatialModel::build`]; endpoints refer to location ids.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeSpec<T> {
    pub a: String,
    pub b: String,
    pub weight: T,
}

/// An undirected, positively weighted graph whose locations carry named
/// real-valued signals. Immutable once built.
#[derive(Debug, Clone)]
pub struct SpatialModel<T> {
    names: Vec<String>,
    index: HashMap<String, LocationId>,
    signals: Vec<Signal<T>>,
    edges: Vec<Edge<T>>,
    adjacency: Vec<Vec<(LocationId, EdgeId)>>,
}

impl<T: Scalar> SpatialModel<T> {
    /// Validates the raw records and builds the model.
    ///
    /// Rejects duplicate location ids, self-loops, edges to undeclared
    /// locations, more than one edge per unordered pair and weights that are
    /// not strictly positive and finite.
    pub fn build(locations: Vec<LocationSpec<T>>, edges: Vec<EdgeSpec<T>>) -> Result<Self> {
        let mut names = Vec::with_capacity(locations.len());
        let mut index = HashMap::with_capacity(locations.len());
        let mut signals = Vec::with_capacity(locations.len());
        for loc in locations {
            if index.contains_key(&loc.id) {
                return Err(Error::DuplicateLocationId(loc.id));
            }
            index.insert(loc.id.clone(), LocationId(names.len()));
            names.push(loc.id);
            signals.push(loc.signal);
        }

        let mut adjacency = vec![Vec::new(); names.len()];
        let mut seen = HashSet::new();
        let mut stored = Vec::with_capacity(edges.len());
        for spec in edges {
            let a = *index
                .get(&spec.a)
                .ok_or_else(|| Error::UnknownEndpoint(spec.a.clone()))?;
            let b = *index
                .get(&spec.b)
                .ok_or_else(|| Error::UnknownEndpoint(spec.b.clone()))?;
            if a == b {
                return Err(Error::SelfLoop(spec.a));
            }
            if !(spec.weight > T::zero() && spec.weight.is_finite()) {
                return Err(Error::NonPositiveWeight {
                    a: spec.a,
                    b: spec.b,
                    weight: spec.weight.as_f64(),
                });
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::DuplicateEdge { a: spec.a, b: spec.b });
            }
            let id = EdgeId(stored.len());
            adjacency[a.0].push((b, id));
            adjacency[b.0].push((a, id));
            stored.push(Edge {
                a,
                b,
                weight: spec.weight,
            });
        }

        Ok(SpatialModel {
            names,
            index,
            signals,
            edges: stored,
            adjacency,
        })
    }

    pub fn builder() -> ModelBuilder<T> {
        ModelBuilder::default()
    }
}

impl<T> SpatialModel<T> {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn locations(&self) -> impl Iterator<Item = LocationId> + '_ {
        (0..self.names.len()).map(LocationId)
    }

    pub fn name(&self, id: LocationId) -> &str {
        &self.names[id.0]
    }

    pub fn lookup(&self, name: &str) -> Option<LocationId> {
        self.index.get(name).copied()
    }

    /// Like [`lookup`](Self::lookup) but reports unknown names as an error.
    pub fn resolve(&self, name: &str) -> Result<LocationId> {
        self.lookup(name)
            .ok_or_else(|| Error::UnknownLocation(name.to_string()))
    }

    pub fn signal(&self, id: LocationId) -> &Signal<T> {
        &self.signals[id.0]
    }

    pub fn edges(&self) -> &[Edge<T>] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge<T> {
        &self.edges[id.0]
    }

    /// Neighbours of `id` together with the connecting edge.
    pub fn neighbors(&self, id: LocationId) -> &[(LocationId, EdgeId)] {
        &self.adjacency[id.0]
    }

    pub fn degree(&self, id: LocationId) -> usize {
        self.adjacency[id.0].len()
    }

    pub fn edge_between(&self, a: LocationId, b: LocationId) -> Option<EdgeId> {
        self.adjacency[a.0]
            .iter()
            .find(|(n, _)| *n == b)
            .map(|(_, e)| *e)
    }

    pub fn contains(&self, id: LocationId) -> bool {
        id.0 < self.names.len()
    }
}

/// Incremental construction of small models, mostly for tests and examples.
#[derive(Debug, Clone)]
pub struct ModelBuilder<T> {
    locations: Vec<LocationSpec<T>>,
    edges: Vec<EdgeSpec<T>>,
}

impl<T> Default for ModelBuilder<T> {
    fn default() -> Self {
        ModelBuilder {
            locations: Vec::new(),
            edges: Vec::new(),
        }
    }
}

impl<T: Scalar> ModelBuilder<T> {
    pub fn location<I, K>(mut self, id: impl Into<String>, signal: I) -> Self
    where
        I: IntoIterator<Item = (K, T)>,
        K: Into<String>,
    {
        self.locations.push(LocationSpec {
            id: id.into(),
            signal: signal.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        });
        self
    }

    pub fn edge(mut self, a: impl Into<String>, b: impl Into<String>, weight: T) -> Self {
        self.edges.push(EdgeSpec {
            a: a.into(),
            b: b.into(),
            weight,
        });
        self
    }

    pub fn build(self) -> Result<SpatialModel<T>> {
        SpatialModel::build(self.locations, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(id: &str) -> LocationSpec<f64> {
        LocationSpec {
            id: id.into(),
            signal: Signal::new(),
        }
    }

    fn edge(a: &str, b: &str, w: f64) -> EdgeSpec<f64> {
        EdgeSpec {
            a: a.into(),
            b: b.into(),
            weight: w,
        }
    }

    #[test]
    fn single_location_without_edges() {
        let m = SpatialModel::build(vec![plain("s0")], vec![]).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.edge_count(), 0);
    }

    #[test]
    fn reversed_duplicate_edge_is_rejected() {
        let err = SpatialModel::build(
            vec![plain("a"), plain("b")],
            vec![edge("a", "b", 1.0), edge("b", "a", 2.0)],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::DuplicateEdge {
                a: "b".into(),
                b: "a".into()
            }
        );
    }

    #[test]
    fn validation_errors_name_the_offender() {
        let locs = || vec![plain("a"), plain("b")];
        assert_eq!(
            SpatialModel::build(locs(), vec![edge("a", "a", 1.0)]).unwrap_err(),
            Error::SelfLoop("a".into())
        );
        assert_eq!(
            SpatialModel::build(locs(), vec![edge("a", "zz", 1.0)]).unwrap_err(),
            Error::UnknownEndpoint("zz".into())
        );
        assert!(matches!(
            SpatialModel::build(locs(), vec![edge("a", "b", 0.0)]).unwrap_err(),
            Error::NonPositiveWeight { .. }
        ));
        assert!(matches!(
            SpatialModel::build(locs(), vec![edge("a", "b", f64::INFINITY)]).unwrap_err(),
            Error::NonPositiveWeight { .. }
        ));
        assert_eq!(
            SpatialModel::build(vec![plain("a"), plain("a")], vec![]).unwrap_err(),
            Error::DuplicateLocationId("a".into())
        );
    }

    #[test]
    fn adjacency_is_symmetric() {
        let m = SpatialModel::build(
            vec![plain("a"), plain("b"), plain("c")],
            vec![edge("a", "b", 1.5), edge("b", "c", 2.5)],
        )
        .unwrap();
        for e in m.edges() {
            assert!(m.neighbors(e.a).iter().any(|(n, _)| *n == e.b));
            assert!(m.neighbors(e.b).iter().any(|(n, _)| *n == e.a));
        }
        assert_eq!(m.degree(m.lookup("b").unwrap()), 2);
    }
}
