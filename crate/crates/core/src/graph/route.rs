use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{EdgeId, LocationId, Metric, SpatialModel};

/// An edge-simple walk: consecutive locations are adjacent and no edge is
/// used twice. Locations may repeat.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Route {
    nodes: Vec<LocationId>,
    edges: Vec<EdgeId>,
}

impl Route {
    /// The single-location route.
    pub fn trivial(at: LocationId) -> Self {
        Route {
            nodes: vec![at],
            edges: Vec::new(),
        }
    }

    /// Builds a route from a location sequence, checking adjacency and edge
    /// simplicity against `model`.
    pub fn from_nodes<T>(model: &SpatialModel<T>, nodes: &[LocationId]) -> Result<Self> {
        let Some(&first) = nodes.first() else {
            return Err(Error::InvalidRoute("a route needs at least one location".into()));
        };
        if !model.contains(first) {
            return Err(Error::InvalidRoute(format!("{first} is not in the model")));
        }
        let mut edges = Vec::with_capacity(nodes.len().saturating_sub(1));
        for pair in nodes.windows(2) {
            if !model.contains(pair[1]) {
                return Err(Error::InvalidRoute(format!("{} is not in the model", pair[1])));
            }
            let e = model.edge_between(pair[0], pair[1]).ok_or_else(|| {
                Error::InvalidRoute(format!(
                    "'{}' and '{}' are not adjacent",
                    model.name(pair[0]),
                    model.name(pair[1])
                ))
            })?;
            if edges.contains(&e) {
                return Err(Error::InvalidRoute(format!(
                    "edge '{}'-'{}' is used twice",
                    model.name(pair[0]),
                    model.name(pair[1])
                )));
            }
            edges.push(e);
        }
        Ok(Route {
            nodes: nodes.to_vec(),
            edges,
        })
    }

    pub fn nodes(&self) -> &[LocationId] {
        &self.nodes
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn start(&self) -> LocationId {
        self.nodes[0]
    }

    pub fn end(&self) -> LocationId {
        *self.nodes.last().unwrap()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Length of each prefix `route[..=i]`, starting with 0 for the first node.
    pub fn prefix_lengths<T: Scalar>(&self, model: &SpatialModel<T>, metric: Metric) -> Vec<T> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut acc = T::zero();
        out.push(acc);
        for e in &self.edges {
            acc = acc + metric.length(model.edge(*e).weight);
            out.push(acc);
        }
        out
    }
}

/// Sum of the metric over the route's edges; zero for a single-node route.
pub fn route_length<T: Scalar>(model: &SpatialModel<T>, route: &Route, metric: Metric) -> Result<T> {
    // re-validate: routes may come from a different model
    let checked = Route::from_nodes(model, route.nodes())?;
    Ok(checked
        .edges
        .iter()
        .map(|e| metric.length(model.edge(*e).weight))
        .fold(T::zero(), |acc, w| acc + w))
}

/// Every edge-simple route from `start` with at most `max_edges` edges, in
/// depth-first order, starting with the single-node route.
pub fn enumerate_routes<T>(model: &SpatialModel<T>, start: LocationId, max_edges: usize) -> Routes<'_, T> {
    Routes {
        model,
        max_edges,
        nodes: vec![start],
        edges: Vec::new(),
        used: vec![false; model.edge_count()],
        cursor: Vec::new(),
        started: false,
        prune: false,
    }
}

/// Depth-first route enumerator returned by [`enumerate_routes`].
pub struct Routes<'a, T> {
    model: &'a SpatialModel<T>,
    max_edges: usize,
    nodes: Vec<LocationId>,
    edges: Vec<EdgeId>,
    used: Vec<bool>,
    // next adjacency index to try, one frame per node on the current route
    cursor: Vec<usize>,
    started: bool,
    prune: bool,
}

impl<T> Routes<'_, T> {
    /// Do not descend into extensions of the most recently yielded route.
    pub fn skip_extensions(&mut self) {
        self.prune = true;
    }

    /// True when the most recently yielded route still has an unused incident
    /// edge but sits at the `max_edges` limit, i.e. the enumeration is truncated there.
    pub fn truncated_here(&self) -> bool {
        self.edges.len() == self.max_edges
            && self
                .model
                .neighbors(*self.nodes.last().unwrap())
                .iter()
                .any(|(_, e)| !self.used[e.0])
    }

    fn current(&self) -> Route {
        Route {
            nodes: self.nodes.clone(),
            edges: self.edges.clone(),
        }
    }

    fn backtrack(&mut self) {
        self.cursor.pop();
        if let Some(e) = self.edges.pop() {
            self.used[e.0] = false;
            self.nodes.pop();
        }
    }
}

impl<T> Iterator for Routes<'_, T> {
    type Item = Route;

    fn next(&mut self) -> Option<Route> {
        if !self.started {
            self.started = true;
            if !self.model.contains(self.nodes[0]) {
                return None;
            }
            self.cursor.push(0);
            return Some(self.current());
        }
        if std::mem::take(&mut self.prune) {
            self.backtrack();
        }
        while let Some(&i) = self.cursor.last() {
            let here = *self.nodes.last().unwrap();
            let adj = self.model.neighbors(here);
            let mut next = i;
            let mut step = None;
            if self.edges.len() < self.max_edges {
                while next < adj.len() {
                    let (to, e) = adj[next];
                    next += 1;
                    if !self.used[e.0] {
                        step = Some((to, e));
                        break;
                    }
                }
            }
            *self.cursor.last_mut().unwrap() = next;
            match step {
                Some((to, e)) => {
                    self.used[e.0] = true;
                    self.edges.push(e);
                    self.nodes.push(to);
                    self.cursor.push(0);
                    return Some(self.current());
                }
                None => self.backtrack(),
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SpatialModel;

    fn triangle() -> SpatialModel<f64> {
        SpatialModel::builder()
            .location("a", [("x", 0.0)])
            .location("b", [("x", 0.0)])
            .location("c", [("x", 0.0)])
            .edge("a", "b", 1.0)
            .edge("b", "c", 2.0)
            .edge("c", "a", 3.0)
            .build()
            .unwrap()
    }

    #[test]
    fn single_edge_routes() {
        let m = SpatialModel::builder()
            .location("a", [("x", 0.0)])
            .location("b", [("x", 0.0)])
            .edge("a", "b", 1.0)
            .build()
            .unwrap();
        let routes: Vec<_> = enumerate_routes(&m, LocationId(0), 2).collect();
        assert_eq!(routes.len(), 2);
        assert_eq!(routes[0].nodes(), &[LocationId(0)]);
        assert_eq!(routes[1].nodes(), &[LocationId(0), LocationId(1)]);
    }

    #[test]
    fn triangle_has_seven_routes_from_a_vertex() {
        let m = triangle();
        let routes: Vec<_> = enumerate_routes(&m, LocationId(0), 3).collect();
        assert_eq!(routes.len(), 7);
        let by_len = |k| routes.iter().filter(|r| r.len() == k).count();
        assert_eq!((by_len(0), by_len(1), by_len(2), by_len(3)), (1, 2, 2, 2));
        let unique: std::collections::HashSet<_> = routes.iter().collect();
        assert_eq!(unique.len(), 7);
    }

    #[test]
    fn zero_edge_budget_yields_only_start() {
        let m = triangle();
        let routes: Vec<_> = enumerate_routes(&m, LocationId(1), 0).collect();
        assert_eq!(routes, vec![Route::trivial(LocationId(1))]);
    }

    #[test]
    fn pruning_skips_descendants() {
        let m = triangle();
        let mut it = enumerate_routes(&m, LocationId(0), 3);
        let mut seen = Vec::new();
        while let Some(r) = it.next() {
            if r.len() == 1 {
                it.skip_extensions();
            }
            seen.push(r);
        }
        assert_eq!(seen.len(), 3);
    }

    #[test]
    fn lengths_by_metric() {
        let m = triangle();
        let r = Route::from_nodes(&m, &[LocationId(0), LocationId(1), LocationId(2), LocationId(0)]).unwrap();
        assert_eq!(route_length(&m, &r, Metric::Weight).unwrap(), 6.0);
        assert_eq!(route_length(&m, &r, Metric::Hops).unwrap(), 3.0);
        let single = Route::trivial(LocationId(2));
        assert_eq!(route_length(&m, &single, Metric::Weight).unwrap(), 0.0);
    }

    #[test]
    fn repeated_edge_is_invalid() {
        let m = triangle();
        let err = Route::from_nodes(&m, &[LocationId(0), LocationId(1), LocationId(0)]).unwrap_err();
        assert!(matches!(err, Error::InvalidRoute(_)));
    }
}
