use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{EdgeId, LocationId, Metric, Route, SpatialModel};

/// Largest component (in edges) searched exhaustively when no Euler shortcut applies.
pub const DEFAULT_EDGE_BUDGET: usize = 24;

struct Component<T> {
    edges: Vec<EdgeId>,
    // per location: incident component edges as (neighbour, local edge index, length)
    adj: Vec<Vec<(LocationId, usize, T)>>,
    nodes: Vec<LocationId>,
}

fn component_of<T: Scalar>(
    model: &SpatialModel<T>,
    start: LocationId,
    keep: &impl Fn(LocationId) -> bool,
    metric: Metric,
) -> Result<Component<T>> {
    if !model.contains(start) {
        return Err(Error::UnknownLocation(start.to_string()));
    }
    if !keep(start) {
        return Err(Error::InvalidRoute(format!(
            "trail start '{}' is outside the kept subgraph",
            model.name(start)
        )));
    }
    let mut seen = vec![false; model.len()];
    let mut nodes = vec![start];
    seen[start.0] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &(v, _) in model.neighbors(u) {
            if !seen[v.0] && keep(v) {
                seen[v.0] = true;
                nodes.push(v);
                stack.push(v);
            }
        }
    }
    let mut edges = Vec::new();
    let mut adj = vec![Vec::new(); model.len()];
    for (i, e) in model.edges().iter().enumerate() {
        if seen[e.a.0] && seen[e.b.0] {
            let local = edges.len();
            let len = metric.length(e.weight);
            edges.push(EdgeId(i));
            adj[e.a.0].push((e.b, local, len));
            adj[e.b.0].push((e.a, local, len));
        }
    }
    Ok(Component { edges, adj, nodes })
}

/// Length of the longest edge-simple route from `start` that stays inside the
/// connected component of kept locations containing `start`.
///
/// When the component has an Euler circuit, or an Euler trail that can begin at
/// `start`, the answer is the component's total length. Otherwise the
/// component is searched exhaustively, which is refused with
/// [`Error::BudgetExceeded`] when it has more than `edge_budget` edges.
pub fn longest_trail_from<T: Scalar>(
    model: &SpatialModel<T>,
    start: LocationId,
    keep: impl Fn(LocationId) -> bool,
    metric: Metric,
    edge_budget: usize,
) -> Result<T> {
    let comp = component_of(model, start, &keep, metric)?;
    let odd: Vec<_> = comp
        .nodes
        .iter()
        .filter(|u| comp.adj[u.0].len() % 2 == 1)
        .collect();
    let total = || {
        comp.edges
            .iter()
            .map(|e| metric.length(model.edge(*e).weight))
            .fold(T::zero(), |a, b| a + b)
    };
    if odd.is_empty() || (odd.len() == 2 && comp.adj[start.0].len() % 2 == 1) {
        return Ok(total());
    }
    if comp.edges.len() > edge_budget {
        return Err(Error::BudgetExceeded {
            what: "longest-trail search (component edges)",
            limit: edge_budget,
        });
    }
    Ok(search(&comp, start).0)
}

/// Exhaustive longest-trail search without the Euler shortcuts, also
/// returning a witness route.
pub fn longest_trail_dfs<T: Scalar>(
    model: &SpatialModel<T>,
    start: LocationId,
    keep: impl Fn(LocationId) -> bool,
    metric: Metric,
    edge_budget: usize,
) -> Result<(T, Route)> {
    let comp = component_of(model, start, &keep, metric)?;
    if comp.edges.len() > edge_budget {
        return Err(Error::BudgetExceeded {
            what: "longest-trail search (component edges)",
            limit: edge_budget,
        });
    }
    let (best, nodes) = search(&comp, start);
    let route = Route::from_nodes(model, &nodes).expect("search yields edge-simple routes");
    Ok((best, route))
}

fn search<T: Scalar>(comp: &Component<T>, start: LocationId) -> (T, Vec<LocationId>) {
    struct Dfs<'a, T> {
        comp: &'a Component<T>,
        used: Vec<bool>,
        path: Vec<LocationId>,
        best: T,
        best_path: Vec<LocationId>,
    }

    impl<T: Scalar> Dfs<'_, T> {
        fn go(&mut self, u: LocationId, acc: T) {
            if acc > self.best {
                self.best = acc;
                self.best_path.clone_from(&self.path);
            }
            for &(x, k, len) in &self.comp.adj[u.0] {
                if self.used[k] {
                    continue;
                }
                self.used[k] = true;
                self.path.push(x);
                self.go(x, acc + len);
                self.path.pop();
                self.used[k] = false;
            }
        }
    }

    let mut dfs = Dfs {
        comp,
        used: vec![false; comp.edges.len()],
        path: vec![start],
        best: T::zero(),
        best_path: vec![start],
    };
    dfs.go(start, T::zero());
    (dfs.best, dfs.best_path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(edges: &[(&str, &str, f64)]) -> SpatialModel<f64> {
        let mut names: Vec<&str> = edges.iter().flat_map(|(a, b, _)| [*a, *b]).collect();
        names.sort();
        names.dedup();
        let mut b = SpatialModel::builder();
        for n in names {
            b = b.location(n, [("x", 1.0)]);
        }
        for (x, y, w) in edges {
            b = b.edge(*x, *y, *w);
        }
        b.build().unwrap()
    }

    #[test]
    fn euler_circuit_takes_everything() {
        let m = model(&[("a", "b", 1.0), ("b", "c", 2.0), ("c", "a", 3.0)]);
        for l in m.locations() {
            assert_eq!(longest_trail_from(&m, l, |_| true, Metric::Weight, 24).unwrap(), 6.0);
        }
    }

    #[test]
    fn middle_of_a_path_takes_one_branch() {
        let m = model(&[("a", "b", 1.0), ("b", "c", 2.0)]);
        let b = m.lookup("b").unwrap();
        assert_eq!(longest_trail_from(&m, b, |_| true, Metric::Weight, 24).unwrap(), 2.0);
        let a = m.lookup("a").unwrap();
        assert_eq!(longest_trail_from(&m, a, |_| true, Metric::Weight, 24).unwrap(), 3.0);
    }

    #[test]
    fn isolated_start_has_zero_trail() {
        let m = model(&[("a", "b", 1.0)]);
        let a = m.lookup("a").unwrap();
        let b = m.lookup("b").unwrap();
        assert_eq!(longest_trail_from(&m, a, |l| l == a, Metric::Weight, 24).unwrap(), 0.0);
        assert!(longest_trail_from(&m, a, |l| l == b, Metric::Weight, 24).is_err());
    }

    #[test]
    fn budget_is_enforced_only_without_shortcut() {
        // star with four leaves: four odd vertices, no shortcut
        let m = model(&[("h", "a", 1.0), ("h", "b", 1.0), ("h", "c", 1.0), ("h", "d", 1.0)]);
        let h = m.lookup("h").unwrap();
        assert!(matches!(
            longest_trail_from(&m, h, |_| true, Metric::Weight, 3),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(longest_trail_from(&m, h, |_| true, Metric::Weight, 4).unwrap(), 1.0);
        let tri = model(&[("a", "b", 1.0), ("b", "c", 2.0), ("c", "a", 3.0)]);
        assert_eq!(longest_trail_from(&tri, LocationId(0), |_| true, Metric::Weight, 0).unwrap(), 6.0);
    }

    #[test]
    fn dfs_witness_is_consistent() {
        let m = model(&[("a", "b", 1.0), ("b", "c", 2.0), ("c", "a", 3.0), ("c", "d", 4.0)]);
        let a = m.lookup("a").unwrap();
        let (len, route) = longest_trail_dfs(&m, a, |_| true, Metric::Weight, 24).unwrap();
        assert_eq!(len, 7.0);
        assert_eq!(crate::graph::route_length(&m, &route, Metric::Weight).unwrap(), len);
        assert_eq!(route.start(), a);
    }
}
