//! Boolean satisfaction and real-valued robustness of Boolean spatial
//! formulas, computed by walk flooding.
//!
//! Reach floods walks from target locations, so with a zero lower bound it
//! agrees with the route semantics; with a positive lower bound a walk that
//! repeats an edge may be accepted where no edge-simple route qualifies.
//! Escape is exact for any bound because its distance test uses shortest
//! distances rather than the walk length.

use crate::error::Result;
use crate::flood::{walk_escape, walk_reach, FloodOps, DEFAULT_STATE_BUDGET};
use crate::graph::SpatialModel;
use crate::lattice::Lattice;
use crate::logic::{eval_atom_at, SrelFormula};
use crate::map::LocationMap;
use crate::scalar::Scalar;

/// Per-location verdicts.
pub type BoolMap = LocationMap<bool>;

/// Per-location robustness, possibly infinite.
pub type RobustMap<T> = LocationMap<T>;

/// Truth of `formula` at every location.
pub fn check<T: Scalar>(model: &SpatialModel<T>, formula: &SrelFormula<T>) -> Result<BoolMap> {
    Monitor::default().check(model, formula)
}

/// Robustness of `formula` at every location.
pub fn robustness<T: Scalar>(
    model: &SpatialModel<T>,
    formula: &SrelFormula<T>,
) -> Result<RobustMap<T>> {
    Monitor::default().robustness(model, formula)
}

#[derive(Debug, Clone, Copy)]
pub struct Monitor {
    /// Cap on queued flooding states per spatial operator.
    pub state_budget: usize,
}

impl Default for Monitor {
    fn default() -> Self {
        Monitor {
            state_budget: DEFAULT_STATE_BUDGET,
        }
    }
}

impl Monitor {
    pub fn check<T: Scalar>(
        &self,
        model: &SpatialModel<T>,
        formula: &SrelFormula<T>,
    ) -> Result<BoolMap> {
        self.run(model, formula, &|truth: bool, _: T| truth)
            .map(LocationMap::from_vec)
    }

    pub fn robustness<T: Scalar>(
        &self,
        model: &SpatialModel<T>,
        formula: &SrelFormula<T>,
    ) -> Result<RobustMap<T>> {
        self.run(model, formula, &|_: bool, margin: T| margin)
            .map(LocationMap::from_vec)
    }

    fn run<T: Scalar, V: Lattice>(
        &self,
        model: &SpatialModel<T>,
        formula: &SrelFormula<T>,
        atom: &impl Fn(bool, T) -> V,
    ) -> Result<Vec<V>> {
        let n = model.len();
        Ok(match formula {
            SrelFormula::True => vec![V::top(); n],
            SrelFormula::False => vec![V::bottom(); n],
            SrelFormula::Atom(pred) => model
                .locations()
                .map(|l| eval_atom_at(model, pred, l).map(|(t, m)| atom(t, m)))
                .collect::<Result<_>>()?,
            SrelFormula::Not(c) => self.run(model, c, atom)?.iter().map(V::negate).collect(),
            SrelFormula::And(l, r) => {
                pointwise(self.run(model, l, atom)?, self.run(model, r, atom)?, V::meet)
            }
            SrelFormula::Or(l, r) => {
                pointwise(self.run(model, l, atom)?, self.run(model, r, atom)?, V::join)
            }
            SrelFormula::Reach {
                left,
                interval,
                metric,
                right,
            } => {
                let guard = self.run(model, left, atom)?;
                let seed = self.run(model, right, atom)?;
                walk_reach(
                    model,
                    *metric,
                    interval,
                    &guard,
                    &seed,
                    &FloodOps::reach(),
                    self.state_budget,
                )?
            }
            SrelFormula::Escape {
                interval,
                metric,
                child,
            } => walk_escape(model, *metric, interval, &self.run(model, child, atom)?)?,
            SrelFormula::Somewhere {
                interval,
                metric,
                child,
            } => {
                let seed = self.run(model, child, atom)?;
                walk_reach(
                    model,
                    *metric,
                    interval,
                    &vec![V::top(); n],
                    &seed,
                    &FloodOps::reach(),
                    self.state_budget,
                )?
            }
            SrelFormula::Everywhere {
                interval,
                metric,
                child,
            } => {
                let seed: Vec<V> = self.run(model, child, atom)?.iter().map(V::negate).collect();
                walk_reach(
                    model,
                    *metric,
                    interval,
                    &vec![V::top(); n],
                    &seed,
                    &FloodOps::reach(),
                    self.state_budget,
                )?
                .iter()
                .map(V::negate)
                .collect()
            }
        })
    }
}

fn pointwise<V>(a: Vec<V>, b: Vec<V>, f: fn(&V, &V) -> V) -> Vec<V> {
    a.iter().zip(&b).map(|(x, y)| f(x, y)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::logic::parse_srel;

    fn line(xs: &[f64], w: f64) -> SpatialModel<f64> {
        let mut b = SpatialModel::builder();
        for (i, x) in xs.iter().enumerate() {
            b = b.location(i.to_string(), [("x", *x)]);
        }
        for i in 1..xs.len() {
            b = b.edge((i - 1).to_string(), i.to_string(), w);
        }
        b.build().unwrap()
    }

    fn f(s: &str) -> SrelFormula<f64> {
        parse_srel(s).unwrap()
    }

    #[test]
    fn constants_and_atoms() {
        let m = line(&[1.0, -2.0], 1.0);
        assert_eq!(check(&m, &f("true")).unwrap().values(), &[true, true]);
        assert_eq!(robustness(&m, &f("x > 0")).unwrap().values(), &[1.0, -2.0]);
        assert_eq!(robustness(&m, &f("!(x > 0)")).unwrap().values(), &[-1.0, 2.0]);
    }

    #[test]
    fn single_node_somewhere() {
        let m = line(&[7.0], 1.0);
        assert_eq!(robustness(&m, &f("somewhere[0,5](x > 0)")).unwrap().values(), &[7.0]);
    }

    #[test]
    fn reach_respects_guard_and_distance() {
        // 0 - 1 - 2 - 3 with unit weights, target at 3
        let m = line(&[1.0, 1.0, -1.0, 5.0], 1.0);
        let reach = f("(x > -2) R[0,2] (x > 4)");
        assert_eq!(check(&m, &reach).unwrap().values(), &[false, true, true, true]);
        let guarded = f("(x > 0) R[0,3] (x > 4)");
        assert_eq!(check(&m, &guarded).unwrap().values(), &[false, false, false, true]);
        let rob = robustness(&m, &f("(x > -2) R[0,3] (x > 4)")).unwrap();
        assert_eq!(rob.values(), &[1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn escape_uses_shortest_distances() {
        let m = line(&[1.0, 2.0, 3.0, -1.0], 1.0);
        let e = f("E[2,2](x > 0)");
        assert_eq!(check(&m, &e).unwrap().values(), &[true, false, true, false]);
        assert_eq!(robustness(&m, &e).unwrap().values(), &[1.0, -1.0, 1.0, -1.0]);
    }

    #[test]
    fn everywhere_is_dual_of_somewhere() {
        let m = line(&[1.0, 2.0, -1.0, 4.0], 2.0);
        let ev = check(&m, &f("everywhere[0,2](x > 0)")).unwrap();
        let dual = check(&m, &f("!(somewhere[0,2](!(x > 0)))")).unwrap();
        assert_eq!(ev, dual);
        assert_eq!(ev.values(), &[true, false, false, false]);
    }

    #[test]
    fn unbounded_reach_is_refused() {
        let m = line(&[1.0, 2.0], 1.0);
        assert!(matches!(
            check(&m, &f("(x > 0) R[1,inf] (x > 0)")),
            Err(Error::UnboundedInterval(_))
        ));
    }

    #[test]
    fn missing_field_names_the_location() {
        let m = line(&[1.0], 1.0);
        match check(&m, &f("y > 0")) {
            Err(Error::MissingField { field, location }) => {
                assert_eq!((field.as_str(), location.as_str()), ("y", "0"))
            }
            other => panic!("{other:?}"),
        }
    }
}
