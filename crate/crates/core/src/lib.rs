//! Resilience monitoring over weighted spatial graphs.
//!
//! A [`SpatialModel`] assigns a signal to every location of an undirected
//! graph with positive edge weights. Formulas come in two logics:
//! [`SrelFormula`] is the Boolean/robustness logic monitored by
//! [`monitor`], and [`SparsFormula`] is the resilience logic whose values
//! are sets of non-dominated (recoverability, persistency) pairs, computed by
//! [`eval`]. The [`oracle`] module computes both by brute-force route
//! enumeration and serves as an independent reference.
//!
//! Everything is generic over the scalar type; the aliases below fix it to
//! `f64` (or `f32` where noted).

pub mod datasets;
pub mod error;
pub mod eval;
pub mod graph;
pub mod io;
pub mod lattice;
pub mod logic;
pub mod map;
pub mod monitor;
pub mod oracle;
pub mod resilience;
pub mod scalar;

mod flood;

pub use error::{Error, Result};
pub use eval::{evaluate, Evaluator, FloodMode, SparvMap};
pub use graph::{DistInterval, LocationId, Metric, SpatialModel};
pub use logic::{parse_spars, parse_srel, SparsFormula, SrelFormula};
pub use map::LocationMap;
pub use monitor::{check, robustness, BoolMap, Monitor, RobustMap};
pub use oracle::{oracle_check, oracle_check_all, oracle_sparv, oracle_sparv_all, OracleBudget};
pub use resilience::{PairSet, ResiliencePair};
pub use scalar::Scalar;

pub type Model = SpatialModel<f64>;
pub type Model32 = SpatialModel<f32>;
pub type Pair = ResiliencePair<f64>;
pub type Pairs = PairSet<f64>;
pub type Sparv = SparvMap<f64>;
pub type Srel = SrelFormula<f64>;
pub type Spars = SparsFormula<f64>;
