//! The bundled microgrid model and formula templates.
//!
//! The microgrid has ten locations `"0"` to `"9"` joined by 24 weighted
//! edges (metres). Each location has `supply` and `demand` fields chosen so
//! that `supply >= demand` holds exactly at locations 2, 3, 4, 6 and 9.

use crate::error::Result;
use crate::graph::SpatialModel;
use crate::io::parse_model_json;
use crate::logic::{parse_spars, SparsFormula};
use crate::scalar::Scalar;

/// The microgrid model file as shipped with the crate.
pub const MICROGRID_JSON: &str = include_str!("../data/microgrid.json");

/// Resilient supply: a shortfall is fixed within 1000 m and supply then
/// holds along some route of at least 2000 m.
pub const PSI_1: &str = "S[1000,2000](supply >= demand)";

/// Resilience of the property that supply holds everywhere within 1000 m.
pub const PSI_2: &str = "S[1000,1000](everywhere[0,1000](supply >= demand))";

/// Some location within 1500 m has resilient supply.
pub const PSI_3: &str = "somewhere[0,1500](S[1000,2000](supply >= demand))";

/// Bike-share templates over the per-station field `B`.
pub const BIKE_PSI_1: &str = "S[1000,2000](B > 0)";
pub const BIKE_PSI_2: &str = "S[1000,1000](everywhere[0,500](B > 0))";
pub const BIKE_PSI_3: &str = "somewhere[0,1000](S[1000,2000](B > 0))";

pub fn microgrid<T: Scalar>() -> SpatialModel<T> {
    parse_model_json(MICROGRID_JSON).expect("bundled microgrid model is valid")
}

/// The three microgrid formulas in order.
pub fn microgrid_formulas<T: Scalar>() -> Result<[SparsFormula<T>; 3]> {
    Ok([parse_spars(PSI_1)?, parse_spars(PSI_2)?, parse_spars(PSI_3)?])
}
