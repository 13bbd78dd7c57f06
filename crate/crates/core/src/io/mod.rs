//! Model files, result serialisation, text tables and DOT rendering.

mod model;
mod text;
mod values;

pub use model::{load_model, model_to_json, parse_model_json};
pub use text::{format_pairset, format_real, format_table, render_dot};
pub use values::{
    bool_map_to_json, named_to_map, pairset_from_json, pairset_to_json, parse_bool_map_json,
    parse_robust_map_json, parse_sparv_json, real_from_json, real_to_json, robust_map_to_json,
    sparv_to_json, to_canonical_string, Named,
};
