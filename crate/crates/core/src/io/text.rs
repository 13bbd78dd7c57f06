use std::fmt::Write;

use crate::graph::SpatialModel;
use crate::map::LocationMap;
use crate::resilience::PairSet;
use crate::scalar::Scalar;

/// A real rounded to `digits` decimals, infinities as `inf`/`-inf`.
pub fn format_real<T: Scalar>(x: T, digits: usize) -> String {
    if x.is_infinite() {
        return if x > T::zero() { "inf".into() } else { "-inf".into() };
    }
    let v = x.as_f64();
    format!("{:.*}", digits, if v == 0.0 { 0.0 } else { v })
}

/// `{(x_r, x_p), ...}` with rounded components.
pub fn format_pairset<T: Scalar>(set: &PairSet<T>, digits: usize) -> String {
    let body: Vec<String> = set
        .iter()
        .map(|p| format!("({}, {})", format_real(p.rec, digits), format_real(p.per, digits)))
        .collect();
    format!("{{{}}}", body.join(", "))
}

/// One `id: value` line per location, in model order.
pub fn format_table<T: Scalar, V>(
    model: &SpatialModel<T>,
    map: &LocationMap<V>,
    cell: impl Fn(&V) -> String,
) -> String {
    let mut out = String::new();
    for (l, v) in map.iter() {
        writeln!(out, "{}: {}", model.name(l), cell(v)).expect("writing to a String");
    }
    out
}

fn quoted(id: &str) -> String {
    format!("\"{}\"", id.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT graph with weight labels; locations with a true verdict
/// are filled.
pub fn render_dot<T: Scalar>(model: &SpatialModel<T>, verdicts: &LocationMap<bool>) -> String {
    if model.is_empty() {
        return "graph {}\n".into();
    }
    let mut out = String::from("graph {\n");
    for (l, &sat) in verdicts.iter() {
        let style = if sat {
            "style=filled, fillcolor=\"#8fd18f\""
        } else {
            "style=solid"
        };
        writeln!(out, "  {} [{style}];", quoted(model.name(l))).expect("writing to a String");
    }
    for e in model.edges() {
        writeln!(
            out,
            "  {} -- {} [label=\"{}\"];",
            quoted(model.name(e.a)),
            quoted(model.name(e.b)),
            e.weight
        )
        .expect("writing to a String");
    }
    out.push_str("}\n");
    out
}
