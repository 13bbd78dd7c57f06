use std::path::Path;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::graph::{EdgeSpec, LocationSpec, Signal, SpatialModel};
use crate::scalar::Scalar;

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        pointer: pointer.into(),
        message: message.into(),
    }
}

/// Escapes one JSON-pointer reference token.
fn token(key: &str) -> String {
    key.replace('~', "~0").replace('/', "~1")
}

fn object<'v>(value: &'v Value, pointer: &str) -> Result<&'v Map<String, Value>> {
    value
        .as_object()
        .ok_or_else(|| schema(pointer, "expected an object"))
}

fn array<'v>(value: Option<&'v Value>, pointer: &str) -> Result<&'v Vec<Value>> {
    match value {
        Some(Value::Array(items)) => Ok(items),
        Some(_) => Err(schema(pointer, "expected an array")),
        None => Err(schema(pointer, "missing required member")),
    }
}

fn text<'v>(value: Option<&'v Value>, pointer: &str) -> Result<&'v str> {
    match value {
        Some(Value::String(s)) => Ok(s),
        Some(_) => Err(schema(pointer, "expected a string")),
        None => Err(schema(pointer, "missing required member")),
    }
}

fn number<T: Scalar>(value: Option<&Value>, pointer: &str) -> Result<T> {
    match value.and_then(Value::as_f64) {
        Some(x) => Ok(T::lit(x)),
        None if value.is_none() => Err(schema(pointer, "missing required member")),
        None => Err(schema(pointer, "expected a number")),
    }
}

/// Parses a model document:
/// `{"locations": [{"id", "signal": {field: number}}], "edges": [{"a", "b", "w"}]}`.
pub fn parse_model_json<T: Scalar>(text_in: &str) -> Result<SpatialModel<T>> {
    let doc: Value = serde_json::from_str(text_in).map_err(|e| Error::Json(e.to_string()))?;
    let root = object(&doc, "")?;
    let mut locations = Vec::new();
    for (i, item) in array(root.get("locations"), "/locations")?.iter().enumerate() {
        let at = format!("/locations/{i}");
        let loc = object(item, &at)?;
        let id = text(loc.get("id"), &format!("{at}/id"))?;
        let mut signal = Signal::new();
        if let Some(raw) = loc.get("signal") {
            for (field, v) in object(raw, &format!("{at}/signal"))? {
                let p = format!("{at}/signal/{}", token(field));
                signal.insert(field.clone(), number(Some(v), &p)?);
            }
        }
        locations.push(LocationSpec {
            id: id.to_string(),
            signal,
        });
    }
    let mut edges = Vec::new();
    let raw_edges = match root.get("edges") {
        None => &Vec::new(),
        other => array(other, "/edges")?,
    };
    for (i, item) in raw_edges.iter().enumerate() {
        let at = format!("/edges/{i}");
        let e = object(item, &at)?;
        edges.push(EdgeSpec {
            a: text(e.get("a"), &format!("{at}/a"))?.to_string(),
            b: text(e.get("b"), &format!("{at}/b"))?.to_string(),
            weight: number(e.get("w"), &format!("{at}/w"))?,
        });
    }
    if locations.is_empty() {
        log::warn!("model has no locations; every result will be empty");
    }
    SpatialModel::build(locations, edges)
}

/// Reads and parses a model file.
pub fn load_model<T: Scalar>(path: impl AsRef<Path>) -> Result<SpatialModel<T>> {
    let path = path.as_ref();
    let raw = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_model_json(&raw)
}

/// The model as a document accepted by [`parse_model_json`].
pub fn model_to_json<T: Scalar>(model: &SpatialModel<T>) -> Value {
    let locations: Vec<Value> = model
        .locations()
        .map(|l| {
            let signal: Map<String, Value> = model
                .signal(l)
                .iter()
                .map(|(k, v)| (k.clone(), Value::from(v.as_f64())))
                .collect();
            serde_json::json!({ "id": model.name(l), "signal": signal })
        })
        .collect();
    let edges: Vec<Value> = model
        .edges()
        .iter()
        .map(|e| serde_json::json!({ "a": model.name(e.a), "b": model.name(e.b), "w": e.weight.as_f64() }))
        .collect();
    serde_json::json!({ "locations": locations, "edges": edges })
}
