use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::eval::SparvMap;
use crate::graph::SpatialModel;
use crate::map::LocationMap;
use crate::monitor::{BoolMap, RobustMap};
use crate::resilience::{PairSet, ResiliencePair};
use crate::scalar::Scalar;

/// Values keyed by location id, in document order.
pub type Named<V> = Vec<(String, V)>;

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        pointer: pointer.into(),
        message: message.into(),
    }
}

/// A real as JSON, with infinities spelled `"inf"` and `"-inf"`.
pub fn real_to_json<T: Scalar>(x: T) -> Value {
    if x.is_infinite() {
        Value::from(if x > T::zero() { "inf" } else { "-inf" })
    } else {
        Value::from(x.as_f64())
    }
}

pub fn real_from_json<T: Scalar>(v: &Value, pointer: &str) -> Result<T> {
    match v {
        Value::String(s) if s == "inf" => Ok(T::infinity()),
        Value::String(s) if s == "-inf" => Ok(T::neg_infinity()),
        Value::Number(n) => n
            .as_f64()
            .map(T::lit)
            .ok_or_else(|| schema(pointer, "number out of range")),
        _ => Err(schema(pointer, "expected a number, \"inf\" or \"-inf\"")),
    }
}

/// `[[x_r, x_p], ...]` in the set's canonical order.
pub fn pairset_to_json<T: Scalar>(set: &PairSet<T>) -> Value {
    Value::Array(
        set.iter()
            .map(|p| Value::Array(vec![real_to_json(p.rec), real_to_json(p.per)]))
            .collect(),
    )
}

/// Inverse of [`pairset_to_json`]; the pairs must be mutually non-dominated.
pub fn pairset_from_json<T: Scalar>(v: &Value, pointer: &str) -> Result<PairSet<T>> {
    let items = v.as_array().ok_or_else(|| schema(pointer, "expected an array of pairs"))?;
    if items.is_empty() {
        return Err(schema(pointer, "a value set has at least one pair"));
    }
    let mut pairs: Vec<ResiliencePair<T>> = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let at = format!("{pointer}/{i}");
        match item.as_array().map(Vec::as_slice) {
            Some([r, p]) => pairs.push(ResiliencePair::new(
                real_from_json(r, &format!("{at}/0"))?,
                real_from_json(p, &format!("{at}/1"))?,
            )),
            _ => return Err(schema(at, "expected a two-element array")),
        }
    }
    let set = PairSet::maxre(pairs.iter().copied())?;
    let mut distinct = pairs.clone();
    distinct.sort_by(|a, b| a.rec.partial_cmp(&b.rec).unwrap().then(a.per.partial_cmp(&b.per).unwrap()));
    distinct.dedup();
    if set.len() != distinct.len() {
        return Err(schema(pointer, "pairs are not mutually non-dominated"));
    }
    Ok(set)
}

fn keyed<T: Scalar, V>(model: &SpatialModel<T>, map: &LocationMap<V>, f: impl Fn(&V) -> Value) -> Value {
    let obj: Map<String, Value> = map
        .iter()
        .map(|(l, v)| (model.name(l).to_string(), f(v)))
        .collect();
    Value::Object(obj)
}

pub fn sparv_to_json<T: Scalar>(model: &SpatialModel<T>, map: &SparvMap<T>) -> Value {
    keyed(model, map, pairset_to_json)
}

pub fn bool_map_to_json<T: Scalar>(model: &SpatialModel<T>, map: &BoolMap) -> Value {
    keyed(model, map, |b| Value::Bool(*b))
}

pub fn robust_map_to_json<T: Scalar>(model: &SpatialModel<T>, map: &RobustMap<T>) -> Value {
    keyed(model, map, |x| real_to_json(*x))
}

/// Pretty-printed JSON with a trailing newline; stable for equal values.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialise");
    s.push('\n');
    s
}

fn parse_keyed<V>(text: &str, f: impl Fn(&Value, &str) -> Result<V>) -> Result<Named<V>> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let obj = doc.as_object().ok_or_else(|| schema("", "expected an object keyed by location id"))?;
    obj.iter()
        .map(|(k, v)| {
            let p = format!("/{}", k.replace('~', "~0").replace('/', "~1"));
            f(v, &p).map(|x| (k.clone(), x))
        })
        .collect()
}

pub fn parse_sparv_json<T: Scalar>(text: &str) -> Result<Named<PairSet<T>>> {
    parse_keyed(text, pairset_from_json)
}

pub fn parse_bool_map_json(text: &str) -> Result<Named<bool>> {
    parse_keyed(text, |v, p| v.as_bool().ok_or_else(|| schema(p, "expected a boolean")))
}

pub fn parse_robust_map_json<T: Scalar>(text: &str) -> Result<Named<T>> {
    parse_keyed(text, real_from_json)
}

/// Orders named values by the model's locations; every location must
/// appear exactly once.
pub fn named_to_map<T: Scalar, V>(model: &SpatialModel<T>, named: Named<V>) -> Result<LocationMap<V>> {
    let mut slots: Vec<Option<V>> = (0..model.len()).map(|_| None).collect();
    for (name, v) in named {
        let l = model.resolve(&name)?;
        if slots[l.0].replace(v).is_some() {
            return Err(schema(format!("/{name}"), "location listed twice"));
        }
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                schema("", format!("no value for location '{}'", model.name(crate::graph::LocationId(i))))
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(LocationMap::from_vec)
}
