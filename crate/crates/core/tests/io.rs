use proptest::prelude::*;
use spars::datasets::{microgrid, PSI_1};
use spars::io::*;
use spars::{evaluate, parse_spars, Error, LocationMap, Model, Pair, Pairs};

fn pointer_of(e: Error) -> String {
    match e {
        Error::Schema { pointer, .. } => pointer,
        other => panic!("expected a schema error, got {other:?}"),
    }
}

#[test]
fn schema_errors_carry_pointers() {
    let e = parse_model_json::<f64>(r#"{"locations":[{"id":"a","signal":{"x":"high"}}],"edges":[]}"#).unwrap_err();
    assert_eq!(pointer_of(e), "/locations/0/signal/x");
    let e = parse_model_json::<f64>(r#"{"locations":[{"id":"a"},{"id":"b"}],"edges":[{"a":"a","b":"b"}]}"#).unwrap_err();
    assert_eq!(pointer_of(e), "/edges/0/w");
    let e = parse_model_json::<f64>(r#"{"edges":[]}"#).unwrap_err();
    assert_eq!(pointer_of(e), "/locations");
    assert!(matches!(parse_model_json::<f64>("{"), Err(Error::Json(_))));
}

#[test]
fn zero_weight_is_rejected() {
    let e = parse_model_json::<f64>(r#"{"locations":[{"id":"a"},{"id":"b"}],"edges":[{"a":"a","b":"b","w":0}]}"#);
    assert!(matches!(e, Err(Error::NonPositiveWeight { .. })), "{e:?}");
}

#[test]
fn empty_model_is_valid() {
    let m: Model = parse_model_json(r#"{"locations":[],"edges":[]}"#).unwrap();
    assert!(m.is_empty());
    assert_eq!(render_dot(&m, &LocationMap::from_vec(vec![])), "graph {}\n");
}

#[test]
fn missing_file_is_an_io_error() {
    assert!(matches!(load_model::<f64>("/no/such/model.json"), Err(Error::Io { .. })));
}

#[test]
fn table_rows_are_rounded() {
    let m: Model = microgrid();
    let values = evaluate(&m, &parse_spars(PSI_1).unwrap()).unwrap();
    let table = format_table(&m, &values, |s| format_pairset(s, 2));
    assert!(table.lines().any(|l| l == "4: {(1000.00, 5175.97)}"), "{table}");
    assert!(table.lines().any(|l| l == "1: {(-349.47, 6555.59)}"), "{table}");
    assert_eq!(table.lines().count(), 10);
}

#[test]
fn infinities_print_as_words() {
    assert_eq!(format_pairset(&Pairs::bottom(), 2), "{(-inf, -inf)}");
    assert_eq!(format_real(-0.0_f64, 2), "0.00");
    assert_eq!(pairset_to_json(&Pairs::top()), serde_json::json!([["inf", "inf"]]));
}

#[test]
fn dot_fills_satisfied_locations() {
    let m: Model = microgrid();
    let values = evaluate(&m, &parse_spars(PSI_1).unwrap()).unwrap();
    let dot = render_dot(&m, &values.map(|s| s.is_satisfying()));
    assert!(dot.starts_with("graph {\n"));
    assert!(dot.contains("\"0\" [style=solid]"));
    assert!(dot.contains("\"1\" [style=solid]"));
    assert!(dot.contains("\"4\" [style=filled"));
    assert!(dot.contains("\"0\" -- \"1\" [label=\"821.38\"]"));
    assert_eq!(dot.matches(" -- ").count(), 24);

    let all = render_dot(&m, &LocationMap::from_fn(m.len(), |_| true));
    assert_eq!(all.matches("style=filled").count(), 10);
}

#[test]
fn result_json_is_stable() {
    let m: Model = microgrid();
    let values = evaluate(&m, &parse_spars(PSI_1).unwrap()).unwrap();
    let once = to_canonical_string(&sparv_to_json(&m, &values));
    let back = named_to_map(&m, parse_sparv_json::<f64>(&once).unwrap()).unwrap();
    assert_eq!(back, values);
    assert_eq!(once, to_canonical_string(&sparv_to_json(&m, &back)));

    let verdicts = values.map(|s| s.is_satisfying());
    let text = to_canonical_string(&bool_map_to_json(&m, &verdicts));
    assert_eq!(named_to_map(&m, parse_bool_map_json(&text).unwrap()).unwrap(), verdicts);
}

#[test]
fn dominated_pairs_are_rejected() {
    let v = serde_json::json!([[1.0, 1.0], [0.5, 0.5]]);
    assert!(pairset_from_json::<f64>(&v, "").is_err());
    assert!(pairset_from_json::<f64>(&serde_json::json!([]), "").is_err());
}

fn real() -> impl Strategy<Value = f64> {
    prop_oneof![
        8 => -1e6..1e6f64,
        1 => Just(f64::INFINITY),
        1 => Just(f64::NEG_INFINITY),
    ]
}

proptest! {
    #[test]
    fn pairset_json_round_trips(raw in prop::collection::vec((real(), real()), 1..8)) {
        let set = Pairs::maxre(raw.into_iter().map(|(r, p)| Pair::new(r, p))).unwrap();
        let text = to_canonical_string(&pairset_to_json(&set));
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let back = pairset_from_json::<f64>(&value, "").unwrap();
        prop_assert_eq!(&back, &set);
        prop_assert_eq!(to_canonical_string(&pairset_to_json(&back)), text);
    }
}
