use proptest::prelude::*;
use spars::resilience::{compare_re, Dominance, ReduceMode};
use spars::{Pair, Pairs};

fn component() -> impl Strategy<Value = f64> {
    prop_oneof![
        10 => (-6i32..=6).prop_map(f64::from),
        1 => Just(f64::INFINITY),
        1 => Just(f64::NEG_INFINITY),
    ]
}

fn pair() -> impl Strategy<Value = Pair> {
    (component(), component()).prop_map(|(r, p)| Pair::new(r, p))
}

fn mode() -> impl Strategy<Value = ReduceMode> {
    prop_oneof![Just(ReduceMode::Max), Just(ReduceMode::Min)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn reduction_is_idempotent(xs in prop::collection::vec(pair(), 1..10), m in mode()) {
        let once = Pairs::reduce(xs, m).unwrap();
        let twice = Pairs::reduce(once.iter().copied(), m).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn reduction_keeps_only_inputs(xs in prop::collection::vec(pair(), 1..10), m in mode()) {
        let out = Pairs::reduce(xs.clone(), m).unwrap();
        prop_assert!(out.iter().all(|p| xs.contains(p)));
    }

    #[test]
    fn reduction_output_is_an_antichain(xs in prop::collection::vec(pair(), 1..10), m in mode()) {
        let out = Pairs::reduce(xs, m).unwrap();
        for a in out.iter() {
            for b in out.iter() {
                prop_assert_eq!(compare_re(a, b), Dominance::NonDominated);
            }
        }
    }

    #[test]
    fn dropped_inputs_are_covered(xs in prop::collection::vec(pair(), 1..10)) {
        let max = Pairs::maxre(xs.clone()).unwrap();
        let min = Pairs::minre(xs.clone()).unwrap();
        for x in &xs {
            prop_assert!(max.iter().any(|k| k == x || compare_re(k, x) == Dominance::Dominates));
            prop_assert!(min.iter().any(|k| k == x || compare_re(k, x) == Dominance::Dominated));
        }
    }

    #[test]
    fn dominance_is_antisymmetric(x in pair(), y in pair()) {
        let flipped = match compare_re(&x, &y) {
            Dominance::Dominates => Dominance::Dominated,
            Dominance::Dominated => Dominance::Dominates,
            Dominance::NonDominated => Dominance::NonDominated,
        };
        prop_assert_eq!(compare_re(&y, &x), flipped);
        prop_assert_eq!(compare_re(&x, &x), Dominance::NonDominated);
    }

    #[test]
    fn negation_is_an_involution(xs in prop::collection::vec(pair(), 1..10)) {
        let set = Pairs::maxre(xs).unwrap();
        prop_assert_eq!(set.negate().negate(), set);
    }
}

#[test]
fn positive_pair_beats_mixed_pair() {
    assert_eq!(compare_re(&Pair::new(1.0, 1.0), &Pair::new(-3.0, 2.0)), Dominance::Dominates);
}

#[test]
fn incomparable_pairs() {
    assert_eq!(compare_re(&Pair::new(1.0, 15.0), &Pair::new(2.0, 5.0)), Dominance::NonDominated);
}

#[test]
fn minimum_collapses_to_mixed_pair() {
    let xs = [(2.0, 5.0), (1.0, 15.0), (9.0, -12.0), (3.0, 15.0), (3.0, 5.0)].map(|(r, p)| Pair::new(r, p));
    assert_eq!(Pairs::minre(xs).unwrap().pairs(), [Pair::new(9.0, -12.0)]);
}

#[test]
fn empty_reduction_is_an_error() {
    assert!(Pairs::maxre(std::iter::empty()).is_err());
}
