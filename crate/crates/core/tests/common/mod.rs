//! Seeded random models and formulas shared by the integration tests.
//!
//! Weights are multiples of 0.25 and distance bounds multiples of 0.5, so
//! every route length and margin is exact in binary floating point and
//! independent computations can be compared with `==`.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spars::graph::{enumerate_routes, route_length, DistInterval, LocationId, Metric};
use spars::logic::{AtomicPredicate, Comparison};
use spars::{Model, Spars, Srel};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// At most 6 locations and 9 edges with weights in [1, 10]; every location
/// carries small integer fields `x` and `y`.
pub fn random_model(rng: &mut impl Rng) -> Model {
    let n = if rng.gen_bool(0.1) { rng.gen_range(1..=2) } else { rng.gen_range(3..=6) };
    let mut builder = Model::builder();
    for i in 0..n {
        let x = rng.gen_range(-3..=3) as f64;
        let y = rng.gen_range(-3..=3) as f64;
        builder = builder.location(format!("l{i}"), [("x", x), ("y", y)]);
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    pairs.shuffle(rng);
    let most = pairs.len().min(9);
    let m = rng.gen_range(most / 2..=most);
    for &(a, b) in &pairs[..m] {
        let w = rng.gen_range(4..=40) as f64 * 0.25;
        builder = builder.edge(format!("l{a}"), format!("l{b}"), w);
    }
    builder.build().expect("generated models are valid")
}

fn half(rng: &mut impl Rng, max_halves: u32) -> f64 {
    rng.gen_range(0..=max_halves) as f64 * 0.5
}

fn metric(rng: &mut impl Rng) -> Metric {
    if rng.gen_bool(0.2) {
        Metric::Hops
    } else {
        Metric::Weight
    }
}

/// `[0, hi]` with `hi` scaled to the metric.
fn interval(rng: &mut impl Rng, metric: Metric) -> DistInterval<f64> {
    let hi = match metric {
        Metric::Weight => half(rng, 40),
        Metric::Hops => rng.gen_range(0..=4) as f64,
    };
    DistInterval::new(0.0, hi).unwrap()
}

pub fn random_atom(rng: &mut impl Rng) -> Srel {
    let cmp = *[Comparison::Lt, Comparison::Le, Comparison::Gt, Comparison::Ge, Comparison::Eq]
        .choose(rng)
        .unwrap();
    let field = if rng.gen_bool(0.5) { "x" } else { "y" };
    if rng.gen_bool(0.2) {
        Srel::atom(AtomicPredicate::fields(field, cmp, if field == "x" { "y" } else { "x" }))
    } else {
        Srel::atom(AtomicPredicate::field_const(field, cmp, rng.gen_range(-2..=2) as f64))
    }
}

/// Boolean formulas whose distance intervals all start at zero.
pub fn random_srel(rng: &mut impl Rng, depth: usize) -> Srel {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..20) {
            0 => Srel::True,
            1 => Srel::False,
            _ => random_atom(rng),
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..7) {
        0 => Srel::not(random_srel(rng, d)),
        1 => Srel::and(random_srel(rng, d), random_srel(rng, d)),
        2 => Srel::or(random_srel(rng, d), random_srel(rng, d)),
        3 => {
            let m = metric(rng);
            Srel::reach(random_srel(rng, d), interval(rng, m), m, random_srel(rng, d))
        }
        4 => {
            let m = metric(rng);
            Srel::escape(interval(rng, m), m, random_srel(rng, d))
        }
        5 => {
            let m = metric(rng);
            Srel::somewhere(interval(rng, m), m, random_srel(rng, d))
        }
        _ => {
            let m = metric(rng);
            Srel::everywhere(interval(rng, m), m, random_srel(rng, d))
        }
    }
}

pub fn random_satom(rng: &mut impl Rng) -> Spars {
    let m = metric(rng);
    let (a, b) = match m {
        Metric::Weight => (half(rng, 30), half(rng, 30)),
        Metric::Hops => (rng.gen_range(0..=3) as f64, rng.gen_range(0..=4) as f64),
    };
    let body = random_srel(rng, 1);
    Spars::satom(a.min(b), a.max(b), m, body)
}

/// Resilience formulas with at most `depth` composite operators, all of whose
/// composite intervals start at zero.
pub fn random_spars(rng: &mut impl Rng, depth: usize) -> Spars {
    if depth == 0 || rng.gen_bool(0.25) {
        return random_satom(rng);
    }
    let d = depth - 1;
    match rng.gen_range(0..7) {
        0 => Spars::not(random_spars(rng, d)),
        1 => Spars::and(random_spars(rng, d), random_spars(rng, d)),
        2 => Spars::or(random_spars(rng, d), random_spars(rng, d)),
        3 => {
            let m = metric(rng);
            Spars::reach(random_spars(rng, d), interval(rng, m), m, random_spars(rng, d))
        }
        4 => {
            let m = metric(rng);
            Spars::escape(interval(rng, m), m, random_spars(rng, d))
        }
        5 => {
            let m = metric(rng);
            Spars::somewhere(interval(rng, m), m, random_spars(rng, d))
        }
        _ => {
            let m = metric(rng);
            Spars::everywhere(interval(rng, m), m, random_spars(rng, d))
        }
    }
}

/// `count` model/formula cases drawn from one seed.
pub fn spars_family(seed: u64, count: usize) -> Vec<(Model, Spars)> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let m = random_model(&mut r);
            let f = random_spars(&mut r, 3);
            (m, f)
        })
        .collect()
}

pub fn srel_family(seed: u64, count: usize) -> Vec<(Model, Srel)> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let m = random_model(&mut r);
            let f = random_srel(&mut r, 3);
            (m, f)
        })
        .collect()
}

/// A random model with up to 12 edges and a random kept subset.
pub fn kept_subgraph(r: &mut impl Rng) -> (Model, Vec<bool>) {
    let n = r.gen_range(2..=7);
    let mut b = Model::builder();
    for i in 0..n {
        b = b.location(format!("v{i}"), [("x", 0.0)]);
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |c| (a, c))).collect();
    pairs.shuffle(r);
    let m = r.gen_range(1..=pairs.len().min(12));
    for &(a, c) in &pairs[..m] {
        b = b.edge(format!("v{a}"), format!("v{c}"), r.gen_range(4..=40) as f64 * 0.25);
    }
    let keep = (0..n).map(|_| r.gen_bool(0.8)).collect();
    (b.build().unwrap(), keep)
}

/// Longest edge-simple route from `start` inside the kept locations, by
/// exhaustive enumeration.
pub fn longest_by_enumeration(model: &Model, start: LocationId, keep: &[bool], metric: Metric) -> f64 {
    let mut best = 0.0_f64;
    let mut routes = enumerate_routes(model, start, model.edge_count());
    while let Some(route) = routes.next() {
        if !route.nodes().iter().all(|l| keep[l.0]) {
            routes.skip_extensions();
            continue;
        }
        best = best.max(route_length(model, &route, metric).unwrap());
    }
    best
}
