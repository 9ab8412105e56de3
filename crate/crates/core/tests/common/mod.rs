//! Shared helpers for the integration suites: seeded random graphs and
//! radical sums, plus the family/parameter sweep used by the closed-form
//! checks.

#![allow(dead_code)]

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sombor::{Family, FamilySpec, Graph, RadicalSum, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph on `n` vertices, each edge present with probability 1/2.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<bool>() {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

/// Random connected graph of order in `lo..=hi`, resampled until connected.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Graph {
    loop {
        let n = rng.gen_range(lo..=hi);
        let g = random_graph(rng, n);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random graph of order in `lo..=hi` with at least one edge.
pub fn random_graph_with_edges(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Graph {
    loop {
        let n = rng.gen_range(lo..=hi);
        let g = random_graph(rng, n);
        if g.edge_count() > 0 {
            return g;
        }
    }
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let numer = rng.gen_range(-20i64..=20);
    let denom = rng.gen_range(1i64..=12);
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Random canonical radical sum with a handful of small terms.
pub fn random_radical_sum(rng: &mut ChaCha8Rng) -> RadicalSum {
    let terms = rng.gen_range(0..=5);
    let mut sum = RadicalSum::zero();
    for _ in 0..terms {
        let radicand = rng.gen_range(1..=50u64);
        let coeff = random_rational(rng);
        sum += &RadicalSum::sqrt_integer(radicand)
            .expect("positive")
            .scale(&coeff);
    }
    sum
}

fn push_range(specs: &mut Vec<FamilySpec>, family: Family, lo: usize, hi: usize) {
    for n in lo..=hi {
        specs.push(FamilySpec::one(family, n).expect("in domain"));
    }
}

/// The full family/parameter sweep for the closed-form checks.
pub fn sweep_specs() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    push_range(&mut specs, Family::Path, 3, 60);
    push_range(&mut specs, Family::Cycle, 3, 60);
    push_range(&mut specs, Family::Complete, 2, 60);
    push_range(&mut specs, Family::Star, 1, 60);
    for m in 1..=30 {
        for n in 1..=30 {
            specs.push(FamilySpec::two(Family::CompleteBipartite, m, n).expect("in domain"));
        }
    }
    push_range(&mut specs, Family::Wheel, 4, 40);
    push_range(&mut specs, Family::Ladder, 3, 40);
    push_range(&mut specs, Family::Friendship, 1, 40);
    push_range(&mut specs, Family::Book, 3, 40);
    for n in 3..=12 {
        for m in 2..=8 {
            specs.push(FamilySpec::two(Family::DutchWindmill, n, m).expect("in domain"));
        }
    }
    for m in 3..=20 {
        for n in 3..=20 {
            specs.push(FamilySpec::two(Family::Grid, m, n).expect("in domain"));
        }
    }
    for family in [
        Family::TriangularChain,
        Family::ParaSquareChain,
        Family::OrthoSquareChain,
        Family::OrthoHexChain,
        Family::ParaHexChain,
        Family::MetaHexChain,
    ] {
        push_range(&mut specs, family, 2, 30);
    }
    push_range(&mut specs, Family::PathCorona, 3, 40);
    push_range(&mut specs, Family::CycleCorona, 3, 40);
    specs
}
