//! Property-based invariants for the radical arithmetic, the graph core,
//! the product constructions and the file formats.

use num_bigint::BigInt;
use proptest::prelude::*;
use sombor::{
    cartesian_product, edge_removal_bound, generate, graph_from_edge_mask, parse_edge_list,
    parse_graph6, render_edge_list, render_graph6, sombor_index, DegreeCensus, Family, FamilySpec,
    Graph, RadicalSum, Rational,
};
use std::cmp::Ordering;
use std::str::FromStr;

fn radical_sums() -> impl Strategy<Value = RadicalSum> {
    prop::collection::vec((1u64..=60, -30i64..=30, 1i64..=15), 0..6).prop_map(|terms| {
        let mut sum = RadicalSum::zero();
        for (radicand, numer, denom) in terms {
            let coeff = Rational::new(BigInt::from(numer), BigInt::from(denom));
            sum += &RadicalSum::sqrt_integer(radicand).unwrap().scale(&coeff);
        }
        sum
    })
}

fn rationals() -> impl Strategy<Value = Rational> {
    (-24i64..=24, 1i64..=9)
        .prop_map(|(numer, denom)| Rational::new(BigInt::from(numer), BigInt::from(denom)))
}

/// Labeled graphs on up to 8 vertices, via the edge-mask encoding.
fn graphs() -> impl Strategy<Value = Graph> {
    (0usize..=8)
        .prop_flat_map(|n| (Just(n), any::<u64>()))
        .prop_map(|(n, mask)| {
            let bits = n.saturating_sub(1) * n / 2;
            graph_from_edge_mask(n, mask & ((1u64 << bits) - 1))
        })
}

/// Exact rational value of a fixed-point decimal rendering.
fn decimal_value(text: &str) -> Rational {
    let negative = text.starts_with('-');
    let digits = text.trim_start_matches('-');
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    let numer = BigInt::from_str(&format!("{int_part}{frac_part}")).unwrap();
    let denom = BigInt::from(10u8).pow(frac_part.len() as u32);
    let value = Rational::new(numer, denom);
    if negative {
        -value
    } else {
        value
    }
}

proptest! {
    #[test]
    fn radical_text_round_trip(a in radical_sums()) {
        let rendered = a.to_string();
        prop_assert_eq!(rendered.parse::<RadicalSum>().unwrap(), a);
    }

    #[test]
    fn radical_add_is_commutative_and_associative(
        a in radical_sums(),
        b in radical_sums(),
        c in radical_sums(),
    ) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn radical_scale_distributes(a in radical_sums(), b in radical_sums(), q in rationals()) {
        prop_assert_eq!((&a + &b).scale(&q), a.scale(&q) + b.scale(&q));
    }

    #[test]
    fn radical_compare_is_a_total_order(
        a in radical_sums(),
        b in radical_sums(),
        c in radical_sums(),
    ) {
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        prop_assert_eq!(a.cmp(&a), Ordering::Equal);
        if a.cmp(&b) != Ordering::Greater && b.cmp(&c) != Ordering::Greater {
            prop_assert_ne!(a.cmp(&c), Ordering::Greater);
        }
    }

    #[test]
    fn radical_compare_matches_decimals(a in radical_sums(), b in radical_sums()) {
        let da = decimal_value(&a.to_decimal(30));
        let db = decimal_value(&b.to_decimal(30));
        let slack = Rational::new(BigInt::from(2), BigInt::from(10u8).pow(30));
        match a.cmp(&b) {
            Ordering::Less => prop_assert!(da < &db + &slack),
            Ordering::Greater => prop_assert!(db < &da + &slack),
            Ordering::Equal => prop_assert_eq!(da, db),
        }
    }

    #[test]
    fn sqrt_pulls_out_square_factors(n in 1u64..=10_000, k in 1u64..=10_000) {
        let direct = RadicalSum::sqrt_integer(n * k * k).unwrap();
        let scaled = RadicalSum::sqrt_integer(n)
            .unwrap()
            .scale(&Rational::from_integer(BigInt::from(k)));
        prop_assert_eq!(direct, scaled);
    }

    #[test]
    fn handshake_and_census_totals(g in graphs()) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        prop_assert_eq!(g.degree_census().total_edges(), g.edge_count());
    }

    #[test]
    fn complement_is_an_involution(g in graphs()) {
        let back = g.complement().complement();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn vertex_removal_shrinks_order_and_keeps_handshake(g in graphs(), pick in any::<prop::sample::Index>()) {
        if g.vertex_count() == 0 {
            return Ok(());
        }
        let v = pick.index(g.vertex_count());
        let mut h = g.clone();
        h.remove_vertex(v).unwrap();
        prop_assert_eq!(h.vertex_count(), g.vertex_count() - 1);
        prop_assert_eq!(h.degrees().iter().sum::<usize>(), 2 * h.edge_count());
        prop_assert_eq!(h.edge_count(), g.edge_count() - g.degree(v));
    }

    /// Weaker form of the edge bound: removing any edge strictly lowers
    /// the index.
    #[test]
    fn edge_removal_is_strictly_monotone(g in graphs(), pick in any::<prop::sample::Index>()) {
        let edges: Vec<_> = g.edges().collect();
        if edges.is_empty() {
            return Ok(());
        }
        let (u, v) = edges[pick.index(edges.len())];
        let mut h = g.clone();
        h.remove_edge(u, v).unwrap();
        prop_assert_eq!(sombor_index(&h).cmp(&sombor_index(&g)), Ordering::Less);
        prop_assert!(edge_removal_bound(&g, u, v).unwrap().holds);
    }

    #[test]
    fn edge_list_round_trip(g in graphs()) {
        let text = render_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip(g in graphs()) {
        let text = render_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Complement of an r-regular graph is (n-1-r)-regular with a
    /// one-entry census.
    #[test]
    fn regular_complement_census(n in 3usize..=16) {
        for g in [generate(&FamilySpec::one(Family::Cycle, n).unwrap()),
                  generate(&FamilySpec::one(Family::Complete, n).unwrap())] {
            let r = g.degree(0);
            let co = g.complement();
            let expected: DegreeCensus = [((n - 1 - r, n - 1 - r), co.edge_count())]
                .into_iter()
                .filter(|&(_, c)| c > 0)
                .collect();
            prop_assert_eq!(co.degree_census(), expected);
        }
    }

    /// The ladder is the Cartesian product of a path with one edge, up to
    /// the factor order: swapping factors relabels but keeps the census
    /// and the index.
    #[test]
    fn ladder_is_a_path_prism(n in 1usize..=20) {
        let ladder = generate(&FamilySpec::one(Family::Ladder, n).unwrap());
        let path = generate(&FamilySpec::one(Family::Path, n).unwrap());
        let k2 = generate(&FamilySpec::one(Family::Complete, 2).unwrap());
        let swapped = cartesian_product(&k2, &path);
        prop_assert_eq!(swapped.degree_census(), ladder.degree_census());
        prop_assert_eq!(sombor_index(&swapped), sombor_index(&ladder));
    }
}
