//! Exhaustive search over small labeled graphs for natural (positive
//! integer) Sombor index values.
//!
//! Every labeled graph on `n <= 8` vertices is an edge subset of `K_n`,
//! encoded as a bitmask over the `n(n-1)/2` vertex pairs in lexicographic
//! order. The Sombor index is a positive integer exactly when the graph has
//! at least one edge and every edge contribution `sqrt(d_u^2 + d_v^2)` is an
//! integer: the contributions are positive, and square roots of distinct
//! square-free integers cannot cancel, so [`pythagorean_edge_filter`] is a
//! sound and complete pre-filter.
//!
//! The mask space is partitioned into contiguous ranges scanned by worker
//! threads that share nothing; results are merged back in range order, so
//! output is deterministic.

use crate::graph::Graph;
use crate::index::sombor_index;
use num_traits::ToPrimitive;

/// Largest supported order: `2^28` masks at `n = 8` is still feasible.
pub const MAX_SEARCH_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("order {0} outside the supported range 1..={MAX_SEARCH_ORDER}")]
    OrderOutOfRange(usize),
}

/// One graph whose Sombor index is a natural number.
#[derive(Debug, Clone)]
pub struct SearchHit {
    pub graph: Graph,
    /// The Sombor index, a positive integer.
    pub value: u64,
    /// Vertex count of the graph.
    pub order: usize,
    pub connected: bool,
}

/// The vertex pairs of `K_n` in lexicographic order; bit `i` of an edge
/// mask refers to `pairs[i]`.
fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n.saturating_sub(1) * n / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// The labeled graph on `n` vertices encoded by `mask`.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    for (bit, (u, v)) in vertex_pairs(n).into_iter().enumerate() {
        if mask >> bit & 1 == 1 {
            g.add_edge_unchecked(u, v);
        }
    }
    g
}

/// Streams every labeled graph on `n` vertices exactly once, in edge-mask
/// ascending order, optionally restricted to connected graphs.
pub fn enumerate_graphs(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>, SearchError> {
    if !(1..=MAX_SEARCH_ORDER).contains(&n) {
        return Err(SearchError::OrderOutOfRange(n));
    }
    let total = 1u64 << (n * (n - 1) / 2);
    Ok((0..total)
        .map(move |mask| graph_from_edge_mask(n, mask))
        .filter(move |g| !connected_only || g.is_connected()))
}

/// True when every edge `uv` has `d_u^2 + d_v^2` a perfect square;
/// vacuously true for edgeless graphs.
pub fn pythagorean_edge_filter(g: &Graph) -> bool {
    let degrees = g.degrees();
    g.edges().all(|(u, v)| {
        let s = (degrees[u] * degrees[u] + degrees[v] * degrees[v]) as u64;
        let root = s.isqrt();
        root * root == s
    })
}

/// All graphs of order `1..=max_n` (connected or not, at least one edge)
/// whose Sombor index is a natural number, sorted by value then order.
pub fn natural_sombor_search(max_n: usize) -> Result<Vec<SearchHit>, SearchError> {
    if !(1..=MAX_SEARCH_ORDER).contains(&max_n) {
        return Err(SearchError::OrderOutOfRange(max_n));
    }
    let mut hits = Vec::new();
    for n in 1..=max_n {
        hits.extend(search_order(n));
    }
    hits.sort_by_key(|hit| (hit.value, hit.order));
    Ok(hits)
}

/// Scans every edge mask of order `n` in parallel chunks.
fn search_order(n: usize) -> Vec<SearchHit> {
    let bits = n * (n - 1) / 2;
    let total = 1u64 << bits;
    let workers = std::thread::available_parallelism()
        .map_or(1, |p| p.get())
        .min(16) as u64;
    let chunk = total.div_ceil(workers);
    let masks: Vec<u64> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let lo = w * chunk;
                let hi = total.min(lo + chunk);
                scope.spawn(move || scan_masks(n, lo, hi))
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker"))
            .collect()
    });
    masks
        .into_iter()
        .map(|mask| {
            let graph = graph_from_edge_mask(n, mask);
            let value = sombor_index(&graph)
                .as_positive_integer()
                .expect("filtered graphs have natural index")
                .to_u64()
                .expect("small search values");
            let connected = graph.is_connected();
            SearchHit {
                graph,
                value,
                order: n,
                connected,
            }
        })
        .collect()
}

/// Returns the masks in `[lo, hi)` whose graphs pass the Pythagorean edge
/// filter and have at least one edge. Works on raw masks to keep the scan
/// allocation-free.
fn scan_masks(n: usize, lo: u64, hi: u64) -> Vec<u64> {
    let pairs = vertex_pairs(n);
    // degrees are at most 7, so d_u^2 + d_v^2 <= 98
    let mut square = [false; 99];
    for s in 0..=9u64 {
        if (s * s) < 99 {
            square[(s * s) as usize] = true;
        }
    }
    let mut out = Vec::new();
    let mut degrees = [0u32; MAX_SEARCH_ORDER];
    'mask: for mask in lo.max(1)..hi {
        degrees[..n].fill(0);
        let mut rest = mask;
        while rest != 0 {
            let bit = rest.trailing_zeros() as usize;
            let (u, v) = pairs[bit];
            degrees[u] += 1;
            degrees[v] += 1;
            rest &= rest - 1;
        }
        let mut rest = mask;
        while rest != 0 {
            let bit = rest.trailing_zeros() as usize;
            let (u, v) = pairs[bit];
            if !square[(degrees[u] * degrees[u] + degrees[v] * degrees[v]) as usize] {
                continue 'mask;
            }
            rest &= rest - 1;
        }
        out.push(mask);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::generate;
    use crate::graph::DegreeCensus;

    fn gen(text: &str) -> Graph {
        generate(&text.parse().unwrap())
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(1, false).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(3, true).unwrap().count(), 4);
        // labeled connected graphs on 4 vertices
        assert_eq!(enumerate_graphs(4, true).unwrap().count(), 38);
        assert!(matches!(
            enumerate_graphs(0, false),
            Err(SearchError::OrderOutOfRange(0))
        ));
        assert!(matches!(
            enumerate_graphs(9, false),
            Err(SearchError::OrderOutOfRange(9))
        ));
    }

    #[test]
    fn filter_examples() {
        assert!(pythagorean_edge_filter(&gen("completebipartite:3,4")));
        assert!(!pythagorean_edge_filter(&gen("cycle:4")));
        assert!(pythagorean_edge_filter(&Graph::new(5)));
    }

    /// Soundness and completeness of the pre-filter, exhaustively at small
    /// order: natural Sombor index iff (filter passes and >= 1 edge).
    #[test]
    fn filter_is_exact_up_to_order_5() {
        for n in 1..=5 {
            for g in enumerate_graphs(n, false).unwrap() {
                let natural = sombor_index(&g).is_positive_integer();
                let filtered = pythagorean_edge_filter(&g) && g.edge_count() > 0;
                assert_eq!(natural, filtered, "disagreement at {g:?}");
            }
        }
    }

    #[test]
    fn search_small_orders_find_nothing() {
        assert!(natural_sombor_search(2).unwrap().is_empty());
        assert!(natural_sombor_search(6).unwrap().is_empty());
    }

    #[test]
    fn search_order_7_finds_the_35_bipartite_graphs() {
        let hits = natural_sombor_search(7).unwrap();
        // the labeled copies of K_{3,4}: one per choice of the 3-side
        assert_eq!(hits.len(), 35);
        let expected: DegreeCensus = [((3, 4), 12)].into_iter().collect();
        for hit in &hits {
            assert_eq!(hit.value, 60);
            assert_eq!(hit.order, 7);
            assert!(hit.connected);
            assert_eq!(hit.graph.degree_census(), expected);
            assert_eq!(sombor_index(&hit.graph), "60".parse().unwrap());
        }
    }

    #[test]
    fn mask_round_trip() {
        let g = graph_from_edge_mask(4, 0b111111);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(graph_from_edge_mask(4, 0).edge_count(), 0);
        // bit 0 is the pair (0, 1)
        let g = graph_from_edge_mask(3, 0b001);
        assert!(g.has_edge(0, 1) && !g.has_edge(0, 2) && !g.has_edge(1, 2));
    }
}
