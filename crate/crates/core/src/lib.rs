//! Exact computation of the Sombor index of simple graphs.
//!
//! The Sombor index of a graph `G` is `SO(G) = sum over edges uv of
//! sqrt(d_u^2 + d_v^2)`, where `d_u` is the degree of `u`. Every value in
//! this crate is an exact sum of rational multiples of square roots
//! ([`RadicalSum`]), so equalities and inequalities are decided exactly,
//! with no floating point anywhere.
//!
//! What's here:
//!
//! - [`radical`]: canonical-form radical sums with decidable comparison,
//!   decimal rendering, and a round-trip text grammar.
//! - [`graph`]: simple undirected graphs, degree queries, complement,
//!   connectivity, and the edge census by endpoint degrees.
//! - [`generators`]: paths, cycles, stars, wheels, ladders, books,
//!   friendship and windmill graphs, grids, six cactus-chain families, and
//!   corona families, addressable as `"family:params"` text.
//! - [`products`]: join, corona, Cartesian product and `k`-subdivision.
//! - [`index`]: the Sombor index itself, closed forms per family (with
//!   as-printed variants where the published formulas disagree with the
//!   direct computation), and the removal/complement/join/corona/
//!   subdivision bounds as exactly-checked [`BoundReport`]s.
//! - [`search`]: exhaustive scan of small labeled graphs for natural
//!   Sombor values; order 7 yields the minimum, 60, attained by `K_{3,4}`.
//! - [`formats`]: DIMACS-flavored edge lists and graph6.
//!
//! The `sombor` binary exposes all of it on the command line.

pub mod formats;
pub mod generators;
pub mod graph;
pub mod index;
pub mod products;
pub mod radical;
pub mod search;

pub use formats::{parse_edge_list, parse_graph6, render_edge_list, render_graph6};
pub use generators::{generate, Family, FamilyError, FamilySpec};
pub use graph::{DegreeCensus, Graph, GraphError};
pub use index::{
    closed_form, closed_form_as_printed, corona_lower_bound, corona_lower_bound_as_printed,
    edge_removal_bound, join_lower_bound, nordhaus_gaddum_lower, sombor_from_census, sombor_index,
    subdivision_bounds, subdivision_formula, vertex_removal_bound, BoundReport, Relation,
    SomborError,
};
pub use products::{cartesian_product, corona, join, k_subdivision, ProductError};
pub use radical::{ParseRadicalError, RadicalError, RadicalSum, Rational};
pub use search::{
    enumerate_graphs, graph_from_edge_mask, natural_sombor_search, pythagorean_edge_filter,
    SearchError, SearchHit, MAX_SEARCH_ORDER,
};
