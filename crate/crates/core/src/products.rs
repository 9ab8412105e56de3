//! Graph operations: join, corona, Cartesian product and edge subdivision.
//!
//! Index layouts are fixed so that every construction is deterministic:
//! in `join(g, h)` and `corona(g, h)` the vertices of `g` keep their
//! indices and new vertices follow; in `cartesian_product(g, h)` the pair
//! `(u, v)` gets index `u * |V(h)| + v`.

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProductError {
    #[error("corona requires a nonempty base graph")]
    EmptyCoronaBase,
    #[error("subdivision factor must be at least 1")]
    ZeroSubdivision,
}

/// Disjoint union of `g` and `h` plus every cross edge. Vertices of `h`
/// are shifted by `|V(g)|`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n_g = g.vertex_count();
    let n_h = h.vertex_count();
    let mut out = Graph::new(n_g + n_h);
    for (u, v) in g.edges() {
        out.add_edge_unchecked(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge_unchecked(n_g + u, n_g + v);
    }
    for u in 0..n_g {
        for v in 0..n_h {
            out.add_edge_unchecked(u, n_g + v);
        }
    }
    out
}

/// One copy of `g` and `|V(g)|` copies of `h`, with vertex `i` of `g`
/// adjacent to every vertex of copy `i`. Copy `i` occupies the index block
/// starting at `|V(g)| + i * |V(h)|`.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph, ProductError> {
    let n_g = g.vertex_count();
    if n_g == 0 {
        return Err(ProductError::EmptyCoronaBase);
    }
    let n_h = h.vertex_count();
    let mut out = Graph::new(n_g * (1 + n_h));
    for (u, v) in g.edges() {
        out.add_edge_unchecked(u, v);
    }
    for i in 0..n_g {
        let base = n_g + i * n_h;
        for (u, v) in h.edges() {
            out.add_edge_unchecked(base + u, base + v);
        }
        for v in 0..n_h {
            out.add_edge_unchecked(i, base + v);
        }
    }
    Ok(out)
}

/// Cartesian product: `(u, u')` is adjacent to `(v, v')` when `u = v` and
/// `u'v'` is an edge of `h`, or `u' = v'` and `uv` is an edge of `g`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let n_g = g.vertex_count();
    let n_h = h.vertex_count();
    let index = |u: usize, v: usize| u * n_h + v;
    let mut out = Graph::new(n_g * n_h);
    for u in 0..n_g {
        for (a, b) in h.edges() {
            out.add_edge_unchecked(index(u, a), index(u, b));
        }
    }
    for v in 0..n_h {
        for (a, b) in g.edges() {
            out.add_edge_unchecked(index(a, v), index(b, v));
        }
    }
    out
}

/// Replaces every edge with a path of length `k` through `k - 1` fresh
/// degree-2 vertices. `k = 1` is the identity; original vertices keep
/// their indices and degrees.
pub fn k_subdivision(g: &Graph, k: usize) -> Result<Graph, ProductError> {
    if k == 0 {
        return Err(ProductError::ZeroSubdivision);
    }
    if k == 1 {
        return Ok(g.clone());
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut out = Graph::new(n + m * (k - 1));
    let mut next = n;
    for (u, v) in g.edges() {
        let mut prev = u;
        for _ in 0..k - 1 {
            out.add_edge_unchecked(prev, next);
            prev = next;
            next += 1;
        }
        out.add_edge_unchecked(prev, v);
    }
    Ok(out)
}
