//! Simple undirected graphs with index-addressed vertices.
//!
//! Vertices are `0..n`; adjacency is kept as sorted neighbor sets so edge
//! iteration order is deterministic and every derived output reproducible.
//! Connectivity is a queryable property rather than an invariant:
//! complements, deletions and exhaustive enumeration all need disconnected
//! graphs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// Error raised by graph construction and mutation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge ({0}, {1}) already present")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// `n` isolated vertices, zero edges.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph on `n` vertices from an edge list.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.adj.len(),
            })
        }
    }

    /// Inserts the edge `uv`. Loops, out-of-range endpoints and duplicate
    /// edges are each distinct errors.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Insertion for internal constructors whose indices are correct by
    /// construction.
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.adj.len() && v < self.adj.len());
        debug_assert!(!self.adj[u].contains(&v));
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.adj[u].contains(&v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        Ok(())
    }

    /// Deletes `v` and its incident edges, shifting the indices of all
    /// later vertices down by one (relative order preserved).
    pub fn remove_vertex(&mut self, v: usize) -> Result<(), GraphError> {
        self.check_vertex(v)?;
        self.adj.remove(v);
        for set in &mut self.adj {
            set.remove(&v);
            *set = set.iter().map(|&u| if u > v { u - 1 } else { u }).collect();
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].contains(&v)
    }

    /// Degree of `u`. Panics when `u` is out of range.
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    /// Minimum degree over all vertices; `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(BTreeSet::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(BTreeSet::len).max()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().copied()
    }

    /// All edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// The complement graph: edge present exactly when absent here.
    pub fn complement(&self) -> Graph {
        let n = self.adj.len();
        let mut out = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.adj[u].contains(&v) {
                    out.add_edge_unchecked(u, v);
                }
            }
        }
        out
    }

    /// Breadth-first connectivity check. The empty graph counts as
    /// connected; two or more isolated vertices do not.
    pub fn is_connected(&self) -> bool {
        let n = self.adj.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut visited = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    visited += 1;
                    queue.push_back(v);
                }
            }
        }
        visited == n
    }

    /// Counts edges by unordered endpoint-degree pair.
    pub fn degree_census(&self) -> DegreeCensus {
        let degrees = self.degrees();
        let mut census = DegreeCensus::default();
        for (u, v) in self.edges() {
            census.record(degrees[u], degrees[v]);
        }
        census
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.vertex_count(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Count of edges per unordered endpoint-degree pair `(a, b)` with `a <= b`.
///
/// The census determines the Sombor index completely, and it is the object
/// every closed-form derivation manipulates.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DegreeCensus {
    counts: BTreeMap<(usize, usize), usize>,
}

impl DegreeCensus {
    /// Adds one edge with endpoint degrees `a` and `b` (order irrelevant).
    pub fn record(&mut self, a: usize, b: usize) {
        let key = (a.min(b), a.max(b));
        *self.counts.entry(key).or_insert(0) += 1;
    }

    /// Edge count at the unordered pair `(a, b)`.
    pub fn count(&self, a: usize, b: usize) -> usize {
        self.counts.get(&(a.min(b), a.max(b))).copied().unwrap_or(0)
    }

    /// Entries in increasing key order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    pub fn total_edges(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl FromIterator<((usize, usize), usize)> for DegreeCensus {
    fn from_iter<I: IntoIterator<Item = ((usize, usize), usize)>>(iter: I) -> Self {
        let mut census = DegreeCensus::default();
        for ((a, b), count) in iter {
            if count > 0 {
                let key = (a.min(b), a.max(b));
                *census.counts.entry(key).or_insert(0) += count;
            }
        }
        census
    }
}

/// Renders as `{(a,b):count, ...}` in increasing key order.
impl fmt::Display for DegreeCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, ((a, b), c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({a},{b}):{c}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for DegreeCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn census(entries: &[((usize, usize), usize)]) -> DegreeCensus {
        entries.iter().copied().collect()
    }

    #[test]
    fn construction_and_errors() {
        let mut g = Graph::new(2);
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.add_edge(0, 0), Err(GraphError::SelfLoop(0)));
        assert_eq!(g.add_edge(0, 1), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(
            g.add_edge(0, 2),
            Err(GraphError::VertexOutOfRange {
                vertex: 2,
                order: 2
            })
        );
        assert_eq!(Graph::new(0).vertex_count(), 0);
        assert_eq!(Graph::new(5).edge_count(), 0);
    }

    #[test]
    fn remove_edge_and_vertex() {
        let mut k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        k3.remove_edge(0, 2).unwrap();
        assert_eq!(k3.degree_census(), census(&[((1, 2), 2)]));
        assert_eq!(k3.remove_edge(0, 2), Err(GraphError::MissingEdge(0, 2)));

        let mut p3 = path(3);
        p3.remove_vertex(1).unwrap();
        assert_eq!(p3.vertex_count(), 2);
        assert_eq!(p3.edge_count(), 0);

        let mut c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        c4.remove_vertex(0).unwrap();
        assert_eq!(c4.vertex_count(), 3);
        assert_eq!(c4.degree_census(), census(&[((1, 2), 2)]));
        assert_eq!(
            c4.remove_vertex(3),
            Err(GraphError::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
    }

    #[test]
    fn vertex_removal_reindexes_in_order() {
        // 0-2 and 3-4 edges survive removal of vertex 1 as 0-1 and 2-3.
        let mut g = Graph::from_edges(5, [(0, 2), (3, 4), (1, 3)]).unwrap();
        g.remove_vertex(1).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn complement_examples() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.complement().edge_count(), 0);

        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.complement().degree_census(), census(&[((2, 2), 5)]));

        let g = Graph::from_edges(4, [(0, 1), (2, 3), (1, 2)]).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn census_examples() {
        assert_eq!(path(4).degree_census(), census(&[((1, 2), 2), ((2, 2), 1)]));

        let k34 = Graph::from_edges(7, (0..3).flat_map(|u| (3..7).map(move |v| (u, v)))).unwrap();
        assert_eq!(k34.degree_census(), census(&[((3, 4), 12)]));
        assert_eq!(k34.degree_census().total_edges(), 12);
    }

    #[test]
    fn connectivity() {
        assert!(path(5).is_connected());
        assert!(!Graph::new(2).is_connected());
        assert!(Graph::new(0).is_connected());
        assert!(Graph::new(1).is_connected());
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert!(!g.is_connected());
    }

    #[test]
    fn handshake() {
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4)]).unwrap();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        assert_eq!(g.degree_census().total_edges(), g.edge_count());
    }
}
