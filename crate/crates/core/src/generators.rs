//! Constructors for every named graph family, each validated against its
//! parameter domain at [`FamilySpec`] construction time.
//!
//! Chain cacti are built block by block: consecutive blocks share one cut
//! vertex, end blocks carry exactly one cut vertex, and within an internal
//! block the two cut vertices sit at a fixed distance along the block's
//! cycle (1 for ortho, 2 for meta, opposite for para).

use crate::graph::Graph;
use crate::products::{cartesian_product, corona, join};
use std::fmt;
use std::str::FromStr;

/// The graph families with closed-form Sombor indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    CompleteBipartite,
    Wheel,
    Ladder,
    Friendship,
    Book,
    DutchWindmill,
    Grid,
    TriangularChain,
    ParaSquareChain,
    OrthoSquareChain,
    OrthoHexChain,
    ParaHexChain,
    MetaHexChain,
    PathCorona,
    CycleCorona,
}

impl Family {
    pub const ALL: [Family; 19] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Star,
        Family::CompleteBipartite,
        Family::Wheel,
        Family::Ladder,
        Family::Friendship,
        Family::Book,
        Family::DutchWindmill,
        Family::Grid,
        Family::TriangularChain,
        Family::ParaSquareChain,
        Family::OrthoSquareChain,
        Family::OrthoHexChain,
        Family::ParaHexChain,
        Family::MetaHexChain,
        Family::PathCorona,
        Family::CycleCorona,
    ];

    /// Canonical lowercase name used in the `family:params` text form.
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::CompleteBipartite => "completebipartite",
            Family::Wheel => "wheel",
            Family::Ladder => "ladder",
            Family::Friendship => "friendship",
            Family::Book => "book",
            Family::DutchWindmill => "dutchwindmill",
            Family::Grid => "grid",
            Family::TriangularChain => "triangularchain",
            Family::ParaSquareChain => "parasquarechain",
            Family::OrthoSquareChain => "orthosquarechain",
            Family::OrthoHexChain => "orthohexchain",
            Family::ParaHexChain => "parahexchain",
            Family::MetaHexChain => "metahexchain",
            Family::PathCorona => "pathcorona",
            Family::CycleCorona => "cyclecorona",
        }
    }

    /// Number of integer parameters the family takes.
    pub fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite | Family::DutchWindmill | Family::Grid => 2,
            _ => 1,
        }
    }

    /// Smallest admissible value per parameter.
    fn minimums(self) -> [usize; 2] {
        match self {
            Family::Cycle | Family::CycleCorona => [3, 1],
            Family::Wheel => [4, 1],
            Family::DutchWindmill => [3, 2],
            Family::Grid => [3, 3],
            _ => [1, 1],
        }
    }

    /// Human-readable domain constraint, used in error messages.
    pub fn domain(self) -> &'static str {
        match self {
            Family::Cycle | Family::CycleCorona => "n >= 3",
            Family::Wheel => "n >= 4",
            Family::DutchWindmill => "n >= 3 and m >= 2",
            Family::Grid => "m >= 3 and n >= 3",
            _ => "n >= 1",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|family| family.name() == s)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{family} takes {expected} parameter(s), got {got}")]
    WrongParameterCount {
        family: Family,
        expected: usize,
        got: usize,
    },
    #[error("{family}{params:?} outside domain ({requirement})")]
    OutOfDomain {
        family: Family,
        params: Vec<usize>,
        requirement: &'static str,
    },
    #[error("invalid parameter {0:?}")]
    InvalidParameter(String),
}

/// A family plus parameters, e.g. `grid:7,9` or `dutchwindmill:5,3`.
///
/// Construction validates arity and the family's parameter domain, so a
/// `FamilySpec` can always be generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    params: [usize; 2],
}

impl FamilySpec {
    pub fn new(family: Family, params: &[usize]) -> Result<Self, FamilyError> {
        let arity = family.arity();
        if params.len() != arity {
            return Err(FamilyError::WrongParameterCount {
                family,
                expected: arity,
                got: params.len(),
            });
        }
        let minimums = family.minimums();
        if params.iter().zip(minimums).any(|(&p, min)| p < min) {
            return Err(FamilyError::OutOfDomain {
                family,
                params: params.to_vec(),
                requirement: family.domain(),
            });
        }
        let mut stored = [0usize; 2];
        stored[..arity].copy_from_slice(params);
        Ok(FamilySpec {
            family,
            params: stored,
        })
    }

    pub fn one(family: Family, n: usize) -> Result<Self, FamilyError> {
        Self::new(family, &[n])
    }

    pub fn two(family: Family, a: usize, b: usize) -> Result<Self, FamilyError> {
        Self::new(family, &[a, b])
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &[usize] {
        &self.params[..self.family.arity()]
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.params[0])?;
        if self.family.arity() == 2 {
            write!(f, ",{}", self.params[1])?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| FamilyError::InvalidParameter(s.to_string()))?;
        let family: Family = name.trim().parse()?;
        let params = rest
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| FamilyError::InvalidParameter(p.trim().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        FamilySpec::new(family, &params)
    }
}

/// Builds the family member described by `spec`.
pub fn generate(spec: &FamilySpec) -> Graph {
    let p = spec.params();
    match spec.family() {
        Family::Path => path(p[0]),
        Family::Cycle => cycle(p[0]),
        Family::Complete => complete(p[0]),
        Family::Star => star(p[0]),
        Family::CompleteBipartite => join(&Graph::new(p[0]), &Graph::new(p[1])),
        Family::Wheel => join(&cycle(p[0] - 1), &complete(1)),
        Family::Ladder => cartesian_product(&path(p[0]), &complete(2)),
        Family::Friendship => join(&complete(1), &matching(p[0])),
        Family::Book => cartesian_product(&star(p[0]), &complete(2)),
        Family::DutchWindmill => dutch_windmill(p[0], p[1]),
        Family::Grid => cartesian_product(&path(p[0]), &path(p[1])),
        Family::TriangularChain => cactus_chain(p[0], 3, 1),
        Family::ParaSquareChain => cactus_chain(p[0], 4, 2),
        Family::OrthoSquareChain => cactus_chain(p[0], 4, 1),
        Family::OrthoHexChain => cactus_chain(p[0], 6, 1),
        Family::ParaHexChain => cactus_chain(p[0], 6, 3),
        Family::MetaHexChain => cactus_chain(p[0], 6, 2),
        Family::PathCorona => corona(&path(p[0]), &complete(1)).expect("nonempty base"),
        Family::CycleCorona => corona(&cycle(p[0]), &complete(1)).expect("nonempty base"),
    }
}

fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge_unchecked(i - 1, i);
    }
    g
}

fn cycle(n: usize) -> Graph {
    debug_assert!(n >= 3);
    let mut g = path(n);
    g.add_edge_unchecked(n - 1, 0);
    g
}

fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge_unchecked(u, v);
        }
    }
    g
}

/// `K_{1,n}`: hub 0 plus `n` leaves.
fn star(n: usize) -> Graph {
    let mut g = Graph::new(n + 1);
    for leaf in 1..=n {
        g.add_edge_unchecked(0, leaf);
    }
    g
}

/// `n` disjoint edges on `2n` vertices.
fn matching(n: usize) -> Graph {
    let mut g = Graph::new(2 * n);
    for i in 0..n {
        g.add_edge_unchecked(2 * i, 2 * i + 1);
    }
    g
}

/// `m` cycles of length `n` sharing exactly one common vertex (vertex 0).
fn dutch_windmill(n: usize, m: usize) -> Graph {
    debug_assert!(n >= 3 && m >= 2);
    let mut g = Graph::new(m * (n - 1) + 1);
    for blade in 0..m {
        let base = 1 + blade * (n - 1);
        g.add_edge_unchecked(0, base);
        for i in 0..n - 2 {
            g.add_edge_unchecked(base + i, base + i + 1);
        }
        g.add_edge_unchecked(base + n - 2, 0);
    }
    g
}

/// Chain of `blocks` cycles of length `len` joined through cut vertices.
/// Within an internal block the next cut vertex sits at distance
/// `cut_step` (along the block's cycle) from the previous one.
fn cactus_chain(blocks: usize, len: usize, cut_step: usize) -> Graph {
    debug_assert!(blocks >= 1 && (1..len).contains(&cut_step));
    let mut g = Graph::new(len + (blocks - 1) * (len - 1));
    for i in 1..len {
        g.add_edge_unchecked(i - 1, i);
    }
    g.add_edge_unchecked(len - 1, 0);
    let mut cut = 0;
    let mut base = len;
    for _ in 1..blocks {
        g.add_edge_unchecked(cut, base);
        for i in 0..len - 2 {
            g.add_edge_unchecked(base + i, base + i + 1);
        }
        g.add_edge_unchecked(base + len - 2, cut);
        cut = base + cut_step - 1;
        base += len - 1;
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DegreeCensus;

    fn gen(text: &str) -> Graph {
        generate(&text.parse().unwrap())
    }

    fn census(entries: &[((usize, usize), usize)]) -> DegreeCensus {
        entries.iter().copied().collect()
    }

    #[test]
    fn spec_text_round_trip() {
        for text in ["path:4", "grid:7,9", "dutchwindmill:5,3", "cyclecorona:6"] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            "cycle:2".parse::<FamilySpec>(),
            Err(FamilyError::OutOfDomain { .. })
        ));
        assert!(matches!(
            "wheel:3".parse::<FamilySpec>(),
            Err(FamilyError::OutOfDomain { .. })
        ));
        assert!(matches!(
            "grid:2,5".parse::<FamilySpec>(),
            Err(FamilyError::OutOfDomain { .. })
        ));
        assert!(matches!(
            "dutchwindmill:3".parse::<FamilySpec>(),
            Err(FamilyError::WrongParameterCount { .. })
        ));
        assert!(matches!(
            "pentagon:5".parse::<FamilySpec>(),
            Err(FamilyError::UnknownFamily(_))
        ));
        assert!(matches!(
            "path:x".parse::<FamilySpec>(),
            Err(FamilyError::InvalidParameter(_))
        ));
        assert!(matches!(
            "path".parse::<FamilySpec>(),
            Err(FamilyError::InvalidParameter(_))
        ));
    }

    /// Vertex and edge counts for every family, checked across a parameter
    /// sweep against the closed counting formulas.
    #[test]
    fn vertex_and_edge_counts() {
        let count = |spec: &FamilySpec| {
            let g = generate(spec);
            (g.vertex_count(), g.edge_count())
        };
        for n in 1..=12 {
            if n >= 1 {
                assert_eq!(count(&"path".parse_with(n)), (n, n - 1));
                assert_eq!(count(&"complete".parse_with(n)), (n, n * (n - 1) / 2));
                assert_eq!(count(&"star".parse_with(n)), (n + 1, n));
                assert_eq!(count(&"ladder".parse_with(n)), (2 * n, 3 * n - 2));
                assert_eq!(count(&"friendship".parse_with(n)), (2 * n + 1, 3 * n));
                assert_eq!(count(&"book".parse_with(n)), (2 * n + 2, 3 * n + 1));
                assert_eq!(count(&"triangularchain".parse_with(n)), (2 * n + 1, 3 * n));
                assert_eq!(count(&"parasquarechain".parse_with(n)), (3 * n + 1, 4 * n));
                assert_eq!(count(&"orthosquarechain".parse_with(n)), (3 * n + 1, 4 * n));
                assert_eq!(count(&"orthohexchain".parse_with(n)), (5 * n + 1, 6 * n));
                assert_eq!(count(&"parahexchain".parse_with(n)), (5 * n + 1, 6 * n));
                assert_eq!(count(&"metahexchain".parse_with(n)), (5 * n + 1, 6 * n));
                assert_eq!(count(&"pathcorona".parse_with(n)), (2 * n, 2 * n - 1));
            }
            if n >= 3 {
                assert_eq!(count(&"cycle".parse_with(n)), (n, n));
                assert_eq!(count(&"cyclecorona".parse_with(n)), (2 * n, 2 * n));
            }
            if n >= 4 {
                assert_eq!(count(&"wheel".parse_with(n)), (n, 2 * n - 2));
            }
        }
        for m in 1..=6 {
            for n in 1..=6 {
                let spec = FamilySpec::two(Family::CompleteBipartite, m, n).unwrap();
                assert_eq!(count(&spec), (m + n, m * n));
            }
        }
        for n in 3..=7 {
            for m in 2..=5 {
                let spec = FamilySpec::two(Family::DutchWindmill, n, m).unwrap();
                assert_eq!(count(&spec), (m * (n - 1) + 1, m * n));
            }
        }
        for m in 3..=7 {
            for n in 3..=7 {
                let spec = FamilySpec::two(Family::Grid, m, n).unwrap();
                assert_eq!(count(&spec), (m * n, 2 * m * n - m - n));
            }
        }
    }

    // Small helper so the sweep above stays readable.
    trait ParseWith {
        fn parse_with(&self, n: usize) -> FamilySpec;
    }
    impl ParseWith for &str {
        fn parse_with(&self, n: usize) -> FamilySpec {
            FamilySpec::one(self.parse().unwrap(), n).unwrap()
        }
    }

    #[test]
    fn named_censuses() {
        assert_eq!(
            gen("path:4").degree_census(),
            census(&[((1, 2), 2), ((2, 2), 1)])
        );
        assert_eq!(
            gen("dutchwindmill:3,2").degree_census(),
            census(&[((2, 2), 2), ((2, 4), 4)])
        );
        assert_eq!(
            gen("triangularchain:2").degree_census(),
            census(&[((2, 2), 2), ((2, 4), 4)])
        );
        assert_eq!(
            gen("grid:3,3").degree_census(),
            census(&[((2, 3), 8), ((3, 4), 4)])
        );
    }

    /// Degree censuses of the cactus chains, as used in the closed-form
    /// derivations.
    #[test]
    fn chain_censuses() {
        for n in 2..=9 {
            let expect = |entries: Vec<((usize, usize), usize)>| {
                entries
                    .into_iter()
                    .filter(|&(_, c)| c > 0)
                    .collect::<DegreeCensus>()
            };
            assert_eq!(
                gen(&format!("triangularchain:{n}")).degree_census(),
                expect(vec![((2, 2), 2), ((2, 4), 2 * n), ((4, 4), n - 2)])
            );
            assert_eq!(
                gen(&format!("parasquarechain:{n}")).degree_census(),
                expect(vec![((2, 2), 4), ((2, 4), 4 * n - 4)])
            );
            assert_eq!(
                gen(&format!("orthosquarechain:{n}")).degree_census(),
                expect(vec![((2, 2), n + 2), ((2, 4), 2 * n), ((4, 4), n - 2)])
            );
            assert_eq!(
                gen(&format!("orthohexchain:{n}")).degree_census(),
                expect(vec![((2, 2), 3 * n + 2), ((2, 4), 2 * n), ((4, 4), n - 2)])
            );
            assert_eq!(
                gen(&format!("parahexchain:{n}")).degree_census(),
                expect(vec![((2, 2), 2 * n + 4), ((2, 4), 4 * n - 4)])
            );
            assert_eq!(
                gen(&format!("metahexchain:{n}")).degree_census(),
                expect(vec![((2, 2), 2 * n + 4), ((2, 4), 4 * n - 4)])
            );
        }
    }

    /// Every chain generator output is a cactus: each edge lies on exactly
    /// one cycle, i.e. every biconnected block is a single cycle.
    #[test]
    fn chains_are_cacti() {
        for family in [
            "triangularchain",
            "parasquarechain",
            "orthosquarechain",
            "orthohexchain",
            "parahexchain",
            "metahexchain",
        ] {
            for n in 1..=6 {
                let g = gen(&format!("{family}:{n}"));
                assert!(g.is_connected());
                for (vertices, edges) in biconnected_blocks(&g) {
                    assert_eq!(edges, vertices, "block of {family}:{n} is not a cycle");
                }
            }
        }
    }

    /// Biconnected blocks as (vertex count, edge count) pairs, by Tarjan's
    /// low-link algorithm. Test-only oracle, independent of the generators.
    fn biconnected_blocks(g: &Graph) -> Vec<(usize, usize)> {
        let n = g.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0usize;
        let mut stack: Vec<(usize, usize)> = Vec::new();
        let mut blocks = Vec::new();

        fn collect(
            stack: &mut Vec<(usize, usize)>,
            until: (usize, usize),
            blocks: &mut Vec<(usize, usize)>,
        ) {
            let mut vertices = std::collections::BTreeSet::new();
            let mut edges = 0;
            loop {
                let e = stack.pop().expect("edge on stack");
                vertices.insert(e.0);
                vertices.insert(e.1);
                edges += 1;
                if e == until {
                    break;
                }
            }
            blocks.push((vertices.len(), edges));
        }

        // Iterative DFS to keep recursion depth independent of chain length.
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut call: Vec<(usize, usize, Vec<usize>, usize)> =
                vec![(root, usize::MAX, g.neighbors(root).collect(), 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some((u, parent, nbrs, idx)) = call.last_mut() {
                if *idx < nbrs.len() {
                    let v = nbrs[*idx];
                    *idx += 1;
                    if disc[v] == usize::MAX {
                        stack.push((*u, v));
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        let (u, v) = (*u, v);
                        call.push((v, u, g.neighbors(v).collect(), 0));
                    } else if v != *parent && disc[v] < disc[*u] {
                        stack.push((*u, v));
                        low[*u] = low[*u].min(disc[v]);
                    }
                } else {
                    let (u, parent) = (*u, *parent);
                    call.pop();
                    if let Some((p, _, _, _)) = call.last() {
                        debug_assert_eq!(*p, parent);
                        low[parent] = low[parent].min(low[u]);
                        if low[u] >= disc[parent] {
                            collect(&mut stack, (parent, u), &mut blocks);
                        }
                    }
                }
            }
        }
        blocks
    }
}
