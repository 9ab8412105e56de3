//! Command-line front end: compute Sombor indices from graph files,
//! generate families, verify closed forms against the direct oracle,
//! evaluate inequality bounds (on files or on seeded random graphs), run
//! the natural-index search, and emit degree-census tables.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sombor::{
    closed_form, closed_form_as_printed, corona_lower_bound, corona_lower_bound_as_printed,
    edge_removal_bound, generate, join_lower_bound, k_subdivision, natural_sombor_search,
    nordhaus_gaddum_lower, parse_edge_list, parse_graph6, render_edge_list, sombor_from_census,
    sombor_index, subdivision_bounds, subdivision_formula, vertex_removal_bound, BoundReport,
    DegreeCensus, Family, FamilySpec, Graph, RadicalSum,
};
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "sombor",
    version,
    about = "Exact Sombor index computations on simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Sombor index of a graph read from a file.
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
        /// Decimal digits printed next to the exact value.
        #[arg(long, default_value_t = 6)]
        digits: u32,
    },
    /// Generate a named family member and write it as an edge list.
    Generate {
        /// Family spec such as "path:7", "grid:7,9" or "dutchwindmill:5,3".
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a family's closed form against the direct oracle over a
    /// parameter range. Exits nonzero if any row mismatches.
    VerifyFamily {
        /// Family name, e.g. "path" or "grid".
        family: String,
        /// First parameter range, inclusive, e.g. "3..12".
        #[arg(long)]
        range: RangeArg,
        /// Second parameter range for two-parameter families.
        #[arg(long)]
        range2: Option<RangeArg>,
        /// Use the closed forms exactly as historically printed (the
        /// ladder, book and grid variants then mismatch the oracle).
        #[arg(long)]
        as_printed: bool,
    },
    /// Evaluate one inequality bound, either on graphs from files or on
    /// seeded random graphs (--fuzz). Exits nonzero if a checked bound
    /// fails to hold (degenerate cases excepted).
    Bounds {
        /// Graph file; omit when using --fuzz.
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        check: BoundCheck,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
        /// First endpoint (1-based) for --check edge.
        #[arg(long)]
        u: Option<usize>,
        /// Second endpoint (1-based) for --check edge.
        #[arg(long)]
        v: Option<usize>,
        /// Vertex (1-based) for --check vertex.
        #[arg(long)]
        vertex: Option<usize>,
        /// Subdivision factor for --check subdivision.
        #[arg(long)]
        k: Option<usize>,
        /// Second graph file for --check join / corona.
        #[arg(long)]
        with: Option<PathBuf>,
        /// For --check corona: use the right-hand side as historically
        /// printed (cross terms weighted by |V(H)|).
        #[arg(long)]
        as_printed: bool,
        /// Check the bound on this many seeded random graphs instead of a
        /// file.
        #[arg(long, conflicts_with = "file", requires = "seed")]
        fuzz: Option<usize>,
        /// RNG seed for --fuzz; all randomness is explicit.
        #[arg(long)]
        seed: Option<u64>,
        /// Largest random graph order for --fuzz.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        digits: u32,
    },
    /// Exhaustive scan for graphs with natural (positive integer) Sombor
    /// index, over all labeled graphs of order 1..=N.
    Search {
        #[arg(long)]
        max_n: usize,
        /// Report only connected hits.
        #[arg(long)]
        connected_only: bool,
    },
    /// Print the degree census of a graph.
    Census {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
        #[arg(long, value_enum, default_value_t = EmitFormat::Markdown)]
        emit: EmitFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitFormat {
    Markdown,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundCheck {
    /// SO(G-e) < SO(G) - |d_u - d_v|/sqrt(2)
    Edge,
    /// SO(G-v) < SO(G) - sum over incident edges of |d_u - d_v|/sqrt(2)
    Vertex,
    /// Nordhaus-Gaddum: SO(G) + SO(complement) >= pairwise degree spread
    Ng,
    /// SO(G v H) against the join lower bound
    Join,
    /// SO(G o H) against the corona lower bound
    Corona,
    /// Subdivision formula sandwiched by the min/max-degree bounds
    Subdivision,
}

/// Inclusive integer range written `a..b` (or a single value `a`).
#[derive(Clone, Copy)]
struct RangeArg {
    lo: usize,
    hi: usize,
}

impl RangeArg {
    fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid range bound {t:?}"))
        };
        match s.split_once("..") {
            Some((a, b)) => {
                let (lo, hi) = (parse(a)?, parse(b)?);
                if lo > hi {
                    return Err(format!("empty range {s:?}"));
                }
                Ok(RangeArg { lo, hi })
            }
            None => {
                let v = parse(s)?;
                Ok(RangeArg { lo: v, hi: v })
            }
        }
    }
}

impl fmt::Display for RangeArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Compute {
            file,
            format,
            digits,
        } => {
            let g = load_graph(&file, format)?;
            print_value("sombor index", &sombor_index(&g), digits);
            println!("vertices: {}", g.vertex_count());
            println!("edges: {}", g.edge_count());
            println!("degree census: {}", g.degree_census());
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate { spec, out } => {
            let spec: FamilySpec = spec.parse()?;
            let text = render_edge_list(&generate(&spec));
            match out {
                Some(path) => std::fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyFamily {
            family,
            range,
            range2,
            as_printed,
        } => verify_family(&family, range, range2, as_printed),
        Command::Bounds {
            file,
            check,
            format,
            u,
            v,
            vertex,
            k,
            with,
            as_printed,
            fuzz,
            seed,
            max_n,
            digits,
        } => {
            if let Some(count) = fuzz {
                let seed = seed.expect("clap enforces --seed with --fuzz");
                fuzz_bounds(check, count, seed, max_n, as_printed, k)
            } else {
                let file = file.ok_or_else(|| anyhow!("a graph file (or --fuzz) is required"))?;
                let g = load_graph(&file, format)?;
                file_bounds(&g, check, u, v, vertex, k, with, format, as_printed, digits)
            }
        }
        Command::Search {
            max_n,
            connected_only,
        } => search(max_n, connected_only),
        Command::Census { file, format, emit } => {
            let census = load_graph(&file, format)?.degree_census();
            match emit {
                EmitFormat::Markdown => {
                    println!("| degree u | degree v | edges |");
                    println!("|---------:|---------:|------:|");
                    for ((a, b), count) in census.iter() {
                        println!("| {a:>8} | {b:>8} | {count:>5} |");
                    }
                }
                EmitFormat::Csv => {
                    println!("degree_u,degree_v,edges");
                    for ((a, b), count) in census.iter() {
                        println!("{a},{b},{count}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_graph(path: &Path, format: GraphFormat) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let graph = match format {
        GraphFormat::Edgelist => parse_edge_list(&text)
            .with_context(|| format!("parsing {} as edge list", path.display()))?,
        GraphFormat::Graph6 => {
            parse_graph6(&text).with_context(|| format!("parsing {} as graph6", path.display()))?
        }
    };
    Ok(graph)
}

fn print_value(label: &str, value: &RadicalSum, digits: u32) {
    println!("{label} (exact): {value}");
    println!("{label} (decimal): {}", value.to_decimal(digits));
}

fn verify_family(
    name: &str,
    range: RangeArg,
    range2: Option<RangeArg>,
    as_printed: bool,
) -> Result<ExitCode> {
    let family: Family = name.parse()?;
    match (family.arity(), range2) {
        (2, None) => bail!("{family} takes two parameters; provide --range2"),
        (1, Some(_)) => bail!("{family} takes one parameter; --range2 does not apply"),
        _ => {}
    }
    let second: Vec<Option<usize>> = match range2 {
        Some(r) => r.iter().map(Some).collect(),
        None => vec![None],
    };
    println!(
        "family: {family} (formulas {})",
        if as_printed {
            "as printed"
        } else {
            "as implemented"
        }
    );
    println!(
        "{:<12} {:<44} {:<44} verdict",
        "params", "closed form", "oracle"
    );
    let mut mismatches = 0usize;
    let mut checked = 0usize;
    for a in range.iter() {
        for &b in &second {
            let params: Vec<usize> = std::iter::once(a).chain(b).collect();
            let label = params
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",");
            let spec = match FamilySpec::new(family, &params) {
                Ok(spec) => spec,
                Err(err) => {
                    println!("{label:<12} skipped: {err}");
                    continue;
                }
            };
            let formula = if as_printed {
                closed_form_as_printed(&spec)
            } else {
                closed_form(&spec)
            };
            let formula = match formula {
                Ok(value) => value,
                Err(err) => {
                    println!("{label:<12} skipped: {err}");
                    continue;
                }
            };
            let oracle = sombor_index(&generate(&spec));
            checked += 1;
            let verdict = if formula == oracle {
                "Equal"
            } else {
                mismatches += 1;
                "MISMATCH"
            };
            println!(
                "{label:<12} {:<44} {:<44} {verdict}",
                formula.to_string(),
                oracle.to_string()
            );
        }
    }
    println!("checked {checked} parameter(s), {mismatches} mismatch(es)");
    Ok(if mismatches == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn print_report(name: &str, report: &BoundReport, digits: u32) {
    println!("bound: {name}");
    print_value("lhs", &report.lhs, digits);
    print_value("rhs", &report.rhs, digits);
    println!("relation: lhs {} rhs", report.relation);
    println!("holds: {}", report.holds);
    if let Some(note) = report.note {
        println!("note: {note}");
    }
}

#[allow(clippy::too_many_arguments)]
fn file_bounds(
    g: &Graph,
    check: BoundCheck,
    u: Option<usize>,
    v: Option<usize>,
    vertex: Option<usize>,
    k: Option<usize>,
    with: Option<PathBuf>,
    format: GraphFormat,
    as_printed: bool,
    digits: u32,
) -> Result<ExitCode> {
    let one_based = |name: &str, value: Option<usize>| -> Result<usize> {
        let value = value.ok_or_else(|| anyhow!("--check requires --{name}"))?;
        if value == 0 {
            bail!("vertex indices on the command line are 1-based");
        }
        Ok(value - 1)
    };
    let report = match check {
        BoundCheck::Edge => {
            let u = one_based("u", u)?;
            let v = one_based("v", v)?;
            edge_removal_bound(g, u, v)?
        }
        BoundCheck::Vertex => vertex_removal_bound(g, one_based("vertex", vertex)?)?,
        BoundCheck::Ng => nordhaus_gaddum_lower(g),
        BoundCheck::Join | BoundCheck::Corona => {
            let path = with.ok_or_else(|| anyhow!("--check join/corona requires --with FILE"))?;
            let h = load_graph(&path, format)?;
            if matches!(check, BoundCheck::Join) {
                join_lower_bound(g, &h)
            } else if as_printed {
                corona_lower_bound_as_printed(g, &h)?
            } else {
                corona_lower_bound(g, &h)?
            }
        }
        BoundCheck::Subdivision => {
            let k = k.ok_or_else(|| anyhow!("--check subdivision requires --k"))?;
            let (lower, upper) = subdivision_bounds(g, k)?;
            print_value("subdivision formula", &subdivision_formula(g, k)?, digits);
            print_report("lower <= formula", &lower, digits);
            print_report("formula <= upper", &upper, digits);
            let ok = lower.holds && upper.holds;
            println!("holds: {ok}");
            return Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            });
        }
    };
    let name = match check {
        BoundCheck::Edge => "edge removal",
        BoundCheck::Vertex => "vertex removal",
        BoundCheck::Ng => "Nordhaus-Gaddum lower",
        BoundCheck::Join => "join lower",
        BoundCheck::Corona => {
            if as_printed {
                "corona lower (as printed)"
            } else {
                "corona lower"
            }
        }
        BoundCheck::Subdivision => unreachable!(),
    };
    print_report(name, &report, digits);
    let acceptable = report.holds || report.note.is_some();
    Ok(if acceptable {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

/// Random graph with each edge present with probability 1/2.
fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
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

fn random_connected_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_n.max(2));
        let g = random_graph(rng, n);
        if g.is_connected() {
            return g;
        }
    }
}

fn fuzz_bounds(
    check: BoundCheck,
    count: usize,
    seed: u64,
    max_n: usize,
    as_printed: bool,
    k: Option<usize>,
) -> Result<ExitCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    #[derive(Default)]
    struct Tally {
        instances: usize,
        violations: usize,
        first: Option<String>,
    }
    impl Tally {
        fn fail(&mut self, desc: String) {
            self.violations += 1;
            self.first.get_or_insert(desc);
        }
        fn report(&mut self, desc: impl FnOnce() -> String, report: &BoundReport) {
            self.instances += 1;
            if !report.holds && report.note.is_none() {
                self.fail(format!(
                    "{}: lhs = {}, rhs = {}",
                    desc(),
                    report.lhs,
                    report.rhs
                ));
            }
        }
    }
    let mut tally = Tally::default();
    for case in 0..count {
        match check {
            BoundCheck::Edge => {
                let g = random_connected_graph(&mut rng, max_n);
                for (u, v) in g.edges().collect::<Vec<_>>() {
                    let report = edge_removal_bound(&g, u, v)?;
                    tally.report(|| format!("case {case}, edge ({u},{v})"), &report);
                }
            }
            BoundCheck::Vertex => {
                let g = random_connected_graph(&mut rng, max_n);
                for v in 0..g.vertex_count() {
                    if g.degree(v) == 0 {
                        continue;
                    }
                    let report = vertex_removal_bound(&g, v)?;
                    tally.report(|| format!("case {case}, vertex {v}"), &report);
                }
            }
            BoundCheck::Ng => {
                let g = random_connected_graph(&mut rng, max_n);
                tally.report(|| format!("case {case}"), &nordhaus_gaddum_lower(&g));
            }
            BoundCheck::Join | BoundCheck::Corona => {
                let n_g = rng.gen_range(1..=max_n);
                let n_h = rng.gen_range(1..=max_n);
                let g = random_graph(&mut rng, n_g);
                let h = random_graph(&mut rng, n_h);
                let report = if matches!(check, BoundCheck::Join) {
                    join_lower_bound(&g, &h)
                } else if as_printed {
                    corona_lower_bound_as_printed(&g, &h)?
                } else {
                    corona_lower_bound(&g, &h)?
                };
                tally.report(|| format!("case {case} (|G|={n_g}, |H|={n_h})"), &report);
            }
            BoundCheck::Subdivision => {
                let g = random_connected_graph(&mut rng, max_n);
                let k = k.unwrap_or_else(|| rng.gen_range(2..=5));
                let (lower, upper) = subdivision_bounds(&g, k)?;
                let formula = subdivision_formula(&g, k)?;
                let oracle = sombor_index(&k_subdivision(&g, k)?);
                tally.instances += 1;
                if formula != oracle {
                    tally.fail(format!("case {case}: formula {formula} != oracle {oracle}"));
                }
                tally.report(|| format!("case {case}, lower (k={k})"), &lower);
                tally.report(|| format!("case {case}, upper (k={k})"), &upper);
            }
        }
    }
    println!(
        "{count} random case(s) (seed {seed}, max order {max_n}): \
         {} instance(s) checked, {} violation(s)",
        tally.instances, tally.violations
    );
    if let Some(first) = tally.first {
        println!("first violation: {first}");
    }
    Ok(if tally.violations == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn search(max_n: usize, connected_only: bool) -> Result<ExitCode> {
    let hits = natural_sombor_search(max_n)?;
    let shown: Vec<_> = hits
        .iter()
        .filter(|h| !connected_only || h.connected)
        .collect();
    println!("{:<8} {:<7} {:<10} census", "value", "order", "connected");
    for hit in &shown {
        println!(
            "{:<8} {:<7} {:<10} {}",
            hit.value,
            hit.order,
            if hit.connected { "yes" } else { "no" },
            hit.graph.degree_census()
        );
    }
    match shown.first() {
        Some(min) => {
            let k34: DegreeCensus = [((3, 4), 12)].into_iter().collect();
            let description = if min.graph.degree_census() == k34 {
                "K_{3,4}".to_string()
            } else {
                format!("order {}", min.order)
            };
            // sanity: the tabulated value is the exact index
            debug_assert_eq!(
                sombor_from_census(&min.graph.degree_census()),
                format!("{}", min.value).parse().unwrap()
            );
            println!(
                "minimum natural Sombor index: {} ({description})",
                min.value
            );
        }
        None => println!("no natural Sombor index up to order {max_n}"),
    }
    Ok(ExitCode::SUCCESS)
}
