//! Command-line front end for the minimum-rank engine.
//!
//! Exit codes: 0 success, 2 input/parse errors, 3 enumeration budget
//! refusals, 1 anything else (including verification mismatches).

mod cache;

use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use minrank_core::canon::canonical_graph6;
use minrank_core::embedding::{
    find_embeddings, find_optimal_triple_in, increase_profile, triple_conclusions_hold,
    triple_properties,
};
use minrank_core::field::FieldSpec;
use minrank_core::forbidden::{
    catalog_report, find_forbidden, is_mr_le_3, read_catalog, ForbiddenCatalog,
};
use minrank_core::graph::{named, Graph};
use minrank_core::graph6;
use minrank_core::minrank::{
    min_rank, min_rank_at_most, min_rank_set, mr_via_cut_vertex, Budget, MRSet, DEFAULT_BUDGET,
};
use minrank_core::Error;

const BUDGET_ENV: &str = "MINRANK_BUDGET";

#[derive(Parser)]
#[command(name = "minrank", version, about = "Exact minimum rank of graphs over small prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum rank of one graph.
    Mr {
        /// graph6 code or a named graph (e.g. p5, k3,3, full_house)
        graph: Option<String>,
        /// named graph from the registry
        #[arg(long)]
        named: Option<String>,
        /// field order p in {2, 3, 5, 7}
        #[arg(long, default_value_t = 2)]
        field: u8,
        /// enumeration budget (default from MINRANK_BUDGET or 10^8)
        #[arg(long)]
        budget: Option<u64>,
        /// decompose at cut vertices instead of brute force
        #[arg(long)]
        cut_vertex: bool,
        #[arg(long)]
        json: bool,
        /// append-only result cache file
        #[arg(long)]
        cache: Option<PathBuf>,
        /// recompute and cross-check the cache instead of trusting it
        #[arg(long)]
        no_cache: bool,
    },
    /// All minimum-rank-attaining matrices and their column-space classes.
    Mrset {
        graph: Option<String>,
        #[arg(long)]
        named: Option<String>,
        #[arg(long, default_value_t = 2)]
        field: u8,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive minimal forbidden subgraph search.
    Search {
        #[arg(long, default_value_t = 2)]
        field: u8,
        /// rank bound: members have mr >= k+1, deletions <= k
        #[arg(long)]
        k: usize,
        /// search all graphs with up to this many vertices (<= 9)
        #[arg(long)]
        max_n: usize,
        /// worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// catalog output file
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Decide mr <= 3 over GF(2) for each graph6 line on stdin.
    Check {
        /// certified rank-3 catalog file
        #[arg(long)]
        catalog: PathBuf,
        /// re-check a sample of verdicts against brute force
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Increase profile and optimal triple of a host over a pattern.
    Triples {
        /// host graph: graph6 code or named graph
        host: String,
        /// pattern graph: named graph or graph6 code
        pattern: String,
        #[arg(long, default_value_t = 2)]
        field: u8,
        #[arg(long)]
        budget: Option<u64>,
    },
}

/// Engine errors plus the CLI's own verification failures.
enum CliError {
    Engine(Error),
    /// A recomputation disagreed with a cached or cataloged value.
    Mismatch(String),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Engine(err)
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Engine(Error::Io(err))
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Engine(err) => err.fmt(f),
            CliError::Mismatch(msg) => msg.fmt(f),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &CliError) -> u8 {
    match err {
        CliError::Engine(
            Error::Graph6(_)
            | Error::UnsupportedField(_)
            | Error::CatalogFormat(_)
            | Error::InvalidVertex { .. },
        ) => 2,
        CliError::Engine(Error::BudgetExceeded { .. }) => 3,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Mr {
            graph,
            named,
            field,
            budget,
            cut_vertex,
            json,
            cache,
            no_cache,
        } => cmd_mr(
            resolve_graph(graph.as_deref(), named.as_deref())?,
            FieldSpec::new(field)?,
            resolve_budget(budget),
            cut_vertex,
            json,
            cache.as_deref(),
            no_cache,
        ),
        Command::Mrset {
            graph,
            named,
            field,
            budget,
            json,
        } => cmd_mrset(
            resolve_graph(graph.as_deref(), named.as_deref())?,
            FieldSpec::new(field)?,
            resolve_budget(budget),
            json,
        ),
        Command::Search {
            field,
            k,
            max_n,
            jobs,
            out,
            budget,
        } => cmd_search(
            FieldSpec::new(field)?,
            k,
            max_n,
            jobs,
            &out,
            resolve_budget(budget),
        ),
        Command::Check {
            catalog,
            verify,
            budget,
        } => cmd_check(&catalog, verify, resolve_budget(budget)),
        Command::Triples {
            host,
            pattern,
            field,
            budget,
        } => cmd_triples(
            resolve_graph(Some(&host), None)?,
            resolve_graph(Some(&pattern), None)?,
            FieldSpec::new(field)?,
            resolve_budget(budget),
        ),
    }
}

/// Accept either a registry name or a graph6 code.
fn resolve_graph(positional: Option<&str>, named_flag: Option<&str>) -> Result<Graph, Error> {
    if let Some(name) = named_flag {
        return named(name)
            .ok_or_else(|| Error::Graph6(format!("unknown named graph '{name}'")));
    }
    let Some(text) = positional else {
        return Err(Error::Graph6(
            "expected a graph6 code or --named NAME".into(),
        ));
    };
    if let Some(g) = named(text) {
        return Ok(g);
    }
    graph6::decode(text)
}

fn resolve_budget(flag: Option<u64>) -> Budget {
    flag.or_else(|| {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_BUDGET)
}

fn describe(g: &Graph) -> String {
    format!("{} (n={})", graph6::encode(g), g.n())
}

#[allow(clippy::too_many_arguments)]
fn cmd_mr(
    g: Graph,
    field: FieldSpec,
    budget: Budget,
    cut_vertex: bool,
    json: bool,
    cache_path: Option<&Path>,
    no_cache: bool,
) -> Result<(), CliError> {
    // cache keys are canonical graph6 codes, available up to the
    // canonicalization cap
    let cache_key = match cache_path {
        Some(_) if g.n() <= 10 => Some(cache::CacheKey {
            graph6: canonical_graph6(&g)?,
            p: field.p(),
        }),
        _ => None,
    };
    let cached = match (cache_path, &cache_key) {
        (Some(path), Some(key)) => cache::lookup(path, key)?,
        _ => None,
    };

    let (mr, method) = match &cached {
        Some(entry) if !no_cache && !cut_vertex => (entry.mr, "cache"),
        _ if cut_vertex => (mr_via_cut_vertex(field, &g, budget)?, "cut_vertex"),
        _ => (min_rank(field, &g, budget)?, "brute_force"),
    };

    if let (Some(path), Some(key)) = (cache_path, &cache_key) {
        match &cached {
            Some(entry) => {
                if entry.mr != mr {
                    return Err(CliError::Mismatch(format!(
                        "cache mismatch for {}: cached mr = {}, recomputed mr = {}",
                        key.graph6, entry.mr, mr
                    )));
                }
            }
            None => cache::append(
                path,
                key,
                &cache::CachedResult {
                    mr,
                    mrset_digest: None,
                },
            )?,
        }
    }

    if json {
        let value = serde_json::json!({
            "schema": 1,
            "command": "mr",
            "graph6": graph6::encode(&g),
            "n": g.n(),
            "field": field.p(),
            "mr": mr,
            "method": method,
        });
        println!("{value}");
    } else {
        println!("mr(GF({}), {}) = {mr}  [{method}]", field.p(), describe(&g));
    }
    Ok(())
}

fn cmd_mrset(g: Graph, field: FieldSpec, budget: Budget, json: bool) -> Result<(), CliError> {
    let set = min_rank_set(field, &g, budget)?;
    if json {
        let matrices: Vec<Vec<Vec<u8>>> = set
            .matrices()
            .iter()
            .map(|m| (0..m.rows()).map(|i| m.row(i).to_vec()).collect())
            .collect();
        let value = serde_json::json!({
            "schema": 1,
            "command": "mrset",
            "graph6": graph6::encode(&g),
            "field": field.p(),
            "mr": set.mr(),
            "matrices": matrices,
            "classes": set.classes(),
        });
        println!("{value}");
        return Ok(());
    }
    println!(
        "mr(GF({}), {}) = {}; {} attaining matrices in {} column-space classes",
        field.p(),
        describe(&g),
        set.mr(),
        set.len(),
        set.classes().len()
    );
    for (i, m) in set.matrices().iter().enumerate() {
        println!("M{}:", i + 1);
        println!("{m}");
    }
    for (ci, class) in set.classes().iter().enumerate() {
        let labels: Vec<String> = class.iter().map(|&i| format!("M{}", i + 1)).collect();
        println!("C{} = {{{}}}", ci + 1, labels.join(", "));
    }
    Ok(())
}

fn cmd_search(
    field: FieldSpec,
    k: usize,
    max_n: usize,
    jobs: Option<usize>,
    out: &Path,
    budget: Budget,
) -> Result<(), CliError> {
    let catalog = match jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::CatalogFormat(format!("worker pool: {e}")))?;
            pool.install(|| find_forbidden(field, k, max_n, budget))?
        }
        None => find_forbidden(field, k, max_n, budget)?,
    };
    // the catalog is complete at this point; nothing partial ever hits disk
    let mut file = std::fs::File::create(out)?;
    minrank_core::forbidden::write_catalog(&catalog, &mut file)?;
    file.flush()?;
    print!("{}", catalog_report(&catalog).render());
    println!("catalog written to {}", out.display());
    Ok(())
}

fn cmd_check(catalog_path: &Path, verify: bool, budget: Budget) -> Result<(), CliError> {
    let catalog: ForbiddenCatalog = read_catalog(BufReader::new(std::fs::File::open(
        catalog_path,
    )?))?;
    let stdin = std::io::stdin();
    let mut mismatches = 0usize;
    let mut index = 0usize;
    for line in stdin.lock().lines() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        match graph6::decode(text).and_then(|g| Ok((g, is_mr_le_3(&g, &catalog)?))) {
            Ok((g, le3)) => {
                let verdict = if le3 { "mr<=3" } else { "mr>=4" };
                // --verify re-checks every fifth parsed graph by brute force
                if verify && index.is_multiple_of(5) {
                    let brute = min_rank_at_most(FieldSpec::gf2(), &g, 3, budget)?;
                    if brute != le3 {
                        mismatches += 1;
                        println!("{text}\t{verdict}\tVERIFY-MISMATCH(brute mr<=3: {brute})");
                        index += 1;
                        continue;
                    }
                    println!("{text}\t{verdict}\tverified");
                } else {
                    println!("{text}\t{verdict}");
                }
                index += 1;
            }
            Err(err) => println!("{text}\terror: {err}"),
        }
    }
    if mismatches > 0 {
        return Err(CliError::Mismatch(format!(
            "{mismatches} verification mismatches against brute force"
        )));
    }
    Ok(())
}

fn mask_labels(mask: u128, prefix: &str) -> String {
    let labels: Vec<String> = (0..128)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| format!("{prefix}{}", i + 1))
        .collect();
    format!("{{{}}}", labels.join(","))
}

fn cmd_triples(host: Graph, pattern: Graph, field: FieldSpec, budget: Budget) -> Result<(), CliError> {
    let mrset: MRSet = min_rank_set(field, &pattern, budget)?;
    let embeddings = find_embeddings(&host, &pattern);
    if embeddings.is_empty() {
        return Err(Error::NoInducedCopy.into());
    }
    println!("host: {}", describe(&host));
    println!(
        "pattern: {}  mr = {}, {} attaining matrices, {} classes",
        describe(&pattern),
        mrset.mr(),
        mrset.len(),
        mrset.classes().len()
    );
    for (ci, class) in mrset.classes().iter().enumerate() {
        let labels: Vec<String> = class.iter().map(|&i| format!("M{}", i + 1)).collect();
        println!("  C{} = {{{}}}", ci + 1, labels.join(","));
    }
    println!("induced copies: {}", embeddings.len());
    let emb = &embeddings[0];
    println!("using the first copy; pattern -> host map {:?}", emb.map());
    let outside = emb.complement_vertices();
    println!("outside vertices: {outside:?}");
    for &v in &outside {
        println!("  wt({v}) = {}", emb.vertex_weight(field, v)?);
    }
    let profile = increase_profile(emb, &mrset)?;
    for &v in &outside {
        let mask = profile.i_of_vertex(v);
        let classes: Vec<String> = profile
            .classes_contained(mask)
            .iter()
            .map(|c| format!("C{}", c + 1))
            .collect();
        println!(
            "  I_{v} = {}  class-level {{{}}}",
            mask_labels(mask, "M"),
            classes.join(",")
        );
    }
    for &(u, v) in profile.pairs() {
        println!(
            "  I_{{{u},{v}}} = {}  wt({u}{v}) = {}",
            mask_labels(profile.i_of_pair(u, v), "M"),
            profile.weight_of_pair(u, v)
        );
    }
    match find_optimal_triple_in(&profile)? {
        None => println!(
            "optimal triple: none — every matrix extends, so the host has the same minimum rank as the pattern"
        ),
        Some(triple) => {
            println!(
                "optimal triple: R = {:?}, S = {:?}, T = {:?}",
                triple.pairs, triple.endpoints, triple.vertices
            );
            println!(
                "  objective 2|R|+|T| = {}, |R| = {}, |S| = {}",
                triple.objective.0, triple.objective.1, triple.objective.2
            );
            println!(
                "  zero-weight pairs used: {}",
                if triple.uses_zero_weight_pair { "yes" } else { "no" }
            );
            let props = triple_properties(&profile, &triple);
            println!(
                "  P1 {} / P2 {} / P3 {} / P4 {}",
                hold(props.p1),
                hold(props.p2),
                hold(props.p3),
                hold(props.p4)
            );
            println!(
                "  minimality conclusions {}",
                hold(triple_conclusions_hold(&profile, &triple))
            );
            println!(
                "  |G-H| = {} vs 2|R|+|T| = {}",
                outside.len(),
                triple.objective.0
            );
        }
    }
    Ok(())
}

fn hold(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}
