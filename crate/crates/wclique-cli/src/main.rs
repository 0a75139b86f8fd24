//! Command-line front end: solve and enumerate on weighted graph
//! files, match attributed graphs, benchmark a dataset directory,
//! summarize dataset statistics, and generate random instances.
//!
//! Exit codes: 0 success, 2 usage error, 3 input/parse error, 4 budget
//! exhausted without finding any clique.

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use wclique::bench::{default_bench_configs, run_benchmark, write_csv, BenchOptions};
use wclique::gen::{generate_random_attributed, generate_random_weighted};
use wclique::graph::{AttributedGraph, WeightedGraph};
use wclique::io::{load_graph_path, load_gxl, save_graph};
use wclique::matching::{graph_kernel, AttributeKernel};
use wclique::solver::{
    enumerate_basic, enumerate_pivot, solve, EstimateKind, PivotStrategy, SolverConfig,
};
use wclique::stats::dataset_stats;

const INPUT_ERROR: u8 = 3;
const BUDGET_EXHAUSTED: u8 = 4;

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn input(message: impl fmt::Display) -> Self {
        CliError {
            code: INPUT_ERROR,
            message: message.to_string(),
        }
    }
}

type CliResult = Result<(), CliError>;

#[derive(Parser)]
#[command(
    name = "wclique",
    version,
    about = "Maximum weight clique solving and graph matching"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SearchOpts {
    /// Pivot selection strategy.
    #[arg(long, default_value = "clique", value_parser = clap::value_parser!(PivotStrategy))]
    pivot: PivotStrategy,
    /// Recursion budget (anytime stop).
    #[arg(long)]
    budget: Option<u64>,
    /// RNG seed (random pivoting).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Find a maximum weight clique of a scalar-weighted graph.
    Solve {
        file: PathBuf,
        #[command(flatten)]
        search: SearchOpts,
        /// Upper-bound estimate for pruning.
        #[arg(long, default_value = "deg", value_parser = parse_generic_estimate)]
        estimate: EstimateKind,
        /// Write the anytime trace (CSV) to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Enumerate all maximal weight cliques with their weights.
    Enumerate {
        file: PathBuf,
        #[arg(long, default_value = "none", value_parser = clap::value_parser!(PivotStrategy))]
        pivot: PivotStrategy,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Match two attributed graphs via their association graph.
    Match {
        graph_x: PathBuf,
        graph_y: PathBuf,
        /// Attribute kernel.
        #[arg(long, value_parser = clap::value_parser!(AttributeKernel))]
        kernel: AttributeKernel,
        /// Width for the rbf kernel.
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[command(flatten)]
        search: SearchOpts,
        #[arg(long, default_value = "cs", value_parser = clap::value_parser!(EstimateKind))]
        estimate: EstimateKind,
    },
    /// Run the pairwise-matching benchmark over a graph directory.
    Bench {
        dir: PathBuf,
        #[arg(long, default_value = "dot", value_parser = clap::value_parser!(AttributeKernel))]
        kernel: AttributeKernel,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        /// Comma-separated ascending recursion budgets.
        #[arg(long, default_value = "2,5,10,50,100,500,1000,5000,10000,50000", value_parser = parse_budgets)]
        budgets: std::vec::Vec<u64>,
        /// Output CSV path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also match each graph against itself.
        #[arg(long)]
        include_self: bool,
        /// JSON file mapping string attribute values to numeric codes
        /// (for GXL inputs).
        #[arg(long)]
        string_map: Option<PathBuf>,
    },
    /// Print node/edge statistics for a graph directory.
    Stats {
        dir: PathBuf,
        #[arg(long)]
        string_map: Option<PathBuf>,
    },
    /// Generate a random graph file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        /// Scalar weight range "lo:hi" (weighted graph).
        #[arg(long)]
        weights: Option<String>,
        /// Attribute dimension (attributed graph).
        #[arg(long)]
        attr_dim: Option<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_generic_estimate(s: &str) -> Result<EstimateKind, String> {
    let estimate: EstimateKind = s.parse()?;
    if estimate == EstimateKind::CauchySchwarz {
        return Err("the cs estimate needs association-graph context; use `match`".into());
    }
    Ok(estimate)
}

fn parse_budgets(s: &str) -> Result<Vec<u64>, String> {
    let budgets: Vec<u64> = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<u64>()
                .map_err(|e| format!("bad budget `{x}`: {e}"))
        })
        .collect::<Result<_, _>>()?;
    if budgets.is_empty() || budgets[0] == 0 || budgets.windows(2).any(|w| w[0] >= w[1]) {
        return Err("budgets must be a nonempty ascending list of positive counts".into());
    }
    Ok(budgets)
}

fn resolve_kernel(kernel: AttributeKernel, sigma: f64) -> Result<AttributeKernel, CliError> {
    match kernel {
        AttributeKernel::Rbf { .. } => AttributeKernel::rbf(sigma).map_err(CliError::input),
        k => Ok(k),
    }
}

fn load_weighted_file(path: &Path) -> Result<WeightedGraph, CliError> {
    let g =
        load_graph_path(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    g.try_to_weighted()
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn load_attributed_file(path: &Path) -> Result<AttributedGraph, CliError> {
    load_graph_path(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn load_string_map(path: &Path) -> Result<HashMap<String, f64>, CliError> {
    let data =
        std::fs::read(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    serde_json::from_slice(&data).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

/// All graphs in a directory (`.graph.json` and `.gxl`), named by file
/// stem, sorted by filename.
fn load_dir(
    dir: &Path,
    string_map: Option<&HashMap<String, f64>>,
) -> Result<Vec<(String, AttributedGraph)>, CliError> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::input(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            let name = p.file_name().and_then(|n| n.to_str()).unwrap_or("");
            name.ends_with(".graph.json") || name.ends_with(".gxl")
        })
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::input(format!(
            "{}: no .graph.json or .gxl files",
            dir.display()
        )));
    }
    paths
        .into_iter()
        .map(|p| {
            let graph = if p.extension().is_some_and(|x| x == "gxl") {
                let data = std::fs::read(&p)
                    .map_err(|e| CliError::input(format!("{}: {e}", p.display())))?;
                load_gxl(&data, string_map)
                    .map_err(|e| CliError::input(format!("{}: {e}", p.display())))?
            } else {
                load_attributed_file(&p)?
            };
            let name = p
                .file_name()
                .and_then(|n| n.to_str())
                .unwrap_or("graph")
                .trim_end_matches(".gxl")
                .trim_end_matches(".graph.json")
                .to_string();
            Ok((name, graph))
        })
        .collect()
}

fn format_clique(z: &WeightedGraph, clique: &wclique::VertexSet) -> String {
    if clique.is_empty() {
        "(empty)".to_string()
    } else {
        z.external_ids(clique).join(" ")
    }
}

fn run_solve(
    file: &Path,
    search: &SearchOpts,
    estimate: EstimateKind,
    trace: Option<&Path>,
) -> CliResult {
    let z = load_weighted_file(file)?;
    let trace_points: Vec<u64> = if trace.is_some() {
        let ladder = [2, 5, 10, 50, 100, 500, 1000, 5000, 10000, 50000];
        ladder
            .into_iter()
            .filter(|&a| search.budget.is_none_or(|b| a <= b))
            .collect()
    } else {
        Vec::new()
    };
    let config = SolverConfig {
        pivot: search.pivot,
        estimate,
        budget: search.budget,
        rng_seed: search.seed,
        trace_points,
        ..Default::default()
    };
    let report = solve(&z, &config).map_err(CliError::input)?;
    println!("clique: {}", format_clique(&z, &report.best_clique));
    println!("weight: {}", report.best_weight);
    println!("recursions: {}", report.recursions);
    println!("completed: {}", report.completed);
    if let Some(path) = trace {
        let mut text = String::from("recursions,best_weight\n");
        for point in &report.trace {
            text.push_str(&format!("{},{}\n", point.recursions, point.best_weight));
        }
        std::fs::write(path, text)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    }
    if !report.completed && report.best_clique.is_empty() {
        return Err(CliError {
            code: BUDGET_EXHAUSTED,
            message: "budget exhausted before any clique was found".into(),
        });
    }
    Ok(())
}

fn run_enumerate(file: &Path, pivot: PivotStrategy, seed: u64) -> CliResult {
    let z = load_weighted_file(file)?;
    let mut lines = Vec::new();
    let count = match pivot {
        PivotStrategy::None => enumerate_basic(&z, |c| {
            lines.push((z.clique_weight(c).unwrap(), format_clique(&z, c)));
        }),
        _ => enumerate_pivot(&z, pivot, seed, |c| {
            lines.push((z.clique_weight(c).unwrap(), format_clique(&z, c)));
        })
        .map_err(CliError::input)?,
    };
    for (weight, clique) in &lines {
        println!("{clique}  weight={weight}");
    }
    println!("# {} maximal cliques, {} recursions", lines.len(), count);
    Ok(())
}

fn run_match(
    graph_x: &Path,
    graph_y: &Path,
    kernel: AttributeKernel,
    sigma: f64,
    search: &SearchOpts,
    estimate: EstimateKind,
) -> CliResult {
    let x = load_attributed_file(graph_x)?;
    let y = load_attributed_file(graph_y)?;
    let kernel = resolve_kernel(kernel, sigma)?;
    let config = SolverConfig {
        pivot: search.pivot,
        estimate,
        budget: search.budget,
        rng_seed: search.seed,
        ..Default::default()
    };
    let result = graph_kernel(&x, &y, &kernel, &config).map_err(CliError::input)?;
    println!("kernel: {}", result.kernel_value);
    println!("length_x: {}", result.length_x);
    println!("length_y: {}", result.length_y);
    println!("similarity: {}", result.similarity);
    let morphism = if result.morphism.is_empty() {
        "(empty)".to_string()
    } else {
        result
            .morphism
            .pairs()
            .iter()
            .map(|&(i, j)| format!("{}->{}", x.id(i), y.id(j)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("morphism: {morphism}");
    println!("recursions: {}", result.report.recursions);
    println!("completed: {}", result.report.completed);
    if !result.report.completed && result.morphism.is_empty() {
        return Err(CliError {
            code: BUDGET_EXHAUSTED,
            message: "budget exhausted before any mapping was found".into(),
        });
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_bench(
    dir: &Path,
    kernel: AttributeKernel,
    sigma: f64,
    budgets: Vec<u64>,
    out: Option<&Path>,
    seed: u64,
    include_self: bool,
    string_map: Option<&Path>,
) -> CliResult {
    let codes = string_map.map(load_string_map).transpose()?;
    let dataset = load_dir(dir, codes.as_ref())?;
    let opts = BenchOptions {
        kernel: resolve_kernel(kernel, sigma)?,
        configs: default_bench_configs(),
        budgets,
        seed,
        include_self,
    };
    let output = run_benchmark(&dataset, &opts).map_err(CliError::input)?;
    match out {
        Some(path) => {
            let file = std::fs::File::create(path)
                .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            write_csv(file, &output).map_err(CliError::input)?;
            eprintln!(
                "wrote {} records + {} aggregates to {}",
                output.records.len(),
                output.aggregates.len(),
                path.display()
            );
        }
        None => write_csv(std::io::stdout().lock(), &output).map_err(CliError::input)?,
    }
    Ok(())
}

fn run_stats(dir: &Path, string_map: Option<&Path>) -> CliResult {
    let codes = string_map.map(load_string_map).transpose()?;
    let dataset = load_dir(dir, codes.as_ref())?;
    let graphs: Vec<AttributedGraph> = dataset.into_iter().map(|(_, g)| g).collect();
    let stats = dataset_stats(&graphs, None).map_err(CliError::input)?;
    println!("{stats}");
    Ok(())
}

fn run_gen(
    n: usize,
    p: f64,
    weights: Option<&str>,
    attr_dim: Option<usize>,
    seed: u64,
    out: &Path,
) -> CliResult {
    if weights.is_some() && attr_dim.is_some() {
        // a usage error, not an input error
        clap::Error::raw(
            clap::error::ErrorKind::ArgumentConflict,
            "--weights and --attr-dim are mutually exclusive\n",
        )
        .exit();
    }
    let graph = match attr_dim {
        Some(dim) => generate_random_attributed(n, p, dim, seed).map_err(CliError::input)?,
        None => {
            let (lo, hi) = match weights {
                None => (0.0, 1.0),
                Some(spec) => {
                    let parts: Vec<&str> = spec.split(':').collect();
                    if parts.len() != 2 {
                        return Err(CliError::input(format!(
                            "bad --weights `{spec}`, expected lo:hi"
                        )));
                    }
                    let lo = parts[0]
                        .parse::<f64>()
                        .map_err(|e| CliError::input(format!("bad lo: {e}")))?;
                    let hi = parts[1]
                        .parse::<f64>()
                        .map_err(|e| CliError::input(format!("bad hi: {e}")))?;
                    (lo, hi)
                }
            };
            generate_random_weighted(n, p, lo, hi, seed)
                .map_err(CliError::input)?
                .to_attributed()
        }
    };
    let text = save_graph(&graph).map_err(CliError::input)?;
    std::fs::write(out, text).map_err(|e| CliError::input(format!("{}: {e}", out.display())))?;
    eprintln!(
        "wrote {} ({} vertices, {} edges)",
        out.display(),
        graph.vertex_count(),
        graph.edge_count()
    );
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Solve {
            file,
            search,
            estimate,
            trace,
        } => run_solve(&file, &search, estimate, trace.as_deref()),
        Command::Enumerate { file, pivot, seed } => run_enumerate(&file, pivot, seed),
        Command::Match {
            graph_x,
            graph_y,
            kernel,
            sigma,
            search,
            estimate,
        } => run_match(&graph_x, &graph_y, kernel, sigma, &search, estimate),
        Command::Bench {
            dir,
            kernel,
            sigma,
            budgets,
            out,
            seed,
            include_self,
            string_map,
        } => run_bench(
            &dir,
            kernel,
            sigma,
            budgets,
            out.as_deref(),
            seed,
            include_self,
            string_map.as_deref(),
        ),
        Command::Stats { dir, string_map } => run_stats(&dir, string_map.as_deref()),
        Command::Gen {
            n,
            p,
            weights,
            attr_dim,
            seed,
            out,
        } => run_gen(n, p, weights.as_deref(), attr_dim, seed, &out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
