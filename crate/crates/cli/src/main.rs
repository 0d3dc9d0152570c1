mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use indsub::basis::{attained_weights, brute_attained_weights, tau_slice, verify_fossil_characterization};
use indsub::bench::bench_scorpions;
use indsub::count::{count_scorpions, count_sinks_slice};
use indsub::generate::{gen_augmented_biclique, gen_skeleton, random_graph};
use indsub::io::{parse_graph, to_edge_list, ParseOptions};
use indsub::num::binomial;
use indsub::oracle::{brute_count, verify_anatomy_uniqueness, DEFAULT_SUBSET_BUDGET};
use indsub::{Error, PropertySpec};

use report::RunReport;

const EXIT_PARSE: u8 = 2;
const EXIT_PARAMETER: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_COUNTEREXAMPLE: u8 = 5;

#[derive(Parser, Debug)]
#[command(name = "indsub", version, about = "Exact induced-subgraph counting for sink and scorpion properties")]
struct Cli {
    /// Emit one JSON record per run instead of plain text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count induced k-vertex subgraphs with a property
    Count {
        /// Edge-list file
        graph: PathBuf,
        #[arg(long, value_enum)]
        property: Property,
        /// Tail length (scorpion only)
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Algo::Fast)]
        algo: Algo,
        /// Maximum subsets the oracle may visit
        #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET)]
        budget: u64,
        /// Reject repeated edges in the input
        #[arg(long)]
        strict: bool,
    },
    /// Exhaustively check a structural claim on a slice
    Verify {
        #[arg(long, value_enum)]
        lemma: Lemma,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        k: usize,
    },
    /// Write a generated graph in edge-list format to stdout
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Clique side of the augmented biclique
        #[arg(long)]
        a: Option<usize>,
        /// Independent side of the augmented biclique
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time the scorpion counter on random graphs of several sizes
    Bench {
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long, value_delimiter = ',', default_value = "50,100,200")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Property {
    Sink,
    Scorpion,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Algo {
    Fast,
    Oracle,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Lemma {
    Anatomy,
    FossilCharac,
    Tau,
    Weights,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Skeleton,
    Biclique,
    Random,
}

/// Failure carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::Budget { .. } => EXIT_BUDGET,
            Error::Parameter(_) | Error::Vertex { .. } | Error::Mismatch { .. } | Error::Overflow(_) => EXIT_PARAMETER,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn parameter(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_PARAMETER,
        message: message.into(),
    }
}

fn require<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T, Failure> {
    value.ok_or_else(|| parameter(format!("--{flag} is required for {kind}")))
}

fn flag_name(v: impl ValueEnum) -> String {
    v.to_possible_value().map(|p| p.get_name().to_owned()).unwrap_or_default()
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn run_count(
    graph: &PathBuf,
    property: Property,
    ell: Option<usize>,
    k: usize,
    algo: Algo,
    budget: u64,
    strict: bool,
    report: &mut RunReport,
) -> Result<(), Failure> {
    let text = std::fs::read_to_string(graph).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", graph.display()),
    })?;
    let directed = matches!(property, Property::Sink);
    let parsed = parse_graph(&text, ParseOptions { directed, strict })
        .map_err(|e| Failure { code: EXIT_PARSE, message: format!("{}: {e}", graph.display()) })?;
    report
        .param("graph", graph.display())
        .param("property", flag_name(property))
        .param("k", k)
        .param("algo", flag_name(algo));
    let spec = match property {
        Property::Sink => PropertySpec::Sink,
        Property::Scorpion => {
            let ell = require(ell, "ell", "scorpion counts")?;
            report.param("ell", ell);
            PropertySpec::Scorpion(ell)
        }
    };
    let g = parsed.as_ref();
    report.result("n", g.vertex_count());
    let count = match (algo, &spec, g) {
        (Algo::Oracle, _, _) => {
            report.param("budget", budget);
            let value = brute_count(g, k, &spec, budget)?;
            report.budget_used = Some(format!("{} subsets", binomial(g.vertex_count() as u64, k as i64)));
            value
        }
        (Algo::Fast, PropertySpec::Sink, indsub::GraphRef::Directed(d)) => count_sinks_slice(d, k)?,
        (Algo::Fast, PropertySpec::Scorpion(ell), indsub::GraphRef::Undirected(u)) => count_scorpions(u, *ell, k)?,
        _ => unreachable!("graph kind follows the property"),
    };
    report.result("count", count);
    Ok(())
}

/// Returns whether the verification found zero counterexamples.
fn run_verify(lemma: Lemma, ell: usize, k: usize, report: &mut RunReport) -> Result<bool, Failure> {
    report
        .param("lemma", flag_name(lemma))
        .param("ell", ell)
        .param("k", k);
    let counterexamples = match lemma {
        Lemma::Anatomy => {
            let r = verify_anatomy_uniqueness(ell, k)?;
            report
                .result("graphs_scanned", r.graphs_scanned)
                .result("scorpions", r.scorpions);
            report.budget_used = Some(format!("{} labelled graphs", r.graphs_scanned));
            r.counterexamples.len()
        }
        Lemma::FossilCharac => {
            let r = verify_fossil_characterization(ell, k)?;
            report
                .result("graphs_scanned", r.graphs_scanned)
                .result("fossils", r.fossils)
                .result("nonzero_alt_enum", r.nonzero);
            if !r.counterexamples.is_empty() {
                report.result("counterexample_masks", join(&r.counterexamples));
            }
            report.budget_used = Some(format!("{} labelled graphs", r.graphs_scanned));
            r.counterexamples.len()
        }
        Lemma::Tau => {
            let tau = tau_slice(ell, k)?;
            report.result("tau", tau).result("expected", ell + 2);
            usize::from(tau != ell + 2)
        }
        Lemma::Weights => {
            let analytic = attained_weights(ell, k)?;
            let brute = brute_attained_weights(&PropertySpec::Scorpion(ell), k)?;
            report
                .result("attained_analytic", join(&analytic.attained))
                .result("attained_brute", join(&brute.attained))
                .result("avoided_analytic", analytic.avoided_count)
                .result("avoided_brute", brute.avoided_count);
            usize::from(analytic != brute)
        }
    };
    report.result("counterexamples", counterexamples);
    Ok(counterexamples == 0)
}

#[allow(clippy::too_many_arguments)]
fn run_gen(
    kind: Kind,
    ell: Option<usize>,
    k: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    n: Option<usize>,
    p: Option<f64>,
    seed: u64,
) -> Result<String, Failure> {
    let g = match kind {
        Kind::Skeleton => gen_skeleton(require(ell, "ell", "skeletons")?, require(k, "k", "skeletons")?)?.0,
        Kind::Biclique => gen_augmented_biclique(require(a, "a", "bicliques")?, require(b, "b", "bicliques")?)?,
        Kind::Random => random_graph(require(n, "n", "random graphs")?, require(p, "p", "random graphs")?, seed)?,
    };
    Ok(to_edge_list(&g))
}

fn run_bench(
    ell: usize,
    k: usize,
    sizes: &[usize],
    p: f64,
    seed: u64,
    repeats: usize,
    report: &mut RunReport,
) -> Result<(), Failure> {
    report
        .param("ell", ell)
        .param("k", k)
        .param("sizes", join(sizes))
        .param("p", p)
        .param("seed", seed)
        .param("repeats", repeats);
    let bench = bench_scorpions(ell, k, sizes, p, seed, repeats)?;
    for row in &bench.rows {
        report
            .result(&format!("n{}_count", row.n), &row.count)
            .result(&format!("n{}_median_us", row.n), row.median_us)
            .result(&format!("n{}_times_us", row.n), join(&row.times_us));
    }
    if let Some(slope) = bench.slope {
        report.estimates.insert("loglog_slope".into(), format!("{slope:.3}"));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let echo = std::env::args().collect::<Vec<_>>().join(" ");
    let mut report = RunReport::new(echo);

    let outcome: Result<bool, Failure> = match &cli.command {
        Command::Count { graph, property, ell, k, algo, budget, strict } => {
            run_count(graph, *property, *ell, *k, *algo, *budget, *strict, &mut report).map(|()| true)
        }
        Command::Verify { lemma, ell, k } => run_verify(*lemma, *ell, *k, &mut report),
        Command::Gen { kind, ell, k, a, b, n, p, seed } => match run_gen(*kind, *ell, *k, *a, *b, *n, *p, *seed) {
            Ok(text) => {
                print!("{text}");
                return ExitCode::SUCCESS;
            }
            Err(f) => Err(f),
        },
        Command::Bench { ell, k, sizes, p, seed, repeats } => {
            run_bench(*ell, *k, sizes, *p, *seed, *repeats, &mut report).map(|()| true)
        }
    };
    report.wall_time_us = start.elapsed().as_micros() as u64;

    match outcome {
        Ok(passed) => {
            println!("{}", report.render(cli.json));
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification found counterexamples");
                ExitCode::from(EXIT_COUNTEREXAMPLE)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
