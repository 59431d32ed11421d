//! Command-line surface: solve instances, build reduction artifacts, verify
//! them, generate corpora, and print graph statistics.
//!
//! Exit codes: 0 ok, 1 check failure, 2 usage error, 3 budget exceeded.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use clique_relax::graph::Graph;
use clique_relax::io::{
    emit_graph, gen_forest, gen_gnp, gen_tree, parse_graph, sniff_format, ArtifactRecord,
    GraphFormat, ResultRecord,
};
use clique_relax::problem::ProblemSpec;
use clique_relax::ratio::Ratio;
use clique_relax::reductions::{
    normalize_k_gcs, reduce_club_even, reduce_club_odd, reduce_gcs_degeneracy, reduce_gcs_ell,
    NormalizeMode, ReductionArtifact, ReductionKind,
};
use clique_relax::solvers::{
    max_clique, solve_forest, solve_gcs, solve_s_club, solve_s_clique, GcsStrategy, SolveError,
    DEFAULT_BUDGET,
};
use clique_relax::verify::{
    check_distance_claims, check_structure, roundtrip_equivalence, CheckStatus, ClaimReport,
    TargetKind,
};

const EXIT_CHECK_FAILURE: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(
    name = "clique-relax",
    version,
    about = "Exact solvers and gadget tooling for clique relaxations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance and print a JSON result record.
    Solve(SolveArgs),
    /// Build a reduction artifact from a clique instance.
    Reduce(ReduceArgs),
    /// Run machine checks on an artifact and print claim reports.
    Verify(VerifyArgs),
    /// Generate a seeded random graph.
    Gen(GenArgs),
    /// Print graph statistics as JSON.
    Stats(StatsArgs),
    /// Time the solvers over a small generated corpus.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemArg {
    Clique,
    #[value(name = "s-club")]
    SClub,
    #[value(name = "s-clique")]
    SClique,
    Gcs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Brute,
    Bb,
    Power,
    Forest,
    #[value(name = "xp-degeneracy")]
    XpDegeneracy,
    #[value(name = "xp-ell")]
    XpEll,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Auto,
    Dimacs,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    #[value(name = "club-odd")]
    ClubOdd,
    #[value(name = "club-even")]
    ClubEven,
    #[value(name = "gcs-degeneracy")]
    GcsDegeneracy,
    #[value(name = "gcs-ell")]
    GcsEll,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    problem: ProblemArg,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    s: Option<usize>,
    /// Exact fraction A/B; decimals are rejected.
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
    /// Input file, or '-' for standard input.
    file: PathBuf,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    target: TargetArg,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    gamma: Option<String>,
    /// Pad the source with universal vertices until k fits the construction.
    #[arg(long)]
    normalize: bool,
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
    /// Write <out>.json plus the produced graph next to it; default prints
    /// the artifact JSON to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    graph_format: GraphFormatArg,
    file: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormatArg {
    Dimacs,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Distance,
    Structure,
    Roundtrip,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    /// Artifact JSON produced by `reduce`.
    #[arg(long, conflicts_with_all = ["target", "k", "s", "gamma", "file"])]
    artifact: Option<PathBuf>,
    #[arg(long, value_enum)]
    target: Option<TargetArg>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long)]
    normalize: bool,
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKindArg {
    Gnp,
    Tree,
    Forest,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKindArg,
    #[arg(long)]
    n: usize,
    /// Edge probability (gnp) or edge-removal probability (forest).
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    seed: u64,
    #[arg(long, value_enum, default_value = "edgelist")]
    graph_format: GraphFormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
    file: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Comma-separated vertex counts.
    #[arg(long, default_value = "8,10,12")]
    sizes: String,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Solve(args) => run_solve(args),
        Command::Reduce(args) => run_reduce(args),
        Command::Verify(args) => run_verify(args),
        Command::Gen(args) => run_gen(args),
        Command::Stats(args) => run_stats(args),
        Command::Bench(args) => run_bench(args),
    };
    std::process::exit(code);
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))
    }
}

fn load_graph(path: &PathBuf, format: FormatArg) -> Result<Graph, String> {
    let text = read_input(path)?;
    let fmt = match format {
        FormatArg::Auto => sniff_format(&text),
        FormatArg::Dimacs => GraphFormat::Dimacs,
        FormatArg::Edgelist => GraphFormat::EdgeList,
    };
    parse_graph(&text, fmt).map_err(|e| format!("parsing {}: {e}", path.display()))
}

fn parse_gamma(text: &Option<String>) -> Result<Option<Ratio>, String> {
    match text {
        None => Ok(None),
        Some(t) => t.parse::<Ratio>().map(Some).map_err(|e| e.to_string()),
    }
}

fn run_solve(args: SolveArgs) -> i32 {
    let g = match load_graph(&args.file, args.format) {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    let gamma = match parse_gamma(&args.gamma) {
        Ok(x) => x,
        Err(e) => return usage_error(&e),
    };

    let spec = match args.problem {
        ProblemArg::Clique => {
            if args.s.is_some() || gamma.is_some() {
                return usage_error("clique takes neither --s nor --gamma");
            }
            ProblemSpec::Clique { k: args.k }
        }
        ProblemArg::SClub | ProblemArg::SClique => {
            if gamma.is_some() {
                return usage_error("distance problems do not take --gamma");
            }
            let Some(s) = args.s else {
                return usage_error("distance problems need --s");
            };
            if s == 0 {
                return usage_error("--s must be >= 1");
            }
            if args.problem == ProblemArg::SClub {
                ProblemSpec::SClub { s, k: args.k }
            } else {
                ProblemSpec::SClique { s, k: args.k }
            }
        }
        ProblemArg::Gcs => {
            if args.s.is_some() {
                return usage_error("gcs does not take --s");
            }
            let Some(gamma) = gamma else {
                return usage_error("gcs needs --gamma A/B");
            };
            ProblemSpec::GammaCs { gamma, k: args.k }
        }
    };

    let started = Instant::now();
    let outcome = match dispatch_solve(&g, &spec, args.method, args.budget) {
        Ok(out) => out,
        Err(Dispatch::Usage(msg)) => return usage_error(&msg),
        Err(Dispatch::Budget(b)) => {
            eprintln!("error: search budget of {b} nodes exceeded");
            return EXIT_BUDGET;
        }
        Err(Dispatch::Solver(e)) => return usage_error(&e.to_string()),
    };
    let millis = started.elapsed().as_millis() as u64;
    println!("{}", ResultRecord::new(&g, &spec, &outcome, millis).to_json());
    0
}

enum Dispatch {
    Usage(String),
    Budget(u64),
    Solver(SolveError),
}

impl From<SolveError> for Dispatch {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExceeded(b) => Dispatch::Budget(b),
            other => Dispatch::Solver(other),
        }
    }
}

fn dispatch_solve(
    g: &Graph,
    spec: &ProblemSpec,
    method: MethodArg,
    budget: u64,
) -> Result<clique_relax::SolveOutcome, Dispatch> {
    use MethodArg as M;
    let forest_ready = || g.degeneracy() <= 1;
    Ok(match (*spec, method) {
        (ProblemSpec::Clique { k }, M::Auto | M::Bb) => {
            decide_by_size(max_clique(g, budget)?, k)
        }
        (ProblemSpec::SClub { s, k }, M::Auto) => {
            if forest_ready() {
                solve_forest(g, k, s)?
            } else {
                solve_s_club(g, k, s, budget)?
            }
        }
        (ProblemSpec::SClub { s, k }, M::Bb) => solve_s_club(g, k, s, budget)?,
        (ProblemSpec::SClique { s, k }, M::Auto) => {
            if forest_ready() {
                solve_forest(g, k, s)?
            } else {
                solve_s_clique(g, k, s, budget)?
            }
        }
        (ProblemSpec::SClique { s, k }, M::Power) => solve_s_clique(g, k, s, budget)?,
        (ProblemSpec::SClub { s, k }, M::Forest) | (ProblemSpec::SClique { s, k }, M::Forest) => {
            solve_forest(g, k, s)?
        }
        (ProblemSpec::GammaCs { gamma, k }, m) => {
            let strategy = match m {
                M::Auto | M::XpDegeneracy => GcsStrategy::XpDegeneracy,
                M::Brute => GcsStrategy::Brute,
                M::XpEll => GcsStrategy::XpEll,
                _ => {
                    return Err(Dispatch::Usage(
                        "method not applicable to gcs; use brute, xp-degeneracy or xp-ell"
                            .to_string(),
                    ))
                }
            };
            solve_gcs(g, k, gamma, strategy, budget)?
        }
        _ => {
            return Err(Dispatch::Usage(
                "method is not applicable to this problem".to_string(),
            ))
        }
    })
}

/// max_clique is an optimizer; compare its witness against k for a decision.
fn decide_by_size(out: clique_relax::SolveOutcome, k: usize) -> clique_relax::SolveOutcome {
    let size = out.witness.as_ref().map_or(0, Vec::len);
    if size >= k {
        out
    } else {
        clique_relax::SolveOutcome::no(out.nodes_explored, out.method)
    }
}

fn build_artifact(
    g: &Graph,
    target: TargetArg,
    k: usize,
    s: Option<usize>,
    gamma: Option<Ratio>,
    normalize: bool,
) -> Result<ReductionArtifact, String> {
    match target {
        TargetArg::ClubOdd | TargetArg::ClubEven => {
            let Some(s) = s else {
                return Err("club targets need --s".to_string());
            };
            if gamma.is_some() {
                return Err("club targets do not take --gamma".to_string());
            }
            let r = if target == TargetArg::ClubOdd {
                reduce_club_odd(g, k, s)
            } else {
                reduce_club_even(g, k, s)
            };
            r.map_err(|e| e.to_string())
        }
        TargetArg::GcsDegeneracy | TargetArg::GcsEll => {
            let Some(gamma) = gamma else {
                return Err("gcs targets need --gamma A/B".to_string());
            };
            if s.is_some() {
                return Err("gcs targets do not take --s".to_string());
            }
            let mode = if target == TargetArg::GcsDegeneracy {
                NormalizeMode::Degeneracy
            } else {
                NormalizeMode::Ell
            };
            let (src, k) = if normalize {
                normalize_k_gcs(g, k, gamma, mode)
            } else {
                (g.clone(), k)
            };
            let r = if target == TargetArg::GcsDegeneracy {
                reduce_gcs_degeneracy(&src, k, gamma)
            } else {
                reduce_gcs_ell(&src, k, gamma)
            };
            r.map_err(|e| e.to_string())
        }
    }
}

fn run_reduce(args: ReduceArgs) -> i32 {
    let g = match load_graph(&args.file, args.format) {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    let gamma = match parse_gamma(&args.gamma) {
        Ok(x) => x,
        Err(e) => return usage_error(&e),
    };
    let artifact = match build_artifact(&g, args.target, args.k, args.s, gamma, args.normalize) {
        Ok(a) => a,
        Err(e) => return usage_error(&e),
    };
    let record = ArtifactRecord::from_artifact(&artifact);
    match args.out {
        None => {
            println!("{}", record.to_json());
        }
        Some(base) => {
            let (fmt, ext) = match args.graph_format {
                GraphFormatArg::Dimacs => (GraphFormat::Dimacs, "col"),
                GraphFormatArg::Edgelist => (GraphFormat::EdgeList, "edgelist"),
            };
            let graph_path = base.with_extension(ext);
            let json_path = base.with_extension("json");
            if let Err(e) = fs::write(&graph_path, emit_graph(&artifact.gprime, fmt)) {
                return usage_error(&format!("writing {}: {e}", graph_path.display()));
            }
            if let Err(e) = fs::write(&json_path, record.to_json()) {
                return usage_error(&format!("writing {}: {e}", json_path.display()));
            }
            eprintln!("wrote {} and {}", graph_path.display(), json_path.display());
        }
    }
    0
}

fn rebuild_artifact(artifact: &ReductionArtifact) -> Result<ReductionArtifact, String> {
    let g = &artifact.source;
    let k = artifact.source_k;
    let r = match artifact.kind {
        ReductionKind::ClubOdd => reduce_club_odd(g, k, artifact.params.s.unwrap_or(0)),
        ReductionKind::ClubEven => reduce_club_even(g, k, artifact.params.s.unwrap_or(0)),
        ReductionKind::GcsDegeneracy => {
            let Some(gamma) = artifact.params.gamma else {
                return Err("artifact lacks gamma".to_string());
            };
            reduce_gcs_degeneracy(g, k, gamma)
        }
        ReductionKind::GcsEll => {
            let Some(gamma) = artifact.params.gamma else {
                return Err("artifact lacks gamma".to_string());
            };
            reduce_gcs_ell(g, k, gamma)
        }
    };
    r.map_err(|e| e.to_string())
}

fn target_kind_of(artifact: &ReductionArtifact) -> TargetKind {
    match artifact.kind {
        ReductionKind::ClubOdd => TargetKind::ClubOdd { s: artifact.params.s.unwrap() },
        ReductionKind::ClubEven => TargetKind::ClubEven { s: artifact.params.s.unwrap() },
        ReductionKind::GcsDegeneracy => {
            TargetKind::GcsDegeneracy { gamma: artifact.params.gamma.unwrap() }
        }
        ReductionKind::GcsEll => TargetKind::GcsEll { gamma: artifact.params.gamma.unwrap() },
    }
}

fn run_verify(args: VerifyArgs) -> i32 {
    let artifact = if let Some(path) = &args.artifact {
        let text = match read_input(path) {
            Ok(t) => t,
            Err(e) => return usage_error(&e),
        };
        let record: ArtifactRecord = match serde_json::from_str(&text) {
            Ok(r) => r,
            Err(e) => return usage_error(&format!("parsing artifact: {e}")),
        };
        match record.to_artifact() {
            Ok(a) => a,
            Err(e) => return usage_error(&format!("artifact graph: {e}")),
        }
    } else {
        let (Some(file), Some(target), Some(k)) = (&args.file, args.target, args.k) else {
            return usage_error("verify needs --artifact FILE, or FILE with --target and --k");
        };
        let g = match load_graph(file, args.format) {
            Ok(g) => g,
            Err(e) => return usage_error(&e),
        };
        let gamma = match parse_gamma(&args.gamma) {
            Ok(x) => x,
            Err(e) => return usage_error(&e),
        };
        match build_artifact(&g, target, k, args.s, gamma, args.normalize) {
            Ok(a) => a,
            Err(e) => return usage_error(&e),
        }
    };

    let mut reports: Vec<ClaimReport> = Vec::new();
    if args.artifact.is_some() {
        // artifacts are bit-identical functions of their inputs, so a loaded
        // file must reproduce from its recorded source and parameters
        reports.push(match rebuild_artifact(&artifact) {
            Ok(rebuilt) if rebuilt == artifact => ClaimReport::pass(
                "artifact.reproduction",
                "artifact matches its recorded source and parameters",
            ),
            Ok(_) => ClaimReport::fail(
                "artifact.reproduction",
                "stored artifact differs from the reduction of its recorded source",
                "artifact file was altered or produced by a different version",
            ),
            Err(e) => ClaimReport::fail(
                "artifact.reproduction",
                e,
                "stored parameters do not produce an artifact",
            ),
        });
    }
    let is_club = matches!(artifact.kind, ReductionKind::ClubOdd | ReductionKind::ClubEven);
    if matches!(args.suite, SuiteArg::Distance | SuiteArg::All) {
        if is_club {
            match check_distance_claims(&artifact) {
                Ok(mut r) => reports.append(&mut r),
                Err(e) => return usage_error(&e.to_string()),
            }
        } else if args.suite == SuiteArg::Distance {
            return usage_error("distance suite applies to club artifacts only");
        }
    }
    if matches!(args.suite, SuiteArg::Structure | SuiteArg::All) {
        reports.append(&mut check_structure(&artifact));
    }
    if matches!(args.suite, SuiteArg::Roundtrip | SuiteArg::All) {
        let target = target_kind_of(&artifact);
        match roundtrip_equivalence(&artifact.source, artifact.source_k, target, args.budget) {
            Ok(r) => reports.push(r),
            Err(e) => return usage_error(&e.to_string()),
        }
    }

    for report in &reports {
        println!("{}", serde_json::to_string(report).expect("report serializes"));
    }
    if reports.iter().any(|r| r.status == CheckStatus::Fail) {
        EXIT_CHECK_FAILURE
    } else if reports.iter().any(|r| r.status == CheckStatus::Skipped) {
        EXIT_BUDGET
    } else {
        0
    }
}

fn run_gen(args: GenArgs) -> i32 {
    let graph = match args.kind {
        GenKindArg::Gnp => {
            let Some(p) = args.p else {
                return usage_error("gnp needs --p");
            };
            match gen_gnp(args.n, p, args.seed) {
                Ok(g) => g,
                Err(e) => return usage_error(&e.to_string()),
            }
        }
        GenKindArg::Tree => {
            if args.p.is_some() {
                return usage_error("tree does not take --p");
            }
            gen_tree(args.n, args.seed)
        }
        GenKindArg::Forest => {
            let Some(p) = args.p else {
                return usage_error("forest needs --p (edge-removal probability)");
            };
            match gen_forest(args.n, p, args.seed) {
                Ok(g) => g,
                Err(e) => return usage_error(&e.to_string()),
            }
        }
    };
    let fmt = match args.graph_format {
        GraphFormatArg::Dimacs => GraphFormat::Dimacs,
        GraphFormatArg::Edgelist => GraphFormat::EdgeList,
    };
    let text = emit_graph(&graph, fmt);
    match args.out {
        None => print!("{text}"),
        Some(path) => {
            if let Err(e) = fs::write(&path, text) {
                return usage_error(&format!("writing {}: {e}", path.display()));
            }
            // provenance record for the written corpus file
            let kind = match args.kind {
                GenKindArg::Gnp => "gen-gnp",
                GenKindArg::Tree => "gen-tree",
                GenKindArg::Forest => "gen-forest",
            };
            let outcome = clique_relax::SolveOutcome {
                decision: true,
                witness: None,
                nodes_explored: 0,
                method: kind,
            };
            let mut record =
                ResultRecord::new(&graph, &ProblemSpec::Clique { k: 0 }, &outcome, 0);
            record.problem = kind.to_string();
            record.seed = Some(args.seed);
            println!("{}", record.to_json());
        }
    }
    0
}

fn run_stats(args: StatsArgs) -> i32 {
    let g = match load_graph(&args.file, args.format) {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    let stats = g.stats();
    println!("{}", serde_json::to_string(&stats).expect("stats serialize"));
    0
}

fn run_bench(args: BenchArgs) -> i32 {
    let sizes: Vec<usize> = match args
        .sizes
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
    {
        Ok(v) => v,
        Err(_) => return usage_error("could not parse --sizes"),
    };
    println!(
        "{:<10} {:>4} {:>5} {:<18} {:>8} {:>10} {:>8}",
        "instance", "n", "m", "solver", "decision", "nodes", "millis"
    );
    for &n in &sizes {
        let g = match gen_gnp(n, 0.35, args.seed) {
            Ok(g) => g,
            Err(e) => return usage_error(&e.to_string()),
        };
        let k = (n / 2).max(2);
        let gamma = Ratio::new(1, 2).expect("1/2 is valid");
        for name in ["clique-bb", "s-club-bb s=2", "s-clique-power s=2", "gcs-xp-degeneracy"] {
            let started = Instant::now();
            let run = match name {
                "clique-bb" => max_clique(&g, args.budget).map(|o| decide_by_size(o, k)),
                "s-club-bb s=2" => solve_s_club(&g, k, 2, args.budget),
                "s-clique-power s=2" => solve_s_clique(&g, k, 2, args.budget),
                _ => solve_gcs(&g, k, gamma, GcsStrategy::XpDegeneracy, args.budget),
            };
            match run {
                Ok(out) => {
                    let millis = started.elapsed().as_millis();
                    println!(
                        "{:<10} {:>4} {:>5} {:<18} {:>8} {:>10} {:>8}",
                        format!("gnp-{n}"),
                        n,
                        g.m(),
                        name,
                        out.decision,
                        out.nodes_explored,
                        millis
                    );
                }
                Err(SolveError::BudgetExceeded(b)) => {
                    eprintln!("error: {name} on n={n} exceeded budget {b}");
                    return EXIT_BUDGET;
                }
                Err(e) => return usage_error(&e.to_string()),
            }
        }
    }
    0
}
