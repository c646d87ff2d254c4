use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use semigrundy::checkers;
use semigrundy::constructions::{
    cartesian_sum, extract_factors, layered_grundy, layered_semi_grundy, normalize,
    product_bound_check, product_semi_grundy_kp, stratified_product_semi_grundy, sum_semi_grundy,
    Layering,
};
use semigrundy::explorer::{self, Predicate, SearchSpec, Theorem};
use semigrundy::io::{self, DigraphDocument, FamilyDocument};
use semigrundy::rn;
use semigrundy::solvers;
use semigrundy::{Digraph, Error, ValueMap, VertexSet};

#[derive(Parser)]
#[command(name = "semigrundy", version, about = "Kernels, semi-kernels, Grundy and semi-Grundy functions on digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a vertex set or value map against a digraph.
    Check {
        what: CheckKind,
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        /// Comma-separated vertex indices.
        #[arg(short = 's', long = "set", conflicts_with = "function")]
        set: Option<String>,
        /// JSON array with one value per vertex.
        #[arg(short = 'f', long = "function")]
        function: Option<PathBuf>,
    },
    /// Exhaustive search for an object or property.
    Solve {
        what: SolveKind,
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
    },
    /// Run one of the constructions.
    Construct {
        what: ConstructKind,
        /// Digraph file; repeat for each factor of a sum.
        #[arg(short = 'g', long = "graph")]
        graphs: Vec<PathBuf>,
        /// Value-map file; repeat for each factor of a sum.
        #[arg(short = 'f', long = "function")]
        functions: Vec<PathBuf>,
        /// Family document: base digraph, one factor per base vertex, optional functions.
        #[arg(long)]
        family: Option<PathBuf>,
    },
    /// Build the digraph R_n together with its two Grundy functions.
    Rn {
        n: usize,
        #[arg(long)]
        emit_dot: bool,
    },
    /// Search small digraphs for a separating example.
    Explore {
        #[arg(long)]
        predicate: Predicate,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, env = "SEMIGRUNDY_WORKERS")]
        workers: Option<usize>,
        /// Keep one digraph per isomorphism class.
        #[arg(long)]
        iso: bool,
        /// Allow self-loops.
        #[arg(long)]
        loops: bool,
        /// Suppress progress lines on standard error.
        #[arg(long)]
        quiet: bool,
    },
    /// Check an implication on every small loop-free digraph.
    Verify {
        theorem: Theorem,
        #[arg(long = "max-n")]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Kernel,
    SemiKernel,
    Grundy,
    SemiGrundy,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveKind {
    Kernel,
    SemiKernel,
    Grundy,
    SemiGrundy,
    KernelPerfect,
    HereditarySk,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    LayeredSg,
    LayeredGrundy,
    Sum,
    ProductSg,
    StratifiedSg,
    Normalize,
}

/// A structured result and whether it counts as success.
struct Outcome {
    ok: bool,
    report: Value,
}

impl Outcome {
    fn new(ok: bool, report: Value) -> Self {
        Outcome { ok, report }
    }
}

fn read(path: &Path) -> semigrundy::Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> semigrundy::Result<Digraph> {
    io::parse_digraph(&read(path)?)
}

fn load_map(path: &Path, order: usize) -> semigrundy::Result<ValueMap> {
    let f = io::parse_value_map(&read(path)?)?;
    if f.len() != order {
        return Err(Error::LengthMismatch { expected: order, found: f.len() });
    }
    Ok(f)
}

fn doc(d: &Digraph) -> Value {
    serde_json::to_value(DigraphDocument::from_digraph(d)).expect("serializable")
}

fn sets(layers: &[VertexSet]) -> Vec<Vec<usize>> {
    layers.iter().map(VertexSet::to_vec).collect()
}

fn least_semi_grundy(d: &Digraph, what: &str) -> semigrundy::Result<ValueMap> {
    solvers::find_semi_grundy(d)?
        .witness_map()
        .ok_or_else(|| Error::Input(format!("{what} has no semi-Grundy function")))
}

fn check(what: CheckKind, graph: &Path, set: Option<String>, function: Option<PathBuf>) -> semigrundy::Result<Outcome> {
    let d = load_graph(graph)?;
    let holds = match what {
        CheckKind::Kernel | CheckKind::SemiKernel => {
            let text = set.ok_or_else(|| Error::Input("this check needs -s SET".into()))?;
            let s = io::parse_vertex_set(d.order(), &text)?;
            match what {
                CheckKind::Kernel => checkers::is_kernel(&d, &s),
                _ => checkers::is_semi_kernel(&d, &s),
            }
        }
        CheckKind::Grundy | CheckKind::SemiGrundy => {
            let path = function.ok_or_else(|| Error::Input("this check needs -f FILE".into()))?;
            let f = load_map(&path, d.order())?;
            match what {
                CheckKind::Grundy => checkers::is_grundy(&d, &f),
                _ => checkers::is_semi_grundy(&d, &f),
            }
        }
    };
    Ok(Outcome::new(holds, json!({ "holds": holds })))
}

fn solve(what: SolveKind, graph: &Path) -> semigrundy::Result<Outcome> {
    let d = load_graph(graph)?;
    let result = match what {
        SolveKind::Kernel => solvers::find_kernel(&d)?,
        SolveKind::SemiKernel => solvers::find_semi_kernel(&d)?,
        SolveKind::Grundy => solvers::find_grundy(&d)?,
        SolveKind::SemiGrundy => solvers::find_semi_grundy(&d)?,
        SolveKind::KernelPerfect => {
            let holds = solvers::is_kernel_perfect(&d)?;
            return Ok(Outcome::new(holds, json!({ "holds": holds })));
        }
        SolveKind::HereditarySk => {
            let holds = solvers::has_hereditary_semi_kernel(&d)?;
            return Ok(Outcome::new(holds, json!({ "holds": holds })));
        }
    };
    let report = serde_json::to_value(&result).expect("serializable");
    Ok(Outcome::new(result.found, report))
}

fn load_family(path: Option<PathBuf>) -> semigrundy::Result<(semigrundy::constructions::FamilyAssignment, Vec<ValueMap>)> {
    let path = path.ok_or_else(|| Error::Input("this construction needs --family FILE".into()))?;
    let doc: FamilyDocument = io::parse_document(&read(&path)?)?;
    let (fa, funcs) = doc.to_family()?;
    let funcs = match funcs {
        Some(fs) => fs,
        None => fa
            .factors()
            .iter()
            .enumerate()
            .map(|(v, factor)| least_semi_grundy(factor, &format!("factor {v}")))
            .collect::<semigrundy::Result<_>>()?,
    };
    Ok((fa, funcs))
}

fn construct(
    what: ConstructKind,
    graphs: Vec<PathBuf>,
    functions: Vec<PathBuf>,
    family: Option<PathBuf>,
) -> semigrundy::Result<Outcome> {
    let single_graph = |graphs: &[PathBuf]| match graphs {
        [g] => load_graph(g),
        _ => Err(Error::Input("this construction needs exactly one -g FILE".into())),
    };
    match what {
        ConstructKind::LayeredSg => {
            let d = single_graph(&graphs)?;
            Ok(match layered_semi_grundy(&d)? {
                Layering::Complete { values, layers } => Outcome::new(
                    true,
                    json!({ "complete": true, "function": values.values(), "layers": sets(&layers) }),
                ),
                Layering::Stuck { layers, residual } => Outcome::new(
                    false,
                    json!({ "complete": false, "layers": sets(&layers), "residual": residual.to_vec() }),
                ),
            })
        }
        ConstructKind::LayeredGrundy => {
            let d = single_graph(&graphs)?;
            let g = layered_grundy(&d)?;
            Ok(Outcome::new(true, json!({ "function": g.values(), "max": g.max_value() })))
        }
        ConstructKind::Sum => {
            if graphs.is_empty() {
                return Err(Error::Input("a sum needs at least one -g FILE".into()));
            }
            if !functions.is_empty() && functions.len() != graphs.len() {
                return Err(Error::LengthMismatch { expected: graphs.len(), found: functions.len() });
            }
            let factors = graphs.iter().map(|g| load_graph(g)).collect::<semigrundy::Result<Vec<_>>>()?;
            let funcs = if functions.is_empty() {
                factors
                    .iter()
                    .enumerate()
                    .map(|(i, d)| least_semi_grundy(d, &format!("factor {i}")))
                    .collect::<semigrundy::Result<Vec<_>>>()?
            } else {
                factors
                    .iter()
                    .zip(&functions)
                    .map(|(d, f)| load_map(f, d.order()))
                    .collect::<semigrundy::Result<Vec<_>>>()?
            };
            let sum = cartesian_sum(&factors)?;
            let s = sum_semi_grundy(&factors, &funcs)?;
            Ok(Outcome::new(
                true,
                json!({ "digraph": doc(&sum.digraph), "function": s.values(), "max": s.max_value() }),
            ))
        }
        ConstructKind::ProductSg => {
            let (fa, funcs) = load_family(family)?;
            let (s, trace) = product_semi_grundy_kp(&fa, &funcs)?;
            let stages: Vec<Value> = trace
                .stages
                .iter()
                .map(|st| json!({ "kernel": st.kernel.to_vec(), "assigned": st.assigned.to_vec() }))
                .collect();
            let (support, _) = extract_factors(&fa, &s)?;
            Ok(Outcome::new(
                true,
                json!({
                    "digraph": doc(fa.product()),
                    "function": s.values(),
                    "max": s.max_value(),
                    "within_bound": product_bound_check(&funcs, fa.base().order(), &s),
                    "stages": stages,
                    "support": support.to_vec(),
                }),
            ))
        }
        ConstructKind::StratifiedSg => {
            let (fa, funcs) = load_family(family)?;
            let f = match functions.as_slice() {
                [] => least_semi_grundy(fa.base(), "base")?,
                [path] => load_map(path, fa.base().order())?,
                _ => return Err(Error::Input("at most one -f FILE for the base".into())),
            };
            let s = stratified_product_semi_grundy(&fa, &f, &funcs)?;
            Ok(Outcome::new(
                true,
                json!({ "digraph": doc(fa.product()), "function": s.values(), "max": s.max_value() }),
            ))
        }
        ConstructKind::Normalize => {
            let f = match functions.as_slice() {
                [path] => io::parse_value_map(&read(path)?)?,
                _ => return Err(Error::Input("normalize needs exactly one -f FILE".into())),
            };
            Ok(Outcome::new(true, json!({ "function": normalize(&f).values() })))
        }
    }
}

fn rn_report(n: usize, emit_dot: bool) -> semigrundy::Result<Outcome> {
    let d = rn::build_rn(n)?;
    let (g1, g2) = (rn::rn_g1(n)?, rn::rn_g2(n)?);
    let (v1, v2) = (checkers::is_grundy(&d, &g1), checkers::is_grundy(&d, &g2));
    let (m1, m2) = (g1.max_value().unwrap_or(0), g2.max_value().unwrap_or(0));
    let mut report = json!({
        "n": n,
        "digraph": doc(&d),
        "g1": g1.values(),
        "g2": g2.values(),
        "g1_max": m1,
        "g2_max": m2,
        "g1_valid": v1,
        "g2_valid": v2,
        "gap": m2.abs_diff(m1),
    });
    if emit_dot {
        report["dot"] = Value::String(io::export_dot(&d, Some(&g2)));
    }
    Ok(Outcome::new(v1 && v2, report))
}

fn explore(
    predicate: Predicate,
    max_n: usize,
    workers: Option<usize>,
    iso: bool,
    loops: bool,
    quiet: bool,
) -> semigrundy::Result<Outcome> {
    let workers = workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let spec = SearchSpec { predicate, max_order: max_n, include_loops: loops, workers, canonical_only: iso };
    let progress = |p: explorer::Progress| {
        if !quiet {
            eprintln!("order {} exhausted, {} digraphs scanned", p.order, p.scanned);
        }
    };
    let report = explorer::find_witness(&spec, Some(&progress))?;
    let verified = match &report.digraph {
        Some(d) => explorer::verify_certificates(predicate, &d.to_digraph()?, &report.certificates)?,
        None => false,
    };
    let mut value = serde_json::to_value(&report).expect("serializable");
    value["certificates_verified"] = Value::Bool(verified);
    Ok(Outcome::new(report.found && verified, value))
}

fn verify(theorem: Theorem, max_n: usize) -> semigrundy::Result<Outcome> {
    let report = explorer::verify_theorem(theorem, max_n)?;
    let mut value = serde_json::to_value(&report).expect("serializable");
    value["holds"] = Value::Bool(report.holds());
    Ok(Outcome::new(report.holds(), value))
}

fn run(cli: Cli) -> semigrundy::Result<Outcome> {
    match cli.command {
        Command::Check { what, graph, set, function } => check(what, &graph, set, function),
        Command::Solve { what, graph } => solve(what, &graph),
        Command::Construct { what, graphs, functions, family } => construct(what, graphs, functions, family),
        Command::Rn { n, emit_dot } => rn_report(n, emit_dot),
        Command::Explore { predicate, max_n, workers, iso, loops, quiet } => {
            explore(predicate, max_n, workers, iso, loops, quiet)
        }
        Command::Verify { theorem, max_n } => verify(theorem, max_n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            println!("{}", outcome.report);
            ExitCode::from(if outcome.ok { 0 } else { 1 })
        }
        Err(e) => {
            let code = if matches!(e, Error::TooLarge { .. }) { 3 } else { 2 };
            println!("{}", json!({ "error": e.to_string() }));
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
