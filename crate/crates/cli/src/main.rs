//! `chs` — CHS norms of simple graphs from the command line.

mod output;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use chs_core::analysis::{
    check_theorem3, distinguish, make_pair, sweep, AnalysisError, Mode, Shard, SweepConfig, DEFAULT_D_MAX,
    MAX_CONNECTED_ORDER, MAX_TREE_ORDER,
};
use chs_core::chs::{chs_norm, exact_dth_power, validate_degree};
use chs_core::io::{emit_graph6, parse_edge_list, parse_graph6_checked, EdgeListError, Graph6Error};
use chs_core::partitions::{factorial, partition_count, partitions_of, z_of};
use chs_core::spectra::{eigenvalues, SpectraError};
use chs_core::walks::{closed_walk_count, closed_walk_counts};
use chs_core::{family, ChsError, FamilyId, Graph, GraphError};
use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use output::{flag, float, Format, Table};

const MAX_N_VAR: &str = "CHS_MAX_N";
const DEFAULT_MAX_N: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "chs",
    version,
    about = "Complete homogeneous symmetric (CHS) norms of simple graphs",
    after_help = "Vertices are numbered from 1 in edge lists and all other user-facing I/O.\n\
                  Family specs: Pn (path), Kn (complete), Sn (star), Cn (cycle), Km,n (complete bipartite).\n\
                  Exit status: 0 success, 2 invalid input, 3 verification found a violation.\n\
                  CHS_MAX_N caps the order accepted by `verify` (default 8)."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Adjacency eigenvalues, spectral norm, energy and optional Ky Fan / Schatten norms.
    Spectrum {
        #[command(flatten)]
        input: Input,
        /// Ky Fan k-norm (sum of the k largest singular values).
        #[arg(long)]
        k: Option<usize>,
        /// Schatten p-norm, p >= 1.
        #[arg(long)]
        p: Option<f64>,
    },
    /// Exact and floating-point ‖G‖_d.
    Norm {
        #[command(flatten)]
        input: Input,
        /// Even degree d >= 2.
        #[arg(long)]
        d: usize,
    },
    /// Number of closed walks of length k.
    Walks {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Partitions of d with z_π and class sizes d!/z_π.
    Partitions {
        #[arg(long)]
        d: usize,
    },
    /// Compare two graphs by their CHS norms for even d up to d_max.
    Compare {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        with: WithInput,
        #[arg(long, default_value_t = DEFAULT_D_MAX)]
        d_max: usize,
    },
    /// Build (F⊔F, F×K2) for a nonbipartite F and separate the pair.
    Pair {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_D_MAX)]
        d_max: usize,
    },
    /// Exhaustively check that paths minimise and K_n / S_n maximise ‖G‖_d.
    Verify {
        #[arg(long, default_value = "connected")]
        mode: Mode,
        /// Order of the graphs to enumerate.
        #[arg(long)]
        n: usize,
        /// Even degrees to check; repeat or separate with commas.
        #[arg(long, value_delimiter = ',', default_value = "2,4,6,8")]
        d: Vec<usize>,
        /// Also check the energy and spectral-norm bounds on every graph.
        #[arg(long)]
        bounds: bool,
        #[arg(long, default_value_t = 0)]
        shard_index: u64,
        #[arg(long, default_value_t = 1)]
        shard_count: u64,
        /// Worker threads (0: one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Energy and spectral-norm bounds on ‖G‖_d.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        d: usize,
    },
    /// ‖G‖_d for a family over a range of orders and even degrees.
    Table {
        /// Family letter: P, K, S or C.
        #[arg(long, default_value = "P")]
        kind: char,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        d_max: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// graph6 string, or "-" to read one from stdin.
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list file: "n m" header, then one 1-based "i j" pair per line.
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Family spec such as P5, K7, S4, C6 or K2,3.
    #[arg(long)]
    family: Option<FamilyId>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct WithInput {
    /// Second graph as graph6 ("-" reads stdin).
    #[arg(long)]
    with_graph6: Option<String>,
    /// Second graph as an edge-list file.
    #[arg(long)]
    with_edges: Option<PathBuf>,
    /// Second graph as a family spec.
    #[arg(long)]
    with_family: Option<FamilyId>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("edge list: {0}")]
    EdgeList(#[from] EdgeListError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Chs(#[from] ChsError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("verification failed:\n{0}")]
    Violation(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Violation(_) => 3,
            _ => 2,
        }
    }
}

fn read_graph(graph6: Option<&str>, edges: Option<&PathBuf>, spec: Option<FamilyId>) -> Result<Graph, CliError> {
    if let Some(text) = graph6 {
        let owned;
        let text = if text == "-" {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|source| CliError::Io { path: "stdin".into(), source })?;
            owned = buf.lines().find(|l| !l.trim().is_empty()).unwrap_or("").trim().to_string();
            owned.as_str()
        } else {
            text
        };
        return Ok(parse_graph6_checked(text)?.decoded);
    }
    if let Some(path) = edges {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        return Ok(parse_edge_list(&text)?);
    }
    match spec {
        Some(id) => Ok(family(id)?),
        None => Err(CliError::Usage("no input graph given".into())),
    }
}

impl Input {
    fn graph(&self) -> Result<Graph, CliError> {
        read_graph(self.graph6.as_deref(), self.edges.as_ref(), self.family)
    }
}

impl WithInput {
    fn graph(&self) -> Result<Graph, CliError> {
        read_graph(self.with_graph6.as_deref(), self.with_edges.as_ref(), self.with_family)
    }
}

fn max_order() -> Result<usize, CliError> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_N_VAR}={v:?} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn spectrum_table(g: &Graph, k: Option<usize>, p: Option<f64>) -> Result<Table, CliError> {
    let spectrum = eigenvalues(g)?;
    let mut t = Table::new(&["quantity", "value"]);
    let mut row = |key: String, value: String| t.push(vec![key, value]);
    row("graph".into(), emit_graph6(g));
    row("n".into(), g.order().to_string());
    row("m".into(), g.edge_count().to_string());
    // eigenvalues within solver tolerance of zero are printed as 0
    let tol = spectrum.tolerance();
    let values: Vec<String> =
        spectrum.values().iter().map(|&x| float(if x.abs() <= tol { 0.0 } else { x })).collect();
    row("eigenvalues".into(), values.join(","));
    row("spectral_norm".into(), float(spectrum.spectral_norm()));
    row("energy".into(), float(spectrum.energy()));
    if let Some(k) = k {
        row(format!("ky_fan_{k}"), float(spectrum.ky_fan(k)?));
    }
    if let Some(p) = p {
        row(format!("schatten_{}", float(p)), float(spectrum.schatten(p)?));
    }
    Ok(t)
}

fn norm_table(g: &Graph, d: usize) -> Result<Table, CliError> {
    let r = chs_norm(g, d)?;
    let mut t = Table::new(&["graph", "n", "d", "exact_dth_power", "norm", "float_dth_power", "route_agreement"]);
    t.push(vec![
        r.graph.clone(),
        g.order().to_string(),
        d.to_string(),
        r.exact_dth_power.to_string(),
        float(r.exact_norm()),
        float(r.float_dth_power),
        float(r.route_agreement),
    ]);
    Ok(t)
}

fn walks_table(g: &Graph, k: usize) -> Table {
    let mut t = Table::new(&["graph", "k", "closed_walks"]);
    t.push(vec![emit_graph6(g), k.to_string(), closed_walk_count(g, k).to_string()]);
    t
}

fn partitions_table(d: usize) -> Table {
    let mut t = Table::new(&["partition", "z", "class_size"]);
    let total = factorial(d);
    for p in partitions_of(d) {
        let z = z_of(&p);
        let size = &total / &z;
        t.push(vec![p.to_string(), z.to_string(), size.to_string()]);
    }
    t.note(format!("p({d}) = {}", partition_count(d)));
    t
}

fn compare_table(g: &Graph, h: &Graph, d_max: usize) -> Result<Table, CliError> {
    validate_degree(d_max)?;
    let (cg, ch) = (closed_walk_counts(g, d_max), closed_walk_counts(h, d_max));
    let mut t = Table::new(&["d", "left", "right", "differs"]);
    for d in (2..=d_max).step_by(2) {
        let (left, right) = (exact_dth_power(&cg, d), exact_dth_power(&ch, d));
        let differs = left != right;
        t.push(vec![d.to_string(), left.to_string(), right.to_string(), flag(differs)]);
    }
    t.note(format!("left = {}, right = {}", emit_graph6(g), emit_graph6(h)));
    t.note(match distinguish(g, h, d_max) {
        Ok(Some(found)) => format!(
            "first distinguishing d = {} (first differing odd closed-walk length {})",
            found.d, found.first_odd_difference
        ),
        Ok(None) => format!("no distinguishing d <= {d_max}"),
        Err(AnalysisError::NotSingularlyCospectral { power }) => {
            format!("not singularly cospectral: closed walks of length {power} differ")
        }
        Err(e) => return Err(e.into()),
    });
    Ok(t)
}

fn pair_table(f: &Graph, d_max: usize) -> Result<Table, CliError> {
    let (union, tensor) = make_pair(f)?;
    let found = distinguish(&union, &tensor, d_max)?;
    let mut t = Table::new(&["f", "union", "tensor", "first_odd_difference", "d", "union_value", "tensor_value"]);
    let (j, d, left, right) = match &found {
        Some(x) => (x.first_odd_difference.to_string(), x.d.to_string(), x.left.to_string(), x.right.to_string()),
        None => ("-".into(), "-".into(), "-".into(), "-".into()),
    };
    t.push(vec![emit_graph6(f), emit_graph6(&union), emit_graph6(&tensor), j, d, left, right]);
    Ok(t)
}

fn verify_table(
    mode: Mode,
    n: usize,
    degrees: Vec<usize>,
    bounds: bool,
    shard: Shard,
    jobs: usize,
    format: Format,
) -> Result<Table, CliError> {
    let cap = max_order()?;
    let hard = match mode {
        Mode::Connected => MAX_CONNECTED_ORDER,
        Mode::Trees => MAX_TREE_ORDER,
    };
    if n > cap.min(hard) {
        return Err(AnalysisError::OrderTooLarge { n, max: cap.min(hard) }.into());
    }
    let mut config = SweepConfig::new(n, mode, degrees);
    config.check_bounds = bounds;
    config.shard = shard;
    config.jobs = jobs;
    let outcome = sweep(&config)?;
    let mut t = Table::new(&[
        "mode",
        "n",
        "d",
        "shard",
        "scanned",
        "min",
        "path_value",
        "argmin_count",
        "argmin_all_paths",
        "max",
        "upper_family",
        "upper_value",
        "argmax_count",
        "argmax_all_upper",
        "argmax_sample",
    ]);
    for r in &outcome.reports {
        t.push(vec![
            r.mode.to_string(),
            r.n.to_string(),
            r.d.to_string(),
            format!("{}/{}", shard.index(), shard.count()),
            r.scanned.to_string(),
            r.min_value.to_string(),
            r.path_value.to_string(),
            r.argmin_count.to_string(),
            flag(r.argmin_all_paths),
            r.max_value.to_string(),
            r.upper_family.to_string(),
            r.upper_value.to_string(),
            r.argmax_count.to_string(),
            flag(r.argmax_all_upper),
            r.argmax.first().cloned().unwrap_or_else(|| "-".into()),
        ]);
    }
    if bounds {
        t.note(format!(
            "bounds: {} checks, {} failures",
            outcome.bounds_checked, outcome.bound_failure_count
        ));
    }
    let violations = outcome.violations();
    if !violations.is_empty() {
        io::stdout().write_all(t.render(format).as_bytes()).ok();
        return Err(CliError::Violation(violations.join("\n")));
    }
    Ok(t)
}

fn bounds_table(g: &Graph, d: usize) -> Result<Table, CliError> {
    let c = check_theorem3(g, d)?;
    let mut t = Table::new(&[
        "graph",
        "d",
        "norm",
        "energy_bound",
        "lower_bound",
        "upper_bound",
        "energy_ok",
        "lower_ok",
        "upper_ok",
    ]);
    t.push(vec![
        c.graph.clone(),
        d.to_string(),
        float(c.norm),
        float(c.energy_bound),
        float(c.lower_bound),
        float(c.upper_bound),
        flag(c.energy_bound_ok),
        flag(c.spectral_lower_ok),
        flag(c.spectral_upper_ok),
    ]);
    Ok(t)
}

fn family_table(kind: char, n_min: usize, n_max: usize, d_max: usize) -> Result<Table, CliError> {
    validate_degree(d_max)?;
    let mut t = Table::new(&["graph", "n", "d", "exact_dth_power", "norm"]);
    for n in n_min.max(1)..=n_max {
        let id: FamilyId = format!("{}{n}", kind.to_ascii_uppercase())
            .parse()
            .map_err(|e| CliError::Usage(format!("{e}")))?;
        let g = family(id)?;
        let counts = closed_walk_counts(&g, d_max);
        for d in (2..=d_max).step_by(2) {
            let exact = exact_dth_power(&counts, d);
            let norm = exact.to_f64().powf(1.0 / d as f64);
            t.push(vec![id.to_string(), n.to_string(), d.to_string(), exact.to_string(), float(norm)]);
        }
    }
    Ok(t)
}

fn run(cli: Cli) -> Result<Table, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Spectrum { input, k, p } => spectrum_table(&input.graph()?, k, p),
        Command::Norm { input, d } => norm_table(&input.graph()?, d),
        Command::Walks { input, k } => Ok(walks_table(&input.graph()?, k)),
        Command::Partitions { d } => Ok(partitions_table(d)),
        Command::Compare { input, with, d_max } => compare_table(&input.graph()?, &with.graph()?, d_max),
        Command::Pair { input, d_max } => pair_table(&input.graph()?, d_max),
        Command::Verify { mode, n, d, bounds, shard_index, shard_count, jobs } => {
            let shard = Shard::new(shard_index, shard_count)?;
            verify_table(mode, n, d, bounds, shard, jobs, format)
        }
        Command::Bounds { input, d } => bounds_table(&input.graph()?, d),
        Command::Table { kind, n_min, n, d_max } => family_table(kind, n_min, n, d_max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let format = cli.format;
    match run(cli) {
        Ok(table) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(table.render(format).as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("chs: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
