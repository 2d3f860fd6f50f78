use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lkcds::closure::{build_closure, closure_stats_csv, verify_closure};
use lkcds::core_finder::{connected_core, core_verify, find_core, CoreMode, CoreOutcome};
use lkcds::graph::{parse_graph, serialize_graph, Graph, GraphFormat};
use lkcds::hardness::{family_sweep, generate, sweep_csv, sweep_report};
use lkcds::oracles::{exact_acds, exact_cds, exact_ds, exact_setcover, Budget, SetCoverInstance, SolveResult};
use lkcds::order::{wcol_report_csv, OrderStrategy};
use lkcds::pipeline::{ds_kernel, ds_kernel_opt, lift, pre_kernel, ratio_check, KernelInstance, KernelKind, KernelOutcome, KernelParams};
use lkcds::projections::{classify, profile_stats_csv};
use lkcds::ratio::{format_rational, int, parse_rational};
use lkcds::{Error, Rational, VertexSet};

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_REJECT: u8 = 10;

#[derive(Parser)]
#[command(name = "lkcds", version, about = "Approximate kernels for connected distance-r domination")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args)]
struct Common {
    /// Node limit for exact searches.
    #[arg(long, global = true, env = "LKCDS_BUDGET_NODES")]
    budget_nodes: Option<u64>,
    /// Worker threads for parallel stages.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Input graph format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    /// Output path; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Dimacs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Heuristic,
    Trivial,
}

impl From<Mode> for CoreMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exact => CoreMode::Exact,
            Mode::Heuristic => CoreMode::Heuristic,
            Mode::Trivial => CoreMode::Trivial,
        }
    }
}

#[derive(Args)]
struct KernelArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    r: usize,
    /// Approximation factor; defaults to 4r+3.
    #[arg(long, value_parser = rational)]
    alpha: Option<Rational>,
    #[arg(long, value_parser = rational, default_value = "1/2")]
    epsilon: Rational,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    core_mode: Mode,
}

impl KernelArgs {
    fn params(&self) -> Result<KernelParams, Failure> {
        let alpha = self.alpha.unwrap_or_else(|| int(4 * self.r as i64 + 3));
        Ok(KernelParams::new(self.k, self.r, alpha, self.epsilon)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a graph to an annotated kernel instance.
    Kernelize {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        kernel: KernelArgs,
        /// Build the exact kernel for plain (unconnected) domination instead.
        #[arg(long)]
        plain: bool,
        /// Write a stats CSV row here.
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    /// Check a kernel instance against its original graph.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        kernel: PathBuf,
        /// Kernel solution to certify; the kernel optimum when absent.
        #[arg(long)]
        solution: Option<PathBuf>,
    },
    /// Solve exactly: a graph, a kernel instance, or a set cover instance.
    Solve {
        #[arg(long, required_unless_present_any = ["kernel", "setcover"])]
        input: Option<PathBuf>,
        #[arg(long, conflicts_with_all = ["input", "setcover"])]
        kernel: Option<PathBuf>,
        #[arg(long, conflicts_with = "input")]
        setcover: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Give up above this size; defaults to the vertex count.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        connected: bool,
    },
    /// Map a kernel solution back to the original graph.
    Lift {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        kernel: PathBuf,
        /// File with whitespace-separated kernel vertex ids.
        #[arg(long, required_unless_present = "set")]
        solution: Option<PathBuf>,
        /// Inline ids, e.g. "0 3 4".
        #[arg(long, conflicts_with = "solution")]
        set: Option<String>,
    },
    /// Generate subdivided domination instances from set cover.
    Gen {
        /// Set cover instance; writes `<out>.graph` and `<out>.roles`.
        #[arg(long, required_unless_present = "sizes")]
        input: Option<PathBuf>,
        #[arg(long)]
        r: usize,
        /// Sweep mode: comma-separated `UxF` sizes, e.g. "4x4,6x6".
        #[arg(long, conflicts_with = "input")]
        sizes: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Mode::Heuristic)]
        core_mode: Mode,
    },
    /// Compute a domination core.
    Core {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        core_mode: Mode,
        /// Grow the core into a connected one.
        #[arg(long)]
        connected: bool,
    },
    /// Profile classes of the vertices outside a set.
    ProfileStats {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        r: usize,
        /// Vertex ids of the set, e.g. "0 4".
        #[arg(long)]
        x: String,
    },
    /// Weak coloring numbers of heuristic orders.
    WcolReport {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "1,2,3")]
        radii: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Statistics of the tree closure of a set.
    ClosureStats {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        x: String,
        #[arg(long, value_parser = rational, default_value = "1")]
        t: Rational,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Budget(String),
    Verify(String),
    Reject(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } | Error::Cancelled(_) => Failure::Budget(e.to_string()),
            Error::Contract(_) => Failure::Verify(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path, format: Format) -> Result<Graph, Failure> {
    let fmt = match format {
        Format::Edgelist => GraphFormat::EdgeList,
        Format::Dimacs => GraphFormat::Dimacs,
    };
    parse_graph(&read(path)?, fmt).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_kernel(path: &Path) -> Result<KernelInstance, Failure> {
    KernelInstance::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_ids(text: &str) -> Result<VertexSet, Failure> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Failure::Input(format!("bad vertex id {t:?}"))))
        .collect()
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn budget(common: &Common) -> Budget {
    common.budget_nodes.map_or_else(Budget::unlimited, Budget::nodes)
}

fn join(set: &VertexSet) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn describe(res: &SolveResult) -> String {
    let mut s = format!("status {}\n", res.status);
    if let (Some(v), Some(d)) = (res.value, &res.solution) {
        let _ = writeln!(s, "value {v}\nsolution {}", join(d));
    }
    let _ = writeln!(s, "nodes {}", res.nodes);
    s
}

fn run(cli: Cli) -> Result<(), Failure> {
    let common = &cli.common;
    let out = common.out.as_deref();
    let b = budget(common);
    match cli.cmd {
        Command::Kernelize { input, kernel, plain, stats } => {
            let g = read_graph(&input, common.format)?;
            let params = kernel.params()?;
            let outcome = if plain {
                ds_kernel(&g, params.k, params.r, kernel.core_mode.into(), &b)?
            } else {
                pre_kernel(&g, &params, kernel.core_mode.into(), &b)?
            };
            let inst = match outcome {
                KernelOutcome::Kernel(inst) => inst,
                KernelOutcome::Reject(why) => return Err(Failure::Reject(why)),
            };
            emit(out, &inst.serialize())?;
            if let Some(path) = stats {
                let row = format!(
                    "# lkcds kernelize v1\nn,m,k,r,alpha,kind,gprime_vertices,gprime_edges,z_size\n{},{},{},{},{},{},{},{},{}\n",
                    g.n(),
                    g.m(),
                    inst.k,
                    inst.r,
                    format_rational(inst.params.alpha),
                    inst.provenance.kind,
                    inst.gprime.n(),
                    inst.gprime.m(),
                    inst.z.len()
                );
                emit(Some(&path), &row)?;
            }
        }
        Command::Verify { input, kernel, solution } => {
            let g = read_graph(&input, common.format)?;
            let inst = read_kernel(&kernel)?;
            verify(&g, &inst, solution.as_deref(), &b, out)?;
        }
        Command::Solve { input, kernel, setcover, r, k, connected } => {
            let text = if let Some(path) = setcover {
                let mut inst = SetCoverInstance::parse(&read(&path)?)?;
                if let Some(k) = k {
                    inst.k = k;
                }
                let res = exact_setcover(&inst, &b)?;
                let mut s = format!("status {}\n", res.status);
                if let (Some(v), Some(d)) = (res.value, &res.solution) {
                    let ids: Vec<String> = d.iter().map(|i| i.to_string()).collect();
                    let _ = writeln!(s, "value {v}\nsolution {}", ids.join(" "));
                }
                let _ = writeln!(s, "nodes {}", res.nodes);
                s
            } else if let Some(path) = kernel {
                let inst = read_kernel(&path)?;
                let cap = k.unwrap_or(inst.gprime.n());
                if inst.provenance.kind == KernelKind::DsKernel {
                    let found = ds_kernel_opt(&inst, &b)?;
                    match found {
                        Some(d) => format!("status found\nvalue {}\nsolution {}\n", d.len(), join(&d)),
                        None => "status none-within-cap\n".to_string(),
                    }
                } else {
                    describe(&exact_acds(&inst.gprime, &inst.z, inst.r, cap, &b)?)
                }
            } else {
                let g = read_graph(input.as_deref().expect("clap enforces an input"), common.format)?;
                let cap = k.unwrap_or(g.n());
                let res = if connected { exact_cds(&g, r, cap, &b)? } else { exact_ds(&g, r, cap, &b)? };
                describe(&res)
            };
            emit(out, &text)?;
        }
        Command::Lift { input, kernel, solution, set } => {
            let g = read_graph(&input, common.format)?;
            let inst = read_kernel(&kernel)?;
            let d = match (solution, set) {
                (Some(p), _) => parse_ids(&read(&p)?)?,
                (None, Some(s)) => parse_ids(&s)?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            let lifted = lift(&g, &inst, &d)?;
            emit(out, &format!("{}\n", join(&lifted)))?;
        }
        Command::Gen { input, r, sizes, seed, core_mode } => {
            if let Some(sizes) = sizes {
                let parsed = sizes
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| {
                        let (u, f) = s.trim().split_once('x').ok_or(Failure::Input(format!("bad size {s:?}")))?;
                        let num = |t: &str| t.parse::<usize>().map_err(|_| Failure::Input(format!("bad size {s:?}")));
                        Ok((num(u)?, num(f)?))
                    })
                    .collect::<Result<Vec<_>, Failure>>()?;
                let batch = family_sweep(&parsed, r, seed)?;
                let rows = sweep_report(&batch, 1, core_mode.into(), &b)?;
                emit(out, &sweep_csv(&rows))?;
            } else {
                let path = input.expect("clap enforces an input");
                let inst = SetCoverInstance::parse(&read(&path)?)?;
                let h = generate(&inst, r)?;
                let prefix = out.ok_or(Failure::Input("gen needs --out <prefix>".into()))?;
                let with_ext = |ext: &str| {
                    let mut p = prefix.as_os_str().to_owned();
                    p.push(ext);
                    PathBuf::from(p)
                };
                emit(Some(&with_ext(".graph")), &serialize_graph(&h.g))?;
                emit(Some(&with_ext(".roles")), &h.roles_sidecar())?;
                println!("k_out {}\noffset {}", h.k_out, h.offset);
            }
        }
        Command::Core { input, k, r, core_mode, connected } => {
            let g = read_graph(&input, common.format)?;
            let mut core = match find_core(&g, k, r, core_mode.into(), &b)? {
                CoreOutcome::Core(c) => c,
                CoreOutcome::Reject(why) => return Err(Failure::Reject(why)),
            };
            if connected {
                core = match connected_core(&g, &core)? {
                    CoreOutcome::Core(c) => c,
                    CoreOutcome::Reject(why) => return Err(Failure::Reject(why)),
                };
            }
            emit(out, &format!("certified {}\nsize {}\nZ {}\n", core.certified, core.z.len(), join(&core.z)))?;
        }
        Command::ProfileStats { input, r, x } => {
            let g = read_graph(&input, common.format)?;
            let x = checked_set(&g, &x)?;
            emit(out, &profile_stats_csv(&classify(&g, &x, r)))?;
        }
        Command::WcolReport { input, radii, seed } => {
            let g = read_graph(&input, common.format)?;
            let radii = radii
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Failure::Input(format!("bad radius {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let strategies = [OrderStrategy::MinDegree, OrderStrategy::Bfs, OrderStrategy::Random(seed)];
            emit(out, &wcol_report_csv(&g, &strategies, &radii))?;
        }
        Command::ClosureStats { input, r, x, t } => {
            let g = read_graph(&input, common.format)?;
            let x = checked_set(&g, &x)?;
            let res = build_closure(&g, &x, r, t, &b)?;
            emit(out, &closure_stats_csv(&[res.stats]))?;
        }
    }
    Ok(())
}

fn checked_set(g: &Graph, text: &str) -> Result<VertexSet, Failure> {
    let x = parse_ids(text)?;
    if x.iter().any(|v| v >= g.n()) {
        return Err(Failure::Input("vertex id out of range".into()));
    }
    Ok(x)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Pass,
    Fail,
    Undetermined,
    Skipped,
}

impl Verdict {
    fn of(b: Option<bool>) -> Self {
        match b {
            Some(true) => Verdict::Pass,
            Some(false) => Verdict::Fail,
            None => Verdict::Undetermined,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Undetermined => "undetermined",
            Verdict::Skipped => "skipped",
        }
    }
}

fn budgeted<T>(r: lkcds::Result<T>) -> Result<Option<T>, Failure> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Budget { .. } | Error::Cancelled(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn verify(g: &Graph, inst: &KernelInstance, solution: Option<&Path>, b: &Budget, out: Option<&Path>) -> Result<(), Failure> {
    let mut checks: Vec<(&str, Verdict)> = Vec::new();
    checks.push(("subgraph", if inst.certify_against(g).is_ok() { Verdict::Pass } else { Verdict::Fail }));
    if checks[0].1 == Verdict::Fail {
        return report(&checks, out);
    }
    let x_host: VertexSet = inst.z.iter().map(|v| inst.vertex_map[v]).collect();

    if inst.provenance.kind == KernelKind::Closure {
        let rebuilt = budgeted(build_closure(g, &x_host, inst.r, inst.params.t_eff, b))?;
        let (reproduced, items) = match rebuilt {
            None => (Verdict::Undetermined, Verdict::Undetermined),
            Some(res) => {
                let same = res.gprime.graph_eq(&inst.gprime) && res.witness.vertex_map == inst.vertex_map;
                let rep = verify_closure(g, &x_host, inst.r, &res)?;
                (if same { Verdict::Pass } else { Verdict::Fail }, Verdict::of(Some(rep.passes())))
            }
        };
        checks.push(("closure_reproduced", reproduced));
        checks.push(("closure_items", items));
    } else {
        checks.push(("closure_reproduced", Verdict::Skipped));
        checks.push(("closure_items", Verdict::Skipped));
    }

    if inst.provenance.kind == KernelKind::Shortcut {
        checks.push(("core", Verdict::Skipped));
    } else {
        checks.push(("core", Verdict::of(budgeted(core_verify(g, &x_host, inst.k, inst.r, b))?)));
    }

    let d = match solution {
        Some(p) => Some(parse_ids(&read(p)?)?),
        None if inst.provenance.kind == KernelKind::DsKernel => budgeted(ds_kernel_opt(inst, b))?.flatten(),
        None => budgeted(exact_acds(&inst.gprime, &inst.z, inst.r, inst.k, b))?.and_then(|r| r.solution),
    };
    if inst.provenance.kind == KernelKind::DsKernel {
        let kernel_opt = budgeted(ds_kernel_opt(inst, b))?.map(|d| d.map(|d| d.len()));
        let original = budgeted(exact_ds(g, inst.r, inst.k, b))?.map(|r| r.value);
        let same = match (kernel_opt, original) {
            (Some(a), Some(o)) => Some(a == o),
            _ => None,
        };
        checks.push(("ds_opt_preserved", Verdict::of(same)));
        let lifted = d.map(|d| lift(g, inst, &d).is_ok());
        checks.push(("lift", lifted.map_or(Verdict::Skipped, |ok| Verdict::of(Some(ok)))));
    } else {
        match d {
            Some(d) => {
                let cert = ratio_check(g, inst, &d, b)?;
                checks.push(("lift", Verdict::of(Some(lift(g, inst, &d).is_ok()))));
                checks.push(("opt_bound", Verdict::of(cert.opt_bound_ok)));
                checks.push(("ratio", Verdict::of(cert.ratio_ok)));
            }
            None => {
                checks.push(("lift", Verdict::Undetermined));
                checks.push(("opt_bound", Verdict::Undetermined));
                checks.push(("ratio", Verdict::Undetermined));
            }
        }
    }
    report(&checks, out)
}

fn report(checks: &[(&str, Verdict)], out: Option<&Path>) -> Result<(), Failure> {
    let mut text = String::new();
    for (name, v) in checks {
        let _ = writeln!(text, "{name} {}", v.label());
    }
    emit(out, &text)?;
    if checks.iter().any(|(_, v)| *v == Verdict::Fail) {
        Err(Failure::Verify("verification failed".into()))
    } else if checks.iter().any(|(_, v)| *v == Verdict::Undetermined) {
        Err(Failure::Budget("some checks are undetermined within the budget".into()))
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.common.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Input(m) => (EXIT_INPUT, m),
                Failure::Budget(m) => (EXIT_BUDGET, m),
                Failure::Verify(m) => (EXIT_VERIFY, m),
                Failure::Reject(m) => (EXIT_REJECT, format!("rejected: {m}")),
            };
            eprintln!("{msg}");
            ExitCode::from(code)
        }
    }
}
