//! The `specpart` command line.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 failed precondition,
//! 4 size guard exceeded, 5 timeout.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{
    bound_entries, classify_equality, BoundError, BoundName, BoundReport, Certificate,
    DashboardOptions, EqualityTarget,
};
use crate::cliques::clique_number;
use crate::family::{Family, FamilyError};
use crate::graph::{edgelist, Graph};
use crate::partition::{
    find_kt_decomposition_with, solve_cp, solve_cp_t, solve_kt, solve_pi, solve_pi_t,
    DecompositionOutcome, DecompositionQuery, PartitionJson, SolveError, SolveOptions,
    SolveResult, Witness,
};
use crate::table::{table_row, TableRanges, TableRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_SIZE_GUARD: i32 = 4;
pub const EXIT_TIMEOUT: i32 = 5;

/// Fallback for `--workers`.
pub const WORKERS_ENV: &str = "SPECPART_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "specpart", version, about = "Spectral bounds and exact solvers for clique partitions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a named graph as an edge list, e.g. `gen triangular 5`.
    Gen {
        /// Family and parameters, as `triangular 5` or `triangular:5`.
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Evaluate every applicable spectral bound.
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        /// Also evaluate the `t`-restricted bounds.
        #[arg(long)]
        t: Option<usize>,
        /// Evaluate the `t`-restricted bounds for every `t` from 2 to ω.
        #[arg(long)]
        all: bool,
        /// Skip the exact solvers.
        #[arg(long)]
        no_exact: bool,
        #[command(flatten)]
        solve: SolveArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Solve one quantity exactly.
    Solve {
        quantity: QuantityArg,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        t: Option<usize>,
        /// For cp: forbid the partition of a complete graph into itself.
        #[arg(long)]
        exclude_trivial: bool,
        #[command(flatten)]
        solve: SolveArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Search for a `K_t`-decomposition.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        t: usize,
        /// Require every two cliques to meet.
        #[arg(long)]
        pairwise: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Decide whether a bound is attained and emit a certificate.
    Certify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        bound: BoundArg,
        /// Write the certificate (design or partition JSON) here when attained.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[command(flatten)]
        solve: SolveArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Bounds on the classical families next to their closed forms.
    Table1 {
        #[arg(long, value_parser = parse_range, default_value = "2..5")]
        multipartite_p: (usize, usize),
        #[arg(long, value_parser = parse_range, default_value = "2..5")]
        multipartite_a: (usize, usize),
        #[arg(long, value_parser = parse_range, default_value = "2..6")]
        cycle_complement: (usize, usize),
        #[arg(long, value_parser = parse_range, default_value = "4..8")]
        triangular: (usize, usize),
        #[arg(long, value_parser = parse_range, default_value = "2..8")]
        friendship: (usize, usize),
        /// Skip the exact cp column.
        #[arg(long)]
        no_exact: bool,
        #[command(flatten)]
        solve: SolveArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Edge-list file, or `-` for stdin.
    #[arg(conflicts_with = "family")]
    pub path: Option<PathBuf>,
    /// Inline family spec such as `triangular:5`.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Run past the edge-count guard.
    #[arg(long)]
    pub force: bool,
    /// Seconds per solve.
    #[arg(long, default_value_t = 60.0)]
    pub timeout: f64,
    /// Worker threads (default: $SPECPART_WORKERS, then machine parallelism).
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum QuantityArg {
    Cp,
    CpT,
    Pi,
    PiT,
    Kt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundArg {
    /// Clique count with cliques of size at most t.
    #[value(name = "cp-t", alias = "thm31")]
    CpT,
    /// Total size with cliques of size at most t.
    #[value(name = "pi-t", alias = "thm41")]
    PiT,
    /// Edge-disjoint t-clique packing.
    #[value(name = "kt", alias = "prop42")]
    Kt,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s.split_once("..").unwrap_or((s, s));
    let lo: usize = lo.trim().parse().map_err(|_| format!("bad range `{s}`"))?;
    let hi: usize = hi.trim().parse().map_err(|_| format!("bad range `{s}`"))?;
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok((lo, hi))
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl ToString) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        Failure::new(EXIT_USAGE, e)
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let code = match e {
            SolveError::SizeGuard { .. } => EXIT_SIZE_GUARD,
            SolveError::Timeout { .. } => EXIT_TIMEOUT,
            SolveError::InvalidT { .. } => EXIT_USAGE,
            _ => EXIT_PRECONDITION,
        };
        Failure::new(code, e)
    }
}

impl From<BoundError> for Failure {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::Solve(s) => s.into(),
            BoundError::InvalidT { .. } => Failure::new(EXIT_USAGE, e),
            other => Failure::new(EXIT_PRECONDITION, other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_USAGE, e)
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut ctx = Context { stdout, stderr };
    match ctx.dispatch(cli.command) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(ctx.stderr, "error: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

struct Context<'a> {
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

fn load(input: &InputArgs) -> Result<Graph, Failure> {
    if let Some(spec) = &input.family {
        return Ok(spec.parse::<Family>()?.build()?);
    }
    let Some(path) = &input.path else {
        return Err(Failure::new(EXIT_USAGE, "no input: pass an edge-list path or --family"));
    };
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    }
    edgelist::parse(&text).map_err(|e| Failure::new(EXIT_USAGE, e))
}

fn workers(arg: Option<usize>) -> Result<usize, Failure> {
    if let Some(w) = arg {
        return Ok(w.max(1));
    }
    match std::env::var(WORKERS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|w| w.max(1))
            .map_err(|_| Failure::new(EXIT_USAGE, format!("{WORKERS_ENV}=`{v}` is not a number"))),
        Err(_) => Ok(SolveOptions::default().workers),
    }
}

fn solve_options(args: &SolveArgs) -> Result<SolveOptions, Failure> {
    if !(args.timeout.is_finite() && args.timeout > 0.0) {
        return Err(Failure::new(EXIT_USAGE, "--timeout must be a positive number of seconds"));
    }
    let mut opts = SolveOptions::default()
        .with_workers(workers(args.workers)?)
        .with_timeout(Duration::from_secs_f64(args.timeout));
    if args.force {
        opts = opts.forced();
    }
    Ok(opts)
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

impl Context<'_> {
    fn emit(&mut self, out: &OutputArgs, text: &str) -> Result<(), Failure> {
        match &out.output {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display()))),
            None => Ok(self.stdout.write_all(text.as_bytes())?),
        }
    }

    fn dispatch(&mut self, command: Command) -> Result<i32, Failure> {
        match command {
            Command::Gen { family, output } => self.gen(&family, output),
            Command::Bounds { input, t, all, no_exact, solve, out } => {
                self.bounds(&input, t, all, !no_exact, &solve, &out)
            }
            Command::Solve { quantity, input, t, exclude_trivial, solve, out } => {
                self.solve(quantity, &input, t, exclude_trivial, &solve, &out)
            }
            Command::Decompose { input, t, pairwise, out } => self.decompose(&input, t, pairwise, &out),
            Command::Certify { input, t, bound, certificate, solve, out } => {
                self.certify(&input, t, bound, certificate, &solve, &out)
            }
            Command::Table1 {
                multipartite_p,
                multipartite_a,
                cycle_complement,
                triangular,
                friendship,
                no_exact,
                solve,
                out,
            } => {
                let ranges = TableRanges {
                    multipartite_p,
                    multipartite_a,
                    cycle_complement_s: cycle_complement,
                    triangular_v: triangular,
                    friendship_v: friendship,
                };
                self.table1(&ranges, !no_exact, &solve, &out)
            }
        }
    }

    fn gen(&mut self, words: &[String], output: Option<PathBuf>) -> Result<i32, Failure> {
        let spec = words.join(":");
        let family: Family = spec.parse()?;
        let g = family.build()?;
        let p = g.degree_profile();
        let summary = format!(
            "n {}  m {}  delta {}  regular {}",
            g.n(),
            g.m(),
            p.min_degree,
            yes_no(p.is_regular)
        );
        let text = format!("# {family}\n# {summary}\n{}", edgelist::write(&g));
        match output {
            Some(path) => {
                std::fs::write(&path, text)
                    .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))?;
                writeln!(self.stdout, "{family}: {summary}")?;
            }
            None => self.stdout.write_all(text.as_bytes())?,
        }
        Ok(EXIT_OK)
    }

    #[allow(clippy::too_many_arguments)]
    fn bounds(
        &mut self,
        input: &InputArgs,
        t: Option<usize>,
        all: bool,
        exact: bool,
        solve: &SolveArgs,
        out: &OutputArgs,
    ) -> Result<i32, Failure> {
        let g = load(input)?;
        let solve = solve_options(solve)?;
        let ts: Vec<Option<usize>> = if all {
            (2..=clique_number(&g).max(2)).map(Some).collect()
        } else {
            vec![t]
        };

        let mut reports: Vec<BoundReport> = Vec::new();
        let mut errors: Vec<(BoundName, BoundError)> = Vec::new();
        for (i, t) in ts.into_iter().enumerate() {
            let opts = DashboardOptions { t, exact, solve: solve.clone() };
            for (name, entry) in bound_entries(&g, &opts)? {
                // Size bounds repeat for every t; keep the first copy.
                if i > 0 && matches!(name.quantity(), crate::bounds::Quantity::Cp | crate::bounds::Quantity::Pi) {
                    continue;
                }
                match entry {
                    Ok(r) => reports.push(r),
                    Err(e) => errors.push((name, e)),
                }
            }
        }

        let text = match out.format {
            Format::Json => json(&reports),
            Format::Csv => bounds_csv(&reports),
            Format::Text => bounds_text(&g, &reports, &errors),
        };
        self.emit(out, &text)?;
        for (name, e) in &errors {
            writeln!(self.stderr, "error: {}: {e}", name.as_str())?;
        }
        Ok(match errors.first() {
            None => EXIT_OK,
            Some((_, e)) => Failure::from(e.clone()).code,
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn solve(
        &mut self,
        quantity: QuantityArg,
        input: &InputArgs,
        t: Option<usize>,
        exclude_trivial: bool,
        solve: &SolveArgs,
        out: &OutputArgs,
    ) -> Result<i32, Failure> {
        let needs_t = matches!(quantity, QuantityArg::CpT | QuantityArg::PiT | QuantityArg::Kt);
        let t = match (needs_t, t) {
            (true, None) => return Err(Failure::new(EXIT_USAGE, "this quantity needs --t")),
            (false, Some(_)) => return Err(Failure::new(EXIT_USAGE, "--t only applies to cp-t, pi-t and kt")),
            (_, t) => t,
        };
        if exclude_trivial && quantity != QuantityArg::Cp {
            return Err(Failure::new(EXIT_USAGE, "--exclude-trivial only applies to cp"));
        }
        let g = load(input)?;
        let mut opts = solve_options(solve)?;
        if exclude_trivial {
            opts = opts.excluding_trivial();
        }
        let result = match (quantity, t) {
            (QuantityArg::Cp, _) => solve_cp(&g, &opts)?,
            (QuantityArg::Pi, _) => solve_pi(&g, &opts)?,
            (QuantityArg::CpT, Some(t)) => solve_cp_t(&g, t, &opts)?,
            (QuantityArg::PiT, Some(t)) => solve_pi_t(&g, t, &opts)?,
            (QuantityArg::Kt, Some(t)) => solve_kt(&g, t, &opts)?,
            _ => unreachable!("t checked above"),
        };
        let report = SolveReport::new(quantity, t, &g, &result);
        let text = match out.format {
            Format::Json => json(&report),
            Format::Csv => format!(
                "quantity,t,optimum,cliques\n{},{},{},{}\n",
                report.quantity,
                opt(t),
                report.optimum,
                report.witness.cliques.len()
            ),
            Format::Text => {
                let mut s = format!("{} = {}\n", report.quantity, report.optimum);
                for c in &report.witness.cliques {
                    let _ = writeln!(s, "  {}", fmt_clique(c));
                }
                let _ = writeln!(s, "nodes {}", result.nodes_explored);
                let _ = writeln!(s, "elapsed {:.6} s", result.elapsed.as_secs_f64());
                s
            }
        };
        self.emit(out, &text)?;
        if out.format != Format::Text {
            writeln!(
                self.stderr,
                "nodes {}  elapsed {:.6} s",
                result.nodes_explored,
                result.elapsed.as_secs_f64()
            )?;
        }
        Ok(EXIT_OK)
    }

    fn decompose(&mut self, input: &InputArgs, t: usize, pairwise: bool, out: &OutputArgs) -> Result<i32, Failure> {
        let g = load(input)?;
        let query = DecompositionQuery {
            t,
            pairwise_intersecting: pairwise,
            node_limit: None,
        };
        let found = match find_kt_decomposition_with(&g, query)? {
            DecompositionOutcome::Found(p) => Some(p.to_json()),
            _ => None,
        };
        let text = match out.format {
            Format::Json => json(&DecomposeReport { t, pairwise, found: found.is_some(), partition: found }),
            Format::Csv => {
                let mut s = String::from("clique\n");
                for c in found.iter().flat_map(|p| &p.cliques) {
                    let _ = writeln!(s, "{}", c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
                }
                s
            }
            Format::Text => match &found {
                Some(p) => {
                    let mut s = format!("K_{t}-decomposition with {} cliques\n", p.cliques.len());
                    for c in &p.cliques {
                        let _ = writeln!(s, "  {}", fmt_clique(c));
                    }
                    s
                }
                None => format!("no K_{t}-decomposition\n"),
            },
        };
        self.emit(out, &text)?;
        Ok(EXIT_OK)
    }

    fn certify(
        &mut self,
        input: &InputArgs,
        t: usize,
        bound: BoundArg,
        certificate: Option<PathBuf>,
        solve: &SolveArgs,
        out: &OutputArgs,
    ) -> Result<i32, Failure> {
        let g = load(input)?;
        let opts = solve_options(solve)?;
        let target = match bound {
            BoundArg::CpT => EqualityTarget::CliqueCount,
            BoundArg::PiT => EqualityTarget::TotalSize,
            BoundArg::Kt => EqualityTarget::Packing,
        };
        let report = classify_equality(&g, t, target, &opts)?;
        let text = match out.format {
            Format::Json => json(&report),
            Format::Csv => bounds_csv(std::slice::from_ref(&report)),
            Format::Text => {
                let mut s = format!(
                    "{}  t {}  raw {:.6}  strengthened {}  exact {}\n{}\n",
                    report.name.as_str(),
                    t,
                    report.raw,
                    report.strengthened,
                    opt(report.exact),
                    report.equality_diagnosis.as_str()
                );
                match &report.certificate {
                    Some(Certificate::Design(d)) => {
                        let _ = writeln!(s, "design on {} points, {} blocks", d.num_points(), d.blocks().len());
                        for b in d.blocks() {
                            let _ = writeln!(s, "  {b:?}");
                        }
                    }
                    Some(Certificate::Partition(p)) => {
                        let _ = writeln!(s, "partition with {} cliques", p.size());
                        for c in p.cliques() {
                            let _ = writeln!(s, "  {}", fmt_clique(c.vertices()));
                        }
                    }
                    None => {}
                }
                s
            }
        };
        self.emit(out, &text)?;
        if let (Some(path), Some(cert)) = (certificate, &report.certificate) {
            std::fs::write(&path, json(cert))
                .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))?;
        }
        Ok(EXIT_OK)
    }

    fn table1(&mut self, ranges: &TableRanges, exact: bool, solve: &SolveArgs, out: &OutputArgs) -> Result<i32, Failure> {
        let opts = solve_options(solve)?;
        let mut rows = Vec::new();
        for inst in ranges.instances() {
            rows.push(table_row(inst, exact.then_some(&opts))?);
        }
        let text = match out.format {
            Format::Json => json(&rows),
            Format::Csv => table_csv(&rows),
            Format::Text => table_text(&rows),
        };
        self.emit(out, &text)?;
        Ok(EXIT_OK)
    }
}

fn fmt_clique(c: &[usize]) -> String {
    let vs: Vec<String> = c.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", vs.join(", "))
}

#[derive(Serialize)]
struct SolveReport {
    quantity: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<usize>,
    optimum: usize,
    witness: PartitionJson,
}

impl SolveReport {
    fn new(quantity: QuantityArg, t: Option<usize>, g: &Graph, result: &SolveResult) -> Self {
        let name = match quantity {
            QuantityArg::Cp => "cp",
            QuantityArg::CpT => "cp_t",
            QuantityArg::Pi => "pi",
            QuantityArg::PiT => "pi_t",
            QuantityArg::Kt => "k_t",
        };
        let witness = match &result.witness {
            Witness::Partition(p) => p.to_json(),
            Witness::Packing(cliques) => PartitionJson {
                n: g.n(),
                cliques: cliques.iter().map(|c| c.vertices().to_vec()).collect(),
            },
        };
        SolveReport {
            quantity: name,
            t,
            optimum: result.optimum,
            witness,
        }
    }
}

#[derive(Serialize)]
struct DecomposeReport {
    t: usize,
    pairwise: bool,
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    partition: Option<PartitionJson>,
}

fn bounds_text(g: &Graph, reports: &[BoundReport], errors: &[(BoundName, BoundError)]) -> String {
    let p = g.degree_profile();
    let mut s = format!(
        "n {}  m {}  delta {}  regular {}  connected {}  omega {}\n",
        g.n(),
        g.m(),
        p.min_degree,
        yes_no(p.is_regular),
        yes_no(p.is_connected),
        clique_number(g)
    );
    let _ = writeln!(
        s,
        "{:<24}{:<10}{:>4}{:>16}{:>14}{:>8}  equality",
        "bound", "quantity", "t", "raw", "strengthened", "exact"
    );
    for r in reports {
        let _ = writeln!(
            s,
            "{:<24}{:<10}{:>4}{:>16.6}{:>14}{:>8}  {}",
            r.name.as_str(),
            r.quantity.as_str(),
            opt(r.params.t),
            r.raw,
            r.strengthened,
            opt(r.exact),
            r.equality_diagnosis.as_str()
        );
    }
    for (name, e) in errors {
        let _ = writeln!(s, "{:<24}unavailable: {e}", name.as_str());
    }
    s
}

fn bounds_csv(reports: &[BoundReport]) -> String {
    let mut s = String::from("name,quantity,t,omega,raw,strengthened,exact,equality_diagnosis\n");
    for r in reports {
        let _ = writeln!(
            s,
            "{},{},{},{},{:.6},{},{},{}",
            r.name.as_str(),
            r.quantity.as_str(),
            r.params.t.map_or(String::new(), |t| t.to_string()),
            r.params.omega.map_or(String::new(), |w| w.to_string()),
            r.raw,
            r.strengthened,
            r.exact.map_or(String::new(), |e| e.to_string()),
            r.equality_diagnosis.as_str()
        );
    }
    s
}

fn table_csv(rows: &[TableRow]) -> String {
    let mut s = String::from(
        "family,spec,n,m,cp_lower,cp_via_pi,hoffman_eigencount,hoffman_min_eigenvalue,cp,max_residual\n",
    );
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{:.6},{:.6},{:.6},{:.6},{},{:.3e}",
            r.family, r.spec, r.n, r.m, r.cp_lower, r.cp_via_pi, r.hoffman_eigencount,
            r.hoffman_min_eigenvalue, r.cp, r.max_residual
        );
    }
    s
}

fn table_text(rows: &[TableRow]) -> String {
    let mut s = format!(
        "{:<10}{:>5}{:>6}{:>12}{:>12}{:>12}{:>12}{:>9}{:>12}\n",
        "family", "n", "m", "cp_lower", "cp_via_pi", "eigencount", "min_eig", "cp", "residual"
    );
    for r in rows {
        let _ = writeln!(
            s,
            "{:<10}{:>5}{:>6}{:>12.6}{:>12.6}{:>12.6}{:>12.6}{:>9}{:>12.1e}",
            r.family, r.n, r.m, r.cp_lower, r.cp_via_pi, r.hoffman_eigencount,
            r.hoffman_min_eigenvalue, r.cp, r.max_residual
        );
    }
    s
}
