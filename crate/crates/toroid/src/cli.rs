//! Argument parsing and dispatch for the `toroid` binary. Every subcommand
//! reads its input, calls the matching `toroid_core` entry point and
//! formats the result; nothing is decided here beyond the exit code.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use toroid_core::audit::run_audit;
use toroid_core::color::{is_k_choosable, optimal_coloring, solve_list_coloring, ColorError, Coloring, SearchLimits};
use toroid_core::detect::{find_hamiltonian_cycle, find_k5_variant, has_cycle_of_length, K5Variant};
use toroid_core::discharge::{verify_discharge, Verdict};
use toroid_core::families::{FamilyError, FamilySpec};
use toroid_core::reduce::{find_reducible, CertMethod, Certificate, ReduceError};
use toroid_core::{Budget, BudgetExceeded, EmbeddingSummary, RotationGraph};

use crate::lists::{parse_list_assignment, serialize_list_assignment};
use crate::report::{audit_report, describe_hit, discharge_report, vertex_list, Report};
use crate::rot::{parse_rotation_graph, serialize_rotation_graph};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    /// The input lacks the property asked about, or a check failed.
    PropertyFailure = 1,
    /// Bad arguments or an unreadable / malformed input file.
    Usage = 2,
    /// A search budget or size cap was hit before an answer.
    BudgetExceeded = 3,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub status: Status,
    pub report: Report,
}

impl CommandResult {
    fn new(status: Status, report: Report) -> Self {
        CommandResult { status, report }
    }

    fn message(status: Status, text: impl Into<String>) -> Self {
        let mut report = Report::new();
        let text = text.into();
        report.line(text.trim_end());
        CommandResult { status, report }
    }

    pub fn output(&self) -> String {
        self.report.to_string()
    }
}

#[derive(Debug, Parser)]
#[command(name = "toroid", version, about = "Embedded-graph analysis: faces, coloring, reducible configurations, discharging")]
pub struct Cli {
    #[command(flatten)]
    pub budgets: Budgets,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Budgets {
    /// Step budget for cycle, hamiltonian and configuration searches
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_STEPS)]
    pub max_steps: u64,
    /// Node budget for coloring and choosability searches
    #[arg(long, global = true, default_value_t = SearchLimits::DEFAULT_MAX_NODES)]
    pub max_nodes: u64,
    /// Vertex cap for exact coloring [default: 64 for --chromatic, 9 for --choosable and reduce]
    #[arg(long, global = true)]
    pub max_vertices: Option<usize>,
}

impl Budgets {
    fn steps(&self) -> Budget {
        Budget::new(self.max_steps)
    }

    fn chromatic(&self) -> SearchLimits {
        let l = SearchLimits::chromatic().with_max_nodes(self.max_nodes);
        self.max_vertices.map_or(l, |m| l.with_max_vertices(m))
    }

    fn choosability(&self) -> SearchLimits {
        let l = SearchLimits::choosability().with_max_nodes(self.max_nodes);
        self.max_vertices.map_or(l, |m| l.with_max_vertices(m))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex, edge and face counts, Euler characteristic, genus, degree histograms
    Analyze { file: PathBuf },
    /// Search for a subgraph pattern; exits 1 when it is absent
    Detect {
        file: PathBuf,
        /// k5, k5minus, w4, cycle:L or hamiltonian
        #[arg(long)]
        pattern: PatternArg,
    },
    /// Exact coloring: chromatic number, list coloring or k-choosability
    Color {
        file: PathBuf,
        #[command(flatten)]
        mode: ColorMode,
    },
    /// Find reducible configurations and certify each one
    Reduce { file: PathBuf },
    /// Run the discharging rules and report conservation and claim verdicts
    Discharge {
        file: PathBuf,
        /// Print one RULE line per charge transfer
        #[arg(long)]
        trace: bool,
    },
    /// Run every structural check, one CHECK line each with verdict and witness
    Audit { file: PathBuf },
    /// Generate a family member with its torus rotation system
    Gen {
        family: FamilyArg,
        s: usize,
        /// Write the graph here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct ColorMode {
    /// Compute the chromatic number and an optimal coloring
    #[arg(long)]
    pub chromatic: bool,
    /// Find a coloring from the lists in LFILE (`<id>: c1 c2 ...`)
    #[arg(long, value_name = "LFILE")]
    pub lists: Option<PathBuf>,
    /// Decide K-choosability; prints a bad list assignment when not
    #[arg(long, value_name = "K")]
    pub choosable: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternArg {
    K5,
    K5Minus,
    W4,
    Cycle(usize),
    Hamiltonian,
}

impl FromStr for PatternArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "k5" => Ok(PatternArg::K5),
            "k5minus" => Ok(PatternArg::K5Minus),
            "w4" => Ok(PatternArg::W4),
            "hamiltonian" => Ok(PatternArg::Hamiltonian),
            _ => match s.strip_prefix("cycle:").map(str::parse::<usize>) {
                Some(Ok(len)) if len >= 3 => Ok(PatternArg::Cycle(len)),
                Some(_) => Err(format!("`{s}`: cycle length must be an integer of at least 3")),
                None => Err(format!("unknown pattern `{s}` (expected k5, k5minus, w4, cycle:L or hamiltonian)")),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Gs,
    Gprime,
}

enum Stop {
    Usage(String),
    Budget(String),
}

impl From<BudgetExceeded> for Stop {
    fn from(e: BudgetExceeded) -> Self {
        Stop::Budget(format!("{e} (raise --max-steps)"))
    }
}

impl From<ColorError> for Stop {
    fn from(e: ColorError) -> Self {
        match e {
            ColorError::TooManyVertices { .. } => Stop::Budget(format!("{e} (raise --max-vertices)")),
            ColorError::Budget(b) => Stop::Budget(format!("{b} (raise --max-nodes)")),
            other => Stop::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<CommandResult, Stop>;

/// Parses `argv` (program name first) and runs the subcommand.
pub fn dispatch<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Status::Ok,
                _ => Status::Usage,
            };
            return CommandResult::message(status, e.render().to_string());
        }
    };
    run(&cli)
}

pub fn run(cli: &Cli) -> CommandResult {
    let b = cli.budgets;
    let outcome = match &cli.command {
        Command::Analyze { file } => load(file).map(|g| analyze(&g)),
        Command::Detect { file, pattern } => load(file).and_then(|g| detect(&g, *pattern, &b)),
        Command::Color { file, mode } => load(file).and_then(|g| color(&g, mode, &b)),
        Command::Reduce { file } => load(file).and_then(|g| reduce(&g, &b)),
        Command::Discharge { file, trace } => load(file).and_then(|g| discharge(&g, *trace, &b)),
        Command::Audit { file } => load(file).and_then(|g| audit(&g, &b)),
        Command::Gen { family, s, output } => generate(*family, *s, output.as_deref()),
    };
    outcome.unwrap_or_else(|stop| match stop {
        Stop::Usage(m) => CommandResult::message(Status::Usage, format!("error: {m}")),
        Stop::Budget(m) => CommandResult::message(Status::BudgetExceeded, format!("budget exceeded: {m}")),
    })
}

fn read(path: &Path) -> Result<String, Stop> {
    std::fs::read_to_string(path).map_err(|e| Stop::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<RotationGraph, Stop> {
    parse_rotation_graph(&read(path)?).map_err(|e| Stop::Usage(format!("{}: {e}", path.display())))
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Ok
    } else {
        Status::PropertyFailure
    }
}

fn histogram(values: impl Iterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for d in values {
        *h.entry(d).or_insert(0) += 1;
    }
    h
}

fn analyze(g: &RotationGraph) -> CommandResult {
    let faces = g.trace_faces();
    let mut r = Report::new();
    let vdeg = histogram((0..g.vertex_count()).map(|v| g.degree(v)));
    let fdeg = histogram(faces.faces().iter().map(|f| f.degree()));
    let summary = EmbeddingSummary::of(g, &faces);
    let (v, e) = (g.vertex_count(), g.edge_count());
    r.line(format_args!("vertices: {v}"));
    r.line(format_args!("edges: {e}"));
    match &summary {
        Ok(s) => {
            r.line(format_args!("faces: {}", s.f_count));
            r.line(format_args!("euler characteristic: {}", s.euler_characteristic));
            match s.genus {
                Some(genus) => r.line(format_args!("genus: {genus}")),
                None => r.line("genus: undefined"),
            }
        }
        Err(err) => {
            r.line(format_args!("faces: {}", faces.len()));
            r.line(format_args!("genus: undefined ({err})"));
        }
    }
    r.line("vertex degrees:");
    for (d, n) in &vdeg {
        r.line(format_args!("  {d}: {n}"));
    }
    r.line("face degrees:");
    for (d, n) in &fdeg {
        r.line(format_args!("  {d}: {n}"));
    }
    r.key("vertices", v);
    r.key("edges", e);
    r.key("faces", summary.as_ref().map_or(faces.len(), |s| s.f_count));
    r.key("components", g.components().len());
    if let Ok(s) = &summary {
        r.key("euler_characteristic", s.euler_characteristic);
        if let Some(genus) = s.genus {
            r.key("genus", genus);
        }
    }
    for (d, n) in &vdeg {
        r.key(format!("vertex_degree.{d}"), n);
    }
    for (d, n) in &fdeg {
        r.key(format!("face_degree.{d}"), n);
    }
    CommandResult::new(status(summary.is_ok()), r)
}

fn detect(g: &RotationGraph, pattern: PatternArg, b: &Budgets) -> Outcome {
    let mut budget = b.steps();
    let (name, found) = match pattern {
        PatternArg::K5 => ("k5".to_string(), find_k5_variant(g, K5Variant::K5).map(|h| h.witness)),
        PatternArg::K5Minus => ("k5minus".to_string(), find_k5_variant(g, K5Variant::K5Minus).map(|h| h.witness)),
        PatternArg::W4 => ("w4".to_string(), find_k5_variant(g, K5Variant::W4).map(|h| h.witness)),
        PatternArg::Cycle(len) => (
            format!("cycle:{len}"),
            has_cycle_of_length(g, len, &mut budget)?.map(|h| h.witness),
        ),
        PatternArg::Hamiltonian => ("hamiltonian".to_string(), find_hamiltonian_cycle(g, &mut budget)?),
    };
    let mut r = Report::new();
    match &found {
        Some(w) => r.line(format_args!("PATTERN {name} FOUND {}", vertex_list(g, w))),
        None => r.line(format_args!("PATTERN {name} ABSENT")),
    }
    r.key("pattern", &name);
    r.key("found", found.is_some());
    if let Some(w) = &found {
        r.key("witness", vertex_list(g, w));
    }
    Ok(CommandResult::new(status(found.is_some()), r))
}

fn coloring_lines(r: &mut Report, g: &RotationGraph, c: &Coloring) {
    for v in 0..g.vertex_count() {
        r.line(format_args!("COLOR {} {}", g.id(v), c.color(v)));
    }
}

fn color(g: &RotationGraph, mode: &ColorMode, b: &Budgets) -> Outcome {
    let mut r = Report::new();
    if mode.chromatic {
        let (k, c) = optimal_coloring(g, &b.chromatic())?;
        r.line(format_args!("CHROMATIC {k}"));
        coloring_lines(&mut r, g, &c);
        r.key("chromatic_number", k);
        return Ok(CommandResult::new(Status::Ok, r));
    }
    if let Some(path) = &mode.lists {
        let lists = parse_list_assignment(&read(path)?, g).map_err(|e| Stop::Usage(format!("{}: {e}", path.display())))?;
        let found = solve_list_coloring(g, &lists)?;
        match &found {
            Some(c) => {
                r.line("LIST-COLORING FOUND");
                coloring_lines(&mut r, g, c);
            }
            None => r.line("LIST-COLORING NONE"),
        }
        r.key("colorable", found.is_some());
        return Ok(CommandResult::new(status(found.is_some()), r));
    }
    let k = mode.choosable.expect("clap requires one color mode");
    let answer = is_k_choosable(g, k, &b.choosability())?;
    r.line(format_args!("CHOOSABLE {k} {}", if answer.choosable { "YES" } else { "NO" }));
    r.key("k", k);
    r.key("choosable", answer.choosable);
    if let Some(w) = &answer.witness {
        r.line("witness lists with no coloring:");
        let mut text = serialize_list_assignment(g, w);
        text.pop();
        r.line(text);
        r.key("witness_uniform", w.is_uniform());
    }
    Ok(CommandResult::new(status(answer.choosable), r))
}

fn reduce(g: &RotationGraph, b: &Budgets) -> Outcome {
    let faces = g.trace_faces();
    let hits = find_reducible(g, &faces, &mut b.steps())?;
    let limits = b.choosability();
    let mut r = Report::new();
    let mut failed = 0;
    for hit in &hits {
        let mut line = format!("HIT {}", describe_hit(g, &faces, hit));
        match hit.certify(g, &limits) {
            Ok(Certificate::DegreeChoosable { sizes, method }) => {
                let how = match method {
                    CertMethod::Exhaustive => "exhaustive",
                    CertMethod::Structural => "structural",
                };
                let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
                let _ = write!(line, " CERT degree-choosable {how} sizes={}", sizes.join(","));
            }
            Ok(Certificate::MinDegreeViolation) => line.push_str(" CERT min-degree"),
            Err(ReduceError::Color(e)) => return Err(e.into()),
            Err(e) => {
                failed += 1;
                let _ = write!(line, " CERT FAILED {e}");
            }
        }
        r.line(line);
    }
    if hits.is_empty() {
        r.line("no reducible configuration");
    }
    r.key("hits", hits.len());
    r.key("certified", hits.len() - failed);
    Ok(CommandResult::new(status(failed == 0), r))
}

fn discharge(g: &RotationGraph, trace: bool, b: &Budgets) -> Outcome {
    let d = verify_discharge(g, &mut b.steps())?;
    let faces = g.trace_faces();
    let ok = d.conserved() && d.matches_euler() && d.claims.iter().all(|c| c.verdict != Verdict::Fail);
    Ok(CommandResult::new(status(ok), discharge_report(g, &faces, &d, trace)))
}

fn audit(g: &RotationGraph, b: &Budgets) -> Outcome {
    let a = run_audit(g, &mut b.steps())?;
    let faces = g.trace_faces();
    let ok = a.failures().next().is_none();
    Ok(CommandResult::new(status(ok), audit_report(g, &faces, &a)))
}

fn generate(family: FamilyArg, s: usize, output: Option<&Path>) -> Outcome {
    let spec = match family {
        FamilyArg::Gs => FamilySpec::gs(s),
        FamilyArg::Gprime => FamilySpec::gprime(s),
    };
    let g = match spec.generate() {
        Ok(g) => g,
        Err(e @ FamilyError::ParameterTooSmall { .. }) => return Err(Stop::Usage(e.to_string())),
        Err(e) => return Ok(CommandResult::message(Status::PropertyFailure, format!("generator check failed: {e}"))),
    };
    let name = match family {
        FamilyArg::Gs => format!("gs {s}"),
        FamilyArg::Gprime => format!("gprime {s}"),
    };
    let text = format!("# toroid gen {name}\n{}", serialize_rotation_graph(&g));
    let mut r = Report::new();
    match output {
        None => {
            text.lines().for_each(|l| r.line(l));
        }
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Stop::Usage(format!("cannot write {}: {e}", path.display())))?;
            let faces = g.trace_faces();
            r.line(format_args!(
                "wrote {} ({} vertices, {} edges, {} faces)",
                path.display(),
                g.vertex_count(),
                g.edge_count(),
                faces.len()
            ));
            r.key("vertices", g.vertex_count());
            r.key("edges", g.edge_count());
            r.key("faces", faces.len());
        }
    }
    Ok(CommandResult::new(Status::Ok, r))
}
