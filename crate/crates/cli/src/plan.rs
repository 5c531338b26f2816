//! Argument parsing and validation into a [`CommandPlan`].

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::parser::ValueSource;
use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use laplab::partitions::ParametricFamily;
use laplab::{FamilyKind, FamilySpec, RatInterval, TheoremId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Graph6,
    Text,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

/// How interval counts are decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ExactMode {
    /// Floating-point count, confirmed by Sturm sequences when an eigenvalue
    /// sits within tolerance of an endpoint.
    #[default]
    Auto,
    /// Always count with Sturm sequences.
    Always,
}

#[derive(Debug, Parser)]
#[command(
    name = "laplab",
    version,
    about = "Laplacian spectra, exact eigenvalue counts and diameter bounds for small graphs",
    after_help = "Exit status: 0 when every applicable conclusion holds, 2 when a verification found a violation, 1 on error.\n\
                  LAPLAB_MAX_N raises the enumeration ceiling (default 9); orders above it can be very slow."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format [default: json, or graph6 for `family`]
    #[arg(long, global = true, value_enum)]
    output: Option<OutputFormat>,

    /// Interval counting mode
    #[arg(long, global = true, value_enum, default_value_t = ExactMode::Auto)]
    exact: ExactMode,

    /// Worker threads for enumeration and classification
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,

    /// Include wall-clock runtimes in summaries
    #[arg(long, global = true)]
    timing: bool,

    /// Directory receiving graph6 files of violating graphs
    #[arg(long, global = true, value_name = "DIR")]
    certificates: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a family member
    Family(GraphArgs),
    /// Laplacian eigenvalues of a graph
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
        /// Also count eigenvalues in this interval, e.g. "[2,3]" or "(5/2,4]"
        #[arg(long, value_parser = parse_interval)]
        interval: Option<RatInterval>,
    },
    /// Count eigenvalues in an interval
    Count {
        #[command(flatten)]
        graph: GraphArgs,
        /// Interval such as "[2,3]", "(2,n]" style with rational endpoints
        #[arg(long, value_parser = parse_interval)]
        interval: RatInterval,
    },
    /// Verify a statement on one graph, a family instance, or all graphs of an order
    Verify(VerifyArgs),
    /// List every connected graph (or tree) of an order, as graph6
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Trees only
        #[arg(long)]
        trees: bool,
    },
    /// Verify every bound on all connected graphs of an order and tabulate by diameter
    Classify {
        #[arg(long)]
        n: usize,
    },
    /// Quotient matrix of a partition and its spectral containment
    Quotient(QuotientArgs),
}

/// Graph input: a graph6 string, an edge-list file, or a family with its parameters.
#[derive(Debug, Clone, Default, Args)]
struct GraphArgs {
    /// graph6 string
    #[arg(long)]
    graph: Option<String>,
    /// Edge-list file: vertex count on the first line, then one `u v` pair per line
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
    /// Family name, e.g. Gndt, Gn3Minus2s, CompleteMinusStar
    #[arg(long)]
    kind: Option<FamilyKind>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
}

impl GraphArgs {
    fn params(&self) -> [(&'static str, Option<usize>); 6] {
        [
            ("n", self.n),
            ("d", self.d),
            ("t", self.t),
            ("a", self.a),
            ("b", self.b),
            ("s", self.s),
        ]
    }

    fn param(&self, name: &str) -> Option<usize> {
        self.params().into_iter().find(|p| p.0 == name).and_then(|p| p.1)
    }

    fn has_source(&self) -> bool {
        self.graph.is_some() || self.edges.is_some() || self.kind.is_some()
    }
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Statement code: T1 T2 T3 T4 T6 T8 T9 CLASS P12 P13 L1 L3 L5 L6 L7 L8 L9 L10 DOOB ZERO
    #[arg(long)]
    theorem: TheoremId,
    /// Check every connected graph of order --n (every tree for DOOB)
    #[arg(long)]
    all: bool,
    #[command(flatten)]
    graph: GraphArgs,
    /// Parametric polynomial for L9: h24_f, h24_g, g3ab_f, gn43_f
    #[arg(long)]
    parametric: Option<ParametricFamily>,
    /// Edge "u,v" removed for L3
    #[arg(long, value_parser = parse_pair)]
    edge: Option<(usize, usize)>,
    /// Vertices "0,1,4" kept for the principal submatrix in L1
    #[arg(long, value_parser = parse_list)]
    keep: Option<Vertices>,
    /// Partition for L6, blocks separated by '|': "0|1,2|3"
    #[arg(long, value_parser = parse_partition)]
    partition: Option<Blocks>,
}

#[derive(Debug, Args)]
struct QuotientArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Blocks separated by '|', vertices by ',': "0|1,2|3"
    #[arg(long, value_parser = parse_partition)]
    partition: Option<Blocks>,
    /// Use the partition of a parametric construction instead: h24_f, h24_g, g3ab_f, gn43_f
    #[arg(long)]
    parametric: Option<ParametricFamily>,
}

// Aliases keep clap from treating these as repeated flags.
type Vertices = Vec<usize>;
type Blocks = Vec<Vec<usize>>;

fn parse_interval(s: &str) -> Result<RatInterval, String> {
    s.parse::<RatInterval>().map_err(|e| e.to_string())
}

fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse::<usize>()
                .map_err(|_| format!("expected a vertex index, found {v:?}"))
        })
        .collect()
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    match parse_list(s)?.as_slice() {
        &[u, v] => Ok((u, v)),
        _ => Err(format!("expected \"u,v\", found {s:?}")),
    }
}

fn parse_partition(s: &str) -> Result<Vec<Vec<usize>>, String> {
    s.split('|').map(parse_list).collect()
}

/// Where a graph comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    Graph6(String),
    EdgeFile(PathBuf),
    Family(FamilySpec),
}

/// Which statement is verified and on what.
#[derive(Debug, Clone, PartialEq)]
pub enum Verification {
    /// A per-graph statement on one graph.
    Graph {
        theorem: TheoremId,
        source: GraphSource,
        edge: Option<(usize, usize)>,
        keep: Option<Vec<usize>>,
        partition: Option<Vec<Vec<usize>>>,
    },
    /// A statement over every connected graph (or tree) of order `n`.
    Exhaustive { theorem: TheoremId, n: usize },
    Strictness { n: usize, d: usize, t: usize },
    Gn3Deletions { n: usize },
    GnaDeletions { n: usize, a: usize },
    Parametric { family: ParametricFamily, params: Vec<usize> },
}

/// A validated command with its arguments resolved.
#[derive(Debug, Clone, PartialEq)]
pub enum Task {
    Family(FamilySpec),
    Spectrum { source: GraphSource, interval: Option<RatInterval> },
    Count { source: GraphSource, interval: RatInterval },
    Verify(Verification),
    Enumerate { n: usize, trees: bool },
    Classify { n: usize },
    Quotient { source: GraphSource, partition: Vec<Vec<usize>> },
    ParametricQuotient { family: ParametricFamily, params: Vec<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CommandName {
    Family,
    Spectrum,
    Count,
    Verify,
    Enumerate,
    Classify,
    Quotient,
}

impl CommandName {
    fn supports(self, f: OutputFormat) -> bool {
        use OutputFormat::*;
        match self {
            CommandName::Family => true,
            CommandName::Spectrum | CommandName::Classify | CommandName::Count => f != Graph6,
            CommandName::Enumerate => f != Csv,
            CommandName::Verify | CommandName::Quotient => matches!(f, Json | Text),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandPlan {
    pub command: CommandName,
    /// Flags given on the command line, by name, with their raw values
    /// (`"true"` for switches).
    pub options: BTreeMap<String, String>,
    pub output: OutputFormat,
    pub exact: ExactMode,
    pub jobs: Option<usize>,
    pub timing: bool,
    pub certificates: Option<PathBuf>,
    pub task: Task,
}

/// Rendered usage or help text with the status to exit with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError {
    pub message: String,
    /// 0 for `--help` and `--version`, 1 otherwise.
    pub exit_code: i32,
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for UsageError {}

impl From<clap::Error> for UsageError {
    fn from(e: clap::Error) -> Self {
        UsageError {
            message: e.render().to_string(),
            exit_code: if e.use_stderr() { 1 } else { 0 },
        }
    }
}

fn usage(message: impl fmt::Display) -> UsageError {
    Cli::command()
        .error(ErrorKind::ArgumentConflict, message)
        .into()
}

/// Parses arguments (without the program name) into a validated plan.
pub fn parse_args<I, T>(argv: I) -> Result<CommandPlan, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = std::iter::once(OsString::from("laplab")).chain(argv.into_iter().map(Into::into));
    let matches = Cli::command().try_get_matches_from(args)?;
    let cli = Cli::from_arg_matches(&matches)?;
    let (name, sub) = matches.subcommand().expect("subcommand is required");
    let options = given_options(sub);

    let (command, task) = match cli.command {
        Command::Family(g) => {
            let GraphSource::Family(spec) = graph_source(&g)? else {
                return Err(usage("family needs --kind and its parameters"));
            };
            (CommandName::Family, Task::Family(spec))
        }
        Command::Spectrum { graph, interval } => (
            CommandName::Spectrum,
            Task::Spectrum {
                source: graph_source(&graph)?,
                interval,
            },
        ),
        Command::Count { graph, interval } => (
            CommandName::Count,
            Task::Count {
                source: graph_source(&graph)?,
                interval,
            },
        ),
        Command::Verify(v) => (CommandName::Verify, Task::Verify(verification(v)?)),
        Command::Enumerate { n, trees } => (CommandName::Enumerate, Task::Enumerate { n, trees }),
        Command::Classify { n } => (CommandName::Classify, Task::Classify { n }),
        Command::Quotient(q) => (CommandName::Quotient, quotient_task(q)?),
    };
    debug_assert_eq!(name, format!("{command:?}").to_lowercase());

    let output = cli.output.unwrap_or(match command {
        CommandName::Family => OutputFormat::Graph6,
        _ => OutputFormat::Json,
    });
    if !command.supports(output) {
        return Err(usage(format!("{name} does not support --output {output}")));
    }
    Ok(CommandPlan {
        command,
        options,
        output,
        exact: cli.exact,
        jobs: cli.jobs.map(|j| j as usize),
        timing: cli.timing,
        certificates: cli.certificates,
        task,
    })
}

fn given_options(m: &ArgMatches) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    for id in m.ids() {
        let id = id.as_str();
        if m.value_source(id) != Some(ValueSource::CommandLine) {
            continue;
        }
        let value = match m.get_raw(id) {
            Some(raw) if raw.len() > 0 => raw
                .map(|v| v.to_string_lossy().into_owned())
                .collect::<Vec<_>>()
                .join(" "),
            _ => "true".to_string(),
        };
        out.insert(id.to_string(), value);
    }
    out
}

/// Rejects family parameters not in `allowed`.
fn only_params(g: &GraphArgs, allowed: &[&str], context: &str) -> Result<(), UsageError> {
    for (name, value) in g.params() {
        if value.is_some() && !allowed.contains(&name) {
            return Err(usage(format!("--{name} does not apply to {context}")));
        }
    }
    Ok(())
}

fn required(g: &GraphArgs, names: &[&str], context: &str) -> Result<Vec<usize>, UsageError> {
    names
        .iter()
        .map(|name| {
            g.param(name)
                .ok_or_else(|| usage(format!("--{name} is required for {context}")))
        })
        .collect()
}

fn graph_source(g: &GraphArgs) -> Result<GraphSource, UsageError> {
    let given = [g.graph.is_some(), g.edges.is_some(), g.kind.is_some()];
    if given.iter().filter(|&&x| x).count() != 1 {
        return Err(usage("give exactly one of --graph, --edges or --kind"));
    }
    if let Some(kind) = g.kind {
        let names = kind.param_names();
        only_params(g, names, kind.name())?;
        let spec = FamilySpec::new(kind, &required(g, names, kind.name())?);
        spec.validate().map_err(usage)?;
        return Ok(GraphSource::Family(spec));
    }
    only_params(g, &[], "--graph or --edges")?;
    Ok(match (&g.graph, &g.edges) {
        (Some(s), _) => GraphSource::Graph6(s.clone()),
        (_, Some(p)) => GraphSource::EdgeFile(p.clone()),
        _ => unreachable!(),
    })
}

fn parametric_params(family: ParametricFamily, g: &GraphArgs) -> Result<Vec<usize>, UsageError> {
    if g.graph.is_some() || g.edges.is_some() || g.kind.is_some() {
        return Err(usage("--parametric takes only its parameters, not a graph"));
    }
    let names = family.param_names();
    only_params(g, names, family.name())?;
    required(g, names, family.name())
}

fn verification(v: VerifyArgs) -> Result<Verification, UsageError> {
    use TheoremId::*;
    let id = v.theorem;
    let code = id.code();
    let extras = [
        ("--parametric", v.parametric.is_some(), id == ParametricIdentity),
        ("--edge", v.edge.is_some(), id == EdgeInterlacing),
        ("--keep", v.keep.is_some(), id == CauchyInterlacing),
        ("--partition", v.partition.is_some(), id == QuotientContainment),
    ];
    for (flag, given, allowed) in extras {
        if given && (!allowed || v.all) {
            return Err(usage(format!("{flag} does not apply to verify {code}{}", if v.all { " --all" } else { "" })));
        }
    }

    if v.all {
        let corpus = matches!(
            id,
            AboveTwoLowerBound
                | HighTailBound
                | ShiftTwoBound
                | ShiftOneBound
                | DiameterTwoEquality
                | DiameterThreeEquality
                | SufficientCondition
                | ClassMembership
                | DoobTreeBound
                | ComplementDuality
                | ZeroMultiplicity
        );
        if !corpus {
            return Err(usage(format!("{code} has no exhaustive mode")));
        }
        if v.graph.has_source() {
            return Err(usage("--all takes --n, not a graph"));
        }
        only_params(&v.graph, &["n"], "--all")?;
        let n = required(&v.graph, &["n"], "--all")?[0];
        if id == DiameterThreeEquality && n < 5 {
            return Err(usage("T8 needs n >= 5"));
        }
        return Ok(Verification::Exhaustive { theorem: id, n });
    }

    let fixed = |names: &[&str]| -> Result<Vec<usize>, UsageError> {
        if v.graph.has_source() {
            return Err(usage(format!("{code} takes only its parameters, not a graph")));
        }
        only_params(&v.graph, names, code)?;
        required(&v.graph, names, code)
    };
    match id {
        Gn43Strictness => {
            let n = fixed(&["n", "d", "t"]).or_else(|_| fixed(&["n"]).map(|p| vec![p[0], 4, 3]))?;
            if (n[1], n[2]) != (4, 3) {
                return Err(usage("P12 is the case d = 4, t = 3; use P13 for other values"));
            }
            Ok(Verification::Strictness { n: n[0], d: 4, t: 3 })
        }
        GndtStrictness => {
            let p = fixed(&["n", "d", "t"])?;
            Ok(Verification::Strictness { n: p[0], d: p[1], t: p[2] })
        }
        Gn3DeletionDrop => Ok(Verification::Gn3Deletions { n: fixed(&["n"])?[0] }),
        GnaDeletionDrop => {
            let p = fixed(&["n", "a"])?;
            Ok(Verification::GnaDeletions { n: p[0], a: p[1] })
        }
        ParametricIdentity => {
            let family = v
                .parametric
                .ok_or_else(|| usage("L9 needs --parametric h24_f|h24_g|g3ab_f|gn43_f"))?;
            Ok(Verification::Parametric {
                family,
                params: parametric_params(family, &v.graph)?,
            })
        }
        Weyl => Err(usage("L2 takes two matrices and is only available from the library")),
        _ => {
            let need = match id {
                EdgeInterlacing => v.edge.is_none().then_some("--edge"),
                CauchyInterlacing => v.keep.is_none().then_some("--keep"),
                QuotientContainment => v.partition.is_none().then_some("--partition"),
                _ => None,
            };
            if let Some(flag) = need {
                return Err(usage(format!("{code} needs {flag}")));
            }
            Ok(Verification::Graph {
                theorem: id,
                source: graph_source(&v.graph)?,
                edge: v.edge,
                keep: v.keep,
                partition: v.partition,
            })
        }
    }
}

fn quotient_task(q: QuotientArgs) -> Result<Task, UsageError> {
    match (q.partition, q.parametric) {
        (Some(partition), None) => Ok(Task::Quotient {
            source: graph_source(&q.graph)?,
            partition,
        }),
        (None, Some(family)) => Ok(Task::ParametricQuotient {
            family,
            params: parametric_params(family, &q.graph)?,
        }),
        _ => Err(usage("quotient needs exactly one of --partition or --parametric")),
    }
}
