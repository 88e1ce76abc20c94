//! `simcross`: crossing counts of symmetric polygonal knots.

mod render;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use simcross::chords::{check_chord_symmetry, simultaneous_chords};
use simcross::diagram::{counts_of, project_all};
use simcross::families::TableError;
use simcross::invariants::{identify, InvariantError};
use simcross::search::{best_fingerprint, read_catalog, run_search, SearchConfig, SearchError};
use simcross::{
    builtin_quarter, parity_check, read_quarter, serialize_quarter, symmetrize, twist_quarter_case,
    twist_quarter_unified, validate_embedding, verify_twist_table, Axis, Diagram, DiagramError, FamilyError,
    FormatError, KnotEmbedding, QuarterArc, Rational, TwistSpec,
};

use render::{chord_svg, projection_svg, RenderSpec};

const COUNT_HELP: &str = "Counts are printed on one line as `p_X p_Y p_Z sum`, where p_A is the \
crossing number of the projection along the A-axis. X and Y are the strong-inversion axes; Z is the \
axis of the free period-2 symmetry.";

const EXIT_HELP: &str = "Exit codes: 0 success, 2 usage, 3 parse, 4 invalid embedding, \
5 general-position violation, 6 i/o, 7 verification mismatch, 8 invariant computation. \
Errors are reported on stderr as a single line `error: <kind>: <message>`.";

#[derive(Parser, Debug)]
#[command(
    name = "simcross",
    version,
    about = "Simultaneous crossing numbers of symmetric polygonal knots"
)]
#[command(after_help = EXIT_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the quarter arc of a built-in knot.
    Family(FamilyArgs),
    /// Print the crossing counts of the three projections.
    #[command(after_help = COUNT_HELP)]
    Count(CountArgs),
    /// Check the closed-form counts of the twist knots C(2k, ±2) for k up to max-k.
    VerifyTable {
        #[arg(long, default_value_t = 3)]
        max_k: i64,
    },
    /// Random search over symmetric quarter arcs.
    Search(SearchArgs),
    /// Filter a search catalog.
    Query(QueryArgs),
    /// Name the knot type from its Alexander polynomial and determinant.
    Identify(IdentifyArgs),
    /// Chord diagrams of the three projections on a common circle.
    Chords {
        file: PathBuf,
        /// Write the chord diagram as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyKind {
    Case1,
    Case2,
    Case3,
    Case4,
    Unified,
    Unknot,
    #[value(name = "T45")]
    T45,
}

#[derive(clap::Args, Debug)]
struct FamilyArgs {
    kind: FamilyKind,
    /// Parameter of case1..case4.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    /// Twist count of the unified construction.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    /// Clasp sign of the unified construction (+1 or -1).
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<i64>,
    /// Offset parameter, e.g. 1/5 or 0.2.
    #[arg(long, default_value = "1/5")]
    delta: Rational,
    /// Output file; stdout if omitted.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct CountArgs {
    file: PathBuf,
    /// Directory for projection-x.svg, projection-y.svg and projection-z.svg.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Also write chords.svg into the SVG directory.
    #[arg(long, requires = "svg")]
    chords: bool,
    /// Panel width and height in pixels.
    #[arg(long, default_value_t = 400.0)]
    size: f64,
    /// Under-strand gap as a fraction of the panel size, in (0, 1/4).
    #[arg(long, default_value = "1/25")]
    gap: Rational,
    #[arg(long, default_value_t = 2.0)]
    stroke: f64,
}

#[derive(clap::Args, Debug)]
struct SearchArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    /// JSON-lines catalog of accepted samples.
    #[arg(long)]
    catalog: PathBuf,
    /// Worker threads; 0 uses all available cores.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long, default_value_t = 1)]
    min_interior: usize,
    #[arg(long, default_value_t = 3)]
    max_interior: usize,
    /// Coordinates are drawn from [-bound, bound].
    #[arg(long, default_value_t = 3)]
    bound: i64,
    /// Lattice step of interior coordinates.
    #[arg(long, default_value = "1/5")]
    delta: Rational,
}

#[derive(clap::Args, Debug)]
struct QueryArgs {
    #[arg(long)]
    catalog: PathBuf,
    /// Entries with this knot among their candidates.
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    max_sum: Option<usize>,
    /// Entries whose fingerprint is not in the table.
    #[arg(long)]
    unidentified: bool,
}

#[derive(clap::Args, Debug)]
struct IdentifyArgs {
    file: PathBuf,
    /// Print the Gauss code of each projection for use with external tools.
    #[arg(long)]
    gauss: bool,
    /// Print the PD code of each projection.
    #[arg(long)]
    pd: bool,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    GeneralPosition(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse(_) => "parse",
            CliError::Invalid(_) => "invalid-embedding",
            CliError::GeneralPosition(_) => "general-position",
            CliError::Io(_) => "io",
            CliError::Mismatch(_) => "verification",
            CliError::Invariant(_) => "invariant",
        }
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Invalid(_) => 4,
            CliError::GeneralPosition(_) => 5,
            CliError::Io(_) => 6,
            CliError::Mismatch(_) => 7,
            CliError::Invariant(_) => 8,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Json(_) => CliError::Parse(e.to_string()),
            FormatError::Quarter(_) => CliError::Invalid(e.to_string()),
            FormatError::Io { .. } => CliError::Io(e.to_string()),
        }
    }
}

impl From<DiagramError> for CliError {
    fn from(e: DiagramError) -> Self {
        match e {
            DiagramError::InvalidEmbedding(_) => CliError::Invalid(e.to_string()),
            DiagramError::GeneralPosition { .. } => CliError::GeneralPosition(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Config(_) => CliError::Usage(e.to_string()),
            SearchError::Parity { .. } => CliError::Mismatch(e.to_string()),
            SearchError::Sink { .. } => CliError::Io(e.to_string()),
        }
    }
}

impl From<TableError> for CliError {
    fn from(e: TableError) -> Self {
        match e {
            TableError::Invalid { .. } => CliError::Invalid(e.to_string()),
            TableError::Diagram { .. } => CliError::GeneralPosition(e.to_string()),
            TableError::Parity { .. } | TableError::Mismatch { .. } => CliError::Mismatch(e.to_string()),
        }
    }
}

fn io_error(path: &Path, e: io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| io_error(path, e))
}

/// Reads, symmetrizes and validates a quarter-arc file, then projects it.
fn load(path: &Path) -> Result<(KnotEmbedding, [Diagram; 3]), CliError> {
    let q = read_quarter(path)?;
    let knot = symmetrize(&q);
    let report = validate_embedding(&knot);
    if !report.valid {
        return Err(DiagramError::InvalidEmbedding(report.violations).into());
    }
    let diagrams = project_all(&knot)?;
    if let Some(d) = diagrams.iter().find(|d| !parity_check(d)) {
        return Err(CliError::Mismatch(format!(
            "parity check failed in the {}-projection ({} crossings, {} central)",
            d.axis,
            d.crossing_count,
            d.central_count()
        )));
    }
    Ok((knot, diagrams))
}

fn cmd_family(args: FamilyArgs, out: &mut String) -> Result<(), CliError> {
    let need = |v: Option<i64>, flag: &str| v.ok_or_else(|| CliError::Usage(format!("{:?} needs --{flag}", args.kind)));
    let q: QuarterArc = match args.kind {
        FamilyKind::Case1 => twist_quarter_case(1, need(args.m, "m")?, &args.delta)?,
        FamilyKind::Case2 => twist_quarter_case(2, need(args.m, "m")?, &args.delta)?,
        FamilyKind::Case3 => twist_quarter_case(3, need(args.m, "m")?, &args.delta)?,
        FamilyKind::Case4 => twist_quarter_case(4, need(args.m, "m")?, &args.delta)?,
        FamilyKind::Unified => {
            let spec = TwistSpec::new(need(args.k, "k")?, need(args.rho, "rho")?, args.delta.clone())?;
            twist_quarter_unified(&spec)?
        }
        FamilyKind::Unknot => builtin_quarter("unknot", &args.delta)?,
        FamilyKind::T45 => builtin_quarter("T45", &args.delta)?,
    };
    let text = serialize_quarter(&q);
    match &args.out {
        Some(path) => write_file(path, &text),
        None => {
            out.push_str(&text);
            Ok(())
        }
    }
}

fn cmd_count(args: CountArgs, out: &mut String) -> Result<(), CliError> {
    let spec = RenderSpec {
        size: args.size,
        gap: args.gap.to_f64(),
        stroke: args.stroke,
    };
    if args.svg.is_some() {
        spec.validate().map_err(CliError::Usage)?;
    }
    let (knot, diagrams) = load(&args.file)?;
    let _ = writeln!(out, "{}", counts_of(&diagrams));
    if let Some(dir) = &args.svg {
        fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
        for d in &diagrams {
            write_file(
                &dir.join(format!("projection-{}.svg", d.axis)),
                &projection_svg(&knot, d, &spec),
            )?;
        }
        if args.chords {
            let cd = simultaneous_chords(&knot)?;
            write_file(&dir.join("chords.svg"), &chord_svg(&cd, &spec))?;
        }
    }
    Ok(())
}

fn cmd_verify_table(max_k: i64, out: &mut String) -> Result<(), CliError> {
    if max_k < 1 {
        return Err(CliError::Usage(format!("--max-k must be at least 1, got {max_k}")));
    }
    for row in verify_twist_table(max_k)? {
        let _ = writeln!(
            out,
            "PASS {} k={} rho={:+} cr={}: {}",
            row.name, row.k, row.rho, row.crossing_number, row.counts
        );
    }
    Ok(())
}

fn cmd_search(args: SearchArgs, out: &mut String) -> Result<(), CliError> {
    let cfg = SearchConfig {
        seed: args.seed,
        samples: args.samples,
        min_interior: args.min_interior,
        max_interior: args.max_interior,
        coord_bound: args.bound,
        delta: args.delta,
    };
    cfg.validate()?;
    let file = fs::File::create(&args.catalog).map_err(|e| io_error(&args.catalog, e))?;
    let mut sink = io::BufWriter::new(file);
    let stats = run_search(&cfg, args.threads, &mut sink)?;
    let _ = writeln!(out, "attempted {}", stats.attempted);
    let _ = writeln!(out, "rejected-quarter {}", stats.rejected_quarter);
    let _ = writeln!(out, "invalid {}", stats.invalid);
    let _ = writeln!(out, "general-position {}", stats.general_position);
    let _ = writeln!(out, "accepted {}", stats.accepted);
    let _ = writeln!(out, "identified {}", stats.identified);
    let _ = writeln!(out, "unfingerprinted {}", stats.unfingerprinted);
    let _ = writeln!(out, "bound-violations {}", stats.bound_violations);
    for (name, best) in &stats.best {
        let _ = writeln!(out, "best {name} sum={} index={}", best.sum, best.index);
    }
    Ok(())
}

fn cmd_query(args: QueryArgs, out: &mut String) -> Result<(), CliError> {
    let text = fs::read_to_string(&args.catalog).map_err(|e| io_error(&args.catalog, e))?;
    let entries = read_catalog(&text).map_err(|e| CliError::Parse(format!("{}: {e}", args.catalog.display())))?;
    for e in entries {
        if args.name.as_ref().is_some_and(|n| !e.names.contains(n))
            || args.max_sum.is_some_and(|m| e.sum > m)
            || (args.unidentified && !e.names.is_empty())
        {
            continue;
        }
        let names = if e.names.is_empty() {
            "-".to_string()
        } else {
            e.names.join(",")
        };
        let _ = writeln!(out, "{} {} {}", e.index, e.counts(), names);
    }
    Ok(())
}

fn cmd_identify(args: IdentifyArgs, out: &mut String) -> Result<(), CliError> {
    let (_, diagrams) = load(&args.file)?;
    let _ = writeln!(out, "counts {}", counts_of(&diagrams));
    for d in &diagrams {
        if args.gauss {
            let _ = writeln!(out, "gauss {} {}", d.axis, d.gauss_text());
        }
        if args.pd {
            let pd: Vec<String> = d.pd_code.to_string().lines().map(str::to_string).collect();
            let _ = writeln!(out, "pd {} {}", d.axis, pd.join(" "));
        }
    }
    let fp = best_fingerprint(&diagrams).ok_or_else(|| {
        CliError::Invariant(InvariantError::Malformed(
            "no projection yields an Alexander polynomial".into(),
        ))
    })?;
    let _ = writeln!(out, "determinant {}", fp.determinant);
    let _ = writeln!(out, "alexander {}", fp.alexander);
    let names = identify(&fp);
    if names.is_empty() {
        let _ = writeln!(out, "unidentified");
    } else {
        let _ = writeln!(out, "candidates {} (up to mirror)", names.join(" "));
    }
    Ok(())
}

fn cmd_chords(file: &Path, svg: Option<&Path>, out: &mut String) -> Result<(), CliError> {
    let (knot, _) = load(file)?;
    let cd = simultaneous_chords(&knot)?;
    let _ = writeln!(
        out,
        "chords x={} y={} z={}",
        cd.count(Axis::X),
        cd.count(Axis::Y),
        cd.count(Axis::Z)
    );
    let _ = writeln!(out, "shared-endpoints {}", cd.shared_endpoints().len());
    for axis in Axis::ALL {
        if !check_chord_symmetry(&cd, axis) {
            return Err(CliError::Mismatch(format!("{axis} chords are not symmetric")));
        }
    }
    let _ = writeln!(out, "symmetric yes");
    if let Some(path) = svg {
        write_file(path, &chord_svg(&cd, &RenderSpec::default()))?;
    }
    Ok(())
}

/// Runs one command; stdout text is collected so that a failing command
/// prints nothing but its error line.
fn run(cli: Cli) -> Result<String, CliError> {
    let mut out = String::new();
    match cli.command {
        Command::Family(a) => cmd_family(a, &mut out),
        Command::Count(a) => cmd_count(a, &mut out),
        Command::VerifyTable { max_k } => cmd_verify_table(max_k, &mut out),
        Command::Search(a) => cmd_search(a, &mut out),
        Command::Query(a) => cmd_query(a, &mut out),
        Command::Identify(a) => cmd_identify(a, &mut out),
        Command::Chords { file, svg } => cmd_chords(&file, svg.as_deref(), &mut out),
    }?;
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error: usage: {first}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(text) => match io::stdout().lock().write_all(text.as_bytes()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: io: stdout: {e}");
                ExitCode::from(6)
            }
        },
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            eprintln!("error: {}: {msg}", e.kind());
            ExitCode::from(e.code())
        }
    }
}
