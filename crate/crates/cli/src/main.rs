//! `cisenum`: enumerate, verify and benchmark connected induced subgraphs.
//!
//! Exit codes: 0 success, 1 parse or validation error, 2 dictionary cap
//! exceeded, 3 supergraph verification failed.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cis_core::bench::write_csv;
use cis_core::supergraph::verify_lemma1;
use cis_core::{
    enumerate_while, parse_edge_list, parse_edge_list_relabeled, run_benchmark, Algorithm,
    DictionaryKind, EnumOptions, Error, Graph, GraphRecipe, DEFAULT_ORACLE_CAP,
};

#[derive(Parser, Debug)]
#[command(
    name = "cisenum",
    version,
    about = "Connected induced subgraph enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stream every connected induced subgraph of order k, one per line.
    Enumerate(EnumerateArgs),
    /// Build the explicit supergraph and check connectivity and its diameter bound.
    Verify(VerifyArgs),
    /// Measure enumeration delay; writes CSV rows.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Edge-list file, or '-' for standard input.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Generated graph: family:n or gnp:n:p[:seed] (family is path, cycle, complete, star or gnp).
    #[arg(long)]
    recipe: Option<String>,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[command(flatten)]
    source: Source,
    /// Treat input ids as arbitrary labels and remap them to dense ids.
    #[arg(long)]
    relabel: bool,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long)]
    k: usize,
    /// irwd, rwd or brute.
    #[arg(long, default_value = "irwd")]
    algorithm: String,
    /// Print only the number of solutions.
    #[arg(long)]
    count_only: bool,
    /// Abort (exit 2) once the solution dictionary holds this many entries.
    #[arg(long)]
    max_dict: Option<usize>,
    #[arg(long, value_enum, default_value_t = DictionaryArg::Hash)]
    dictionary: DictionaryArg,
    /// Buffer output instead of flushing after every solution.
    #[arg(long)]
    no_flush: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long)]
    k: usize,
    /// Largest vertex count accepted.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long)]
    k: usize,
    /// irwd, rwd or brute.
    #[arg(long, default_value = "irwd")]
    algorithm: String,
    /// Number of runs, one row each.
    #[arg(long, default_value_t = 1)]
    repeat: usize,
    /// Stop each run after this many solutions.
    #[arg(long)]
    max_solutions: Option<u64>,
    #[arg(long)]
    max_dict: Option<usize>,
    #[arg(long, value_enum, default_value_t = DictionaryArg::Hash)]
    dictionary: DictionaryArg,
    #[arg(long, value_enum, default_value_t = BenchFormat::Csv)]
    format: BenchFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DictionaryArg {
    Hash,
    Ordered,
}

impl From<DictionaryArg> for DictionaryKind {
    fn from(arg: DictionaryArg) -> Self {
        match arg {
            DictionaryArg::Hash => DictionaryKind::Hash,
            DictionaryArg::Ordered => DictionaryKind::Ordered,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReportFormat {
    Text,
    Kv,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BenchFormat {
    Csv,
    Kv,
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(io::Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::DictionaryFull { .. }) => 2,
            _ => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

fn load_graph(args: &GraphArgs) -> Result<(Graph, String), CliError> {
    if let Some(recipe) = &args.source.recipe {
        let recipe: GraphRecipe = recipe.parse()?;
        return Ok((recipe.generate()?, recipe.to_string()));
    }
    let path = args
        .source
        .input
        .as_ref()
        .expect("clap enforces one source");
    let text = if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        text
    } else {
        fs::read_to_string(path)?
    };
    let graph = if args.relabel {
        parse_edge_list_relabeled(&text)?
    } else {
        parse_edge_list(&text)?
    };
    Ok((graph, path.display().to_string()))
}

fn check_order(k: usize) -> Result<(), CliError> {
    if k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    Ok(())
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<ExitCode, CliError> {
    check_order(args.k)?;
    let algorithm: Algorithm = args.algorithm.parse()?;
    let (graph, _) = load_graph(&args.graph)?;
    let options = EnumOptions {
        dictionary: args.dictionary.into(),
        max_entries: args.max_dict,
        ..EnumOptions::default()
    };

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    if args.count_only {
        let stats = enumerate_while(&graph, args.k, algorithm, &options, |_| true)?;
        writeln!(out, "{}", stats.solutions)?;
        out.flush()?;
        return Ok(ExitCode::SUCCESS);
    }

    let mut line = String::new();
    let mut write_error = None;
    let result = enumerate_while(&graph, args.k, algorithm, &options, |s| {
        line.clear();
        for (i, &v) in s.iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            let _ = write!(line, "{}", graph.label(v));
        }
        line.push('\n');
        let written = out.write_all(line.as_bytes()).and_then(|_| {
            if args.no_flush {
                Ok(())
            } else {
                out.flush()
            }
        });
        match written {
            Ok(()) => true,
            Err(e) => {
                write_error = Some(e);
                false
            }
        }
    });
    let flushed = out.flush();
    match write_error {
        // a closed pipe (e.g. `| head`) is a normal way to stop
        Some(e) if e.kind() == io::ErrorKind::BrokenPipe => return Ok(ExitCode::SUCCESS),
        Some(e) => return Err(e.into()),
        None => flushed?,
    }
    let stats = result?;
    eprintln!("count={}", stats.solutions);
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    check_order(args.k)?;
    let (graph, _) = load_graph(&args.graph)?;
    let report = verify_lemma1(&graph, args.k, args.max_n)?;
    let text = match args.format {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Kv => report.to_key_value(),
    };
    print!("{text}");
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn cmd_bench(args: &BenchArgs) -> Result<ExitCode, CliError> {
    check_order(args.k)?;
    let algorithm: Algorithm = args.algorithm.parse()?;
    let (graph, graph_id) = load_graph(&args.graph)?;
    let options = EnumOptions {
        dictionary: args.dictionary.into(),
        max_entries: args.max_dict,
        max_solutions: args.max_solutions,
        ..EnumOptions::default()
    };
    let reports = (0..args.repeat)
        .map(|_| run_benchmark(&graph, args.k, algorithm, &graph_id, &options))
        .collect::<Result<Vec<_>, _>>()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match args.format {
        BenchFormat::Csv => write_csv(&mut out, &reports).map_err(|e| CliError::Io(e.into()))?,
        BenchFormat::Kv => {
            for (i, report) in reports.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", report.to_key_value())?;
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
