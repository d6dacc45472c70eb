//! `cyclerank`: cycle rank, widths, feedback sets and star height from the
//! command line.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input, 2 failed
//! validation or an input outside an operation's domain, 3 an input too
//! large for an exponential algorithm.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Format;

#[derive(Debug, Parser)]
#[command(
    name = "cyclerank",
    version,
    about = "Cycle rank of digraphs and star height of bideterministic languages"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cycle rank of a digraph.
    #[command(subcommand)]
    Crank(CrankCommand),
    /// Elimination forests.
    #[command(subcommand)]
    Forest(ForestCommand),
    /// Exact directed pathwidth with a path decomposition.
    Dpw {
        graph: PathBuf,
        /// Largest vertex count accepted.
        #[arg(long, default_value_t = cyclerank::widths::DEFAULT_DPW_LIMIT)]
        limit: usize,
    },
    /// Exact weak separator number with a witness.
    Snum {
        graph: PathBuf,
        /// Largest vertex count accepted.
        #[arg(long, default_value_t = cyclerank::widths::DEFAULT_SNUM_LIMIT)]
        limit: usize,
    },
    /// Checks snum <= dpw <= crank <= R_snum(n) - 1 on a loop-free digraph.
    Bounds { graph: PathBuf },
    /// Directed feedback vertex sets.
    #[command(subcommand)]
    Dfvs(DfvsCommand),
    /// Counts strongly connected vertex subsets.
    CountSc { graph: PathBuf },
    /// Star height.
    #[command(subcommand)]
    Sh(ShCommand),
    /// Constructions that carry cycle rank over to star height.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Timing and memo-size experiments.
    #[command(subcommand)]
    Bench(BenchCommand),
}

#[derive(Debug, Subcommand)]
enum CrankCommand {
    /// Memoized search over strongly connected subsets, with a witness forest.
    Exact {
        graph: PathBuf,
        /// Give up once this many subsets are memoized.
        #[arg(long)]
        memo_limit: Option<usize>,
        /// Print the witness forest as Graphviz DOT instead of text.
        #[arg(long)]
        dot: bool,
    },
    /// The recursive definition evaluated literally; small inputs only.
    Brute {
        graph: PathBuf,
        #[arg(long, default_value_t = cyclerank::cyclerank::DEFAULT_BRUTEFORCE_LIMIT)]
        limit: usize,
    },
    /// Recursive balanced separators; polynomial time, any size.
    Approx {
        graph: PathBuf,
        #[command(flatten)]
        options: ApproxArgs,
    },
}

#[derive(Debug, Args)]
struct ApproxArgs {
    /// Components smaller than this are solved directly: a number or `auto`.
    #[arg(long, default_value = "auto")]
    base_threshold: String,
    #[arg(long, value_enum, default_value_t = SeparatorArg::Exact)]
    separator: SeparatorArg,
    /// Largest component for which separators are searched exhaustively.
    #[arg(long, default_value_t = 12)]
    exact_separator_limit: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeparatorArg {
    Exact,
    Greedy,
}

#[derive(Debug, Subcommand)]
enum ForestCommand {
    /// Checks a forest against a digraph; exits with 2 if it is invalid.
    Validate { graph: PathBuf, forest: PathBuf },
}

#[derive(Debug, Subcommand)]
enum DfvsCommand {
    /// A minimum feedback vertex set.
    Min { graph: PathBuf },
    /// All minimal feedback vertex sets.
    Enumerate {
        graph: PathBuf,
        /// Stop with exit code 3 after this many sets.
        #[arg(long, default_value_t = cyclerank::dfvs::DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Subcommand)]
enum ShCommand {
    /// Syntactic star height of a regular expression.
    Regex {
        expr: String,
        /// Allowed symbols, e.g. `ab`.
        #[arg(long)]
        alphabet: Option<String>,
        /// Also print the Thompson automaton and its cycle rank.
        #[arg(long)]
        nfa: bool,
    },
    /// Star height of the language of a bideterministic automaton.
    Bidet { automaton: PathBuf },
}

#[derive(Debug, Subcommand)]
enum ReduceCommand {
    /// The automaton of closed walks through a vertex of a strongly connected digraph.
    Walk { graph: PathBuf, vertex: usize },
    /// Re-encodes a bideterministic automaton over the alphabet {a, b}.
    Binarize {
        automaton: PathBuf,
        /// Trim the result.
        #[arg(long)]
        trim: bool,
    },
}

#[derive(Debug, Subcommand)]
enum BenchCommand {
    /// Exact cycle rank on random strongly connected digraphs.
    Crank {
        #[arg(long)]
        n: usize,
        /// Maximum outdegree; unrestricted if omitted.
        #[arg(long)]
        outdeg: Option<usize>,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Give every vertex exactly the maximum outdegree.
        #[arg(long)]
        regular: bool,
        /// Leave out wall times, so that output depends only on the arguments.
        #[arg(long)]
        no_timing: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(outcome) => {
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", outcome.report.render(cli.format));
            match outcome.failure {
                Some(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(2)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
