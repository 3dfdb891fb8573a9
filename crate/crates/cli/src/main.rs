use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod render;

/// Orbits, homomesy, snakes, and counting for vertex toggles on independent
/// sets of a path graph, plus the zigzag order-ideal translation.
#[derive(Parser)]
#[command(name = "pathtoggles", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the orbits of a toggle word
    Orbits(OrbitsArgs),
    /// Check a statistic for a constant average over every orbit
    Homomesy(HomomesyArgs),
    /// Decompose an orbit board into snakes, or rebuild an orbit from a
    /// snake composition
    Snakes(SnakesArgs),
    /// Tabulate counting formulas against brute-force oracles
    Count(CountArgs),
    /// Walk a Coxeter word to the left-to-right sweep by admissible
    /// conjugations
    Conjugate(ConjugateArgs),
    /// Promotion and rowmotion on order ideals of the zigzag poset
    Zigzag(ZigzagArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
pub struct CommonArgs {
    /// Number of vertices of the path graph
    #[arg(short, value_name = "N")]
    n: usize,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Capacity guard for full enumerations
    #[arg(long, value_name = "N", default_value_t = pathtoggles::DEFAULT_MAX_N)]
    max_n: usize,
    /// Worker threads for orbit sweeps
    #[arg(long, value_name = "K", default_value_t = 1)]
    threads: usize,
    /// Seed for random Coxeter-word sampling
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
pub struct OrbitsArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Toggle word: `phi` or a comma-separated index list, rightmost first
    #[arg(short, long, default_value = "phi")]
    word: String,
    /// Include the full state list of every orbit
    #[arg(long)]
    states: bool,
}

#[derive(Args)]
pub struct HomomesyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Toggle word: `phi` or a comma-separated index list
    #[arg(short, long, default_value = "phi")]
    word: String,
    /// Statistic over vertex indicators, e.g. `2x1+x2` or `x3-1/2x5`
    #[arg(short = 'f', long = "statistic")]
    statistic: String,
    /// Also require the same verdict under this many seeded random Coxeter
    /// words
    #[arg(long, value_name = "K", default_value_t = 0)]
    random_words: usize,
}

#[derive(Args)]
pub struct SnakesArgs {
    /// Rebuild the sweep orbit generated by this composition over {1,2}
    #[arg(long, value_name = "PARTS", conflicts_with = "start")]
    composition: Option<String>,
    /// Decompose the sweep orbit of this state (requires -n)
    #[arg(long, value_name = "BITS")]
    start: Option<String>,
    /// Classify which paths carry orbits of these sizes, e.g. `2..12`
    #[arg(long, value_name = "RANGE", conflicts_with_all = ["composition", "start"])]
    sizes: Option<String>,
    /// Number of vertices; needed with --start
    #[arg(short, value_name = "N")]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, value_name = "N", default_value_t = pathtoggles::DEFAULT_MAX_N)]
    max_n: usize,
}

#[derive(Args)]
pub struct CountArgs {
    /// Independent-set counts over a range of n, e.g. `2..20` or `7`
    #[arg(long, value_name = "RANGE")]
    sets: Option<String>,
    /// Symmetrical-set counts over a range of n
    #[arg(long, value_name = "RANGE")]
    symmetrical: Option<String>,
    /// Open 11-free string counts over a range of lengths
    #[arg(long, value_name = "RANGE")]
    strings: Option<String>,
    /// 11-free necklace counts over a range of lengths
    #[arg(long, value_name = "RANGE")]
    necklaces: Option<String>,
    /// 11-free bracelet counts over a range of lengths
    #[arg(long, value_name = "RANGE")]
    bracelets: Option<String>,
    /// Self-reverse 11-free necklace counts over a range of lengths
    #[arg(long = "self-reverse", value_name = "RANGE")]
    self_reverse: Option<String>,
    /// Sweep-orbit counts over a range of n
    #[arg(long, value_name = "RANGE")]
    orbits: Option<String>,
    /// Reversible-orbit counts over a range of n
    #[arg(long, value_name = "RANGE")]
    reversible: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
pub struct ConjugateArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Coxeter word to walk to the sweep
    #[arg(short, long)]
    word: String,
}

#[derive(Args)]
pub struct ZigzagArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Ideal-toggle word: `pro`, `row`, or a comma-separated index list
    #[arg(short, long, default_value = "pro")]
    word: String,
    /// List the orbit sizes and compare them with the sweep's
    #[arg(long)]
    orbits: bool,
    /// Verify the toggle-by-toggle equivariance of the bit-flip bijection
    #[arg(long)]
    check_eta: bool,
    /// Show the orbit containing the empty ideal
    #[arg(long)]
    empty_orbit: bool,
    /// Check a statistic over the ideal indicators, e.g. `2x1-x2`
    #[arg(long, value_name = "STAT")]
    homomesy: Option<String>,
    /// Also require the same homomesy verdict under this many random words
    #[arg(long, value_name = "K", default_value_t = 0)]
    random_words: usize,
}

fn main() -> ExitCode {
    // Die quietly when a pipe closes early (e.g. `pathtoggles ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Orbits(args) => commands::orbits(&args),
        Command::Homomesy(args) => commands::homomesy(&args),
        Command::Snakes(args) => commands::snakes(&args),
        Command::Count(args) => commands::count(&args),
        Command::Conjugate(args) => commands::conjugate(&args),
        Command::Zigzag(args) => commands::zigzag(&args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
