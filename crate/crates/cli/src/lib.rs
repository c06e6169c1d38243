//! `rainbow`: analyze, color, verify and exactly solve rainbow connection on
//! graphs of diameter at most 2.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rainbow_core::exact::{DEFAULT_BUDGET, DEFAULT_MAX_EDGES};
use rainbow_core::generators::{GenSpec, RandomDiam2};

pub mod commands;
pub mod fuzz;
pub mod io;
pub mod report;

use io::InputError;
use report::RunReport;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    /// Verification or construction failure.
    Failure = 1,
    /// Unreadable, malformed or out-of-scope input.
    Input = 2,
    BudgetExhausted = 3,
}

#[derive(Parser, Debug)]
#[command(name = "rainbow", version, about = "Rainbow edge-colorings of diameter-2 graphs")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// JSON.
    Structured,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structural report: diameter, bridges, cut vertices, classification.
    Analyze { graph: PathBuf },
    /// Build a rainbow coloring and verify it.
    Color {
        graph: PathBuf,
        /// Center vertex for the 2-connected construction.
        #[arg(long)]
        center: Option<usize>,
        /// Try every center and keep the fewest colors.
        #[arg(long)]
        all_centers: bool,
        /// Report one rainbow path per vertex pair.
        #[arg(long)]
        witnesses: bool,
        /// Write the coloring here instead of embedding it in the report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring file against a graph.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        witnesses: bool,
    },
    /// Exact rainbow connection number by exhaustive search.
    Exact {
        graph: PathBuf,
        /// Colorings to test before giving up with bounds.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        max_colors: Option<usize>,
        /// Larger graphs get bounds without searching.
        #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
        max_edges: usize,
        /// Write the optimal coloring here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a graph as an edge list.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run many generated graphs through the colorer or the exact solver.
    Fuzz(FuzzArgs),
}

#[derive(Args, Debug, Clone)]
pub struct FuzzArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Smallest vertex count.
    #[arg(long)]
    pub n: Option<usize>,
    /// Largest vertex count; task `i` uses `n + i mod (n_max - n + 1)`.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, default_value_t = 100)]
    pub count: u64,
    #[arg(long, value_enum, default_value_t = FuzzMode::Validate)]
    pub mode: FuzzMode,
    /// Per-graph budget of the exact solver (hunt mode).
    #[arg(long, default_value_t = 2_000_000)]
    pub budget: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
    pub max_edges: usize,
    /// Graphs with rc >= 5 are appended here (hunt mode).
    #[arg(long, default_value = "rc5-findings.txt")]
    pub findings: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FuzzMode {
    Validate,
    HuntRc5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cycle,
    Path,
    Complete,
    CompleteBipartite,
    Star,
    Petersen,
    Wheel,
    TightExample,
    Friendship,
    RandomTree,
    RandomDiam2,
    ApexBlocks,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub leaves: Option<usize>,
    #[arg(long)]
    pub rim: Option<usize>,
    #[arg(long)]
    pub triangles: Option<usize>,
    /// Edge probability of the random families.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 2)]
    pub blocks: usize,
    #[arg(long, default_value_t = 10_000)]
    pub max_tries: usize,
    #[arg(long)]
    pub bridgeless: bool,
    #[arg(long)]
    pub two_connected: bool,
}

impl FamilyArgs {
    pub fn spec(&self, n: Option<usize>, seed: u64) -> Result<GenSpec, InputError> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| InputError::Usage(format!("{:?} needs --{name}", self.family)))
        };
        Ok(match self.family {
            Family::Cycle => GenSpec::Cycle { n: need(n, "n")? },
            Family::Path => GenSpec::Path { n: need(n, "n")? },
            Family::Complete => GenSpec::Complete { n: need(n, "n")? },
            Family::CompleteBipartite => GenSpec::CompleteBipartite {
                s: need(self.s, "s")?,
                t: need(self.t, "t")?,
            },
            Family::Star => GenSpec::Star {
                leaves: need(self.leaves.or(n.map(|n| n.saturating_sub(1))), "leaves")?,
            },
            Family::Petersen => GenSpec::Petersen,
            Family::Wheel => GenSpec::Wheel {
                rim: need(self.rim, "rim")?,
            },
            Family::TightExample => GenSpec::TightExample {
                k: need(self.k, "k")?,
                r: need(self.r, "r")?,
            },
            Family::Friendship => GenSpec::Friendship {
                triangles: need(self.triangles, "triangles")?,
            },
            Family::RandomTree => GenSpec::RandomTree {
                n: need(n, "n")?,
                seed,
            },
            Family::RandomDiam2 => {
                let mut spec = RandomDiam2::new(need(n, "n")?, self.p, seed).max_tries(self.max_tries);
                if self.bridgeless {
                    spec = spec.bridgeless();
                }
                if self.two_connected {
                    spec = spec.two_connected();
                }
                GenSpec::RandomDiam2(spec)
            }
            Family::ApexBlocks => GenSpec::ApexBlocks {
                n: need(n, "n")?,
                blocks: self.blocks,
                p: self.p,
                seed,
            },
        })
    }
}

/// A finished command: the report plus what to print and how to exit.
#[derive(Debug)]
pub struct Execution {
    pub report: RunReport,
    pub exit: Exit,
    /// Printed instead of the report (`gen` without `--out`).
    pub raw: Option<String>,
}

impl Execution {
    pub fn render(&self, format: Format) -> String {
        if let Some(raw) = &self.raw {
            return raw.clone();
        }
        match format {
            Format::Text => report::to_text(&self.report),
            Format::Structured => report::to_json(&self.report),
        }
    }
}

pub fn execute(cli: &Cli) -> Execution {
    let start = Instant::now();
    let done = commands::dispatch(cli);
    Execution {
        report: RunReport {
            command: commands::name(&cli.command).to_string(),
            seed: cli.seed,
            input: done.input,
            outcome: done.outcome,
            elapsed_us: start.elapsed().as_micros() as u64,
        },
        exit: done.exit,
        raw: done.raw,
    }
}

/// Parses arguments, runs the command, prints its output and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Exit::Input as i32 } else { 0 };
        }
    };
    let exec = execute(&cli);
    print!("{}", exec.render(cli.format));
    if let report::Outcome::Error { message, .. } = &exec.report.outcome {
        eprintln!("error: {message}");
    }
    exec.exit as i32
}
