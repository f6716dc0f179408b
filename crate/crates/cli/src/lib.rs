//! Command-line front end: the braid word grammar, output formats, and the
//! subcommands behind the `garside` binary.

pub mod commands;
pub mod words;

use clap::{Parser, Subcommand, ValueEnum};
use garside::circuits::Budget;
use garside::sliding::DEFAULT_MAX_TRAJECTORY;
use garside::{Artin, Bkl, GarsideError};

use commands::{Outcome, Output};
use words::Dialect;

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_CONJUGATE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StructureKind {
    Artin,
    Bkl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Conjugacy tools for braid groups with the Artin or Birman–Ko–Lee Garside
/// structure.
///
/// Words are whitespace-separated tokens: s<k> (σ_k), a(<t>,<s>) (band
/// generator), D (the Garside element), [i1,...,in] (a simple element by its
/// strand permutation), each optionally raised to an integer power as in
/// s1^-1 or D^2.
#[derive(Debug, Parser)]
#[command(name = "garside", version)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "artin")]
    pub structure: StructureKind,
    /// Number of strands.
    #[arg(long, global = true, default_value_t = 4)]
    pub n: usize,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest sliding circuits graph or super summit set to build.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub max_vertices: usize,
    /// Longest sliding trajectory to follow.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_TRAJECTORY)]
    pub max_trajectory: usize,
    /// Most candidate conjugators to try in minimal-conjugator searches.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub max_candidates: usize,
    /// Build graphs for several classes at once on all cores.
    #[arg(long, global = true)]
    pub parallel: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Left normal form.
    Nf { word: String },
    /// Iterated cyclic sliding.
    Slide {
        word: String,
        /// Number of slides.
        #[arg(short, default_value_t = 1)]
        k: usize,
    },
    /// Sliding trajectory until it closes up, with the preferred prefixes.
    Traj { word: String },
    /// The set of sliding circuits.
    Sc { word: String },
    /// The sliding circuits graph.
    Scg {
        word: String,
        /// Print a Graphviz digraph instead of plain text.
        #[arg(long)]
        dot: bool,
    },
    /// Conjugacy test with a witness.
    Conj { word1: String, word2: String },
    /// Statistics over all classes of summit canonical length 1.
    Table {
        /// Summit infimum.
        #[arg(long = "inf", default_value_t = 0, allow_hyphen_values = true)]
        inf: i32,
    },
    /// Rigidity, and the products of preferred prefixes along the sliding
    /// orbit.
    Rigid {
        word: String,
        /// Length of the prefix-product chain.
        #[arg(short, default_value_t = 10)]
        i: usize,
    },
    /// Randomized self-checks, seeded by --seed.
    Check {
        #[arg(long, default_value_t = 1000)]
        cases: usize,
    },
}

impl Cli {
    pub fn budget(&self) -> Budget {
        Budget {
            max_vertices: self.max_vertices,
            max_trajectory: self.max_trajectory,
            max_candidates: self.max_candidates,
            parallel: self.parallel,
        }
    }
}

/// Runs the parsed command. Returns what to print on stdout and on stderr,
/// and the exit code.
pub fn run(cli: &Cli) -> (String, String, i32) {
    let result = match cli.structure {
        StructureKind::Artin => Artin::new(cli.n).and_then(|g| dispatch(&g, cli)),
        StructureKind::Bkl => Bkl::new(cli.n).and_then(|g| dispatch(&g, cli)),
    };
    match result {
        Ok((out, outcome)) => {
            let body = match cli.format {
                Format::Text => format!("{}\n", out.text),
                Format::Json => format!("{}\n", out.json),
                Format::Csv => out.csv,
            };
            match outcome {
                Outcome::Success => (body, String::new(), EXIT_OK),
                Outcome::NotConjugate => (body, String::new(), EXIT_NOT_CONJUGATE),
                Outcome::Incomplete => (body, "error: budget exhausted, result incomplete\n".into(), EXIT_BUDGET),
            }
        }
        Err(e) => {
            let code = if e.is_budget() { EXIT_BUDGET } else { EXIT_ERROR };
            (String::new(), format!("error: {e}\n"), code)
        }
    }
}

fn dispatch<G: Dialect>(g: &G, cli: &Cli) -> Result<(Output, Outcome), GarsideError> {
    let budget = cli.budget();
    let ok = |o: Output| (o, Outcome::Success);
    match &cli.command {
        Command::Nf { word } => commands::nf(g, word).map(ok),
        Command::Slide { word, k } => commands::slide(g, word, *k).map(ok),
        Command::Traj { word } => commands::traj(g, word, &budget).map(ok),
        Command::Sc { word } => commands::sc(g, word, &budget).map(ok),
        Command::Scg { word, dot } => commands::scg(g, word, &budget, *dot).map(ok),
        Command::Conj { word1, word2 } => commands::conj(g, word1, word2, &budget),
        Command::Table { inf } => commands::table(g, *inf, &budget),
        Command::Rigid { word, i } => commands::rigid(g, word, *i).map(ok),
        Command::Check { cases } => commands::check(g, cli.seed, *cases).map(ok),
    }
}
