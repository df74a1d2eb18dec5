use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "oklr", version, about = "Shuffle modules, bases, characters and KLR relation audits")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Directory for cached basis families and character tables
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Seed for randomized suites
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for suites that span several weights
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate distinguished words of a weight
    Words {
        #[command(subcommand)]
        action: WordsAction,
    },
    /// Products in the shuffle algebra and its module
    Shuffle {
        #[command(subcommand)]
        action: ShuffleAction,
    },
    /// A basis family of one weight space, in monomial coordinates
    Basis {
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum)]
        kind: BasisArg,
    },
    /// Character tables of one weight
    Char {
        #[arg(value_enum)]
        what: CharArg,
        #[arg(long)]
        weight: String,
    },
    /// Run a verification suite; exits with 1 if any check fails
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Height bound, or word length bound for ek and axioms
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        beta: Option<String>,
        #[arg(long, default_value = "0")]
        lambda: String,
        #[arg(long)]
        max_degree: Option<u32>,
        /// Plain KLR algebra instead of the orientifold one
        #[arg(long)]
        plain: bool,
        /// Replace Q' by a non-self-conjugate vector (pbw only)
        #[arg(long)]
        degenerate_q: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum WordsAction {
    Enum {
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum)]
        kind: WordKind,
        #[arg(long)]
        lambda: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WordKind {
    Good,
    Lyndon,
    ThetaGood,
    ThetaLyndon,
}

#[derive(Subcommand, Debug)]
pub enum ShuffleAction {
    /// Quantum shuffle product of two words
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Module action of the word B on the word A
    Star {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "0")]
        lambda: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Monomial,
    Lyndon,
    Pbw,
    Canonical,
    DualCanonical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CharArg {
    Standard,
    Simple,
    Decomp,
    Dims,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Klr,
    Grading,
    Pbw,
    Ek,
    Axioms,
}

impl ValueName for BasisArg {}
impl ValueName for CharArg {}
impl ValueName for Suite {}
impl ValueName for WordKind {}

pub trait ValueName: ValueEnum {
    fn name(&self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}
