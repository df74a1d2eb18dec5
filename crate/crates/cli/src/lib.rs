//! Command-line front end: argument handling, output formats and the
//! on-disk cache.

pub mod args;
pub mod cache;
pub mod commands;
pub mod output;

use std::io::Write;

use clap::Parser;

use args::{Cli, Command, ShuffleAction, WordsAction};
use cache::Cache;
use commands::{UsageError, VerifyOpts};

/// Runs one invocation and returns the process exit code: 0 on success,
/// 1 when a verification fails, 2 on a usage error.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            if let Err(e) = output::render(&o, cli.format, out) {
                let _ = writeln!(err, "error: {e}");
                return 1;
            }
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                2
            } else {
                1
            }
        }
    }
}

fn execute(cli: &Cli) -> anyhow::Result<output::Output> {
    let cache = cli.cache_dir.as_deref().map(Cache::open).transpose()?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = pool.build()?;
    pool.install(|| match &cli.command {
        Command::Words {
            action: WordsAction::Enum { weight, kind, lambda },
        } => commands::words_enum(weight, *kind, lambda.as_deref()),
        Command::Shuffle { action } => match action {
            ShuffleAction::Mul { a, b } => commands::shuffle_mul(a, b),
            ShuffleAction::Star { a, b, lambda } => commands::shuffle_star(a, b, lambda),
        },
        Command::Basis { weight, kind } => commands::basis(weight, *kind, cache.as_ref()),
        Command::Char { what, weight } => commands::character(*what, weight, cache.as_ref()),
        Command::Verify {
            suite,
            n,
            beta,
            lambda,
            max_degree,
            plain,
            degenerate_q,
        } => commands::verify(&VerifyOpts {
            suite: *suite,
            n: *n,
            beta: beta.as_deref(),
            lambda,
            max_degree: *max_degree,
            plain: *plain,
            degenerate_q: *degenerate_q,
            seed: cli.seed,
        }),
    })
}
