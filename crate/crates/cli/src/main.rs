//! `vknot`: command-line front end for the virtual knot group library.

mod commands;
mod selftest;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use vknot::braidrep::WadaKind;

#[derive(Parser, Debug)]
#[command(name = "vknot", version, about = "Virtual knot groups from virtual braids")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Truncation degree for power-series computations.
    #[arg(long, global = true, value_name = "N", default_value_t = 6)]
    pub truncate: usize,
    /// Seed for randomized checks.
    #[arg(long, global = true, value_name = "S", default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

/// Where a group presentation comes from. At most one source may be given;
/// commands that need a group require exactly one.
#[derive(Args, Debug, Clone)]
#[group(required = false, multiple = false)]
pub struct Input {
    /// Built-in fixture, e.g. `trefoil-g2` or `trefoil-g1(3)`.
    #[arg(long)]
    pub fixture: Option<String>,
    /// Presentation JSON file (`-` reads stdin).
    #[arg(long, value_name = "FILE")]
    pub presentation: Option<PathBuf>,
    /// Virtual braid word, e.g. `s1 S2 v1` (`S` is the inverse crossing).
    #[arg(long, value_name = "WORD")]
    pub braid: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct BraidOptions {
    /// Representation used to build the group from a braid: w1:<r>, w2 or w3.
    #[arg(long, value_name = "KIND", default_value = "w2")]
    pub rep: WadaKind,
    /// Number of strands; defaults to one more than the largest index used.
    #[arg(long)]
    pub strands: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the virtual link group of a braid word.
    Present {
        #[arg(long, value_name = "WORD")]
        braid: String,
        #[command(flatten)]
        options: BraidOptions,
    },
    /// Print a built-in presentation, or list them.
    Fixture {
        /// Fixture name; omit to list every fixture.
        name: Option<String>,
    },
    /// Abelianization via Smith normal form.
    Abelianize {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        options: BraidOptions,
    },
    /// Annihilator of [x,y] in G'/G'' for a two-generator one-relator group.
    Annihilator {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        options: BraidOptions,
    },
    /// Lower central series layer gamma_k / gamma_{k+1}.
    Lcs {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        options: BraidOptions,
        #[arg(long, value_name = "K")]
        class: usize,
        /// Print every layer up to K.
        #[arg(long)]
        all: bool,
    },
    /// Fox derivatives of a word.
    Fox {
        #[arg(long, value_name = "W")]
        word: String,
        /// Comma-separated generator names.
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        /// Use the right-handed product rule.
        #[arg(long)]
        right: bool,
    },
    /// Quotient algebra by monomial words, optionally checking a group's relators.
    Algebra {
        /// Comma-separated forbidden words, e.g. `XX,YY,XYXY`.
        #[arg(long)]
        ideal: String,
        /// Comma-separated variable names; defaults to the input's
        /// generators in upper case, or X,Y.
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
        /// Make the variables commute.
        #[arg(long)]
        commutative: bool,
        /// Check that x -> 1+X sends every relator of the input to 1.
        #[arg(long)]
        check_relation: bool,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        options: BraidOptions,
    },
    /// Check that Tietze moves preserve the truncated relator ideal.
    TietzeCheck {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        options: BraidOptions,
        /// identity, product:I,J, add-generator:T=WORD, remove-generator:G
        /// or remove-relator:I. Defaults to identity, a relator product and
        /// a new generator.
        #[arg(long = "move", value_name = "MOVE")]
        moves: Vec<String>,
    },
    /// Non-freeness certificate for the Kishino knot's third group.
    Kishino,
    /// Randomized property checks, reproducible with --seed.
    Selftest {
        /// Cases per property.
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("serializable output") + "\n"
            } else {
                out.text
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if out.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
