use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use chiralmix::fp::DEFAULT_BUDGET;
use chiralmix_cli::commands::{self, MixFlags, Output};

/// Mix, comix and classify rotation groups of chiral and directly regular
/// polytopes.
///
/// Inputs are presentation files or catalog entries written
/// `catalog:<entry>`; run `chiralmix catalog` for the list.
#[derive(Parser)]
#[command(name = "chiralmix", version)]
struct Cli {
    /// Coset enumeration budget (cosets).
    #[arg(long, global = true, env = commands::BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, type, faces, polytopality and chirality group of one input.
    Classify { input: String },
    /// The mix of two inputs, with the product-formula check.
    Mix {
        left: String,
        right: String,
        /// Include face vector (implies --polytopality).
        #[arg(long)]
        faces: bool,
        /// Check the intersection property of the mix.
        #[arg(long)]
        polytopality: bool,
        /// Apply every criterion to the pair.
        #[arg(long)]
        certificates: bool,
    },
    /// The comix of two inputs.
    Comix { left: String, right: String },
    /// Chirality group of one input.
    Chirality { input: String },
    /// Criteria certificates for a pair.
    Certify { left: String, right: String },
    /// List catalog families, or print the presentation of one entry.
    Catalog { entry: Option<String> },
    /// Recompute every reference value and print the comparison table.
    Reproduce,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let b = cli.budget;
    let result = match &cli.command {
        Command::Classify { input } => commands::cmd_classify(input, b),
        Command::Mix {
            left,
            right,
            faces,
            polytopality,
            certificates,
        } => {
            let flags = MixFlags {
                faces: *faces,
                polytopality: *polytopality,
                certificates: *certificates,
            };
            commands::cmd_mix(left, right, flags, b)
        }
        Command::Comix { left, right } => commands::cmd_comix(left, right, b),
        Command::Chirality { input } => commands::cmd_chirality(input, b),
        Command::Certify { left, right } => commands::cmd_certify(left, right, b),
        Command::Catalog { entry } => commands::cmd_catalog(entry.as_deref(), b),
        Command::Reproduce => Ok(commands::cmd_reproduce(b)),
    };
    match result {
        Ok(Output { text, code }) => {
            let newline = if text.ends_with('\n') { "" } else { "\n" };
            // a closed pipe is not an error
            let _ = write!(std::io::stdout(), "{text}{newline}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e) as u8)
        }
    }
}
