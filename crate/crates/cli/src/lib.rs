//! Command-line front end for `chiy-core`.
//!
//! [`run`] does all the work and returns the rendered output together with
//! the process exit status, so the binary is a thin wrapper and tests can
//! drive commands in-process.

pub mod commands;
pub mod manifest;
pub mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use manifest::{ManifestError, ManifoldManifest, Structure};

/// Every check satisfied (or not applicable).
pub const EXIT_OK: i32 = 0;
/// At least one report record is violated.
pub const EXIT_VIOLATION: i32 = 1;
/// Bad arguments or bad input data.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "chiy", version, about = "Chi_y genus tables and manifold consistency checks")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also run brute-force cross-checks where one exists.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Taylor/moment depth for `check` and `localize` (default 4, capped at the dimension).
    #[arg(long, global = true)]
    pub depth: Option<u32>,
    /// Validation tier override for `check`.
    #[arg(long, global = true, value_enum)]
    pub tier: Option<TierArg>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TierArg {
    Raw,
    Kaehler,
    Mirror,
}

impl From<TierArg> for chiy_core::Tier {
    fn from(t: TierArg) -> Self {
        match t {
            TierArg::Raw => chiy_core::Tier::Raw,
            TierArg::Kaehler => chiy_core::Tier::Kaehler,
            TierArg::Mirror => chiy_core::Tier::Mirror,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the chi_y genus of complex dimension N in Chern numbers.
    Formula { n: u32 },
    /// Print the Taylor coefficients a_0..a_K of chi_y at y = -1.
    Taylor { n: u32, k: u32 },
    /// Print the power moments h(1)..h(p^K).
    Moments { n: u32, k: u32 },
    /// Validate a manifest and run every applicable consistency check.
    Check { file: PathBuf },
    /// Print the Betti-number bounds for a manifest.
    Bounds { file: PathBuf },
    /// Run the Hamiltonian fixed-point battery on a manifest.
    Localize { file: PathBuf },
}

/// Rendered result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    pub fn input_error(message: impl Into<String>) -> Self {
        Outcome { stdout: String::new(), stderr: message.into(), code: EXIT_INPUT }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => commands::execute(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { stdout: rendered, stderr: String::new(), code: EXIT_OK }
                }
                _ => Outcome::input_error(rendered),
            }
        }
    }
}
