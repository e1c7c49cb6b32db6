use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "qudit-magic",
    version,
    about = "Magic state distillation with qudit Reed-Muller codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Qudit dimension (prime).
    #[arg(long, global = true)]
    pub d: Option<u32>,
    /// Reed-Muller parameter.
    #[arg(long, global = true)]
    pub m: Option<u32>,
    /// Input error probabilities, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    pub eps: Vec<f64>,
    /// Target error probabilities, comma separated.
    #[arg(long = "eps-target", global = true, value_delimiter = ',')]
    pub eps_target: Vec<f64>,
    /// Grid resolution.
    #[arg(long, global = true)]
    pub grid: Option<usize>,
    /// Absolute tolerance for root finding.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Yield exponents and depolarizing thresholds for d ≤ 19, m ≤ 4.
    Tables,
    /// Code construction, CSS identities, transversality, distance and
    /// simulator agreement for one (d, m).
    Verify,
    /// One round of the iteration map on depolarizing input.
    Iterate,
    /// Depolarizing-noise threshold.
    Threshold,
    /// Threshold over all noise directions.
    WorstCase,
    /// Rounds and yield to reach a target error.
    Yield,
    /// Distillable region of QRM_3(2) over twirled qutrit states.
    Region,
    /// State injection with a noisy resource.
    Inject,
    /// Canonical gate and its membership report.
    Gate,
    /// Stabilizer codes of QRM_d(m) in text form.
    Code,
}
