//! Command-line definitions. Every flag with a `CONSTREC_`-prefixed
//! environment variable can be set through the environment instead.

use clap::{Args, Parser, Subcommand, ValueEnum};
use constrec_core::criteria::{ErrorModel, LoglMode};
use constrec_core::fp::Precision;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "constrec",
    version,
    about = "Recognize numerical constants as short calculator formulas",
    long_about = "Recognize numerical constants as short calculator formulas.\n\
        Exit codes: 0 candidate found, 1 failure verdict, 2 inconclusive or \
        budget error, 64 usage error, 70 internal error, 74 I/O error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Search a calculator language for formulas matching a target value
    Recognize(RecognizeArgs),
    /// Stream raw enumeration rows: index, code, validity, value
    Enumerate(EnumerateArgs),
    /// Compression table of the ten-button search on a target
    Table1(Table1Args),
    /// Distribution studies over mass-generated values
    #[command(subcommand)]
    Stats(StatsCommand),
    /// Check the registered button-set identities numerically
    Verify(VerifyArgs),
    /// Integer and rational enumeration sequences
    #[command(subcommand)]
    Rationals(RationalsCommand),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PrecisionArg {
    /// 64-bit significands after every button press
    Extended,
    /// 53-bit significands after every button press
    Double,
}

impl From<PrecisionArg> for Precision {
    fn from(p: PrecisionArg) -> Precision {
        match p {
            PrecisionArg::Extended => Precision::Extended,
            PrecisionArg::Double => Precision::Double,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ErrorModelArg {
    Gaussian,
    Uniform,
}

impl ErrorModelArg {
    pub fn build(self, sigma: f64) -> ErrorModel {
        match self {
            ErrorModelArg::Gaussian => ErrorModel::gaussian(sigma),
            ErrorModelArg::Uniform => ErrorModel::uniform(sigma),
        }
    }
    pub fn label(self) -> &'static str {
        match self {
            ErrorModelArg::Gaussian => "gaussian",
            ErrorModelArg::Uniform => "uniform",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum LoglModeArg {
    /// Exact log-likelihood; decays with every distinct value tried
    Exact,
    /// First-order variant matching the worked reference numbers
    Linearized,
}

impl From<LoglModeArg> for LoglMode {
    fn from(m: LoglModeArg) -> LoglMode {
        match m {
            LoglModeArg::Exact => LoglMode::Exact,
            LoglModeArg::Linearized => LoglMode::Linearized,
        }
    }
}

impl LoglModeArg {
    pub fn label(self) -> &'static str {
        match self {
            LoglModeArg::Exact => "exact",
            LoglModeArg::Linearized => "linearized",
        }
    }
}

/// Flags shared by every searching command.
#[derive(Args, Debug, Clone)]
pub struct SearchOpts {
    /// Worker threads for evaluation (results are identical for any count)
    #[arg(long, default_value_t = 1, env = "CONSTREC_WORKERS")]
    pub workers: usize,
    /// Codes per scheduled chunk
    #[arg(long, default_value_t = 65536, env = "CONSTREC_CHUNK")]
    pub chunk: u64,
    /// Per-button rounding precision
    #[arg(long, value_enum, default_value_t = PrecisionArg::Extended, env = "CONSTREC_PRECISION")]
    pub precision: PrecisionArg,
}

#[derive(Args, Debug)]
pub struct RecognizeArgs {
    /// Calculator: 1 three-button, 2 four-button, 3 ten-button, 4 full board
    #[arg(long)]
    pub calc: Option<u32>,
    /// Target value as a decimal string
    #[arg(long)]
    pub z: Option<String>,
    /// Target uncertainty; defaults to half an ulp of the last digit of Z
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Value of the x button (four-button calculator)
    #[arg(long)]
    pub x_value: Option<f64>,
    /// Longest code length to enumerate
    #[arg(long)]
    pub max_k: Option<u32>,
    /// Stop after this many enumerated codes
    #[arg(long)]
    pub max_codes: Option<u64>,
    /// Stop after this many valid codes
    #[arg(long)]
    pub max_valid: Option<u64>,
    #[command(flatten)]
    pub search: SearchOpts,
    /// Error distribution half-width model for the likelihood
    #[arg(long, value_enum, default_value_t = ErrorModelArg::Gaussian)]
    pub error_model: ErrorModelArg,
    /// Likelihood formula variant
    #[arg(long, value_enum, default_value_t = LoglModeArg::Exact)]
    pub logl_mode: LoglModeArg,
    /// Write the finished search state here
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Continue from the checkpoint file instead of starting over
    #[arg(long, requires = "checkpoint")]
    pub resume: bool,
    #[arg(long, value_enum, default_value_t = FormatArg::Table, env = "CONSTREC_FORMAT")]
    pub format: FormatArg,
    /// Write the report here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub calc: u32,
    #[arg(long)]
    pub x_value: Option<f64>,
    /// First enumeration index
    #[arg(long, default_value_t = 0)]
    pub start: u64,
    /// Number of rows
    #[arg(long, default_value_t = 39)]
    pub count: u64,
    /// Skip rows whose code is not a well-formed program
    #[arg(long)]
    pub valid_only: bool,
    #[arg(long, value_enum, default_value_t = PrecisionArg::Extended, env = "CONSTREC_PRECISION")]
    pub precision: PrecisionArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Table, env = "CONSTREC_FORMAT")]
    pub format: FormatArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Table1Args {
    /// Target value; defaults to sqrt(2)^sqrt(3) at 21 digits
    #[arg(long, default_value = "1.82263465496624221439")]
    pub z: String,
    #[arg(long)]
    pub sigma: Option<f64>,
    #[arg(long, default_value_t = 9)]
    pub max_k: u32,
    #[arg(long)]
    pub max_codes: Option<u64>,
    #[arg(long)]
    pub max_valid: Option<u64>,
    #[command(flatten)]
    pub search: SearchOpts,
    #[arg(long, value_enum, default_value_t = FormatArg::Table, env = "CONSTREC_FORMAT")]
    pub format: FormatArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum StatsCommand {
    /// Histogram of generated real values against the log-Cauchy law
    Hist(HistArgs),
    /// Monte Carlo check of expected tries until a window hit
    Mc(McArgs),
    /// Complex-plane point cloud of non-real values
    Cloud(CloudArgs),
    /// Fit distinct-value growth against valid-code count
    Fit(FitArgs),
}

#[derive(Args, Debug)]
pub struct HistArgs {
    #[arg(long)]
    pub calc: u32,
    #[arg(long)]
    pub x_value: Option<f64>,
    /// Unique real values to collect
    #[arg(long, default_value_t = 20000)]
    pub count: usize,
    /// Longest code length to draw from
    #[arg(long)]
    pub max_k: Option<u32>,
    #[arg(long, default_value_t = 200)]
    pub bins: usize,
    #[arg(long, value_enum, default_value_t = PrecisionArg::Extended, env = "CONSTREC_PRECISION")]
    pub precision: PrecisionArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Table, env = "CONSTREC_FORMAT")]
    pub format: FormatArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct McArgs {
    /// Scale of the exponential draw distribution
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    /// Target value
    #[arg(long)]
    pub z: f64,
    /// Half-width of the acceptance window
    #[arg(long)]
    pub sigma: f64,
    #[arg(long, default_value_t = 10000)]
    pub trials: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Table, env = "CONSTREC_FORMAT")]
    pub format: FormatArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CloudArgs {
    #[arg(long)]
    pub calc: u32,
    #[arg(long)]
    pub x_value: Option<f64>,
    #[arg(long)]
    pub max_k: Option<u32>,
    /// Keep fractional parts only, folding every point into the unit square
    #[arg(long)]
    pub frac: bool,
    /// Clip to re_min,re_max,im_min,im_max
    #[arg(long, value_delimiter = ',', num_args = 4)]
    pub bounds: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value_t = PrecisionArg::Extended, env = "CONSTREC_PRECISION")]
    pub precision: PrecisionArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv, env = "CONSTREC_FORMAT")]
    pub format: FormatArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FitArgs {
    #[arg(long)]
    pub calc: u32,
    #[arg(long)]
    pub x_value: Option<f64>,
    /// Valid-code budget for the run
    #[arg(long, default_value_t = 1_000_000)]
    pub budget: u64,
    #[arg(long)]
    pub max_k: Option<u32>,
    #[command(flatten)]
    pub search: SearchOpts,
    #[arg(long, value_enum, default_value_t = FormatArg::Table, env = "CONSTREC_FORMAT")]
    pub format: FormatArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Calculator to check; all four when omitted
    #[arg(long)]
    pub calc: Option<u32>,
    #[arg(long)]
    pub x_value: Option<f64>,
    /// Seed for the sample points
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Deviation bound for a pass
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = FormatArg::Table, env = "CONSTREC_FORMAT")]
    pub format: FormatArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum RationalsCommand {
    /// Walk the next-rational chain from 1
    Nxt(SeqArgs),
    /// Breadth-first closure of the self-inverse generators
    Selfinv(SeqArgs),
    /// Integer pairing 0, 1, -1, 2, -2, ...
    Bijection(SeqArgs),
}

#[derive(Args, Debug)]
pub struct SeqArgs {
    #[arg(long, default_value_t = 28)]
    pub count: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Table, env = "CONSTREC_FORMAT")]
    pub format: FormatArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
