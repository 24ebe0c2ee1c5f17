//! Command-line front end: sieve construction, exact counting, local-law
//! predictions, comparison tables, phase-transition scans, and constant
//! verification, with CSV/JSON output and simple SVG plots.

mod commands;
mod config;
mod error;
mod sieve_store;
mod svg;
mod table;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

use config::JobConfig;
use error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NuArg {
    /// distinct prime factors
    Omega,
    /// prime factors with multiplicity
    #[value(name = "Omega", alias = "bigomega")]
    BigOmega,
}

impl From<NuArg> for mpf_kernel::Nu {
    fn from(v: NuArg) -> Self {
        match v {
            NuArg::Omega => mpf_kernel::Nu::Omega,
            NuArg::BigOmega => mpf_kernel::Nu::BigOmega,
        }
    }
}

/// Middle-prime-factor laboratory: exact local laws vs analytic predictions.
#[derive(Parser)]
#[command(name = "mpf", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Range bound x (real; counting commands floor it)
    #[arg(long, global = true)]
    x: Option<f64>,

    /// Factor-counting convention
    #[arg(long, global = true, value_enum, default_value = "Omega")]
    nu: NuArg,

    /// Working mantissa precision in bits
    #[arg(long, global = true, default_value_t = 128)]
    precision_bits: u32,

    /// Largest prime multiplied explicitly in Euler products
    #[arg(long, global = true, default_value_t = 10_000)]
    prime_cutoff: u32,

    /// Worker threads (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Output path (default: stdout)
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: OutputFormat,

    /// Sieve cache file (overrides MPF_CACHE_DIR)
    #[arg(long, global = true)]
    sieve_cache: Option<PathBuf>,

    /// Write an SVG plot next to the tabular output (phase-scan)
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute and certify gamma, kappa, h, c
    Constants,
    /// Build the smallest-prime-factor sieve and cache it
    Sieve,
    /// Exact counts vs local-law predictions, one row per prime
    Compare {
        /// Lower edge of the admitted beta window
        #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
        beta_min: f64,
        /// Upper edge of the admitted beta window
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        beta_max: f64,
    },
    /// Exact median-prime spectrum
    Spectrum,
    /// Exponents and predictions along a beta grid at fixed x
    PhaseScan {
        #[arg(long, default_value_t = 0.02)]
        beta_min: f64,
        #[arg(long, default_value_t = 0.98)]
        beta_max: f64,
        #[arg(long, default_value_t = 97)]
        steps: usize,
    },
    /// Exact lambda table vs the four estimates
    Lambda {
        /// Smoothness bound y
        #[arg(long)]
        y: u64,
        #[arg(long, default_value_t = 20)]
        k_max: u64,
        /// Window constant A of the small-k estimate
        #[arg(long, default_value_t = 1.0)]
        small_k_a: f64,
        /// eps of the big-k window
        #[arg(long, default_value_t = 0.5)]
        big_k_eps: f64,
        /// Use exact rational coefficients (y <= 10^4)
        #[arg(long)]
        rational: bool,
    },
    /// Partial exponential sums: estimates vs exact on the standard grid
    Pn,
    /// Rough-number counts vs the phi law
    Phi {
        /// Roughness bound y
        #[arg(long)]
        y: u64,
        #[arg(long, default_value_t = 2)]
        k_min: u32,
        #[arg(long, default_value_t = 4)]
        k_max: u32,
        /// Saddle-ratio window constant A
        #[arg(long, default_value_t = 3.0)]
        window_a: f64,
    },
    /// Boundary agreement of the alternate laws along x = e^{e^k}
    Stitch {
        #[arg(long, default_value_t = 4)]
        k_min: u32,
        #[arg(long, default_value_t = 10)]
        k_max: u32,
        #[arg(long, value_enum, default_value = "upper")]
        side: StitchSideArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StitchSideArg {
    Upper,
    Lower,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Config(format!("thread pool: {e}")))?;
    }
    let config = JobConfig {
        x: cli.x,
        nu: cli.nu.into(),
        precision_bits: cli.precision_bits,
        prime_cutoff: cli.prime_cutoff,
        out: cli.out,
        format: cli.format,
        sieve_cache: cli.sieve_cache,
        svg: cli.svg,
    };
    match cli.command {
        Command::Constants => commands::constants::run(&config),
        Command::Sieve => commands::sieve::run(&config),
        Command::Compare { beta_min, beta_max } => {
            commands::compare::run(&config, beta_min, beta_max)
        }
        Command::Spectrum => commands::spectrum::run(&config),
        Command::PhaseScan {
            beta_min,
            beta_max,
            steps,
        } => commands::phase_scan::run(&config, beta_min, beta_max, steps),
        Command::Lambda {
            y,
            k_max,
            small_k_a,
            big_k_eps,
            rational,
        } => commands::lambda::run(&config, y, k_max, small_k_a, big_k_eps, rational),
        Command::Pn => commands::pn::run(&config),
        Command::Phi {
            y,
            k_min,
            k_max,
            window_a,
        } => commands::phi::run(&config, y, k_min, k_max, window_a),
        Command::Stitch { k_min, k_max, side } => {
            commands::stitch::run(&config, k_min, k_max, side)
        }
    }
}
