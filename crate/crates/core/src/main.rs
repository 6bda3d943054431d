use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use quasihilb::cli::{self, Command, Format, FuzzBounds, JobSpec};
use quasihilb::rootcert::{AlphaSpec, DEFAULT_TOL};

/// Exact Hilbert quasipolynomials of U(t)/(1-t^k)^d with root certificates.
///
/// Numerators are given as a coefficient list, low degree first ("1,0,-1/2"),
/// or as terms in t ("1 + 2t^3 - 1/2t^5"). Every rational in the output is an
/// exact "p/q" string; coefficient lists are low degree first.
#[derive(Parser, Debug)]
#[command(name = "quasihilb", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// First N series coefficients H(0), ..., H(N-1)
    Expand {
        #[command(flatten)]
        gf: GenFunArgs,
        #[arg(short = 'N')]
        n_terms: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form constituents H_0, ..., H_{k-1}, checked against the series
    Constituents {
        #[command(flatten)]
        gf: GenFunArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Split each constituent into its forced integer roots and a cofactor
    Factor {
        #[command(flatten)]
        gf: GenFunArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Run every root check and emit certificates
    Certify {
        #[command(flatten)]
        gf: GenFunArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Seeded random campaign of exact checks
    Fuzz {
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        max_k: usize,
        #[arg(long, default_value_t = 6)]
        max_d: usize,
        #[arg(long, default_value_t = 9)]
        coeff_max: i64,
        /// Use this numerator in every trial instead of a random one
        #[arg(short = 'U', long = "numerator", requires_all = ["k", "d"])]
        numerator: Option<String>,
        #[arg(short = 'k')]
        k: Option<usize>,
        #[arg(short = 'd')]
        d: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Build c t^i prod (t^k - alpha) with every alpha on the unit circle
    Generate {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'd')]
        d: usize,
        /// Residue class i of the generated numerator
        #[arg(short = 'i', long = "class", default_value_t = 0)]
        class: usize,
        /// Root of unity e^(2 pi i p/q) as "p/q"; repeat for more factors
        #[arg(long = "alpha")]
        alphas: Vec<AlphaSpec>,
        /// Leading scalar c
        #[arg(long, default_value = "1")]
        scale: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct GenFunArgs {
    /// Numerator U(t)
    #[arg(short = 'U', long = "numerator", allow_hyphen_values = true)]
    numerator: String,
    #[arg(short = 'k')]
    k: usize,
    #[arg(short = 'd')]
    d: usize,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Text,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
            OutFormat::Text => Format::Text,
        }
    }
}

fn with_gf(job: &mut JobSpec, gf: GenFunArgs) {
    job.numerator = Some(gf.numerator);
    job.k = Some(gf.k);
    job.d = Some(gf.d);
}

fn build(cmd: Cmd) -> (JobSpec, Option<PathBuf>) {
    let (mut job, common) = match cmd {
        Cmd::Expand {
            gf,
            n_terms,
            common,
        } => {
            let mut j = JobSpec::new(Command::Expand);
            with_gf(&mut j, gf);
            j.n_terms = Some(n_terms);
            (j, common)
        }
        Cmd::Constituents { gf, common } => {
            let mut j = JobSpec::new(Command::Constituents);
            with_gf(&mut j, gf);
            (j, common)
        }
        Cmd::Factor { gf, common } => {
            let mut j = JobSpec::new(Command::Factor);
            with_gf(&mut j, gf);
            (j, common)
        }
        Cmd::Certify { gf, common } => {
            let mut j = JobSpec::new(Command::Certify);
            with_gf(&mut j, gf);
            (j, common)
        }
        Cmd::Fuzz {
            trials,
            max_k,
            max_d,
            coeff_max,
            numerator,
            k,
            d,
            common,
        } => {
            let mut j = JobSpec::new(Command::Fuzz);
            j.trials = Some(trials);
            j.bounds = Some(FuzzBounds {
                max_k,
                max_d,
                coeff_max,
            });
            j.numerator = numerator;
            j.k = k;
            j.d = d;
            (j, common)
        }
        Cmd::Generate {
            k,
            d,
            class,
            alphas,
            scale,
            common,
        } => {
            let mut j = JobSpec::new(Command::Generate);
            j.k = Some(k);
            j.d = Some(d);
            j.class = Some(class);
            j.alphas = alphas;
            j.scale = Some(scale);
            (j, common)
        }
    };
    job.tol = common.tol;
    job.format = common.format.into();
    job.seed = common.seed;
    (job, common.out)
}

fn main() -> ExitCode {
    let level = std::env::var("QUASIHILB_LOG").unwrap_or_else(|_| "warn".into());
    env_logger::Builder::new()
        .parse_filters(&level)
        .target(env_logger::Target::Stderr)
        .init();

    let parsed = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                cli::EXIT_USAGE as u8
            } else {
                0
            });
        }
    };
    let (job, out) = build(parsed.command);
    log::info!("running {:?}", job.command);
    let report = cli::run(&job);
    if let Some(msg) = &report.verdict.message {
        log::warn!("{msg}");
    }
    let text = cli::render(&report, job.format);
    let written = match &out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("quasihilb: cannot write report: {e}");
        return ExitCode::from(cli::EXIT_USAGE as u8);
    }
    ExitCode::from(report.exit_code() as u8)
}
