use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use wiretap::cli::{
    effective_budget, render_verify_json, render_verify_text, write_with_manifest,
    DetCapacityReport, Figure, GaussReport,
};
use wiretap::det::DetWiretapParams;
use wiretap::gauss::GaussWiretapParams;
use wiretap::manifest::{ManifestCommand, RunManifest};
use wiretap::verify::{run_all, run_suite, VerifyConfig};
use wiretap::Error;

#[derive(Parser)]
#[command(
    name = "wiretap",
    version,
    about = "Secrecy capacities and capacity bounds for wiretap channels with side information"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Secrecy and secret-key capacities of a linear deterministic channel,
    /// computed by two independent formulas
    DetCapacity {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        m1: u32,
        #[arg(long)]
        n2: u32,
        #[arg(long)]
        m2: u32,
        /// Print full-precision JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites (all of them by default)
    Verify {
        /// One suite name; omit to run every suite
        #[arg(long)]
        suite: Option<String>,
        /// Sample count for the randomized suites (lemma1 pairs, mi-oracle draws)
        #[arg(long)]
        trials: Option<u64>,
        /// Seed for the randomized suites
        #[arg(long)]
        seed: Option<u64>,
        /// Lower the enumeration budget (never raises it)
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Secrecy and secret-key bounds of a degraded Gaussian channel
    Gauss {
        #[arg(long)]
        h1: f64,
        #[arg(long)]
        g1: f64,
        #[arg(long)]
        beta: f64,
        /// Also report the achievable rate at this auxiliary coefficient
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Regenerate figure data as CSV (with a manifest alongside)
    Sweep {
        /// fig2 (secrecy rates and alpha*) or fig3 (secret-key rates)
        #[arg(long)]
        figure: String,
        #[arg(long, default_value_t = 50)]
        points: usize,
        #[arg(long = "h1sq-min", default_value_t = 1e-3)]
        h1sq_min: f64,
        #[arg(long = "h1sq-max", default_value_t = 10.0)]
        h1sq_max: f64,
        #[arg(long, default_value_t = 1.0)]
        g1: f64,
        #[arg(long, default_value_t = 0.5)]
        beta: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exact finite-blocklength binning simulation (CSV + manifest)
    Simulate {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        m1: u32,
        #[arg(long)]
        n2: u32,
        #[arg(long)]
        m2: u32,
        /// Block length
        #[arg(long)]
        n: usize,
        /// Message rate in bits/use, a multiple of 1/n
        #[arg(long)]
        rate: f64,
        /// Confusion (sub-bin) rate in bits/use, a multiple of 1/n
        #[arg(long = "rate-confusion", default_value_t = 0.0)]
        rate_confusion: f64,
        /// Number of seeds to run
        #[arg(long, default_value_t = 1)]
        seeds: u64,
        /// First seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Lower the enumeration budget (never raises it)
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// Usage-shaped errors exit 2, everything else 1.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::InvalidParameter(_)
        | Error::UnknownSuite(_)
        | Error::UnknownCurve(_)
        | Error::InvalidShift { .. } => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> wiretap::Result<ExitCode> {
    match cli.command {
        Command::DetCapacity { n1, m1, n2, m2, json } => {
            let report = DetCapacityReport::compute(DetWiretapParams::new(n1, m1, n2, m2));
            print!("{}", if json { report.render_json() } else { report.render_text() });
            Ok(if report.formulas_agree() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Verify {
            suite,
            trials,
            seed,
            budget,
            json,
        } => {
            let mut cfg = VerifyConfig {
                trials,
                budget: effective_budget(budget),
                ..VerifyConfig::default()
            };
            if let Some(s) = seed {
                cfg.seed = s;
            }
            let reports = match suite {
                Some(name) => vec![run_suite(&name, &cfg)?],
                None => run_all(&cfg)?,
            };
            print!(
                "{}",
                if json {
                    render_verify_json(&reports)
                } else {
                    render_verify_text(&reports)
                }
            );
            Ok(if reports.iter().all(|r| r.passed()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Gauss {
            h1,
            g1,
            beta,
            alpha,
            json,
        } => {
            let params = GaussWiretapParams::new(h1, g1, beta)?;
            let report = GaussReport::compute(&params, alpha)?;
            print!("{}", if json { report.render_json() } else { report.render_text() });
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            figure,
            points,
            h1sq_min,
            h1sq_max,
            g1,
            beta,
            out,
        } => {
            let fig: Figure = figure.parse()?;
            let manifest = RunManifest::new(
                out.display().to_string(),
                ManifestCommand::Sweep {
                    figure: fig.name().to_string(),
                    points,
                    h1sq_min,
                    h1sq_max,
                    g1,
                    beta,
                },
            );
            let csv = manifest.render_output()?;
            let mpath = write_with_manifest(&out, &csv, &manifest)?;
            println!("wrote {} and {}", out.display(), mpath.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Simulate {
            n1,
            m1,
            n2,
            m2,
            n,
            rate,
            rate_confusion,
            seeds,
            seed,
            budget,
            out,
        } => {
            let manifest = RunManifest::new(
                out.display().to_string(),
                ManifestCommand::Simulate {
                    n1,
                    m1,
                    n2,
                    m2,
                    block_len: n,
                    rate,
                    confusion_rate: rate_confusion,
                    seed,
                    seed_count: seeds,
                    budget: effective_budget(budget),
                },
            );
            let csv = manifest.render_output()?;
            let mpath = write_with_manifest(&out, &csv, &manifest)?;
            println!("wrote {} and {}", out.display(), mpath.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}
