//! Argument parsing and dispatch for the `cvdj` binary.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cvdj_core::amplification::{
    classical_probabilistic_bound, success_bound, with_replacement_bound, AmplificationReport,
    QueryModel,
};
use cvdj_core::bitstrings::{classify, BitString};
use cvdj_core::dv::dj_run;
use cvdj_core::encoding::{encoded_momentum, grid_sample};
use cvdj_core::measurement::{optimal_delta, window_probability, Window};
use cvdj_core::rng::ALGORITHM;
use cvdj_core::wavefunction::pdf;
use cvdj_core::{CvParams, PositionWavefunction};
use serde::Serialize;

use crate::figures::reproduce_figures;
use crate::output::{Format, Output, Table};
use crate::parallel;
use crate::Error;

#[derive(Debug, Parser)]
#[command(
    name = "cvdj",
    version,
    about = "Discrete and continuous-variable Deutsch-Jozsa simulations"
)]
pub struct Cli {
    /// Output format; tables default to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file (a directory for reproduce-figures); stdout when absent.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for randomised commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One query of the qubit algorithm; prints the probability of all zeros.
    DvRun {
        #[arg(long)]
        z: String,
    },
    /// Samples the encoded momentum signal at cell midpoints.
    CvEncode {
        #[arg(long)]
        z: String,
        #[arg(long = "P", allow_negative_numbers = true, default_value_t = 1.0)]
        half_extent: f64,
        #[arg(long, default_value_t = 1024)]
        samples: usize,
    },
    /// Position probability density on a uniform grid.
    CvPdf {
        #[arg(long)]
        z: String,
        #[arg(long = "P", allow_negative_numbers = true, default_value_t = 1.0)]
        half_extent: f64,
        #[arg(long, allow_negative_numbers = true, default_value_t = -10.0)]
        xmin: f64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 10.0)]
        xmax: f64,
        #[arg(long, default_value_t = 2001)]
        points: usize,
    },
    /// Probability of detecting the position inside `[-delta, delta]`.
    CvProb {
        #[arg(long)]
        z: String,
        #[arg(long = "P", allow_negative_numbers = true, default_value_t = 1.0)]
        half_extent: f64,
        /// Defaults to the optimal half-width.
        #[arg(long, allow_negative_numbers = true)]
        delta: Option<f64>,
    },
    /// Window half-width that best separates constant from balanced.
    OptimalDelta {
        #[arg(long = "P", allow_negative_numbers = true, default_value_t = 1.0)]
        half_extent: f64,
    },
    /// Exhaustive check that no balanced string beats the ASB phasor sum.
    AsbCheck {
        #[arg(long = "N")]
        bits: usize,
        #[arg(long, default_value_t = cvdj_core::asb::DEFAULT_GRID)]
        grid: usize,
    },
    /// Monte-Carlo error of the majority decision after `m` queries.
    Amplify {
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 100_000)]
        runs: u64,
        /// Use detection probabilities 3/4 and 1/4.
        #[arg(long)]
        illustrative: bool,
    },
    /// Success probability of `m` random classical queries.
    ClassicalBaseline {
        #[arg(long = "N")]
        bits: usize,
        #[arg(long)]
        m: usize,
    },
    /// Writes every figure table as CSV into the --output directory.
    ReproduceFigures,
}

/// Parses `args`, runs the command and writes its output. Usage errors exit
/// with 2, failed validation with 1.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn execute(cli: &Cli) -> Result<(), Error> {
    let output = dispatch(cli)?;
    let format = cli.format.unwrap_or(match output {
        Output::Table(_) => Format::Csv,
        Output::Record(_) => Format::Json,
    });
    match (&cli.output, &cli.command) {
        (Some(path), command) if !matches!(command, Command::ReproduceFigures) => {
            let io = |source| Error::Io {
                path: path.clone(),
                source,
            };
            let mut file = std::io::BufWriter::new(fs::File::create(path).map_err(io)?);
            output.write(format, &mut file).map_err(io)?;
            file.flush().map_err(io)
        }
        _ => {
            let stdout = std::io::stdout();
            output
                .write(format, stdout.lock())
                .map_err(|source| Error::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn parse_string(z: &str) -> Result<BitString, Error> {
    Ok(z.parse()?)
}

/// Runs the selected command without writing anything except figure files.
pub fn dispatch(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::DvRun { z } => {
            let z = parse_string(z)?;
            let n = z.qubit_count()?;
            Ok(Output::record(DvRecord {
                n,
                class: classify(&z).as_str(),
                prob_zero: dj_run(&z)?,
            }))
        }
        Command::CvEncode {
            z,
            half_extent,
            samples,
        } => {
            let z = parse_string(z)?;
            let signal = encoded_momentum(&z, CvParams::new(z.len(), *half_extent)?)?;
            let grid = grid_sample(&signal, *samples)?;
            let mut t = Table::new(vec!["p", "value"]);
            for (&p, &v) in grid.momenta.iter().zip(&grid.values) {
                t.push(vec![p, v]);
            }
            Ok(Output::Table(t))
        }
        Command::CvPdf {
            z,
            half_extent,
            xmin,
            xmax,
            points,
        } => {
            let z = parse_string(z)?;
            if *points < 2 {
                return Err(Error::Invalid(format!(
                    "--points must be at least 2, got {points}"
                )));
            }
            if !xmin.is_finite() || !xmax.is_finite() || xmin >= xmax {
                return Err(Error::Invalid(format!(
                    "--xmin {xmin} must be below --xmax {xmax}"
                )));
            }
            let wf = PositionWavefunction::new(&z, CvParams::new(z.len(), *half_extent)?)?;
            let density = pdf(&wf);
            let step = (xmax - xmin) / (*points - 1) as f64;
            let mut t = Table::new(vec!["x", "pdf"]);
            for k in 0..*points {
                let x = if k + 1 == *points {
                    *xmax
                } else {
                    xmin + k as f64 * step
                };
                t.push(vec![x, density.density(x)]);
            }
            Ok(Output::Table(t))
        }
        Command::CvProb {
            z,
            half_extent,
            delta,
        } => {
            let z = parse_string(z)?;
            let params = CvParams::new(z.len(), *half_extent)?;
            let delta = match delta {
                Some(d) if !(*d > 0.0 && d.is_finite()) => {
                    return Err(cvdj_core::Error::NotPositive {
                        name: "delta",
                        value: *d,
                    }
                    .into())
                }
                Some(d) => *d,
                None => optimal_delta(*half_extent)?,
            };
            let wf = PositionWavefunction::new(&z, params)?;
            let prob = window_probability(&pdf(&wf), Window::symmetric(delta)?)?;
            Ok(Output::record(ProbRecord { prob }))
        }
        Command::OptimalDelta { half_extent } => {
            let delta = optimal_delta(*half_extent)?;
            Ok(Output::record(DeltaRecord {
                delta,
                p_delta_product: delta * half_extent,
            }))
        }
        Command::AsbCheck { bits, grid } => {
            let r = parallel::verify_asb_dominance(*bits, *grid)?;
            Ok(Output::record(AsbRecord {
                n: r.bits,
                grid: r.grid,
                strings_checked: r.strings_checked,
                holds: r.holds,
                worst_margin: r.worst_margin,
                witness: r.witness.map(|(z, x)| Witness {
                    z: z.to_string(),
                    x,
                }),
                strict_margin: r.strict_margin.map(|(margin, z, x)| StrictMargin {
                    margin,
                    z: z.to_string(),
                    x,
                }),
            }))
        }
        Command::Amplify {
            m,
            runs,
            illustrative,
        } => {
            let model = if *illustrative {
                QueryModel::illustrative()
            } else {
                QueryModel::default()
            };
            let (constant, balanced) = parallel::monte_carlo_error(&model, *m, *runs, cli.seed)?;
            Ok(Output::record(AmplifyRecord {
                m: *m,
                runs: *runs,
                seed: cli.seed,
                rng: ALGORITHM,
                p_constant: model.p_constant(),
                p_balanced: model.p_balanced(),
                illustrative: model.is_illustrative(),
                success_bound: success_bound(*m),
                constant: TruthRecord::from(&constant),
                balanced: TruthRecord::from(&balanced),
            }))
        }
        Command::ClassicalBaseline { bits, m } => {
            if *m == 0 {
                return Err(cvdj_core::Error::TooSmall {
                    name: "m",
                    min: 1,
                    value: 0,
                }
                .into());
            }
            Ok(Output::record(BaselineRecord {
                exact: classical_probabilistic_bound(*bits, *m)?,
                lower_bound: with_replacement_bound(*m),
                deterministic_queries: bits / 2 + 1,
            }))
        }
        Command::ReproduceFigures => {
            let dir = cli.output.as_deref().unwrap_or(Path::new("figures"));
            let files = reproduce_figures(dir)?
                .into_iter()
                .map(|p| p.display().to_string())
                .collect();
            Ok(Output::record(FiguresRecord { files }))
        }
    }
}

#[derive(Serialize)]
struct DvRecord {
    n: usize,
    class: &'static str,
    prob_zero: f64,
}

#[derive(Serialize)]
struct ProbRecord {
    prob: f64,
}

#[derive(Serialize)]
struct DeltaRecord {
    delta: f64,
    #[serde(rename = "P_delta_product")]
    p_delta_product: f64,
}

#[derive(Serialize)]
struct Witness {
    z: String,
    x: f64,
}

#[derive(Serialize)]
struct StrictMargin {
    margin: f64,
    z: String,
    x: f64,
}

#[derive(Serialize)]
struct AsbRecord {
    #[serde(rename = "N")]
    n: usize,
    grid: usize,
    strings_checked: usize,
    holds: bool,
    worst_margin: f64,
    witness: Option<Witness>,
    strict_margin: Option<StrictMargin>,
}

#[derive(Serialize)]
struct TruthRecord {
    detections: u64,
    decision: &'static str,
    errors: u64,
    empirical_error: f64,
    chernoff_bound: f64,
}

impl From<&AmplificationReport> for TruthRecord {
    fn from(r: &AmplificationReport) -> Self {
        Self {
            detections: r.detections,
            decision: r.decision.as_str(),
            errors: r.errors,
            empirical_error: r.empirical_error,
            chernoff_bound: r.chernoff_bound,
        }
    }
}

#[derive(Serialize)]
struct AmplifyRecord {
    m: u64,
    runs: u64,
    seed: u64,
    rng: &'static str,
    p_constant: f64,
    p_balanced: f64,
    illustrative: bool,
    success_bound: f64,
    constant: TruthRecord,
    balanced: TruthRecord,
}

#[derive(Serialize)]
struct BaselineRecord {
    exact: f64,
    lower_bound: f64,
    deterministic_queries: usize,
}

#[derive(Serialize)]
struct FiguresRecord {
    files: Vec<String>,
}
