//! Command-line front end: optimum report, single arc lengths, angle sweeps,
//! trajectory samples and the cross-check suite.

use std::f64::consts::FRAC_PI_2;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use projectile_arclength::sweep::{
    self, write_report_csv, write_sweep_csv, write_trajectory_csv, AngleUnit, CsvError, SweepSpec, FAMILY_DEGREES,
};
use projectile_arclength::trajectory::{Angle, ProjectileParams};
use projectile_arclength::{verify, Error};

#[derive(Debug, Parser)]
#[command(name = "arclength", version, about = "Arc length of an ideal projectile and the angle that maximizes it")]
struct Cli {
    /// Launch speed.
    #[arg(long = "v", global = true, default_value_t = 1.0)]
    v: f64,
    /// Gravitational acceleration.
    #[arg(long = "g", global = true, default_value_t = 1.0)]
    g: f64,
    /// Read and write angles in degrees instead of radians.
    #[arg(long, global = true)]
    degrees: bool,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Optimal angle, fixed point of coth, and the lengths at θ* and 45°.
    Optimal,
    /// Arc length and its derivative at one angle.
    Arclength {
        #[arg(long, allow_negative_numbers = true)]
        theta: f64,
    },
    /// Arc length on a uniform angle grid.
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        min: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        max: Option<f64>,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
    },
    /// Sampled trajectories; defaults to the 30°, 45°, 56.47°, 75°, 90° family.
    Trajectory {
        #[arg(long, allow_negative_numbers = true)]
        theta: Vec<f64>,
        #[arg(long, default_value_t = 201)]
        samples: usize,
    },
    /// Cross-check closed forms against the numerical oracles.
    Verify,
}

#[derive(Debug)]
enum Failure {
    Numeric(Error),
    Output(CsvError),
    ChecksFailed(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Numeric(e)
    }
}

impl From<CsvError> for Failure {
    fn from(e: CsvError) -> Self {
        Failure::Output(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Output(e.into())
    }
}

fn radians(x: f64, degrees: bool) -> f64 {
    match degrees {
        true if x == 90.0 => FRAC_PI_2,
        true => x.to_radians(),
        false => x,
    }
}

fn angle(x: f64, degrees: bool) -> Result<Angle, Error> {
    if degrees {
        Angle::from_degrees(x)
    } else {
        Angle::new(x)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let params = ProjectileParams::new(cli.v, cli.g)?;
    let unit = if cli.degrees { AngleUnit::Degrees } else { AngleUnit::Radians };
    let out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };

    match cli.command {
        Command::Optimal => write_report_csv(out, &sweep::report_optimum()?)?,
        Command::Arclength { theta } => {
            let row = sweep::sweep_row(angle(theta, cli.degrees)?.radians(), params)?;
            write_sweep_csv(out, &[row], unit)?;
        }
        Command::Sweep { min, max, steps } => {
            let lo = min.map_or(0.01, |x| radians(x, cli.degrees));
            let hi = max.map_or(FRAC_PI_2, |x| radians(x, cli.degrees));
            let rows = sweep::sweep(&SweepSpec::new(lo, hi, steps)?, params)?;
            write_sweep_csv(out, &rows, unit)?;
        }
        Command::Trajectory { theta, samples } => {
            let angles = if theta.is_empty() {
                FAMILY_DEGREES.iter().map(|&d| Angle::from_degrees(d)).collect::<Result<Vec<_>, _>>()?
            } else {
                theta.iter().map(|&t| angle(t, cli.degrees)).collect::<Result<Vec<_>, _>>()?
            };
            write_trajectory_csv(out, &sweep::trajectory_family(&angles, params, samples)?, unit)?;
        }
        Command::Verify => {
            let mut out = out;
            let outcomes = verify::run_all();
            for c in &outcomes {
                writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
            }
            out.flush()?;
            let failed = outcomes.iter().filter(|c| !c.passed).count();
            if failed > 0 {
                return Err(Failure::ChecksFailed(failed));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Numeric(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_non_convergence() { 2 } else { 1 })
        }
        Err(Failure::Output(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::ChecksFailed(n)) => {
            eprintln!("{n} check(s) failed");
            ExitCode::from(1)
        }
    }
}
