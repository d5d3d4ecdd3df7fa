//! `aristotle`: verification suite, trajectory output and orbit utilities.
//!
//! Exit status is 0 on success, 1 when `verify` finds a failing property and
//! 2 on any usage or input error.

mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use aristotle_core::coadjoint::{canonical_act, to_chart};
use aristotle_core::dynamics::simulate;
use aristotle_core::verify::run_verify;
use aristotle_core::{BaseElement, CoadjointPoint, Integrator, OrbitContext, OrbitPoint, SimulationConfig};
use clap::{Parser, Subcommand, ValueEnum};

use crate::output::{fmt_num, write_csv, write_json};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "aristotle", version, about = "Symplectic realization of the one-dimensional Aristotle group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the seeded property suite.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random cases per property.
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        cases: u64,
        /// Tolerance for properties that are exact only in exact arithmetic.
        #[arg(long, default_value_t = 1e-9, value_parser = positive_f64, allow_negative_numbers = true)]
        tol: f64,
    },
    /// Write the trajectory of H = m g q as CSV or JSON.
    Simulate {
        #[arg(long, value_parser = finite_f64, allow_negative_numbers = true)]
        mass: f64,
        #[arg(long, value_parser = finite_f64, allow_negative_numbers = true)]
        g: f64,
        #[arg(long, value_parser = finite_f64, allow_negative_numbers = true)]
        p0: f64,
        #[arg(long, value_parser = finite_f64, allow_negative_numbers = true)]
        q0: f64,
        #[arg(long = "t-max", value_parser = finite_f64, allow_negative_numbers = true)]
        t_max: f64,
        #[arg(long, value_parser = finite_f64, allow_negative_numbers = true)]
        dt: f64,
        #[arg(long, value_enum, default_value_t = IntegratorArg::Exact)]
        integrator: IntegratorArg,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map a dual point (m, e, p) to the orbit chart (p, q).
    Orbit {
        #[arg(long = "m", value_parser = finite_f64, allow_negative_numbers = true)]
        m: f64,
        #[arg(long, value_parser = finite_f64, allow_negative_numbers = true)]
        g: f64,
        #[arg(long, value_parser = finite_f64, allow_negative_numbers = true)]
        e: f64,
        #[arg(long, value_parser = finite_f64, allow_negative_numbers = true)]
        p: f64,
    },
    /// Apply the translation (t, h) to the chart point (p, q).
    Act {
        #[arg(long, value_parser = finite_f64, allow_negative_numbers = true)]
        mass: f64,
        #[arg(long, value_parser = finite_f64, allow_negative_numbers = true)]
        g: f64,
        #[arg(long, value_parser = finite_f64, allow_negative_numbers = true)]
        t: f64,
        #[arg(long, value_parser = finite_f64, allow_negative_numbers = true)]
        h: f64,
        #[arg(long, value_parser = finite_f64, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, value_parser = finite_f64, allow_negative_numbers = true)]
        q: f64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IntegratorArg {
    Exact,
    #[value(name = "symplectic_euler", alias = "symplectic-euler")]
    SymplecticEuler,
}

impl From<IntegratorArg> for Integrator {
    fn from(arg: IntegratorArg) -> Self {
        match arg {
            IntegratorArg::Exact => Integrator::Exact,
            IntegratorArg::SymplecticEuler => Integrator::SymplecticEuler,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn finite_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("`{s}` is not a number: {e}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let v = finite_f64(s)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("`{s}` must be positive"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Verify { seed, cases, tol } => {
            let cases = usize::try_from(cases).map_err(|e| e.to_string())?;
            let report = run_verify(seed, cases, tol).map_err(|e| e.to_string())?;
            print!("{report}");
            io::stdout().flush().map_err(|e| e.to_string())?;
            Ok(if report.passed() { 0 } else { EXIT_VERIFY_FAILED })
        }
        Command::Simulate {
            mass,
            g,
            p0,
            q0,
            t_max,
            dt,
            integrator,
            format,
            out,
        } => {
            let cfg = SimulationConfig {
                m: mass,
                g,
                p0,
                q0,
                t_max,
                dt,
                integrator: integrator.into(),
            };
            let samples = simulate(&cfg).map_err(|e| e.to_string())?;
            let sink: Box<dyn Write> = match &out {
                Some(path) => Box::new(
                    File::create(path)
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                ),
                None => Box::new(io::stdout().lock()),
            };
            let mut sink = BufWriter::new(sink);
            match format {
                Format::Csv => write_csv(&mut sink, &samples),
                Format::Json => write_json(&mut sink, &samples),
            }
            .and_then(|()| sink.flush())
            .map_err(|e| format!("write failed: {e}"))?;
            Ok(0)
        }
        Command::Orbit { m, g, e, p } => {
            let ctx = OrbitContext::new(m, g).map_err(|e| e.to_string())?;
            let pt = to_chart(&ctx, &CoadjointPoint::new(m, e, p)).map_err(|e| e.to_string())?;
            println!("p={} q={}", fmt_num(pt.p), fmt_num(pt.q));
            Ok(0)
        }
        Command::Act { mass, g, t, h, p, q } => {
            let ctx = OrbitContext::new(mass, g).map_err(|e| e.to_string())?;
            let moved = canonical_act(&ctx, BaseElement::new(t, h), &OrbitPoint::new(p, q));
            if !moved.is_finite() {
                return Err("result overflowed".to_string());
            }
            println!("p={} q={}", fmt_num(moved.p), fmt_num(moved.q));
            Ok(0)
        }
    }
}
