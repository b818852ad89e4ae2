//! Command line front end for the verification suites.
//!
//! `cpart report` runs every suite and emits the deterministic JSON
//! report; the process exits nonzero when any record fails, so the
//! binary doubles as a CI gate.  `cpart critdim` prints the exact
//! distinguished-dimension scan, and `cpart trajectory` integrates the
//! doubly constrained demo run and exports it as CSV.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;

use cpart_core::dynamics::{
    doubly_constrained_velocity, integrate_trajectory, trajectory_csv, Einbein, Params,
};
use cpart_core::metric::Signature;
use cpart_core::report::seed_from_env;
use cpart_core::spectrum::{critical_dimensions, Branch, CriticalWitness, RadialKind};
use cpart_core::suites::{run_selected, SUITE_NAMES};

#[derive(Parser)]
#[command(
    name = "cpart",
    version,
    about = "Verification suites for a constrained complex particle model"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suites and emit the JSON report.
    Report {
        /// Sampling seed; the CP_SEED environment variable overrides it.
        #[arg(long, default_value_t = 20240917)]
        seed: u64,
        /// Limit the run to one or more suites (repeatable).
        #[arg(long = "suite", value_parser = SUITE_NAMES)]
        suites: Vec<String>,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print one summary line per suite to standard error.
        #[arg(long)]
        summary: bool,
    },
    /// Print the distinguished dimensions of each signature, with the
    /// admissible mode witnessing each hit.
    Critdim {
        /// Largest dimension scanned.
        #[arg(long, default_value_t = 9)]
        dim_max: i64,
        /// Largest mode weight scanned per dimension.
        #[arg(long, default_value_t = 12)]
        ell_max: i64,
    },
    /// Integrate the doubly constrained demo trajectory and emit CSV.
    Trajectory {
        /// Evolution time to integrate over.
        #[arg(long, default_value_t = 1.0)]
        tau_end: f64,
        /// Fixed integrator step.
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        /// Coupling of the velocity to the conjugate position.
        #[arg(long, default_value_t = 0.8)]
        kappa: f64,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Report { seed, suites, out, summary } => report(seed, &suites, out, summary),
        Command::Critdim { dim_max, ell_max } => critdim(dim_max, ell_max),
        Command::Trajectory { tau_end, step, kappa, out } => trajectory(tau_end, step, kappa, out),
    }
}

fn emit(text: &str, out: Option<PathBuf>) -> ExitCode {
    match out {
        Some(path) => {
            if let Err(err) = std::fs::write(&path, text) {
                eprintln!("cpart: cannot write {}: {err}", path.display());
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        None => {
            print!("{text}");
            ExitCode::SUCCESS
        }
    }
}

fn report(seed: u64, suites: &[String], out: Option<PathBuf>, summary: bool) -> ExitCode {
    let seed = seed_from_env(seed);
    let selection: Vec<&str> = suites.iter().map(String::as_str).collect();
    let report = run_selected(seed, &selection);
    if summary {
        for suite in &report.suites {
            eprintln!(
                "{:<10} {:>3} passed {:>3} failed",
                suite.name, suite.passed, suite.failed
            );
        }
    }
    let wrote = emit(&report.to_json(), out);
    if wrote != ExitCode::SUCCESS {
        return wrote;
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        eprintln!("cpart: {} of {} records failed", report.failed, report.failed + report.passed);
        ExitCode::FAILURE
    }
}

fn describe(witness: &CriticalWitness) -> String {
    let mode = match (witness.branch, witness.kind) {
        (Some(branch), Some(kind)) => {
            let b = match branch {
                Branch::Direct => "direct",
                Branch::Reflected => "reflected",
            };
            let k = match kind {
                RadialKind::Power => "power",
                RadialKind::PowerIntegral => "partner",
            };
            format!("{b} {k}")
        }
        _ => "circle".to_string(),
    };
    format!(
        "  d{}: 4*eigenvalue = {:>3}, weight {}, {mode} mode",
        witness.dim, witness.lambda4, witness.ell
    )
}

fn critdim(dim_max: i64, ell_max: i64) -> ExitCode {
    for sig in [Signature::Euclid, Signature::Minkowski] {
        let name = match sig {
            Signature::Euclid => "euclid",
            Signature::Minkowski => "minkowski",
        };
        match critical_dimensions(sig, dim_max, ell_max) {
            Ok(witnesses) => {
                let dims: Vec<i64> = witnesses.iter().map(|w| w.dim).collect();
                println!("{name}: dims {dims:?}");
                for w in &witnesses {
                    println!("{}", describe(w));
                }
            }
            Err(err) => {
                eprintln!("cpart: {err}");
                return ExitCode::FAILURE;
            }
        }
    }
    ExitCode::SUCCESS
}

fn trajectory(tau_end: f64, step: f64, kappa: f64, out: Option<PathBuf>) -> ExitCode {
    let params = Params { sig: Signature::Minkowski, kappa };
    let lapse = Einbein::Wobble {
        base: Complex64::new(0.9, 0.35),
        amp: 0.3,
        freq: 2.0,
    };
    // A real lightlike direction (3-4-5 style triple) keeps both
    // velocity constraints at zero for the whole run.
    let u0 = [1.0, 0.6, 0.64, 0.48];
    let w0 = doubly_constrained_velocity(0.7, &u0);
    let z0 = vec![
        Complex64::new(0.2, -0.1),
        Complex64::new(-0.3, 0.25),
        Complex64::new(0.15, 0.4),
        Complex64::new(-0.05, -0.2),
    ];
    match integrate_trajectory(&params, &lapse, &z0, &w0, tau_end, step) {
        Ok(states) => emit(&trajectory_csv(params.sig, &states), out),
        Err(err) => {
            eprintln!("cpart: {err}");
            ExitCode::FAILURE
        }
    }
}
