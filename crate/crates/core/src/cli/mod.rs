//! The `birkslice` command line.
//!
//! Exit status: 0 on success, 1 when a verification fails or the two volume
//! methods disagree, 2 on usage or precondition errors.

mod commands;
mod input;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use commands::{cmd_basis, cmd_verify, cmd_vertices, cmd_volume, VolumeTarget};
pub use input::{parse_polytope, read_polytope};
pub use report::{Format, RunReport};

use crate::birkhoff::BirkhoffError;
use crate::geometry::GeometryError;
use crate::slicing_basis::BasisError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("precondition failed: {0}")]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Birkhoff(#[from] BirkhoffError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    Theorem4,
    Lemma12,
    Unimodular,
    Genpos,
    Bound,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem4 => "theorem4",
            Check::Lemma12 => "lemma12",
            Check::Unimodular => "unimodular",
            Check::Genpos => "genpos",
            Check::Bound => "bound",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Slice,
    Oracle,
    Both,
}

#[derive(Debug, Parser)]
#[command(name = "birkslice", version, about = "Slicing bases and exact lattice volumes of Birkhoff polytopes")]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,
    /// Lift the default feasibility caps.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the ordered change of basis for B_n and its determinant.
    Basis {
        #[arg(long)]
        n: usize,
    },
    /// Run exhaustive checks on the slicing vector and basis.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_values = ["theorem4", "lemma12", "unimodular", "genpos", "bound"])]
        checks: Vec<Check>,
    },
    /// List the vertices of B_n, optionally in the slicing basis.
    Vertices {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        transformed: bool,
    },
    /// Volume of B_n or of a polytope file, by slicing and/or triangulation.
    Volume {
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        n: Option<usize>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
}

/// Parses `args`, runs the command and writes the report; returns the exit status.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };

    let start = Instant::now();
    let outcome = match cli.command {
        Command::Basis { n } => cmd_basis(n, cli.force),
        Command::Verify { n, checks } => cmd_verify(n, &checks, cli.force),
        Command::Vertices { n, transformed } => cmd_vertices(n, transformed, cli.force),
        Command::Volume { n, input, method } => {
            let target = match (n, input) {
                (_, Some(path)) => VolumeTarget::File(path),
                (Some(n), None) => VolumeTarget::Birkhoff(n),
                (None, None) => unreachable!("clap requires one target"),
            };
            cmd_volume(&target, method, cli.force)
        }
    };
    match outcome {
        Ok(mut report) => {
            report.timing_ms = start.elapsed().as_millis();
            let _ = out.write_all(report.render(cli.format).as_bytes());
            let _ = writeln!(err, "birkslice {}: {} ms", report.command, report.timing_ms);
            if report.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
