//! `ubgraph`: distance-unbalancedness of graphs from the command line.
//!
//! Family descriptors take the form `kind:p1,p2,...`, for example `path:7`,
//! `k:3,2,1` (complete multipartite), `wheel:6`, `ss:3,2` (merged star),
//! `ssx:2,2` (subdivided merged star), `sp:3,2,2,1` (spider), `tube:5x4`
//! (`P5 x C4`), `kite:4`, `tilde:5`, `c8chords`, and `glued4:G6,x,y` or
//! `glued3:G6,x,y` for glued doubles of a graph6 base.

mod commands;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "ubgraph", version, about = "Distance-unbalancedness of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for surveys (default: all cores)
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant profile of each graph6 line of the input, or of a family member
    Invariants {
        #[arg(long, conflicts_with = "input")]
        family: Option<String>,
        /// graph6 file (default: standard input)
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Build a family member and compare its closed form with brute force
    Family {
        #[arg(long)]
        family: String,
    },
    /// Extremal uB statistics over all trees of each order
    Trees {
        /// Order or inclusive range, e.g. `10` or `3..15`
        #[arg(long, value_parser = parse_orders)]
        orders: RangeInclusive<usize>,
        /// Add columns for the star and second-minimum conjectures
        #[arg(long)]
        check_conjectures: bool,
        /// List the canonical graph6 of every maximising tree
        #[arg(long)]
        max_attainers: bool,
    },
    /// Smallest nonzero uB over connected graphs
    Graphs(SurveyArgs),
    /// Smallest nonzero uB over connected regular graphs
    Regular(SurveyArgs),
    /// Check every closed form against brute force
    Verify {
        /// Restrict to one grid (see `ubgraph::verify::GRIDS`, or `tube:M`)
        #[arg(long)]
        grid: Option<String>,
        /// Corrupt one formula value; the run must then fail
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Args, Debug)]
struct SurveyArgs {
    /// Order or range for built-in enumeration (orders up to 7)
    #[arg(long, value_parser = parse_orders, required_unless_present = "input")]
    orders: Option<RangeInclusive<usize>>,
    /// graph6 file with the graphs of one order
    #[arg(long)]
    input: Option<PathBuf>,
    /// Keep only regular graphs
    #[arg(long)]
    regular_only: bool,
}

fn parse_orders(text: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected an order or a range A..B, got {text:?}");
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (text, text),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty order range {text:?}"));
    }
    Ok(lo..=hi)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    if let Some(workers) = cli.common.workers {
        if workers == 0 {
            bail!("--workers must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .context("configuring the worker pool")?;
    }
    let mut out: Box<dyn Write> = match &cli.common.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let format = cli.common.format;
    let ok = match cli.command {
        Command::Invariants { family, input } => {
            commands::invariants(family.as_deref(), input.as_deref(), format, &mut out)?
        }
        Command::Family { family } => commands::family(&family, format, &mut out)?,
        Command::Trees {
            orders,
            check_conjectures,
            max_attainers,
        } => commands::trees(orders, check_conjectures, max_attainers, format, &mut out)?,
        Command::Graphs(args) => commands::graphs(
            args.orders,
            args.input.as_deref(),
            args.regular_only,
            format,
            &mut out,
        )?,
        Command::Regular(args) => {
            commands::graphs(args.orders, args.input.as_deref(), true, format, &mut out)?
        }
        Command::Verify { grid, inject_fault } => {
            commands::verify(grid.as_deref(), inject_fault, format, &mut out)?
        }
    };
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
