//! Command-line front end for snarkkit.

mod analyze;
mod checkpoint;
mod config;
mod conjectures;
mod generate;
mod input;
mod join;

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use config::Config;
use conjectures::Which;

#[derive(Parser)]
#[command(name = "snarkkit", version, about = "Analyse, generate and compose snarks")]
struct Cli {
    /// key = value configuration file; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure, colourability and measures of each graph6 line.
    Analyze {
        /// Also classify both sides of every cycle-separating 4-edge-cut.
        #[arg(long)]
        cuts: bool,
        file: PathBuf,
    },
    /// Cyclically 4-edge-connected cubic graphs up to an order.
    Generate {
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        snarks_only: bool,
        #[arg(long)]
        girth_min: Option<usize>,
        #[arg(long)]
        zeta_min: Option<usize>,
        outdir: PathBuf,
    },
    /// 4-joins of all pool pairs, searching for oddness at least 4.
    Join {
        #[arg(long, num_args = 1.., required = true)]
        pool: Vec<PathBuf>,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        checkpoint_every: Option<usize>,
        #[arg(long)]
        no_orbit_pruning: bool,
        #[arg(long, hide = true)]
        halt_after_checkpoints: Option<usize>,
        outdir: PathBuf,
    },
    /// Dominating circuit, total colouring and Petersen colouring checks.
    Conjectures {
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Which::Dc, Which::Tc, Which::Pc])]
        which: Vec<Which>,
        file: PathBuf,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

/// Ok(false) means some input lines were rejected.
fn run() -> Result<bool> {
    let cli = Cli::parse();
    let mut config = Config::load(cli.config.as_deref())?;
    config.set_opt("workers", cli.workers)?;
    if let Some(w) = config.get::<usize>("workers")? {
        rayon::ThreadPoolBuilder::new().num_threads(w).build_global()?;
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let ok = match cli.command {
        Command::Analyze { cuts, file } => analyze::run(&file, cuts, &mut out)?,
        Command::Generate { order, snarks_only, girth_min, zeta_min, outdir } => {
            config.set_opt("order", order)?;
            if snarks_only {
                config.set("snarks_only", true)?;
            }
            config.set_opt("girth_min", girth_min)?;
            config.set_opt("zeta_min", zeta_min)?;
            generate::run(&config, &outdir)?;
            true
        }
        Command::Join { pool, max_order, checkpoint_every, no_orbit_pruning, halt_after_checkpoints, outdir } => {
            config.set_opt("max_order", max_order)?;
            config.set_opt("checkpoint_every", checkpoint_every)?;
            if no_orbit_pruning {
                config.set("orbit_pruning", false)?;
            }
            join::run(&config, &join::JoinArgs { pool, outdir, halt_after_checkpoints })?;
            true
        }
        Command::Conjectures { which, file } => conjectures::run(&file, &which, &mut out)?,
    };
    out.flush()?;
    Ok(ok)
}
