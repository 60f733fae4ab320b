//! `twrlab`: rate-region computation and Monte Carlo simulation for the
//! separated two-way relay channel.

mod error;
mod manifest;
mod region;
mod simulate;
mod sweep;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "twrlab", version, about = "Two-way relay channel laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a capacity bound or achievable rate region as CSV
    Region(region::RegionArgs),
    /// Run a Monte Carlo simulation and write a JSON report
    Simulate(simulate::SimulateArgs),
    /// Run a family of simulations over one swept variable as CSV
    Sweep(sweep::SweepArgs),
}

fn configure_threads() {
    if let Ok(v) = std::env::var("TWRLAB_THREADS") {
        match v.parse::<usize>() {
            Ok(n) if n >= 1 => {
                if let Err(e) = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                {
                    log::warn!("thread pool already initialized: {e}");
                }
            }
            _ => log::warn!("ignoring invalid TWRLAB_THREADS value '{v}'"),
        }
    }
}

fn main() {
    env_logger::init();
    configure_threads();
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().collect();
    let result = match &cli.command {
        Command::Region(args) => region::run(args, argv),
        Command::Simulate(args) => simulate::run(args, argv),
        Command::Sweep(args) => sweep::run(args, argv),
    };
    if let Err(e) = result {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
