use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use circulant_swarm_cli::config::{parse_config, Scenario};
use circulant_swarm_cli::csv::{read_trajectory_file, write_trajectory_file};
use circulant_swarm_cli::error::CliError;
use circulant_swarm_cli::report::{spectrum_report, verify_report};
use circulant_swarm_cli::scenario::run_scenario;
use circulant_swarm_cli::svg::{render_plot_file, PlotStyle};

/// Simulate planar multiagent swarms driven by factor-circulant
/// interaction matrices.
#[derive(Parser)]
#[command(name = "swarmsim", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario and write its trajectory CSV (and optional plot).
    Simulate {
        /// Scenario JSON file.
        config: PathBuf,
        /// Plot style used when the config names a plot output.
        #[arg(long, value_enum, default_value_t = PlotStyle::FullEvolution)]
        style: PlotStyle,
    },
    /// Print eigenvalues, dominant modes and the limit classification.
    Spectrum { config: PathBuf },
    /// Run closed-form consistency checks and print a pass/fail table.
    Verify { config: PathBuf },
    /// Render an SVG from a previously written trajectory CSV.
    Plot {
        trajectory: PathBuf,
        #[arg(long, value_enum)]
        style: PlotStyle,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn load_scenario(path: &Path) -> Result<Scenario, CliError> {
    let text = std::fs::read_to_string(path)?;
    parse_config(&text)?.build()
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Simulate { config, style } => {
            let scenario = load_scenario(&config)?;
            let trajectory = run_scenario(&scenario)?;
            let outputs = scenario
                .outputs
                .as_ref()
                .ok_or_else(|| CliError::config("outputs: required by simulate"))?;
            let csv_path = outputs
                .trajectory
                .as_ref()
                .ok_or_else(|| CliError::config("outputs.trajectory: required by simulate"))?;
            write_trajectory_file(&trajectory, Path::new(csv_path))?;
            println!(
                "wrote {} frames x {} agents to {}",
                trajectory.len(),
                trajectory.n_agents(),
                csv_path
            );
            if let Some(plot_path) = &outputs.plot {
                render_plot_file(&trajectory, style, Path::new(plot_path))?;
                println!("wrote plot to {plot_path}");
            }
            Ok(())
        }
        Command::Spectrum { config } => {
            let scenario = load_scenario(&config)?;
            print!("{}", spectrum_report(&scenario)?);
            Ok(())
        }
        Command::Verify { config } => {
            let scenario = load_scenario(&config)?;
            let outcome = verify_report(&scenario)?;
            print!("{}", outcome.table);
            if outcome.all_pass {
                Ok(())
            } else {
                Err(CliError::Numeric(
                    circulant_swarm::Error::PreconditionFailed("verification checks failed"),
                ))
            }
        }
        Command::Plot {
            trajectory,
            style,
            output,
        } => {
            let traj = read_trajectory_file(&trajectory)?;
            render_plot_file(&traj, style, &output)?;
            println!("wrote plot to {}", output.display());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
