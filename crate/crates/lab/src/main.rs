use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qdeph::config::{parse_overrides, RunConfig};
use qdeph::figure::{self, Panel};
use qdeph::verify::{self, Formulas};
use qdeph::{sweep, LabError, Result};

#[derive(Parser)]
#[command(name = "qdeph", version, about = "Dephasing sweeps, figure panels and oracle verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep over the configured time grid and write a CSV.
    Sweep {
        #[arg(long)]
        config: Option<PathBuf>,
        /// `--key value` overrides using the config file's dotted keys.
        #[arg(trailing_var_arg = true, allow_hyphen_values = true, value_name = "OVERRIDES")]
        overrides: Vec<String>,
    },
    /// Reproduce one figure panel as CSV and SVG.
    Figure {
        /// fig1a, fig1b, fig1c, fig1d, fig2a, fig2b, fig2c or fig2d.
        panel: String,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true, value_name = "OVERRIDES")]
        overrides: Vec<String>,
    },
    /// Run every oracle comparison and write a report.
    Verify {
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn apply(cfg: &mut RunConfig, overrides: &[String]) -> Result<()> {
    for (k, v) in parse_overrides(overrides)? {
        cfg.set(&k, &v)?;
    }
    cfg.validate()
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Sweep { config, overrides } => {
            let mut cfg = match config {
                Some(path) => RunConfig::from_file(&path)?,
                None => RunConfig::default(),
            };
            apply(&mut cfg, &overrides)?;
            sweep::run_to_file(&cfg)
        }
        Command::Figure { panel, out_dir, overrides } => {
            let panel: Panel = panel.parse()?;
            let mut cfg = panel.base_config();
            apply(&mut cfg, &overrides)?;
            let (csv, svg) = figure::write(panel, &cfg, &out_dir)?;
            println!("wrote {} and {}", csv.display(), svg.display());
            Ok(())
        }
        Command::Verify { report } => {
            let rep = verify::run_all(&Formulas::default());
            let text = rep.render();
            print!("{text}");
            if let Some(path) = report {
                fs::write(&path, &text).map_err(|e| LabError::io(&path, e))?;
            }
            match rep.failures() {
                0 => Ok(()),
                n => Err(LabError::VerificationFailed(n)),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(2);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qdeph: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
