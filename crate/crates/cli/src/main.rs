use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use jcmaser::config::{SweepConfig, SweepOverrides};
use jcmaser::error::{CliError, EXIT_USAGE};
use jcmaser::reproduce::{reproduce_fig2, reproduce_fig3};
use jcmaser::{run_sweep, write_sweep_csv};

/// Entanglement of two atoms crossing a Jaynes-Cummings cavity one after the other.
#[derive(Debug, Parser)]
#[command(name = "jcmaser", version)]
struct Cli {
    /// TOML file with sweep settings; command-line flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Print the effective sweep configuration and exit.
    #[arg(long)]
    show_config: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Concurrence and entanglement of formation over a gt grid.
    Sweep(SweepArgs),
    /// Regenerate the Fock (fig2) or thermal (fig3) curves with a plot script.
    Reproduce {
        figure: Figure,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Figure {
    Fig2,
    Fig3,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Field {
    Fock,
    Thermal,
}

#[derive(Debug, Default, Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    field: Option<Field>,
    /// Photon number m (fock) or mean photon number (thermal).
    #[arg(long)]
    param: Option<f64>,
    #[arg(long)]
    gt_min: Option<f64>,
    #[arg(long)]
    gt_max: Option<f64>,
    #[arg(long)]
    steps: Option<usize>,
    /// Thermal truncation: discarded probability mass stays below this.
    #[arg(long)]
    tail_eps: Option<f64>,
    /// Cross-check every 16th point against the brute-force oracle.
    #[arg(long)]
    verify: bool,
    /// Output CSV path.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl SweepArgs {
    fn overrides(&self) -> SweepOverrides {
        SweepOverrides {
            field: self.field.map(|f| match f {
                Field::Fock => "fock".to_string(),
                Field::Thermal => "thermal".to_string(),
            }),
            param: self.param,
            gt_min: self.gt_min,
            gt_max: self.gt_max,
            steps: self.steps,
            tail_eps: self.tail_eps,
            verify: self.verify.then_some(true),
            out: self.out.clone(),
        }
    }
}

fn resolve(config: Option<&PathBuf>, args: &SweepArgs) -> Result<SweepConfig, CliError> {
    let file = match config {
        Some(path) => SweepOverrides::from_file(path)?,
        None => SweepOverrides::default(),
    };
    SweepConfig::resolve(&[&file, &args.overrides()])
}

fn run(cli: Cli) -> Result<(), CliError> {
    let no_flags = SweepArgs::default();
    if cli.show_config {
        let args = match &cli.command {
            Some(Command::Sweep(args)) => args,
            _ => &no_flags,
        };
        print!("{}", resolve(cli.config.as_ref(), args)?.to_toml());
        return Ok(());
    }
    match cli.command {
        None => Err(CliError::Usage(
            "expected a subcommand (sweep, reproduce) or --show-config; see --help".into(),
        )),
        Some(Command::Sweep(args)) => {
            let cfg = resolve(cli.config.as_ref(), &args)?;
            let out = cfg
                .output_path
                .clone()
                .ok_or_else(|| CliError::Usage("sweep needs --out <path>".into()))?;
            let rows = run_sweep(&cfg)?;
            write_sweep_csv(&out, &rows)?;
            eprintln!("wrote {} rows to {}", rows.len(), out.display());
            Ok(())
        }
        Some(Command::Reproduce { figure, out }) => {
            let (csv, script) = match figure {
                Figure::Fig2 => reproduce_fig2(&out)?,
                Figure::Fig3 => reproduce_fig3(&out)?,
            };
            eprintln!("wrote {} and {}", csv.display(), script.display());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
