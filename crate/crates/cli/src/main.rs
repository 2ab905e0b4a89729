use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use voclink_cli::config::{builtin_file, to_toml, Scenario};
use voclink_cli::{commands, CliError};

/// Frequency-domain calculator for a VOC-based interplant
/// molecular-communication link: per-stage and end-to-end attenuation,
/// delay, SNR, bandwidth and Shannon capacity as CSV.
#[derive(Parser)]
#[command(name = "voclink", version)]
struct Cli {
    /// Scenario file (TOML). Bare names resolve in $VOCLINK_SCENARIO_DIR;
    /// omitted, the built-in reference scenario is used.
    #[arg(long, global = true)]
    scenario: Option<String>,

    /// Write the CSV to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Export a built-in as a scenario file: q-ilex, pinus-pinea or reference.
    ExportBuiltin {
        #[arg(long)]
        name: String,
    },
    /// Transmitter attenuation over frequency, per species.
    TxGain {
        /// Comma list of species names, or `all` (default: signal blend).
        #[arg(long)]
        species: Option<String>,
        /// Frequencies in Hz: comma list or start:step:end.
        #[arg(long)]
        f: Option<String>,
    },
    /// Transmitter phase and group delay over frequency, per species.
    TxDelay {
        #[arg(long)]
        species: Option<String>,
        #[arg(long)]
        f: Option<String>,
    },
    /// Stress-channel gain (log10) and attenuation over frequency.
    ChannelGain {
        /// Distances in m: comma list or start:step:end (default 100).
        #[arg(long)]
        x: Option<String>,
        /// Wind speeds in m/s (default: scenario value).
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        species: Option<String>,
        #[arg(long)]
        f: Option<String>,
    },
    /// Stress-channel group delay over distance and wind speed.
    ChannelDelay {
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        u: Option<String>,
        /// Use this species' decay rate (default: blend-effective rate).
        #[arg(long)]
        species: Option<String>,
    },
    /// Constitutive-channel gain and attenuation over frequency.
    PlumeGain {
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        f: Option<String>,
    },
    /// SNR against distance, noise sources added cumulatively.
    SnrSweep {
        #[arg(long)]
        x: Option<String>,
    },
    /// Stress-channel -3 dB bandwidth against distance and wind speed.
    BandwidthSweep {
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        u: Option<String>,
    },
    /// Shannon capacity against distance from bandwidth and SNR.
    CapacitySweep {
        #[arg(long)]
        x: Option<String>,
    },
    /// End-to-end attenuation over frequency.
    E2eGain {
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        species: Option<String>,
        #[arg(long)]
        f: Option<String>,
    },
    /// End-to-end group delay over frequency, per distance.
    E2eDelay {
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        species: Option<String>,
        #[arg(long)]
        f: Option<String>,
    },
    /// Receiver attenuation and delay over frequency.
    RxResponse {
        #[arg(long)]
        f: Option<String>,
    },
}

fn run(cli: &Cli) -> Result<String, CliError> {
    if let Cmd::ExportBuiltin { name } = &cli.command {
        return to_toml(&builtin_file(name)?);
    }
    let scenario = match &cli.scenario {
        Some(spec) => Scenario::load(spec)?,
        None => Scenario::resolve(&voclink_cli::config::reference_file())?,
    };
    match &cli.command {
        Cmd::ExportBuiltin { .. } => unreachable!("handled above"),
        Cmd::TxGain { species, f } => commands::tx_gain(&scenario, species, f),
        Cmd::TxDelay { species, f } => commands::tx_delay(&scenario, species, f),
        Cmd::ChannelGain { x, u, species, f } => {
            commands::channel_gain(&scenario, x, u, species, f)
        }
        Cmd::ChannelDelay { x, u, species } => commands::channel_delay(&scenario, x, u, species),
        Cmd::PlumeGain { x, u, f } => commands::plume_gain(&scenario, x, u, f),
        Cmd::SnrSweep { x } => commands::snr_sweep(&scenario, x),
        Cmd::BandwidthSweep { x, u } => commands::bandwidth_sweep(&scenario, x, u),
        Cmd::CapacitySweep { x } => commands::capacity_sweep(&scenario, x),
        Cmd::E2eGain { x, u, species, f } => commands::e2e_gain(&scenario, x, u, species, f),
        Cmd::E2eDelay { x, u, species, f } => commands::e2e_delay(&scenario, x, u, species, f),
        Cmd::RxResponse { f } => commands::rx_response(&scenario, f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{output}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
