mod algebra;
mod freefield;
mod params;
mod report;
mod verma;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use params::ModuleArgs;
use report::{CliError, Report};

#[derive(Parser, Debug)]
#[command(name = "gw3ca", version, about = "Exact computations for the Galilean W3 algebra")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for random-point certificates.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Lambda-bracket of two expressions.
    Ope {
        #[arg(long, default_value = "gw3")]
        preset: String,
        a: String,
        b: String,
    },
    /// Jacobi residuals of all generator triples.
    Jacobi {
        #[arg(long, default_value = "gw3")]
        preset: String,
    },
    /// Gram determinant of the Verma module at one level.
    Det {
        #[arg(long)]
        level: u32,
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// The 2x2 determinant D_n against its closed form.
    Dn {
        n: u32,
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Vectors at one level annihilated by all positive modes.
    Singular {
        #[arg(long)]
        level: u32,
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Free-field realisation checks.
    Freefield {
        #[command(subcommand)]
        cmd: freefield::FreeFieldCmd,
    },
    /// Level dimensions against product formulas.
    Character {
        n_max: u32,
        /// verma or vacuum
        #[arg(long, default_value = "verma")]
        module: String,
    },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.cmd {
        Cmd::Ope { preset, a, b } => algebra::ope(preset, a, b),
        Cmd::Jacobi { preset } => algebra::jacobi(preset),
        Cmd::Det { level, module } => verma::det(*level, module, cli.seed),
        Cmd::Dn { n, module } => verma::dn(*n, module),
        Cmd::Singular { level, module } => verma::singular(*level, module),
        Cmd::Freefield { cmd } => freefield::run(cmd),
        Cmd::Character { n_max, module } => verma::character(*n_max, module),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(r) => {
            match cli.format {
                Format::Text => println!("{}", r.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&r.json).expect("serialisable")),
            }
            ExitCode::from(if r.ok { 0 } else { 2 })
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
