use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use vincular_cli::{
    cmd_bfile, cmd_count, cmd_series, cmd_verify, mismatches, pattern, render_rows, render_sequence, CliError, Format,
    Method, Result, RunConfig,
};

#[derive(Parser)]
#[command(name = "vincular", version, about = "Count Catalan words avoiding vincular patterns")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print c_n(pattern) computed by one method.
    Count {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        /// oracle, recurrence, closed, genfun or kernel
        #[arg(long, default_value = "oracle")]
        method: Method,
    },
    /// Print the coefficients of t^1..t^order.
    Series {
        #[arg(long)]
        pattern: String,
        #[arg(long, env = "VINCULAR_ORDER", default_value_t = 24)]
        order: usize,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Compare every applicable method on every tabulated pattern.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, env = "VINCULAR_ORDER", default_value_t = 24)]
        order: usize,
        /// Comma-separated subset of oracle, recurrence, closed, genfun, kernel
        #[arg(long, value_delimiter = ',', default_values_t = Method::ALL.to_vec())]
        methods: Vec<Method>,
        #[arg(long, default_value = "text")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write an OEIS b-file of c_1..c_max_n.
    Bfile {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        path: PathBuf,
    },
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Count { pattern: p, n, method } => {
            println!("{}", cmd_count(&pattern(&p)?, n, method)?);
        }
        Command::Series { pattern: p, order, format } => {
            print!("{}", render_sequence(&cmd_series(&pattern(&p)?, order)?, format)?);
        }
        Command::Verify { max_n, order, methods, format, output } => {
            let rows = cmd_verify(&RunConfig { max_n, order, methods, format })?;
            let report = render_rows(&rows, format)?;
            match output {
                Some(path) => fs::write(path, report)?,
                None => print!("{report}"),
            }
            let bad = mismatches(&rows);
            if bad > 0 {
                return Err(CliError::Mismatch(bad));
            }
            eprintln!("{} rows agree", rows.len());
        }
        Command::Bfile { pattern: p, max_n, path } => {
            cmd_bfile(&pattern(&p)?, max_n, &path)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
