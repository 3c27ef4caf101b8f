use std::path::PathBuf;
use std::process::ExitCode;

use ab19_verify::{render, run_suite, Config, Format, Selector, VerifyError};
use clap::{Parser, ValueEnum};

/// Exit status for usage and data errors.
const EXIT_ERROR: u8 = 3;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "verify", version, about = "Recompute the arithmetic checks for semistable abelian varieties with bad reduction only at 19")]
struct Cli {
    /// One of all, bounds, cft, hopf, curve, groups, ext, none.
    selector: String,
    #[arg(long, value_enum, default_value = "text")]
    report: ReportFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "data")]
    data: PathBuf,
    /// Largest parameter n for which the group-scheme laws are checked.
    #[arg(long, default_value_t = 8)]
    hopf_n_max: i64,
    /// Coefficient radius when searching for generators of small primes.
    #[arg(long, default_value_t = 12)]
    search_radius: i64,
}

fn run(cli: Cli) -> Result<u8, VerifyError> {
    let selector: Selector = cli.selector.parse()?;
    if cli.hopf_n_max < 1 {
        return Err(VerifyError::Usage("--hopf-n-max must be at least 1".into()));
    }
    if cli.search_radius < 1 {
        return Err(VerifyError::Usage("--search-radius must be at least 1".into()));
    }
    let config = Config { data_dir: cli.data, hopf_n_max: cli.hopf_n_max, search_radius: cli.search_radius };
    let report = run_suite(selector, &config)?;
    let format = match cli.report {
        ReportFormat::Json => Format::Json,
        ReportFormat::Text => Format::Text,
    };
    let text = render(&report, format);
    match cli.out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| VerifyError::Data { path, message: format!("cannot write report: {e}") })?,
        None => print!("{text}"),
    }
    Ok(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("verify: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
