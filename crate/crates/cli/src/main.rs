mod args;
mod commands;
mod compute;
mod format;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use pgraph::group::GroupSpec;
use thiserror::Error;

use args::{Cli, Command, Format, GlobalOpts, Pair};
use commands::Report;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Failed(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            Self::Failed(_) | Self::Io(_) => 1,
            Self::Usage(_) => 2,
            Self::Cap(_) => 3,
        }
    }
}

impl From<pgraph::Error> for CliError {
    fn from(e: pgraph::Error) -> Self {
        match e {
            pgraph::Error::TooLarge { .. } => Self::Cap(e.to_string()),
            pgraph::Error::ZeroArgument
            | pgraph::Error::NoClosedForm { .. }
            | pgraph::Error::Precondition(_) => Self::Usage(e.to_string()),
            other => Self::Failed(other.to_string()),
        }
    }
}

fn group(pair: Pair, opts: &GlobalOpts) -> Result<GroupSpec, CliError> {
    let spec = GroupSpec::new(pair.m, pair.n)?;
    spec.check_cap(opts.max_order)?;
    Ok(spec)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let opts = &cli.global;
    Ok(match &cli.command {
        Command::Subgroups(p) => commands::subgroups(group(*p, opts)?),
        Command::Graph(p) => commands::graph(group(*p, opts)?),
        Command::Quotient(p) => commands::quotient(group(*p, opts)?)?,
        Command::Charpoly(p) => commands::charpoly(group(*p, opts)?, opts)?,
        Command::Spectrum(p) => commands::spectrum(group(*p, opts)?, opts)?,
        Command::Verify(p) => commands::verify_one(group(*p, opts)?, opts),
        Command::Sweep(s) => {
            GroupSpec::new(s.m.hi, s.n.hi)?.check_cap(opts.max_order)?;
            commands::sweep(s, opts).map_err(CliError::Usage)?
        }
    })
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.text.clone(),
        Format::Csv => report.csv.clone(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<(), CliError> {
    let body = render(report, cli.global.format);
    match &cli.global.output {
        Some(path) => std::fs::write(path, body)?,
        None => std::io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let quiet = cli.global.quiet;
    let result = run(&cli).and_then(|report| {
        emit(&cli, &report)?;
        if !quiet {
            for line in &report.diagnostics {
                eprintln!("{line}");
            }
        }
        if report.ok {
            Ok(())
        } else {
            Err(CliError::Failed("verification failed".into()))
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !quiet {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.code())
        }
    }
}
