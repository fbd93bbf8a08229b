//! Command-line front end.
//!
//! `tiltstab [COMMAND] [--jobfile FILE] [--format json|csv|text]
//! [--workers N] [--FIELD VALUE ...]`. Exit status 0 means the computation
//! ran; mathematical verdicts live in the report. Exit status 2 means the
//! input was rejected, with a JSON error object on stdout.

pub mod exec;
pub mod job;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Arg, ArgAction, Command};
use serde_json::json;

pub use exec::execute;
pub use job::{load_jobfile, parse_jobfile, CommandName, JobSpec, Jobfile, RawFields};
pub use report::{emit, to_canonical_json, Format, ReportEnvelope};

use crate::Error;

/// Environment variable holding the default worker count for `search`.
pub const WORKERS_ENV: &str = "TILTSTAB_WORKERS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

pub fn flag_name(key: &str) -> String {
    key.replace('_', "-")
}

fn command() -> Command {
    let mut cmd = Command::new("tiltstab")
        .about("Exact tilt-stability computations on Picard-rank-one threefolds")
        .arg(
            Arg::new("command")
                .value_parser(CommandName::ALL.map(|c| c.as_str()))
                .help("computation to run; may come from the job file instead"),
        )
        .arg(Arg::new("jobfile").long("jobfile").value_name("FILE").help("flat TOML job file"))
        .arg(
            Arg::new("format")
                .long("format")
                .value_parser(["json", "csv", "text"])
                .default_value("json"),
        )
        .arg(
            Arg::new("workers")
                .long("workers")
                .value_parser(clap::value_parser!(usize))
                .help("search threads (default from TILTSTAB_WORKERS, else 1)"),
        );
    for (key, help) in job::FIELDS {
        let arg = Arg::new(*key).long(flag_name(key)).help(*help);
        cmd = cmd.arg(if job::is_bool_field(key) {
            arg.action(ArgAction::SetTrue)
        } else {
            arg.allow_hyphen_values(true).num_args(1)
        });
    }
    cmd
}

fn error_object(e: &Error) -> String {
    let (kind, field, line) = match e {
        Error::ZeroVector { .. } => ("domain", None, None),
        Error::Precondition { field, .. } => ("precondition", Some(field.as_str()), None),
        Error::Parse { field, .. } => ("parse", Some(field.as_str()), None),
        Error::Jobfile { field, line, .. } => ("jobfile", Some(field.as_str()), *line),
        Error::Io(_) => ("io", None, None),
    };
    to_canonical_json(&json!({
        "schema": report::SCHEMA_VERSION,
        "error": {"kind": kind, "field": field, "line": line, "message": e.to_string()},
    }))
}

fn run_inner(matches: &clap::ArgMatches) -> crate::Result<String> {
    let file = matches
        .get_one::<String>("jobfile")
        .map(|p| load_jobfile(&PathBuf::from(p)))
        .transpose()?;
    let cmd = matches
        .get_one::<String>("command")
        .map(|c| c.parse::<CommandName>())
        .transpose()?;
    let mut flags = RawFields::new();
    for (key, _) in job::FIELDS {
        if job::is_bool_field(key) {
            if matches.get_flag(key) {
                flags.insert(key.to_string(), "true".into());
            }
        } else if let Some(v) = matches.get_one::<String>(key) {
            flags.insert(key.to_string(), v.clone());
        }
    }
    let spec = job::resolve(file, cmd, flags)?;
    let workers = match matches.get_one::<usize>("workers") {
        Some(n) => *n,
        None => match std::env::var(WORKERS_ENV) {
            Ok(s) => s.trim().parse().map_err(|_| Error::Parse {
                field: WORKERS_ENV.into(),
                value: s.clone(),
                message: "expected a positive integer".into(),
            })?,
            Err(_) => 1,
        },
    };
    let format: Format = matches.get_one::<String>("format").expect("has default").parse()?;
    let report = execute(&spec, workers.max(1))?;
    emit(&report, format)
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let matches = match command().try_get_matches_from(args) {
        Ok(m) => m,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: e.to_string(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: error_object(&Error::Parse {
                        field: "arguments".into(),
                        value: String::new(),
                        message: e.kind().to_string(),
                    }),
                },
            };
        }
    };
    match run_inner(&matches) {
        Ok(stdout) => Outcome { code: 0, stdout },
        Err(e) => Outcome {
            code: 2,
            stdout: error_object(&e),
        },
    }
}
