//! `cohomog7` command-line front end.
//!
//! Commands return an [`Outcome`] instead of printing, so they can be driven
//! in-process.

pub mod cache;
pub mod render;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use cohomog7::classify::{report, ClassificationReport};
use cohomog7::families::{Family, FamilyError, FamilyParams};
use cohomog7::search::{search, Execution, SearchError, SearchFilter, SearchSpec};
use num_bigint::BigUint;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CONSISTENCY: i32 = 3;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cohomog7",
    version,
    about = "Integral cohomology and type E_r classification of the cohomogeneity-one 7-manifolds L, M, N, O"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report for one parameter tuple, e.g. "N(1,1)(2,1)" or "O(2,3:2)".
    Info {
        params: String,
        /// Emit the report as one JSON object.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate valid tuples with every |parameter| at most the bound.
    Search(SearchArgs),
    /// Summary table for a file of parameter strings, one per line.
    Table {
        file: PathBuf,
        #[command(flatten)]
        format: Format,
        /// Warn about bad lines instead of failing.
        #[arg(long)]
        skip_invalid: bool,
    },
    /// Check a parameter tuple against its family's restrictions.
    Validate { params: String },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct Format {
    /// One JSON report per line.
    #[arg(long)]
    json: bool,
    /// CSV with a header row.
    #[arg(long)]
    csv: bool,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Comma-separated subset of L, M, N, O.
    #[arg(long, value_delimiter = ',', required = true)]
    families: Vec<Family>,
    /// Largest absolute value of any parameter.
    #[arg(long)]
    bound: u32,
    /// Keep only tuples with this order of H⁴.
    #[arg(long)]
    r: Option<BigUint>,
    /// Keep only tuples of cohomology type E_r.
    #[arg(long)]
    type_er: bool,
    /// Keep only tuples with the cohomology ring of an Eschenburg space.
    #[arg(long)]
    eschenburg: bool,
    #[command(flatten)]
    format: Format,
    /// Run on one thread.
    #[arg(long)]
    sequential: bool,
}

fn parse_params(s: &str) -> Result<FamilyParams, Outcome> {
    s.parse::<FamilyParams>().map_err(|e| Outcome::fail(EXIT_USAGE, e))
}

fn family_failure(e: FamilyError) -> Outcome {
    match e {
        FamilyError::Invalid { .. } => Outcome::fail(EXIT_INVALID, e),
        _ => Outcome::fail(EXIT_CONSISTENCY, e),
    }
}

fn cmd_info(params: &str, json: bool) -> Outcome {
    let params = match parse_params(params) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let rep = match report(&params) {
        Ok(rep) => rep,
        Err(e) => return family_failure(e),
    };
    let stdout = if json {
        format!("{}\n", rep.to_json())
    } else {
        render::info_text(&rep)
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: if rep.valid { EXIT_OK } else { EXIT_INVALID },
    }
}

fn cmd_validate(params: &str) -> Outcome {
    let params = match parse_params(params) {
        Ok(p) => p,
        Err(o) => return o,
    };
    match params.validate() {
        Ok(()) => Outcome::ok(format!("{params}: valid\n")),
        Err(errors) => {
            let mut stdout = format!("{params}: invalid\n");
            for e in errors {
                stdout.push_str(&format!("  - {} [{}]\n", e.message, e.rule));
            }
            Outcome {
                stdout,
                stderr: String::new(),
                code: EXIT_INVALID,
            }
        }
    }
}

fn render_reports(reports: &[ClassificationReport], format: &Format, text: impl FnOnce() -> String) -> String {
    if format.json {
        render::json_lines(reports)
    } else if format.csv {
        render::csv(reports)
    } else {
        text()
    }
}

fn cmd_search(args: &SearchArgs) -> Outcome {
    let filter = SearchFilter {
        r: args.r.clone(),
        type_er: args.type_er,
        eschenburg: args.eschenburg,
    };
    let spec = match SearchSpec::new(args.families.iter().copied(), args.bound, filter) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let exec = if args.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let mut stderr = String::new();
    let cache_file = std::env::var_os(cache::ENV_VAR).map(|dir| cache::path(&PathBuf::from(dir), &spec));
    let cached = cache_file.as_deref().and_then(cache::load);
    let reports = match cached {
        Some(reports) => reports,
        None => {
            let reports = match search(&spec, exec) {
                Ok(r) => r,
                Err(SearchError::Family(e)) => return family_failure(e),
                Err(e) => return Outcome::fail(EXIT_USAGE, e),
            };
            if let Some(path) = &cache_file {
                if let Err(e) = cache::store(path, &reports) {
                    stderr.push_str(&format!("warning: cannot write cache {}: {e}\n", path.display()));
                }
            }
            reports
        }
    };
    Outcome {
        stdout: render_reports(&reports, &args.format, || {
            render::search_text(&reports, &spec.canonical())
        }),
        stderr,
        code: EXIT_OK,
    }
}

fn cmd_table(file: &PathBuf, format: &Format, skip_invalid: bool) -> Outcome {
    let text = match fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("cannot read {}: {e}", file.display())),
    };
    let mut stderr = String::new();
    let mut reports = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let params = match line.parse::<FamilyParams>() {
            Ok(p) => p,
            Err(e) if skip_invalid => {
                stderr.push_str(&format!("warning: line {line_no}: {e}\n"));
                continue;
            }
            Err(e) => return Outcome::fail(EXIT_USAGE, format!("line {line_no}: {e}")),
        };
        let rep = match report(&params) {
            Ok(rep) => rep,
            Err(e) => return family_failure(e),
        };
        if !rep.valid {
            let messages: Vec<&str> = rep.errors.iter().map(|e| e.message.as_str()).collect();
            let message = format!("line {line_no}: invalid parameters {params}: {}", messages.join("; "));
            if skip_invalid {
                stderr.push_str(&format!("warning: {message}\n"));
                continue;
            }
            return Outcome::fail(EXIT_INVALID, message);
        }
        reports.push(rep);
    }
    Outcome {
        stdout: render_reports(&reports, format, || render::table_text(&reports)),
        stderr,
        code: EXIT_OK,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(rendered),
                _ => Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: EXIT_USAGE,
                },
            };
        }
    };
    match &cli.command {
        Command::Info { params, json } => cmd_info(params, *json),
        Command::Search(args) => cmd_search(args),
        Command::Table {
            file,
            format,
            skip_invalid,
        } => cmd_table(file, format, *skip_invalid),
        Command::Validate { params } => cmd_validate(params),
    }
}
