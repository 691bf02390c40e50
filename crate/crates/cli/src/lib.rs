//! Command-line front end for the `wonderful` tool.
//!
//! [`run`] parses arguments, executes one command and returns the exit code
//! together with everything that should go to standard output and error, so
//! the binary itself is a thin wrapper.

pub mod document;
pub mod report;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wonderful_core::{catalog, Label, SphericalSystem};

use crate::document::Document;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "wonderful",
    version,
    about = "Spherical systems and wonderful varieties"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of a spherical system.
    Validate { input: String },
    /// Localize at a subset of the simple roots.
    Localize {
        input: String,
        /// Comma-separated simple root labels.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        subset: Vec<String>,
    },
    /// List the distinguished spherical roots.
    Rigidity { input: String },
    /// Decide which spherical roots are critical.
    Critical {
        input: String,
        /// Search every admissible subset instead of the maximal ones.
        #[arg(long)]
        oracle: bool,
    },
    /// Describe the orbit poset.
    Orbits {
        input: String,
        /// Also write the poset as a DOT digraph.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Browse the built-in systems.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List,
    Show { name: String },
}

impl Command {
    fn verb(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Localize { .. } => "localize",
            Command::Rigidity { .. } => "rigidity",
            Command::Critical { .. } => "critical",
            Command::Orbits { .. } => "orbits",
            Command::Catalog(_) => "catalog",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Failure of a command, mapped onto the exit code contract.
enum Failure {
    Usage(String),
    Invalid(wonderful_core::ValidationReport),
}

struct Output {
    text: String,
    json: Value,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == EXIT_OK {
                (rendered, String::new())
            } else {
                (String::new(), rendered)
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let verb = cli.command.verb();
    let result = dispatch(&cli.command);
    let (code, ok, out, err) = match result {
        Ok(out) => (EXIT_OK, true, Some(out), None),
        Err(Failure::Invalid(r)) => {
            let out = Output {
                text: report::violations_text(&r),
                json: report::violations_json(&r),
            };
            (EXIT_INVALID, false, Some(out), None)
        }
        Err(Failure::Usage(msg)) => (EXIT_USAGE, false, None, Some(msg)),
    };
    let mut stdout = String::new();
    let mut stderr = String::new();
    match cli.format {
        Format::Text => {
            if let Some(out) = out {
                stdout = out.text;
            }
            if let Some(msg) = err {
                stderr = format!("error: {msg}\n");
            }
        }
        Format::Json => {
            let mut envelope = json!({ "command": verb, "ok": ok });
            if let Some(out) = out {
                envelope["report"] = out.json;
            }
            if let Some(msg) = err {
                envelope["error"] = Value::String(msg);
            }
            stdout = serde_json::to_string_pretty(&envelope).expect("json values serialize");
            stdout.push('\n');
        }
    }
    Outcome {
        code,
        stdout,
        stderr,
    }
}

fn dispatch(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Validate { input } => {
            load(input)?;
            Ok(Output {
                text: "ok\n".into(),
                json: report::violations_json(&Default::default()),
            })
        }
        Command::Localize { input, subset } => {
            let s = load(input)?;
            let sub = parse_subset(&s, subset)?;
            let local =
                wonderful_core::localize(&s, &sub).map_err(|e| Failure::Usage(e.to_string()))?;
            let doc = Document::from_system(&local);
            Ok(Output {
                text: document::to_json(&doc),
                json: serde_json::to_value(&doc).expect("documents serialize"),
            })
        }
        Command::Rigidity { input } => {
            let s = load(input)?;
            let r = wonderful_core::distinguished_elements(&s);
            Ok(Output {
                text: report::rigidity_text(&r),
                json: report::rigidity_json(&r),
            })
        }
        Command::Critical { input, oracle } => {
            let s = load(input)?;
            let r = if *oracle {
                wonderful_core::critical_roots_oracle(&s)
            } else {
                wonderful_core::critical_roots(&s)
            };
            Ok(Output {
                text: report::critical_text(&r),
                json: report::critical_json(&r),
            })
        }
        Command::Orbits { input, dot } => {
            let s = load(input)?;
            if s.spherical_lattice_rank() > wonderful_core::orbits::MAX_RANK {
                return Err(Failure::Usage(format!(
                    "rank {} exceeds {}",
                    s.spherical_lattice_rank(),
                    wonderful_core::orbits::MAX_RANK
                )));
            }
            let p = wonderful_core::orbit_poset(&s);
            if let Some(path) = dot {
                std::fs::write(path, wonderful_core::emit_graph(&p))
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            Ok(Output {
                text: report::orbits_text(&p),
                json: report::orbits_json(&p),
            })
        }
        Command::Catalog(CatalogCommand::List) => {
            let entries = catalog::catalog_entries();
            let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
            let text = entries
                .iter()
                .map(|e| format!("{:width$}  {}\n", e.name, e.description))
                .collect();
            let json = entries
                .iter()
                .map(|e| json!({ "name": e.name, "description": e.description }))
                .collect();
            Ok(Output {
                text,
                json: Value::Array(json),
            })
        }
        Command::Catalog(CatalogCommand::Show { name }) => {
            let e = catalog::entry(name)
                .ok_or_else(|| Failure::Usage(format!("no catalog entry named `{name}`")))?;
            let doc = Document::from_system(&e.system);
            Ok(Output {
                text: document::to_json(&doc),
                json: serde_json::to_value(&doc).expect("documents serialize"),
            })
        }
    }
}

/// Reads a document from `input`, falling back to a catalog name, and
/// rejects systems that fail validation.
fn load(input: &str) -> Result<SphericalSystem, Failure> {
    let path = Path::new(input);
    let system = if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{input}: {e}")))?;
        let doc = document::parse(&text).map_err(|e| Failure::Usage(format!("{input}: {e}")))?;
        doc.to_system()
            .map_err(|e| Failure::Usage(format!("{input}: {e}")))?
    } else if let Some(e) = catalog::entry(input) {
        e.system
    } else {
        return Err(Failure::Usage(format!(
            "`{input}` is neither a readable file nor a catalog entry"
        )));
    };
    let report = system.validate();
    if report.ok() {
        Ok(system)
    } else {
        Err(Failure::Invalid(report))
    }
}

fn parse_subset(s: &SphericalSystem, names: &[String]) -> Result<BTreeSet<Label>, Failure> {
    names
        .iter()
        .map(|n| n.trim())
        .filter(|n| !n.is_empty())
        .map(|n| {
            let l = Label::new(n);
            if s.root_system().contains(&l) {
                Ok(l)
            } else {
                Err(Failure::Usage(format!(
                    "--subset: unknown simple root label `{n}`"
                )))
            }
        })
        .collect()
}
