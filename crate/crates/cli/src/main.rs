use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dihomo::{
    cmd_analyze, cmd_compile, cmd_dot, cmd_realize, cmd_subdivide, cmd_validate, load, CliError,
    Query,
};
use dihomo_core::GermSign;

/// Analyse concurrent programs through globular complexes and their flows.
///
/// Exit codes: 0 ok, 1 input error, 2 axiom or validation violation,
/// 3 search budget exhausted.
#[derive(Parser)]
#[command(name = "dihomo", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Complex or flow JSON document, or PV source with --pv; `-` reads stdin.
    input: PathBuf,
    /// Read the input as a PV program.
    #[arg(long)]
    pv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a PV program to a complex document.
    Compile {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Realize a complex (or PV program) as a flow document.
    Realize {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a complex or a flow and report what is wrong with it.
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Export a complex or a flow as Graphviz DOT.
    Dot {
        #[command(flatten)]
        input: Input,
        /// Draw the realized flow of a complex instead of the complex.
        #[arg(long)]
        realized: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Subdivide one edge of a complex; also writes the canonical morphism.
    Subdivide {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        edge: String,
        /// Where to write the subdivided complex (stdout if absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Where to write the realized morphism document.
        #[arg(long)]
        morphism: PathBuf,
    },
    /// Run one analysis on a complex, flow or PV program.
    Analyze(Analyze),
}

#[derive(Args)]
struct Analyze {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    query: QueryArgs,
    /// Initial state for --deadlocks.
    #[arg(long, default_value = "init")]
    init: String,
    /// Final states for --deadlocks (repeatable); defaults to the recorded ones.
    #[arg(long = "final")]
    finals: Vec<String>,
    /// Germs of paths starting at the state (default).
    #[arg(long, conflicts_with = "plus")]
    minus: bool,
    /// Germs of paths ending at the state.
    #[arg(long)]
    plus: bool,
    /// Read the --s-equiv operand as a PV program.
    #[arg(long)]
    other_pv: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct QueryArgs {
    /// Reachable non-final states without outgoing paths.
    #[arg(long)]
    deadlocks: bool,
    /// Dihomotopy classes of paths between two states (`init`/`final` allowed).
    #[arg(long, num_args = 2, value_names = ["FROM", "TO"])]
    classes: Option<Vec<String>>,
    /// Germ classes at a state.
    #[arg(long, value_name = "STATE")]
    germs: Option<String>,
    /// Check whether the morphism in this file, into the input, is a T-dihomotopy.
    #[arg(long, value_name = "MORPHISM")]
    t_check: Option<PathBuf>,
    /// Search for an S-homotopy equivalence with another model.
    #[arg(long, value_name = "OTHER")]
    s_equiv: Option<PathBuf>,
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|()| out.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compile { input, output } => emit(&cmd_compile(&input)?, output.as_deref()),
        Command::Realize { input, output } => emit(
            &cmd_realize(&load(&input.input, input.pv)?)?,
            output.as_deref(),
        ),
        Command::Validate { input } => emit(&cmd_validate(&load(&input.input, input.pv)?)?, None),
        Command::Dot {
            input,
            realized,
            output,
        } => emit(
            &cmd_dot(&load(&input.input, input.pv)?, realized)?,
            output.as_deref(),
        ),
        Command::Subdivide {
            input,
            edge,
            output,
            morphism,
        } => {
            let (complex, m) = cmd_subdivide(&load(&input.input, input.pv)?, &edge)?;
            emit(&m, Some(&morphism))?;
            emit(&complex, output.as_deref())
        }
        Command::Analyze(a) => {
            let q = a.query;
            let query = if q.deadlocks {
                Query::Deadlocks {
                    init: a.init,
                    finals: a.finals,
                }
            } else if let Some(mut v) = q.classes {
                let to = v.pop().expect("two values");
                let from = v.pop().expect("two values");
                Query::Classes { from, to }
            } else if let Some(state) = q.germs {
                let sign = if a.plus {
                    GermSign::Plus
                } else {
                    GermSign::Minus
                };
                Query::Germs { state, sign }
            } else if let Some(path) = q.t_check {
                Query::TCheck(path)
            } else if let Some(other) = q.s_equiv {
                Query::SEquiv {
                    other,
                    other_pv: a.other_pv,
                }
            } else {
                unreachable!("clap requires one query")
            };
            emit(
                &cmd_analyze(&load(&a.input.input, a.input.pv)?, &query)?,
                None,
            )
        }
    }
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
