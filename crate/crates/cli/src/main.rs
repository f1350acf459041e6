use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use gitfan_cli::document::{dot_graph, to_json};
use gitfan_cli::{
    afaces_document, gitfan_document, groebner_document, load_problem, normalfan_document, CliError,
    RunSettings,
};
use gitfan_core::poly::MonomialOrder;

#[derive(Parser)]
#[command(name = "gitfan", version, about = "GIT-fans of torus actions on affine varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Dp,
    Lp,
}

#[derive(clap::Args)]
struct RunArgs {
    /// Problem file
    input: PathBuf,
    /// Reduce by the symmetry section (default: on when the file has one)
    #[arg(long, value_enum)]
    symmetry: Option<Switch>,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write JSON here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Print wall-clock time to stderr
    #[arg(long)]
    timings: bool,
}

impl RunArgs {
    fn settings(&self) -> RunSettings {
        RunSettings {
            symmetry: self.symmetry.map(|s| matches!(s, Switch::On)),
            threads: self.threads.unwrap_or_else(gitfan_core::gitfan::default_threads).max(1),
            seed: self.seed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the GIT-fan
    Gitfan {
        #[command(flatten)]
        run: RunArgs,
        /// Also write the adjacency graph of the maximal cones (DOT)
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// List the a-faces
    Afaces {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Reduced Gröbner basis of the ideal
    Groebner {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "dp")]
        order: Order,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Normal fan of the Newton polytope of a polynomial
    Normalfan {
        #[arg(long)]
        poly: String,
        /// Comma-separated variable names
        #[arg(long)]
        vars: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn emit(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gitfan { run, graph } => {
            let start = Instant::now();
            let file = load_problem(&run.input)?;
            let doc = gitfan_document(&file, &run.settings())?;
            if run.timings {
                eprintln!("gitfan: {:.3}s", start.elapsed().as_secs_f64());
            }
            if let Some(path) = &graph {
                emit(&dot_graph(&doc), Some(path))?;
            }
            emit(&to_json(&doc), run.output.as_deref())
        }
        Command::Afaces { run } => {
            let start = Instant::now();
            let file = load_problem(&run.input)?;
            let doc = afaces_document(&file, &run.settings())?;
            if run.timings {
                eprintln!("afaces: {:.3}s", start.elapsed().as_secs_f64());
            }
            emit(&to_json(&doc), run.output.as_deref())
        }
        Command::Groebner { input, order, output } => {
            let file = load_problem(&input)?;
            let order = match order {
                Order::Dp => MonomialOrder::Dp,
                Order::Lp => MonomialOrder::Lp,
            };
            emit(&to_json(&groebner_document(&file, order)), output.as_deref())
        }
        Command::Normalfan { poly, vars, output } => {
            emit(&to_json(&normalfan_document(&poly, &vars)?), output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(1);
        }
        Err(e) => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
