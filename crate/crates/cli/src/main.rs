use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use mlat_cli::{load_path, run, Command, MultChoice, Options, OutFormat};

/// Multiplicative lattices of finite groups, rngs and skew braces.
#[derive(Parser)]
#[command(name = "mlat", version)]
struct Args {
    /// One of validate, lattice, spec, classify, series, hyperabelian, brace-ybe, report, dot.
    command: String,
    /// Structure file.
    file: PathBuf,
    /// commutator, intersection, zero, product or ring-commutator.
    #[arg(long)]
    mult: Option<String>,
    /// Restrict per-element output to this label.
    #[arg(long)]
    element: Option<String>,
    /// json, text or dot.
    #[arg(long, default_value = "json")]
    out: String,
    /// Largest carrier order to enumerate.
    #[arg(long)]
    bound: Option<usize>,
    /// With dot output, also draw the specialization order of the primes.
    #[arg(long)]
    spec: bool,
}

fn execute(args: Args) -> Result<mlat_cli::Output, mlat_cli::CliError> {
    let cmd: Command = args.command.parse()?;
    let opts = Options {
        mult: args.mult.as_deref().map(str::parse::<MultChoice>).transpose()?,
        element: args.element,
        out: args.out.parse::<OutFormat>()?,
        bound: args.bound,
        spec: args.spec,
    };
    let doc = load_path(&args.file)?;
    run(&doc, cmd, &opts)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(args) {
        Ok(out) => {
            print!("{}", out.body);
            if out.falsifications > 0 {
                eprintln!("{} falsified check(s)", out.falsifications);
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("mlat: {e}");
            ExitCode::from(1)
        }
    }
}
