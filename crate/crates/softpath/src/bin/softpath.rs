//! Thin command-line front end over the script interpreter.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use softpath::script::Interp;

#[derive(Parser)]
#[command(name = "softpath", version, about = "Soft-path manipulation scripts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a script file (one command per line, `#` comments).
    Run {
        script: PathBuf,
        /// Directory that SVG output files are written into.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run a single command.
    Eval {
        command: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, out_dir, source) = match cli.command {
        Command::Run { script, out } => match fs::read_to_string(&script) {
            Ok(text) => (text, out, script.display().to_string()),
            Err(e) => {
                eprintln!("softpath: cannot read {}: {e}", script.display());
                return ExitCode::FAILURE;
            }
        },
        Command::Eval { command, out } => (command, out, "<eval>".to_string()),
    };
    let mut interp = Interp::new(out_dir);
    let status = interp.run_script(&text);
    for line in &interp.outputs {
        print!("{line}");
    }
    for warning in &interp.warnings {
        eprintln!("softpath: {warning}");
    }
    match status {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("softpath: {source}: {e}");
            ExitCode::FAILURE
        }
    }
}
