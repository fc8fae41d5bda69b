//! Command line front end for the `cuspidal` library.
//!
//! Exit codes: 0 on success, 1 when a result differs from the built-in
//! reference values, 2 on usage or input errors.

pub mod commands;
pub mod manifest;
pub mod render;

use std::time::Instant;

use clap::Parser;

pub use commands::{run, Cli, Command, Outcome};
pub use manifest::RunManifest;

pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses `args`, runs the command and writes output and manifest.
pub fn main_with(args: Vec<String>) -> i32 {
    let start = Instant::now();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    let (out, code) = match run(&cli) {
        Ok(o) => {
            print!("{}", o.stdout);
            for m in &o.mismatches {
                eprintln!("mismatch: {m}");
            }
            let code = if o.mismatches.is_empty() { 0 } else { EXIT_MISMATCH };
            (o, code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            (Outcome::default(), EXIT_USAGE)
        }
    };
    let m = RunManifest::new(args, &out.inputs, &out.stdout, start.elapsed().as_millis() as u64, code);
    let text = serde_json::to_string(&m).expect("serializable");
    match &cli.manifest {
        Some(p) => {
            if let Err(e) = std::fs::write(p, text + "\n") {
                eprintln!("error: cannot write manifest {}: {e}", p.display());
                return EXIT_USAGE;
            }
        }
        None => eprintln!("{text}"),
    }
    code
}
