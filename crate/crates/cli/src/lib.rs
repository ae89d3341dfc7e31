//! Command-line front end: argument parsing, report assembly and rendering.
//!
//! Exit codes: 0 on success, 1 for usage errors, 2 when the computation
//! fails (the error name is printed on standard error).

pub mod args;
pub mod render;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use args::{Cli, Command, Format, OutputArgs};
use report::Problem;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;

fn report_for(problem: Problem, output: &OutputArgs) -> ctgf::Result<String> {
    let report = report::compute(problem, output.terms, &output.evals)?;
    Ok(match output.format {
        Format::Text => render::render_text(&report),
        Format::Json => render::render_json(&report),
    })
}

/// Parses `argv`, runs the command and writes its output; returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };

    let result = match cli.command {
        Command::Pockets(a) => report_for(
            Problem::Pockets {
                left: a.left.0,
                right: a.right.0,
                diff: a.diff,
            },
            &a.output,
        ),
        Command::Psi(a) => report_for(Problem::Psi { n: a.n }, &a.output),
        Command::Gf(a) => report_for(
            Problem::Gf {
                numerator: a.numerator,
                left: a.left.0,
                right: a.right.0,
                diff: a.diff,
            },
            &a.output,
        ),
        Command::Bfile(a) => {
            let problem = match a.n {
                Some(n) => Problem::Psi { n },
                None => Problem::Pockets {
                    left: a.left.0,
                    right: a.right.0,
                    diff: a.diff,
                },
            };
            let text = report::bfile_terms(&problem, a.terms).map(|t| render::render_bfile(&t));
            match (text, a.out) {
                (Ok(text), Some(path)) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        let _ = writeln!(err, "error: IoError: {}: {e}", path.display());
                        return EXIT_COMPUTE;
                    }
                    Ok(String::new())
                }
                (r, _) => r,
            }
        }
    };

    match result {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_COMPUTE;
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            EXIT_COMPUTE
        }
    }
}
