use std::io::Write;
use std::process::ExitCode;

use laplab_cli::{execute, parse_args};

fn main() -> ExitCode {
    let plan = match parse_args(std::env::args_os().skip(1)) {
        Ok(plan) => plan,
        Err(e) => {
            if e.exit_code == 0 {
                print!("{e}");
            } else {
                eprint!("{e}");
            }
            return ExitCode::from(e.exit_code as u8);
        }
    };
    let outcome = execute(&plan);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.status.code() as u8)
}
