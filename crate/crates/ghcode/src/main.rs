use std::process::ExitCode;

fn main() -> ExitCode {
    ghcode::cli::entry()
}
