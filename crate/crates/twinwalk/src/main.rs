use std::process::ExitCode;

fn main() -> ExitCode {
    twinwalk::cli::run()
}
