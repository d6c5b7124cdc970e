use std::process::ExitCode;

fn main() -> ExitCode {
    cvdj::cli::run(std::env::args_os())
}
