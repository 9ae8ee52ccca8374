use std::process::ExitCode;

fn main() -> ExitCode {
    bathlab::cli::main()
}
