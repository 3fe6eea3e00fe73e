use std::process::ExitCode;

fn main() -> ExitCode {
    lexicode::cli::main()
}
