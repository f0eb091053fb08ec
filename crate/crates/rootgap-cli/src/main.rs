use std::process::ExitCode;

fn main() -> ExitCode {
    rootgap_cli::main_exit_code()
}
