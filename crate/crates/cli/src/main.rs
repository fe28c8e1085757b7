use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(fourcycle_cli::app::run(std::env::args_os()))
}
