use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = galilei_cli::run(std::env::args_os());
    let written = if code == galilei_cli::EXIT_USAGE {
        std::io::stderr().write_all(out.as_bytes())
    } else {
        std::io::stdout().write_all(out.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(galilei_cli::EXIT_USAGE as u8);
    }
    ExitCode::from(code as u8)
}
