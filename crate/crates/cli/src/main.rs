use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = clomul_cli::run_args(std::env::args_os().skip(1));
    let written = if out.code == 2 {
        std::io::stderr().write_all(out.text.as_bytes())
    } else {
        std::io::stdout().write_all(out.text.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(out.code as u8)
}
