use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = bicomplex_cli::run(std::env::args_os(), &mut std::io::stdin());
    let _ = if code == 2 {
        writeln!(std::io::stderr(), "{out}")
    } else {
        writeln!(std::io::stdout(), "{out}")
    };
    ExitCode::from(code as u8)
}
