use std::io::Write;
use std::process::ExitCode;

use lieforge_core::cli;

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    if let Err(e) = cli::configure_threads() {
        let _ = writeln!(stderr.lock(), "lieforge: {e}");
        return ExitCode::from(cli::EXIT_INPUT as u8);
    }
    let code = cli::run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code as u8)
}
