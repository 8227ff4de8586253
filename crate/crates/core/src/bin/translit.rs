use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let code = kurdish_translit::cli::run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut io::BufWriter::with_capacity(1 << 16, stdout.lock()),
        &mut io::stderr(),
    );
    ExitCode::from(code as u8)
}
