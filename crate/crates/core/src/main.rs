use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = onemap::cli::main_with(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::BufWriter::new(io::stdout().lock()),
        &mut io::stderr(),
    );
    ExitCode::from(code as u8)
}
