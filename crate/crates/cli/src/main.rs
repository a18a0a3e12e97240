use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let outcome = match wordpoly_cli::workers_from_env() {
        Ok(workers) => wordpoly_cli::run(&argv, workers),
        Err(e) => {
            eprintln!("error: {}", e.message());
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::io::stdout().flush().ok();
    ExitCode::from(outcome.code as u8)
}
