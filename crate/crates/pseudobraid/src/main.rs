use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let result = pseudobraid::cli::run(&args);
    if !result.output.is_empty() {
        println!("{}", result.output);
    }
    if let Some(diagnostic) = result.diagnostic {
        eprintln!("{diagnostic}");
    }
    ExitCode::from(result.status.exit_code() as u8)
}
