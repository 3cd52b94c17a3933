//! Drives the command-line interface in process: every subcommand once.
//!
//! ```bash
//! cargo run -p pseudobraid --example cli_tour
//! ```

use pseudobraid::cli::run;

fn main() {
    let invocations: &[&[&str]] = &[
        &["parse", "-n", "3", "s1  t2 S1"],
        &["nf", "-n", "3", "s2 s1 s2"],
        &["nf", "-n", "3", "s2 s1 s2", "--word"],
        &["eq", "-n", "3", "s1 s2 p1", "p2 s1 s2"],
        &["eq", "-n", "3", "p1 p2", "p2 p1", "--json"],
        &["oracle-eq", "-n", "2", "p1 s1", "s1 p1"],
        &["eta", "-n", "2", "p1 s1"],
        &["pm2", "-n", "2", "s1 p1 S1"],
        &["markov", "apply", "-n", "2", "s1", "M3:+", "M4", "M2:1"],
        &[
            "markov", "search", "-n", "2", "-m", "3", "s1", "s1 s2", "--budget", "3",
        ],
        &["closure", "inv", "-n", "2", "p1 p1"],
        &["selftest", "--max-n", "3", "--seed", "42"],
    ];
    for args in invocations {
        println!("$ pseudobraid {}", args.join(" "));
        let owned: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let result = run(&owned);
        if !result.output.is_empty() {
            println!("{}", result.output);
        }
        if let Some(diagnostic) = &result.diagnostic {
            println!("{diagnostic}");
        }
        println!("(exit {})\n", result.status.exit_code());
    }
}
