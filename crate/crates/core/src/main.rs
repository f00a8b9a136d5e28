use std::io::Write;

use clap::Parser;

use lie2mm::cli::{run, write_report, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = run(&cli.command);
    let mut code = outcome.exit_code;
    if let Some(path) = &cli.command.common().output {
        if let Err(e) = write_report(path, &outcome.report) {
            eprintln!("error: cannot write {}: {e}", path.display());
            code = code.max(1);
        }
    }
    let text = serde_json::to_string_pretty(&outcome.report).expect("report serializes");
    // a closed pipe downstream is not an error of ours
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    eprintln!("{}", outcome.summary);
    std::process::exit(code);
}
