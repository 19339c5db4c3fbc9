use std::io;
use std::process::ExitCode;

use clap::Parser;

use rootconf::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdin = io::stdin();
    let code = run(&cli, &mut stdin.lock(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code)
}
