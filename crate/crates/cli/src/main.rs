use std::io::{self, IsTerminal};
use std::process::ExitCode;

use clap::Parser;
use thetasg_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let highlight = io::stdout().is_terminal() && std::env::var_os("SEMIGROUP_NO_COLOR").is_none();
    let code = run(
        &cli,
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
        highlight,
    );
    ExitCode::from(code as u8)
}
