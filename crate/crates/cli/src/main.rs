use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use menage_cli::{run, Cli, Exit};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                Exit::Usage.code()
            } else {
                0
            });
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let exit = run(cli, &mut out, &mut err).and_then(|exit| out.flush().map(|()| exit));
    match exit {
        Ok(exit) => ExitCode::from(exit.code()),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitCode::from(Exit::Usage.code())
        }
    }
}
