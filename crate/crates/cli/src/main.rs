use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use luqikeng_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| Ok((out.render(cli.global.format)?, out.status)));
    match result {
        Ok((text, status)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.exit_code() == 3 {
                eprintln!("hint: raise the search cap with --m-cap or LUQIKENG_MCAP");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
