use std::io::Write;

use clap::Parser;

fn main() {
    let cli = kdual_cli::Cli::parse();
    let (out, code) = kdual_cli::run(&cli);
    let _ = if code == kdual_cli::EXIT_USAGE {
        std::io::stderr().write_all(out.as_bytes())
    } else {
        std::io::stdout().write_all(out.as_bytes())
    };
    std::process::exit(code);
}
