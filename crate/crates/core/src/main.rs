use clap::Parser;
use taufield::cli::{execute, Cli};

fn main() {
    let out = execute(&Cli::parse());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
