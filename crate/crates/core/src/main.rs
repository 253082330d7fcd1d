use clap::Parser;

use stringy::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let (code, out, err) = execute(&cli);
    print!("{out}");
    eprint!("{err}");
    std::process::exit(code);
}
