use clap::Parser;
use paritybit::cli;

fn main() {
    let args = cli::Cli::parse();
    std::process::exit(cli::run(args));
}
