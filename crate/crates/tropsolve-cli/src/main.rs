use clap::Parser;
use tropsolve_cli::args::Cli;
use tropsolve_cli::run::run;

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(&cli));
}
