use clap::Parser;

fn main() {
    std::process::exit(fixedspace::cli::main_with(fixedspace::cli::Cli::parse()));
}
