use clap::Parser;

fn main() {
    let cli = decospan_cli::Cli::parse();
    std::process::exit(decospan_cli::run(&cli));
}
