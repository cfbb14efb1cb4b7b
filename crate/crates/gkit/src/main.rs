use clap::Parser;
use gkit::cli::{self, Cli};

fn main() {
    // clap handles usage errors itself with exit code 2.
    let cli = Cli::parse();
    match cli::run(&cli) {
        Ok(outcome) => {
            println!("{}", outcome.text);
            if outcome.hard_failure || (cli.strict && outcome.negative_verdict) {
                std::process::exit(1);
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
