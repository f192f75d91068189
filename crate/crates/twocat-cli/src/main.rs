use clap::Parser;
use twocat_cli::{exit_code, run, Cli, OutputFormat};

fn main() {
    let cli = Cli::parse();
    let r = run(&cli);
    match &r {
        Ok(o) => match cli.global.format {
            OutputFormat::Text => print!("{}", o.text()),
            OutputFormat::Structured => print!("{}", o.structured()),
        },
        Err(e) => match cli.global.format {
            OutputFormat::Text => eprintln!("error: {e}"),
            OutputFormat::Structured => {
                println!("{}", serde_json::json!({ "error": e.to_string() }));
            }
        },
    }
    std::process::exit(exit_code(&r));
}
