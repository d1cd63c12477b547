use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use codeideal::io::{parse_input, run_cached, Cache, Command, OrderChoice, OutputFormat};
use codeideal::IdealKind;

#[derive(Clone, Copy, ValueEnum)]
enum Cmd {
    Matrix,
    Toric,
    Rgb,
    Graver,
    Ugb,
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ordinary,
    Generalized,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Degrevlex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Code ideals, Graver bases and universal Gröbner bases of linear codes.
#[derive(Parser)]
#[command(version)]
struct Args {
    #[arg(value_enum)]
    command: Cmd,
    /// Job document; `-` reads standard input.
    input: PathBuf,
    #[arg(long, value_enum, default_value = "ordinary")]
    kind: Kind,
    #[arg(long, value_enum, default_value = "degrevlex")]
    order: Order,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Use the characteristic-two description of the universal basis when it applies.
    #[arg(long)]
    shortcut_char2: bool,
    /// Neither read nor write the result cache.
    #[arg(long)]
    no_cache: bool,
    #[arg(long, env = "CODEIDEAL_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = if args.input.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(&args.input)
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.input.display());
            return ExitCode::from(2);
        }
    };
    let mut job = match parse_input(&text) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if e.is_parse_error() { 2 } else { 3 });
        }
    };
    job.command = match args.command {
        Cmd::Matrix => Command::Matrix,
        Cmd::Toric => Command::Toric,
        Cmd::Rgb => Command::Rgb,
        Cmd::Graver => Command::Graver,
        Cmd::Ugb => Command::Ugb,
        Cmd::Verify => Command::Verify,
    };
    job.kind = match args.kind {
        Kind::Ordinary => IdealKind::Ordinary,
        Kind::Generalized => IdealKind::Generalized,
    };
    job.order = match args.order {
        Order::Lex => OrderChoice::Lex,
        Order::Degrevlex => OrderChoice::Degrevlex,
    };
    job.format = match args.format {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    job.shortcut_char2 = args.shortcut_char2;

    let cache = (!args.no_cache).then(|| Cache::new(args.cache_dir.unwrap_or_else(Cache::default_dir)));
    match run_cached(&job, cache.as_ref()) {
        Ok(doc) => {
            print!("{}", doc.render(job.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse_error() { 2 } else { 3 })
        }
    }
}
