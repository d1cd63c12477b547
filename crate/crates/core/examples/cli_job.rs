//! Runs a job document the way the `codeideal` binary does, with a result
//! cache in a temporary directory, and prints the JSON result.

use codeideal::io::{parse_input, parse_result_json, run_cached, Cache, Command, OutputFormat};
use codeideal::IdealKind;

const JOB: &str = "\
# [3,2] code over GF(4), basis {α, 1}
field p=2 r=2 modulus=1,1,1 basis=a,1
parity a a^3 a^2
";

fn main() -> codeideal::Result<()> {
    let mut job = parse_input(JOB)?;
    job.command = Command::Ugb;
    job.kind = IdealKind::Generalized;
    job.shortcut_char2 = true;

    let dir = std::env::temp_dir().join(format!("codeideal-example-{}", std::process::id()));
    let cache = Cache::new(&dir);
    let first = run_cached(&job, Some(&cache))?;
    let second = run_cached(&job, Some(&cache))?; // served from the cache
    println!("cache key {}", job.cache_key());
    println!("{} binomials, cached copy identical: {}", first.count, first.to_json() == second.to_json());

    let json = first.render(OutputFormat::Json);
    let parsed = parse_result_json(&json)?;
    for line in json.lines().take(5) {
        println!("{line}");
    }
    println!("  ...");
    println!("round trip preserves the set: {}", parsed.binomial_set() == first.binomial_set());

    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
