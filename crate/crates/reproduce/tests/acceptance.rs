//! Runs criteria 1-20 with the default seed and sample counts, printing one
//! line per criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;

use levelab::reproduce::{format_table, run, Config, CRITERIA};

fn main() -> ExitCode {
    let cfg = Config::default();
    let mut results = Vec::new();
    for &(id, _) in CRITERIA.iter() {
        let r = run(id, &cfg);
        print!("{}", format_table(std::slice::from_ref(&r)).lines().next().unwrap_or_default());
        println!();
        results.push(r);
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!("{}/{} criteria passed", results.len() - failed.len(), results.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
