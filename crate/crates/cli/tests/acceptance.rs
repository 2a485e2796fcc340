//! Runs the ten acceptance criteria and prints one line per criterion.
//! Exits non-zero when any criterion fails.

use coulomb_cli::checks::run_all;

fn main() {
    println!("acceptance criteria");
    let results = run_all();
    for r in &results {
        println!("{}", r.line());
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!("{}/{} passed", results.len() - failed.len(), results.len());
    if !failed.is_empty() {
        println!("failing: {:?}", failed);
        std::process::exit(1);
    }
}
