//! Writes the markdown and CSV report into a directory.
//!
//! Usage: `cargo run --example report_bundle -- [dir]`

use std::path::PathBuf;

use icotile::report::{build_report, write_bundle};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "report".into()));
    let bundle = build_report()?;
    write_bundle(&bundle, &dir)?;
    for (name, body) in &bundle {
        println!("{:<16} {:>5} bytes", name, body.len());
    }
    println!("\n{}", bundle["table1.csv"]);
    Ok(())
}
