//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

use std::process::{Command, ExitCode, Stdio};

use icotile::checks;
use icotile::geometry::Tolerances;

/// Runs `report` twice through the binary and compares the bundles byte for byte.
fn report_twice() -> Result<bool, String> {
    let bin = env!("CARGO_BIN_EXE_icotile");
    let dirs = [tempfile::tempdir().map_err(|e| e.to_string())?, tempfile::tempdir().map_err(|e| e.to_string())?];
    for d in &dirs {
        let status = Command::new(bin)
            .arg("report")
            .arg("--out")
            .arg(d.path())
            .stdout(Stdio::null())
            .status()
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("report exited with {status}"));
        }
    }
    let read = |d: &tempfile::TempDir| -> Result<Vec<(String, Vec<u8>)>, String> {
        let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(d.path())
            .map_err(|e| e.to_string())?
            .filter_map(Result::ok)
            .map(|e| (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap_or_default()))
            .collect();
        files.sort();
        Ok(files)
    };
    let (a, b) = (read(&dirs[0])?, read(&dirs[1])?);
    Ok(!a.is_empty() && a == b)
}

fn main() -> ExitCode {
    let mut results = checks::run_all(&Tolerances::default());
    if let Some(last) = results.iter_mut().find(|r| r.id == 10) {
        match report_twice() {
            Ok(true) => last.detail = format!("{}; binary bundles byte-identical", last.detail),
            Ok(false) => {
                last.pass = false;
                last.detail = "binary report bundles differ".into();
            }
            Err(e) => {
                last.pass = false;
                last.detail = e;
            }
        }
    }
    for r in &results {
        println!("{} criterion {:>2} ({}): {}", if r.pass { "PASS" } else { "FAIL" }, r.id, r.title, r.detail);
    }
    if results.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
