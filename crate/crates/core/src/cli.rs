//! Command-line surface. `run` takes the argument vector and returns the
//! exit code with the captured output, so tests drive it without a process.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, census_label, TileKind};
use crate::checks;
use crate::geometry::{assemble, ShapeTarget, Tolerances};
use crate::golden::GoldenRational;
use crate::inflation::{self, CountVector, Decomposition, VerifyReport};
use crate::report;

#[derive(Debug, Parser)]
#[command(name = "icotile", version, about = "Icosahedral tetrahedral tiling: counts, spectra, assemblies")]
pub struct Cli {
    /// Tolerance for geometric predicates.
    #[arg(long, global = true, env = "ICOTILE_TOL_PREDICATE", default_value_t = 1e-9)]
    pub tol_predicate: f64,
    /// Relative tolerance for isometry checks.
    #[arg(long, global = true, env = "ICOTILE_TOL_ISOMETRY", default_value_t = 1e-12)]
    pub tol_isometry: f64,
    /// Largest inflation order accepted.
    #[arg(long, global = true, env = "ICOTILE_MAX_ORDER", default_value_t = 50)]
    pub max_order: u32,
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tile records; `dump` prints the full JSON catalog.
    Catalog {
        #[arg(value_parser = ["dump"])]
        action: Option<String>,
    },
    /// Tile counts and volume of an inflated prototile.
    Inflate {
        #[arg(long)]
        tile: String,
        #[arg(long)]
        order: u32,
    },
    /// Spectrum, Perron-Frobenius vectors and projection of the inflation matrix.
    Eigen,
    /// Dodecahedral decompositions of inflated tiles.
    Ledger {
        #[arg(long)]
        verify: bool,
        /// Adds one to the last coefficient of the given entry (testing aid).
        #[arg(long, hide = true)]
        corrupt: Option<usize>,
    },
    /// Assemble a composite tile, d1 or i1.
    Build {
        #[arg(long)]
        shape: String,
        /// Write the assembly as OBJ.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every consistency check.
    Verify,
    /// Write the markdown and CSV report bundle.
    Report {
        #[arg(long)]
        out: PathBuf,
    },
}

/// Settings shared by all commands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub tolerances: Tolerances,
    pub max_order: u32,
    pub json: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn status(pass: bool, stdout: String) -> Self {
        Outcome { code: if pass { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn usage(msg: String) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n\nUsage: icotile [OPTIONS] <COMMAND>\n") }
    }

    fn failure(msg: String) -> Self {
        Outcome { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let tolerances = match Tolerances::new(cli.tol_predicate, cli.tol_isometry) {
        Ok(t) => t,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let cfg = RunConfig { tolerances, max_order: cli.max_order, json: cli.json };
    match cli.command {
        Command::Catalog { action } => catalog_cmd(&cfg, action.is_some()),
        Command::Inflate { tile, order } => inflate_cmd(&cfg, &tile, order),
        Command::Eigen => eigen_cmd(&cfg),
        Command::Ledger { verify, corrupt } => ledger_cmd(&cfg, verify, corrupt),
        Command::Build { shape, out } => build_cmd(&cfg, &shape, out),
        Command::Verify => verify_cmd(&cfg),
        Command::Report { out } => report_cmd(&cfg, out),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn catalog_cmd(cfg: &RunConfig, dump: bool) -> Outcome {
    if dump || cfg.json {
        return Outcome::ok(catalog::catalog_json() + "\n");
    }
    let mut out = String::new();
    for r in catalog::catalog() {
        let comp: Vec<&str> = r.composition.iter().map(|k| k.tag()).collect();
        let comp = if comp.is_empty() { String::new() } else { format!("  = {}", comp.join(" + ")) };
        writeln!(
            out,
            "{:<6} {:<48} volume {} ({:.7}){comp}",
            r.kind.tag(),
            census_label(&r.faces),
            report::volume_label(&r.volume),
            r.volume.to_f64()
        )
        .unwrap();
    }
    Outcome::ok(out)
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct InflateOutput {
    pub tile: TileKind,
    pub order: u32,
    pub counts: CountVector,
    pub volume: GoldenRational,
    pub volume_float: f64,
}

fn inflate_cmd(cfg: &RunConfig, tile: &str, order: u32) -> Outcome {
    let kind: TileKind = match tile.parse() {
        Ok(k) => k,
        Err(e) => return Outcome::usage(format!("{e}")),
    };
    let Some(base) = CountVector::of(kind) else {
        return Outcome::usage(format!("{kind} has no inflation rule; use T1, T2, T3 or T4"));
    };
    if order > cfg.max_order {
        return Outcome::usage(format!("order {order} exceeds --max-order {}", cfg.max_order));
    }
    let counts = inflation::inflate_counts(&base, order);
    let volume = counts.volume();
    let volume_float = match volume.embed() {
        Ok(v) => v,
        Err(e) => return Outcome::failure(e.to_string()),
    };
    if cfg.json {
        return Outcome::ok(to_json(&InflateOutput { tile: kind, order, counts, volume, volume_float }));
    }
    Outcome::ok(format!("{kind}^({order})\ncounts {counts}\nvolume {volume} = {volume_float:.7}\n"))
}

fn fmt_vec(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x:.7}")).collect::<Vec<_>>().join(" ")
}

fn eigen_cmd(cfg: &RunConfig) -> Outcome {
    let spec = match inflation::spectral_data() {
        Ok(s) => s,
        Err(e) => return Outcome::failure(e.to_string()),
    };
    if cfg.json {
        return Outcome::ok(to_json(&spec));
    }
    let mut out = String::new();
    writeln!(out, "characteristic polynomial {}", inflation::char_poly()).unwrap();
    let exact: Vec<String> = spec.eigenvalues_exact.iter().map(|x| x.to_string()).collect();
    writeln!(out, "eigenvalues {}  [{}]", fmt_vec(&spec.eigenvalues), exact.join(", ")).unwrap();
    writeln!(out, "volume fractions {}", fmt_vec(&spec.right_pf)).unwrap();
    writeln!(out, "frequencies {}", fmt_vec(&spec.left_pf)).unwrap();
    out.push_str("projection\n");
    for row in &spec.projection {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>14}", x.to_string())).collect();
        writeln!(out, "  {}", cells.join(" ")).unwrap();
    }
    Outcome::ok(out)
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct LedgerLine {
    pub decomposition: Decomposition,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub report: Option<VerifyReport>,
}

fn ledger_cmd(cfg: &RunConfig, verify: bool, corrupt: Option<usize>) -> Outcome {
    let mut entries = inflation::dodecahedron_ledger();
    if let Some(i) = corrupt {
        let Some(d) = entries.get_mut(i) else {
            return Outcome::usage(format!("no ledger entry {i}"));
        };
        if let Some(last) = d.parts.last_mut() {
            last.count += BigInt::from(1);
        }
    }
    let mut lines = Vec::new();
    let mut all_ok = true;
    for d in entries {
        let report = if verify {
            match inflation::verify_decomposition(&d) {
                Ok(r) => {
                    all_ok &= r.ok();
                    Some(r)
                }
                Err(e) => return Outcome::failure(format!("{}: {e}", d.label)),
            }
        } else {
            None
        };
        lines.push(LedgerLine { decomposition: d, report });
    }
    if cfg.json {
        return Outcome::status(all_ok, to_json(&lines));
    }
    let mut out = String::new();
    for l in &lines {
        match &l.report {
            Some(r) if r.ok() => writeln!(out, "OK   {}", l.decomposition).unwrap(),
            Some(r) => writeln!(
                out,
                "FAIL {} (counts {}, volume {}; expected {}, found {})",
                l.decomposition,
                if r.count_consistent { "ok" } else { "differ" },
                if r.volume_consistent { "ok" } else { "differ" },
                r.expected_counts,
                r.found_counts
            )
            .unwrap(),
            None => writeln!(out, "{}", l.decomposition).unwrap(),
        }
    }
    Outcome::status(all_ok, out)
}

#[derive(Debug, Serialize)]
struct BuildSummary {
    shape: ShapeTarget,
    tiles: usize,
    proper: usize,
    mirrored: usize,
    vertices: usize,
    edges: usize,
    faces: usize,
    face_census: Option<String>,
    hull_volume: f64,
    exact_volume: GoldenRational,
}

fn build_cmd(cfg: &RunConfig, shape: &str, out: Option<PathBuf>) -> Outcome {
    let target: ShapeTarget = match shape.parse() {
        Ok(t) => t,
        Err(e) => return Outcome::usage(format!("{e}; shapes are E, C, T1, T2, T3, T3bar, T4, d1, i1")),
    };
    let tol = &cfg.tolerances;
    let a = match assemble(target, tol) {
        Ok(a) => a,
        Err(e) => return Outcome::failure(e.to_string()),
    };
    if let Some(path) = &out {
        if let Err(e) = std::fs::write(path, a.to_obj()) {
            return Outcome::failure(format!("{}: {e}", path.display()));
        }
    }
    if cfg.json {
        return Outcome::ok(a.to_json() + "\n");
    }
    let counts = a.hull.counts();
    let census = a.hull.census(tol.predicate).map(|c| census_label(&c));
    let exact: GoldenRational = a.tiles.iter().map(|t| catalog::record(t.kind).volume).sum();
    let (proper, mirrored) = a.parity_census();
    let summary = BuildSummary {
        shape: target,
        tiles: a.tiles.len(),
        proper,
        mirrored,
        vertices: counts.vertices,
        edges: counts.edges,
        faces: counts.faces,
        face_census: census,
        hull_volume: a.hull.volume(),
        exact_volume: exact,
    };
    let mut text = String::new();
    writeln!(text, "{}: {} tiles ({} proper, {} mirrored)", target, summary.tiles, proper, mirrored).unwrap();
    writeln!(text, "hull {} vertices, {} edges, {} faces", summary.vertices, summary.edges, summary.faces).unwrap();
    let pentagons = (0..a.hull.faces.len()).filter(|&i| a.hull.faces[i].len() == 5).count();
    if pentagons > 0 {
        writeln!(text, "{pentagons} pentagonal faces").unwrap();
    }
    writeln!(text, "faces {}", summary.face_census.as_deref().unwrap_or("unclassified")).unwrap();
    writeln!(
        text,
        "hull volume {:.7} (exact {} = {})",
        summary.hull_volume,
        summary.exact_volume,
        summary.exact_volume.to_f64()
    )
    .unwrap();
    if let Some(path) = out {
        writeln!(text, "wrote {}", path.display()).unwrap();
    }
    Outcome::ok(text)
}

fn verify_cmd(cfg: &RunConfig) -> Outcome {
    let results = checks::run_all(&cfg.tolerances);
    let pass = results.iter().all(|r| r.pass);
    if cfg.json {
        return Outcome::status(pass, to_json(&results));
    }
    let mut out = String::new();
    for r in &results {
        writeln!(out, "{} {:>2} {}: {}", if r.pass { "PASS" } else { "FAIL" }, r.id, r.title, r.detail).unwrap();
    }
    Outcome::status(pass, out)
}

fn report_cmd(cfg: &RunConfig, out: PathBuf) -> Outcome {
    let bundle = match report::build_report() {
        Ok(b) => b,
        Err(e) => return Outcome::failure(e.to_string()),
    };
    if let Err(e) = report::write_bundle(&bundle, &out) {
        return Outcome::failure(format!("{}: {e}", out.display()));
    }
    let names: Vec<&String> = bundle.keys().collect();
    if cfg.json {
        return Outcome::ok(to_json(&names));
    }
    let mut text = String::new();
    for n in names {
        writeln!(text, "wrote {}", out.join(n).display()).unwrap();
    }
    Outcome::ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("icotile").chain(args.iter().copied()))
    }

    #[test]
    fn inflate_prints_counts() {
        let o = run_args(&["inflate", "--tile", "T2", "--order", "3"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("counts 5 21 12 6"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["inflate", "--tile", "T9", "--order", "1"]).code, 2);
        assert_eq!(run_args(&["inflate", "--tile", "t1", "--order", "1"]).code, 2);
        assert_eq!(run_args(&["frobnicate"]).code, 2);
        assert_eq!(run_args(&["eigen", "--bogus"]).code, 2);
        assert_eq!(run_args(&["--tol-predicate", "-1", "eigen"]).code, 2);
        let o = run_args(&["inflate", "--tile", "T1", "--order", "60"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("Usage"));
    }

    #[test]
    fn corrupted_ledger_fails() {
        assert_eq!(run_args(&["ledger", "--verify"]).code, 0);
        let o = run_args(&["ledger", "--verify", "--corrupt", "0"]);
        assert_eq!(o.code, 1);
        assert!(o.stdout.starts_with("FAIL"));
    }
}
